#ifndef COEP_PERTURBATION_HPP
#define COEP_PERTURBATION_HPP

#include "coep/matrix.hpp"
#include "coep/norms.hpp"
#include "coep/pseudoinverse.hpp"
#include "coep/tolerance.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coep {

// A Moore-Penrose invertible base element, its inverse, a perturbed element
// and the norm every bound is taken in.
struct PerturbationPair {
    CMat a;
    CMat a_dag;
    CMat b;
    NormSpec norm = NormSpec::l2();
};

struct ConditionPResult {
    bool satisfied = false;
    double projection_residual = 0.0; // ‖(b-a) - aa+(b-a)a+a‖
    double contraction = 0.0;         // ‖a+(b-a)‖
    double split_residual = 0.0;      // worst of the two one-sided forms
};

// Checks b - a = aa+(b-a)a+a together with the strict contraction bound
// ‖a+(b-a)‖ < 1 (kept away from 1 by a small margin) and the equivalent
// one-sided split b - a = aa+(b-a) = (b-a)a+a.
ConditionPResult satisfies_condition_p(const PerturbationPair& pair,
                                       const ToleranceConfig& cfg = {});

struct FactorizationReport {
    double residual_left = 0.0;  // b = a(1 + a+(b-a))
    double residual_right = 0.0; // b = (1 + (b-a)a+)a
    bool factors_invertible = false;
    double swap_residual = 0.0;  // (1+a+(b-a))^-1 a+ = a+ (1+(b-a)a+)^-1
    bool pass(const ToleranceConfig& cfg = {}) const {
        return factors_invertible && residual_left <= cfg.residual_tol &&
               residual_right <= cfg.residual_tol &&
               swap_residual <= cfg.residual_tol;
    }
};

FactorizationReport lemma_factorizations(const PerturbationPair& pair,
                                         const ToleranceConfig& cfg = {});

// Closed-form perturbed inverse b+ = (1 + a+(b-a))^-1 a+, with its MP
// certificate and the projection identities bb+ = aa+, b+b = a+a asserted.
struct PerturbedMP {
    CMat b_dag;
    MPCertificate certificate;
    double projection_left_residual = 0.0;  // ‖bb+ - aa+‖
    double projection_right_residual = 0.0; // ‖b+b - a+a‖
};

PerturbedMP perturbed_mp(const PerturbationPair& pair,
                         const ToleranceConfig& cfg = {});

struct ErrorBound {
    double realized = 0.0; // ‖b+ - a+‖ / ‖a+‖
    double bound = 0.0;    // c / (1 - c), c = ‖a+(b-a)‖
};
ErrorBound error_bound(const PerturbationPair& pair,
                       const ToleranceConfig& cfg = {});

struct NormBracket {
    double lower = 0.0;
    double value = 0.0; // ‖b+‖
    double upper = 0.0;
    bool holds(double tol = 1e-12) const {
        return lower <= value * (1.0 + tol) && value <= upper * (1.0 + tol);
    }
};
NormBracket norm_bracket(const PerturbationPair& pair,
                         const ToleranceConfig& cfg = {});

// When the contraction is below 1/2, verify that a obeys condition (P) at b.
struct ReverseConditionResult {
    bool applicable = false; // contraction < 1/2
    bool holds = false;
    double reverse_contraction = 0.0; // ‖b+(a-b)‖
};
ReverseConditionResult reverse_condition(const PerturbationPair& pair,
                                         const ToleranceConfig& cfg = {});

struct ConditionNumberReport {
    bool applicable = false; // ‖a+‖ ‖b-a‖ < 1
    double k_dag = 0.0;      // ‖a‖ ‖a+‖
    double realized = 0.0;
    double bound = 0.0;
};
ConditionNumberReport condition_number_bound(const PerturbationPair& pair,
                                             const ToleranceConfig& cfg = {});

// The four product pseudo-inverse identities (ab+)+ = ba+ etc., each
// certified by mp_verify.  The same cancellations that prove the identities
// collapse both projectors of every product to aa+ (resp. a+a), so each
// product is EP — and therefore never co-EP, whatever the base element is.
struct ProductMPReport {
    struct Entry {
        std::string label;
        double mp_residual = 0.0; // worst certificate residual
        bool certified = false;
        bool ep = false;          // both projectors of the product coincide
        double projector_gap = 0.0;
    };
    std::vector<Entry> entries;
    bool all_certified() const {
        for (const auto& e : entries)
            if (!e.certified) return false;
        return true;
    }
};

ProductMPReport product_mps(const PerturbationPair& pair,
                            const ToleranceConfig& cfg = {});

// b = a + aa+ e a+a with e random and scaled so that ‖a+(b-a)‖ equals eps.
CMat gen_perturbation(const CMat& a, const CMat& a_dag, double eps,
                      std::uint64_t seed, const NormSpec& norm = NormSpec::l2(),
                      const ToleranceConfig& cfg = {});

} // namespace coep

#endif
