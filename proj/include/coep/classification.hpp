#ifndef COEP_CLASSIFICATION_HPP
#define COEP_CLASSIFICATION_HPP

#include "coep/matrix.hpp"
#include "coep/norms.hpp"
#include "coep/pseudoinverse.hpp"
#include "coep/tolerance.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coep {

// EP / co-EP / bi-EP / hermitian co-EP verdicts together with the canonical
// idempotents h = aa+(aa+ - a+a)^-1 and k = (aa+ - a+a)^-1 aa+ (present iff
// co-EP) and per-predicate numerical evidence.
struct ClassificationReport {
    bool mp_invertible = false;
    bool ep = false;
    bool co_ep = false;
    bool bi_ep = false;
    bool hermitian_co_ep = false;
    std::optional<CMat> h;
    std::optional<CMat> k;
    std::map<std::string, double> margins;
};

ClassificationReport classify(const CMat& a, const NormSpec& n,
                              const ToleranceConfig& cfg = {});
ClassificationReport classify(const CMat& a, const CMat& a_dag,
                              const NormSpec& n, const ToleranceConfig& cfg = {});

// One theorem audit: every statement evaluated independently, then compared.
struct EquivalenceAudit {
    struct Statement {
        std::string label;
        bool value = false;
        double margin = 0.0;
    };
    std::vector<Statement> statements;

    bool all_agree() const {
        for (const auto& s : statements)
            if (s.value != statements.front().value) return false;
        return true;
    }
    bool all_true() const {
        for (const auto& s : statements)
            if (!s.value) return false;
        return !statements.empty();
    }
};

// Nine-way characterization of co-EP elements (algebra level, lifted ideals).
EquivalenceAudit audit_thm7(const CMat& a, const CMat& a_dag, Complex lambda,
                            Complex mu, const ToleranceConfig& cfg = {});

// Twelve-way characterization of hermitian co-EP elements.
EquivalenceAudit audit_thm5(const CMat& a, const CMat& a_dag, const NormSpec& n,
                            const ToleranceConfig& cfg = {});

// Operator-level characterizations on the base space.
EquivalenceAudit audit_cor8(const CMat& t, const CMat& t_dag, Complex lambda,
                            Complex mu, const ToleranceConfig& cfg = {});
EquivalenceAudit audit_cor9(const CMat& t, const CMat& t_dag,
                            const ToleranceConfig& cfg = {});

// Dimension constraint for finite-dimensional co-EP operators:
// n = 2 rank = 2 nullity.  Vacuous (applicable = false) off the co-EP class.
struct Rem10Result {
    bool applicable = false;
    bool holds = true;
};
Rem10Result check_rem10(const CMat& t, const ToleranceConfig& cfg = {});

// Distance ‖aa+ - a+a - 1‖; the theory forbids it from ever vanishing.
double rem34_distance(const CMat& a, const CMat& a_dag);
bool check_rem34(const CMat& a, const CMat& a_dag,
                 const ToleranceConfig& cfg = {});

// Instance generators (deterministic per seed).  Generated instances carry
// conditioning guards so that every class predicate is decided with a clear
// margin.
CMat gen_hermitian_coep(Eigen::Index n, std::uint64_t seed);
CMat gen_coep_non_hermitian(Eigen::Index n, std::uint64_t seed);
CMat gen_ep(Eigen::Index n, std::uint64_t seed);
CMat gen_random(Eigen::Index n, std::uint64_t seed);

} // namespace coep

#endif
