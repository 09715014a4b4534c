#include "coep/perturbation.hpp"

#include "coep/classification.hpp"
#include "coep/rng.hpp"
#include "coep/subspace.hpp"

#include <Eigen/LU>
#include <cmath>

namespace coep {

namespace {

// contraction must stay strictly below 1; the closed-form inverse
// degenerates at the boundary
constexpr double kStrictness = 1e-9;

void require_pair(const PerturbationPair& pair, const ToleranceConfig& cfg) {
    require_square(pair.a, "perturbation");
    MPCertificate cert = mp_verify(pair.a, pair.a_dag, pair.norm, cfg);
    if (!cert.valid(cfg))
        throw contract_error("perturbation: (a, a_dag) is not a valid MP pair",
                             std::max(cert.residual_axa, cert.residual_xax));
}

void require_condition_p(const PerturbationPair& pair,
                         const ToleranceConfig& cfg) {
    auto res = satisfies_condition_p(pair, cfg);
    if (!res.satisfied)
        throw contract_error("perturbation: b does not obey condition (P) at a",
                             std::max(res.projection_residual,
                                      res.contraction >= 1.0 ? res.contraction
                                                             : 0.0));
}

CMat closed_form_b_dag(const PerturbationPair& pair) {
    const CMat e = pair.b - pair.a;
    const CMat f1 = identity_like(pair.a) + pair.a_dag * e;
    return f1.partialPivLu().solve(pair.a_dag);
}

} // namespace

ConditionPResult satisfies_condition_p(const PerturbationPair& pair,
                                       const ToleranceConfig& cfg) {
    require_pair(pair, cfg);
    const CMat e = pair.b - pair.a;
    const CMat p = pair.a * pair.a_dag;
    const CMat q = pair.a_dag * pair.a;
    const double scale = std::max(1.0, operator_norm(pair.a, pair.norm));

    ConditionPResult res;
    res.projection_residual = operator_norm(e - p * e * q, pair.norm);
    res.contraction = operator_norm(pair.a_dag * e, pair.norm);
    res.split_residual = std::max(operator_norm(e - p * e, pair.norm),
                                  operator_norm(e - e * q, pair.norm));
    res.satisfied = res.projection_residual <= cfg.residual_tol * scale &&
                    res.split_residual <= cfg.residual_tol * scale &&
                    res.contraction < 1.0 - kStrictness;
    return res;
}

FactorizationReport lemma_factorizations(const PerturbationPair& pair,
                                         const ToleranceConfig& cfg) {
    require_condition_p(pair, cfg);
    const CMat e = pair.b - pair.a;
    const CMat id = identity_like(pair.a);
    const CMat f1 = id + pair.a_dag * e;
    const CMat f2 = id + e * pair.a_dag;

    FactorizationReport rep;
    rep.residual_left = operator_norm(pair.a * f1 - pair.b, pair.norm);
    rep.residual_right = operator_norm(f2 * pair.a - pair.b, pair.norm);
    auto i1 = is_invertible(f1, cfg);
    auto i2 = is_invertible(f2, cfg);
    rep.factors_invertible = i1.invertible && i2.invertible;
    if (rep.factors_invertible) {
        CMat left = f1.partialPivLu().solve(pair.a_dag);
        CMat right = pair.a_dag * f2.partialPivLu().inverse();
        rep.swap_residual = operator_norm(left - right, pair.norm);
    }
    return rep;
}

PerturbedMP perturbed_mp(const PerturbationPair& pair,
                         const ToleranceConfig& cfg) {
    require_condition_p(pair, cfg);
    PerturbedMP out;
    out.b_dag = closed_form_b_dag(pair);
    out.certificate = mp_verify(pair.b, out.b_dag, pair.norm, cfg);
    out.projection_left_residual =
        operator_norm(pair.b * out.b_dag - pair.a * pair.a_dag, pair.norm);
    out.projection_right_residual =
        operator_norm(out.b_dag * pair.b - pair.a_dag * pair.a, pair.norm);
    return out;
}

ErrorBound error_bound(const PerturbationPair& pair,
                       const ToleranceConfig& cfg) {
    require_condition_p(pair, cfg);
    const CMat e = pair.b - pair.a;
    const double c = operator_norm(pair.a_dag * e, pair.norm);
    const double na_dag = operator_norm(pair.a_dag, pair.norm);
    const CMat b_dag = closed_form_b_dag(pair);

    ErrorBound out;
    out.bound = c / (1.0 - c);
    out.realized =
        na_dag == 0.0 ? 0.0 : operator_norm(b_dag - pair.a_dag, pair.norm) / na_dag;
    return out;
}

NormBracket norm_bracket(const PerturbationPair& pair,
                         const ToleranceConfig& cfg) {
    require_condition_p(pair, cfg);
    const CMat e = pair.b - pair.a;
    const double c = operator_norm(pair.a_dag * e, pair.norm);
    const double na_dag = operator_norm(pair.a_dag, pair.norm);

    NormBracket out;
    out.lower = na_dag / (1.0 + c);
    out.upper = na_dag / (1.0 - c);
    out.value = operator_norm(closed_form_b_dag(pair), pair.norm);
    return out;
}

ReverseConditionResult reverse_condition(const PerturbationPair& pair,
                                         const ToleranceConfig& cfg) {
    require_condition_p(pair, cfg);
    const CMat e = pair.b - pair.a;
    const double c = operator_norm(pair.a_dag * e, pair.norm);

    ReverseConditionResult out;
    out.applicable = c < 0.5;
    if (!out.applicable) return out;

    const CMat b_dag = closed_form_b_dag(pair);
    PerturbationPair reversed{pair.b, b_dag, pair.a, pair.norm};
    auto res = satisfies_condition_p(reversed, cfg);
    out.reverse_contraction = res.contraction;
    out.holds = res.satisfied;
    return out;
}

ConditionNumberReport condition_number_bound(const PerturbationPair& pair,
                                             const ToleranceConfig& cfg) {
    require_condition_p(pair, cfg);
    const CMat e = pair.b - pair.a;
    const double na = operator_norm(pair.a, pair.norm);
    const double na_dag = operator_norm(pair.a_dag, pair.norm);
    const double ne = operator_norm(e, pair.norm);

    ConditionNumberReport out;
    out.k_dag = na * na_dag;
    out.applicable = na_dag * ne < 1.0;
    if (!out.applicable) return out;
    if (na == 0.0 || na_dag == 0.0) {
        out.realized = 0.0;
        out.bound = 0.0;
        return out;
    }
    const double ratio = out.k_dag * ne / na;
    out.bound = ratio / (1.0 - ratio);
    out.realized =
        operator_norm(closed_form_b_dag(pair) - pair.a_dag, pair.norm) / na_dag;
    return out;
}

ProductMPReport product_mps(const PerturbationPair& pair,
                            const ToleranceConfig& cfg) {
    require_condition_p(pair, cfg);
    const CMat b_dag = closed_form_b_dag(pair);

    struct Pair {
        const char* label;
        CMat x;
        CMat y; // claimed MP inverse of x
    };
    const std::vector<Pair> pairs = {
        {"(ab+)+ = ba+", pair.a * b_dag, pair.b * pair.a_dag},
        {"(b+a)+ = a+b", b_dag * pair.a, pair.a_dag * pair.b},
        {"(ba+)+ = ab+", pair.b * pair.a_dag, pair.a * b_dag},
        {"(a+b)+ = b+a", pair.a_dag * pair.b, b_dag * pair.a},
    };

    ProductMPReport rep;
    for (const auto& pr : pairs) {
        ProductMPReport::Entry entry;
        entry.label = pr.label;
        MPCertificate cert = mp_verify(pr.x, pr.y, pair.norm, cfg);
        entry.mp_residual = std::max(cert.residual_axa, cert.residual_xax);
        entry.certified = cert.valid(cfg);
        auto cls = classify(pr.x, pr.y, pair.norm, cfg);
        entry.ep = cls.ep;
        entry.projector_gap = operator_norm(pr.x * pr.y - pr.y * pr.x, pair.norm);
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

CMat gen_perturbation(const CMat& a, const CMat& a_dag, double eps,
                      std::uint64_t seed, const NormSpec& norm,
                      const ToleranceConfig& cfg) {
    require_square(a, "gen_perturbation");
    if (!(eps >= 0.0 && eps < 1.0))
        throw std::invalid_argument("gen_perturbation: eps must be in [0, 1)");
    MPCertificate cert = mp_verify(a, a_dag, norm, cfg);
    if (!cert.valid(cfg))
        throw contract_error("gen_perturbation: invalid MP pair",
                             std::max(cert.residual_axa, cert.residual_xax));
    if (eps == 0.0) return a;

    Rng rng(seed);
    const CMat p = a * a_dag;
    const CMat q = a_dag * a;
    CMat corner = p * rng.cgaussian_matrix(a.rows(), a.cols()) * q;
    double c = operator_norm(a_dag * corner, norm);
    if (c == 0.0) return a; // rank-zero base, nothing to perturb
    // the contraction is homogeneous in the scale, so one division lands on
    // eps exactly
    return a + (eps / c) * corner;
}

} // namespace coep
