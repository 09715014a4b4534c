#include "coep/classification.hpp"

#include "coep/hermitian.hpp"
#include "coep/mult_operators.hpp"
#include "coep/rng.hpp"
#include "coep/subspace.hpp"

#include <Eigen/QR>
#include <cmath>

namespace coep {

namespace {

CMat eye(Eigen::Index n) { return CMat::Identity(n, n); }

double rel_scale(const CMat& a) { return std::max(1.0, a.norm()); }

// Decide whether an idempotent acting as the identity on span(u) and
// vanishing on span(v) exists, by constructing it.  Feasible exactly when
// the two spans intersect trivially.
struct IdempotentWitness {
    bool exists = false;
    CMat value;
};

IdempotentWitness oblique_idempotent(const Subspace& u, const Subspace& v,
                                     const ToleranceConfig& cfg) {
    const Eigen::Index n = u.ambient;
    IdempotentWitness w;
    if (u.dim() + v.dim() > n) return w;
    CMat joint = hcat(n, {&u.basis, &v.basis});
    if (numerical_rank(joint, cfg) < joint.cols()) return w;

    // extend [U V] to a basis of the whole space with an orthonormal
    // complement, then map U -> U, everything else -> 0
    Subspace comp = null_basis(joint.adjoint(), cfg);
    CMat full = hcat(n, {&u.basis, &v.basis, &comp.basis});
    auto chk = is_invertible(full, cfg);
    if (!chk.invertible) return w;
    CMat target = CMat::Zero(n, n);
    target.leftCols(u.dim()) = u.basis;
    CMat h = target * full.partialPivLu().inverse();
    if ((h * h - h).norm() > cfg.residual_tol * 1e3 * rel_scale(h)) return w;
    w.exists = true;
    w.value = h;
    return w;
}

// Idempotent Q with range inside span(v2) and I - Q vanishing-range inside
// span(w1compat): feasibility of R(I-Q) ⊆ N(T), R(Q) ⊆ N(T+).  Requires
// extending a basis of N(T+) to the full space using vectors of N(T).
IdempotentWitness complement_idempotent(const Subspace& null_t,
                                        const Subspace& null_tdag,
                                        const ToleranceConfig& cfg) {
    const Eigen::Index n = null_t.ambient;
    IdempotentWitness w;
    // greedily pick columns of null(T) that extend null(T+) to a full basis
    CMat chosen(n, 0);
    Subspace span = null_tdag;
    for (Eigen::Index j = 0; j < null_t.dim() && span.dim() < n; ++j) {
        CVec c = null_t.basis.col(j);
        if (!contains_vector(span, c, cfg)) {
            chosen.conservativeResize(n, chosen.cols() + 1);
            chosen.col(chosen.cols() - 1) = c;
            span = subspace_sum(span, span_of(c, cfg), cfg);
        }
    }
    if (span.dim() < n || null_tdag.dim() + chosen.cols() != n) return w;
    CMat full = hcat(n, {&null_tdag.basis, &chosen});
    auto chk = is_invertible(full, cfg);
    if (!chk.invertible) return w;
    CMat target = CMat::Zero(n, n);
    target.leftCols(null_tdag.dim()) = null_tdag.basis;
    CMat qmat = target * full.partialPivLu().inverse();
    if ((qmat * qmat - qmat).norm() > cfg.residual_tol * 1e3 * rel_scale(qmat))
        return w;
    w.exists = true;
    w.value = qmat;
    return w;
}

} // namespace

ClassificationReport classify(const CMat& a, const CMat& a_dag,
                              const NormSpec& n, const ToleranceConfig& cfg) {
    require_square(a, "classify");
    ClassificationReport rep;
    MPCertificate cert = mp_verify(a, a_dag, NormSpec::l2(), cfg);
    rep.mp_invertible = cert.valid(cfg);
    if (!rep.mp_invertible) {
        rep.margins["mp_residual"] =
            std::max(cert.residual_axa, cert.residual_xax);
        return rep;
    }

    const CMat p = a * a_dag;
    const CMat q = a_dag * a;
    const CMat diff = p - q;

    double ep_defect = diff.norm();
    rep.ep = ep_defect <= cfg.residual_tol * rel_scale(p);
    rep.margins["ep_defect"] = ep_defect;

    auto inv = is_invertible(diff, cfg);
    rep.co_ep = inv.invertible;
    rep.margins["co_ep_margin"] = inv.margin;

    double commutator = (p * q - q * p).norm();
    rep.bi_ep = commutator <= cfg.residual_tol * rel_scale(p);
    rep.margins["bi_ep_defect"] = commutator;

    if (rep.co_ep) {
        CMat diff_inv = inverse(diff, cfg);
        rep.h = p * diff_inv;
        rep.k = diff_inv * p;
        HermitianVerdict hv = is_hermitian(*rep.h, n, cfg);
        rep.hermitian_co_ep = hv.hermitian;
        rep.margins["h_hermitian_defect"] =
            std::max(hv.defect, hv.derivative_defect);
        rep.margins["h_idempotent_defect"] =
            ((*rep.h) * (*rep.h) - (*rep.h)).norm();
        rep.margins["k_idempotent_defect"] =
            ((*rep.k) * (*rep.k) - (*rep.k)).norm();
    }
    return rep;
}

ClassificationReport classify(const CMat& a, const NormSpec& n,
                              const ToleranceConfig& cfg) {
    auto [a_dag, cert] = mp_inverse_euclidean(a, cfg);
    return classify(a, a_dag, n, cfg);
}

EquivalenceAudit audit_thm7(const CMat& a, const CMat& a_dag, Complex lambda,
                            Complex mu, const ToleranceConfig& cfg) {
    require_mp_pair(a, a_dag, cfg);
    if (lambda == Complex(0, 0) || mu == Complex(0, 0))
        throw std::invalid_argument("audit_thm7: lambda and mu must be nonzero");

    const Eigen::Index n = a.rows();
    const CMat p = a * a_dag;
    const CMat q = a_dag * a;
    const CMat diff = p - q;
    const CMat sum_pq = p + q;
    const CMat m = lambda * a + mu * a_dag;

    const Subspace ra = right_ideal(a, cfg);
    const Subspace rd = right_ideal(a_dag, cfg);
    const Subspace la = left_ideal(a, cfg);
    const Subspace ld = left_ideal(a_dag, cfg);

    auto inv_diff = is_invertible(diff, cfg);
    auto inv_m = is_invertible(m, cfg);
    auto inv_sum = is_invertible(sum_pq, cfg);

    const bool right_meet_zero = subspace_intersect(ra, rd, cfg).dim() == 0;
    const bool left_meet_zero = subspace_intersect(la, ld, cfg).dim() == 0;
    const bool right_spans =
        right_meet_zero && subspace_sum(ra, rd, cfg).dim() == n * n;
    const bool left_spans =
        left_meet_zero && subspace_sum(la, ld, cfg).dim() == n * n;

    auto h_wit = oblique_idempotent(range_basis(a, cfg, 1.0),
                                    range_basis(a_dag, cfg, 1.0), cfg);
    auto k_wit = oblique_idempotent(range_basis(a.adjoint(), cfg, 1.0),
                                    range_basis(a_dag.adjoint(), cfg, 1.0), cfg);

    // finite-dimensional collapse: a lifted multiplication operator is right
    // invertible iff the element itself is invertible
    const bool lifts_right_invertible = inv_m.invertible;

    EquivalenceAudit audit;
    audit.statements = {
        {"(i) aa+ - a+a invertible", inv_diff.invertible, inv_diff.margin},
        {"(ii) A = aA (+) a+A and A = Aa (+) Aa+", right_spans && left_spans, 0.0},
        {"(iii) la+ua+ invertible & aA meet a+A = 0",
         inv_m.invertible && right_meet_zero, inv_m.margin},
        {"(iv) la+ua+ invertible & idempotent h: ha=a, ha+=0",
         inv_m.invertible && h_wit.exists, inv_m.margin},
        {"(v) lifted ops right invertible (== invertible here) & aA meet a+A = 0",
         lifts_right_invertible && right_meet_zero, inv_m.margin},
        {"(vi) aa+ + a+a invertible & aA meet a+A = 0",
         inv_sum.invertible && right_meet_zero, inv_sum.margin},
        {"(vii) la+ua+ invertible & idempotent k: ak=a, a+k=0",
         inv_m.invertible && k_wit.exists, inv_m.margin},
        {"(viii) aa+ + a+a invertible & Aa meet Aa+ = 0",
         inv_sum.invertible && left_meet_zero, inv_sum.margin},
        {"(ix) la+ua+ invertible & Aa meet Aa+ = 0",
         inv_m.invertible && left_meet_zero, inv_m.margin},
    };
    return audit;
}

EquivalenceAudit audit_thm5(const CMat& a, const CMat& a_dag, const NormSpec& n,
                            const ToleranceConfig& cfg) {
    require_mp_pair(a, a_dag, cfg);
    const Eigen::Index nn = a.rows();
    const CMat p = a * a_dag;
    const CMat q = a_dag * a;
    const double scale = rel_scale(p);

    ClassificationReport cls = classify(a, a_dag, n, cfg);
    const bool co = cls.co_ep;

    bool h_herm = false, h_is_p = false, k_is_p = false, k_herm = false,
         k_is_h = false;
    if (co) {
        h_herm = is_hermitian(*cls.h, n, cfg).hermitian;
        h_is_p = (*cls.h - p).norm() <= cfg.residual_tol * 1e3 * scale;
        k_is_p = (*cls.k - p).norm() <= cfg.residual_tol * 1e3 * scale;
        k_herm = is_hermitian(*cls.k, n, cfg).hermitian;
        k_is_h = (*cls.k - *cls.h).norm() <= cfg.residual_tol * 1e3 * scale;
    }

    const double unit_defect = (p + q - eye(nn)).norm();
    const double sq_norm = (a * a).norm();
    const bool a2_zero = sq_norm <= cfg.residual_tol * rel_scale(a) * rel_scale(a);

    EquivalenceAudit audit;
    audit.statements = {
        {"(i) co-EP & h hermitian", co && h_herm, 0.0},
        {"(ii) co-EP & h = aa+", co && h_is_p, 0.0},
        {"(iii) a+a + aa+ = 1", unit_defect <= cfg.residual_tol * 1e3 * scale,
         unit_defect},
        {"(iv) aA = a^-1(0)",
         subspace_equal(right_ideal(a, cfg), left_annihilator_space(a, cfg), cfg),
         0.0},
        {"(v) Aa = a_-1(0)",
         subspace_equal(left_ideal(a, cfg), right_annihilator_space(a, cfg), cfg),
         0.0},
        {"(vi) co-EP & k = aa+", co && k_is_p, 0.0},
        {"(vii) co-EP & k hermitian", co && k_herm, 0.0},
        {"(viii) co-EP & k = h", co && k_is_h, 0.0},
        {"(ix) co-EP & a^2 = 0", co && a2_zero, sq_norm},
        {"(x) a+A = (a+)^-1(0)",
         subspace_equal(right_ideal(a_dag, cfg),
                        left_annihilator_space(a_dag, cfg), cfg),
         0.0},
        {"(xi) Aa+ = (a+)_-1(0)",
         subspace_equal(left_ideal(a_dag, cfg),
                        right_annihilator_space(a_dag, cfg), cfg),
         0.0},
        {"(xii) co-EP & bi-EP", co && cls.bi_ep, 0.0},
    };
    return audit;
}

EquivalenceAudit audit_cor8(const CMat& t, const CMat& t_dag, Complex lambda,
                            Complex mu, const ToleranceConfig& cfg) {
    require_mp_pair(t, t_dag, cfg);
    if (lambda == Complex(0, 0) || mu == Complex(0, 0))
        throw std::invalid_argument("audit_cor8: lambda and mu must be nonzero");

    const Eigen::Index n = t.rows();
    const CMat p = t * t_dag;
    const CMat q = t_dag * t;
    const CMat m = lambda * t + mu * t_dag;

    const Subspace rt = range_basis(t, cfg, 1.0);
    const Subspace rtd = range_basis(t_dag, cfg, 1.0);
    const Subspace nt = null_basis(t, cfg, 1.0);
    const Subspace ntd = null_basis(t_dag, cfg, 1.0);
    const Subspace rp_complement = range_basis(eye(n) - p, cfg, 1.0);
    const Subspace rq_complement = range_basis(eye(n) - q, cfg, 1.0);

    auto inv_diff = is_invertible(p - q, cfg);
    auto inv_m = is_invertible(m, cfg);
    auto inv_sum = is_invertible(p + q, cfg);

    const bool range_meet_zero = subspace_intersect(rt, rtd, cfg).dim() == 0;
    // The operator-level reading of "left ideal of T meets left ideal of T+
    // trivially": an operator vanishing on N(T) + N(T+) must be zero, i.e.
    // the complement ranges R(I-TT+) = N(T+) and R(I-T+T) = N(T) decompose
    // the whole space.  Their meet being trivial is necessary but not
    // sufficient (an invertible T has trivial meet yet a trivial sum too).
    const bool compl_decomposes =
        subspace_intersect(rp_complement, rq_complement, cfg).dim() == 0 &&
        subspace_sum(rp_complement, rq_complement, cfg).dim() == n;

    auto p_wit = oblique_idempotent(rt, rtd, cfg);
    auto q_wit = complement_idempotent(nt, ntd, cfg);

    EquivalenceAudit audit;
    audit.statements = {
        {"(i) T co-EP", inv_diff.invertible, inv_diff.margin},
        {"(ii) lT+uT+ invertible & R(T) meet R(T+) = 0",
         inv_m.invertible && range_meet_zero, inv_m.margin},
        {"(iii) lT+uT+ invertible & idempotent P: R(T)<=R(P), R(T+)<=N(P)",
         inv_m.invertible && p_wit.exists, inv_m.margin},
        {"(iv) TT+ + T+T invertible & R(T) meet R(T+) = 0",
         inv_sum.invertible && range_meet_zero, inv_sum.margin},
        {"(v) lT+uT+ invertible & idempotent Q: R(I-Q)<=N(T), R(Q)<=N(T+)",
         inv_m.invertible && q_wit.exists, inv_m.margin},
        {"(vi) TT+ + T+T invertible & X = R(I-TT+) (+) R(I-T+T)",
         inv_sum.invertible && compl_decomposes, inv_sum.margin},
        {"(vii) lT+uT+ invertible & X = R(I-TT+) (+) R(I-T+T)",
         inv_m.invertible && compl_decomposes, inv_m.margin},
    };
    return audit;
}

EquivalenceAudit audit_cor9(const CMat& t, const CMat& t_dag,
                            const ToleranceConfig& cfg) {
    require_mp_pair(t, t_dag, cfg);
    const Eigen::Index n = t.rows();
    const CMat diff = t * t_dag - t_dag * t;

    const Subspace rt = range_basis(t, cfg, 1.0);
    const Subspace rtd = range_basis(t_dag, cfg, 1.0);
    const Subspace nt = null_basis(t, cfg, 1.0);
    const Subspace ntd = null_basis(t_dag, cfg, 1.0);

    auto inv_diff = is_invertible(diff, cfg);
    const bool meets_zero = subspace_intersect(rt, rtd, cfg).dim() == 0 &&
                            subspace_intersect(nt, ntd, cfg).dim() == 0;
    const bool sums_full = subspace_sum(rt, rtd, cfg).dim() == n &&
                           subspace_sum(nt, ntd, cfg).dim() == n;

    EquivalenceAudit audit;
    audit.statements = {
        {"(i) T co-EP", inv_diff.invertible, inv_diff.margin},
        {"(ii) R(T) meet R(T+) = 0 and N(T) meet N(T+) = 0", meets_zero, 0.0},
        {"(iii) X = R(T) + R(T+) and X = N(T) + N(T+)", sums_full, 0.0},
    };
    return audit;
}

Rem10Result check_rem10(const CMat& t, const ToleranceConfig& cfg) {
    require_square(t, "check_rem10");
    Rem10Result res;
    ClassificationReport cls = classify(t, NormSpec::l2(), cfg);
    if (!cls.co_ep) return res; // vacuously true, flagged not applicable
    res.applicable = true;
    const Eigen::Index n = t.rows();
    const Eigen::Index r = numerical_rank(t, cfg, 1.0);
    res.holds = (n == 2 * r) && (n == 2 * (n - r));
    return res;
}

double rem34_distance(const CMat& a, const CMat& a_dag) {
    require_square(a, "rem34_distance");
    const CMat diff = a * a_dag - a_dag * a;
    return spectral_norm(diff - identity_like(a));
}

bool check_rem34(const CMat& a, const CMat& a_dag, const ToleranceConfig& cfg) {
    return rem34_distance(a, a_dag) > cfg.residual_tol;
}

CMat gen_hermitian_coep(Eigen::Index n, std::uint64_t seed) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("gen_hermitian_coep: dimension must be even");
    Rng rng(seed);
    const Eigen::Index r = n / 2;
    CMat b = rng.random_with_spectrum(r, r, 0.5, 2.0);
    CMat a0 = CMat::Zero(n, n);
    a0.topRightCorner(r, r) = b;
    CMat u = rng.haar_unitary(n);
    return u * a0 * u.adjoint();
}

CMat gen_coep_non_hermitian(Eigen::Index n, std::uint64_t seed) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument(
            "gen_coep_non_hermitian: dimension must be even");
    const Eigen::Index r = n / 2;
    ToleranceConfig cfg;
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng = Rng(seed).fork(attempt);
        CMat u = rng.haar_unitary(n);
        CMat u1 = u.leftCols(r);   // range of a
        CMat w = u.rightCols(n - r);
        CMat c = rng.cgaussian_matrix(r, r); // overlap with span(u1)
        CMat d = rng.cgaussian_matrix(r, r); // complementary component
        if (smallest_singular_value(d) < 0.2) continue;

        CMat vraw = u1 * c + w * d;
        Eigen::HouseholderQR<CMat> qr(vraw);
        CMat v1 = qr.householderQ() * CMat::Identity(n, r); // range of a^H

        CVec sigma(r);
        for (Eigen::Index i = 0; i < r; ++i) sigma(i) = rng.uniform(0.5, 2.0);
        CMat a = u1 * sigma.asDiagonal() * v1.adjoint();

        // margins: nonzero range overlap (kills the hermitian co-EP
        // statements), a^2 != 0, bi-EP commutator, co-EP invertibility
        CMat overlap = v1.adjoint() * u1;
        if (overlap.norm() < 0.1) continue;
        if ((a * a).norm() < 1e-3) continue;
        CMat p = u1 * u1.adjoint();
        CMat q = v1 * v1.adjoint();
        if ((p * q - q * p).norm() < 1e-3) continue;
        if (smallest_singular_value(p - q) < 1e-3) continue;
        return a;
    }
}

CMat gen_ep(Eigen::Index n, std::uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("gen_ep: dimension must be positive");
    Rng rng(seed);
    Eigen::Index r = 1 + Eigen::Index(rng.raw() % std::uint64_t(n));
    CMat m = rng.random_with_spectrum(r, r, 0.5, 2.0);
    CMat a0 = CMat::Zero(n, n);
    a0.topLeftCorner(r, r) = m;
    CMat u = rng.haar_unitary(n);
    return u * a0 * u.adjoint();
}

CMat gen_random(Eigen::Index n, std::uint64_t seed) {
    if (n <= 0)
        throw std::invalid_argument("gen_random: dimension must be positive");
    Rng rng(seed);
    Eigen::Index rank = Eigen::Index(rng.raw() % std::uint64_t(n + 1));
    return rng.random_with_spectrum(n, rank, 0.5, 2.0);
}

} // namespace coep
