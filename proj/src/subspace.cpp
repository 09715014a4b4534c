#include "coep/subspace.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>

namespace coep {

namespace {

Eigen::Index rank_from_singulars(const Eigen::VectorXd& sv, double rel_tol,
                                 double scale_floor) {
    if (sv.size() == 0) return 0;
    const double cutoff = rel_tol * std::max(sv(0), scale_floor);
    Eigen::Index r = 0;
    while (r < sv.size() && sv(r) > cutoff && sv(r) > 0.0) ++r;
    return r;
}

} // namespace

Subspace range_basis(const CMat& a, const ToleranceConfig& cfg,
                     double scale_floor) {
    require_finite(a, "range_basis");
    if (a.size() == 0) return Subspace::zero(a.rows());
    Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeThinU);
    Eigen::Index r =
        rank_from_singulars(svd.singularValues(), cfg.rank_tol, scale_floor);
    return {a.rows(), svd.matrixU().leftCols(r)};
}

Subspace null_basis(const CMat& a, const ToleranceConfig& cfg,
                    double scale_floor) {
    require_finite(a, "null_basis");
    if (a.size() == 0) return Subspace::full(a.cols());
    Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullV);
    Eigen::Index r =
        rank_from_singulars(svd.singularValues(), cfg.rank_tol, scale_floor);
    return {a.cols(), svd.matrixV().rightCols(a.cols() - r)};
}

Eigen::Index numerical_rank(const CMat& a, const ToleranceConfig& cfg,
                            double scale_floor) {
    if (a.size() == 0) return 0;
    Eigen::JacobiSVD<CMat> svd(a);
    return rank_from_singulars(svd.singularValues(), cfg.rank_tol, scale_floor);
}

Subspace span_of(const CMat& columns, const ToleranceConfig& cfg,
                 double scale_floor) {
    return range_basis(columns, cfg, scale_floor);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v,
                            const ToleranceConfig& cfg) {
    if (u.ambient != v.ambient)
        throw shape_error("subspace_intersect: ambient dimension mismatch");
    if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.ambient);

    // Principal angles: cosines are the singular values of U^H V.
    Eigen::JacobiSVD<CMat> svd(u.basis.adjoint() * v.basis, Eigen::ComputeThinU);
    const double cos_cut = std::cos(cfg.angle_tol);
    const auto& sv = svd.singularValues();
    Eigen::Index k = 0;
    while (k < sv.size() && sv(k) >= cos_cut) ++k;
    if (k == 0) return Subspace::zero(u.ambient);
    CMat w = u.basis * svd.matrixU().leftCols(k);
    // re-orthonormalize (columns are orthonormal up to angle_tol already)
    Eigen::HouseholderQR<CMat> qr(w);
    CMat q = qr.householderQ() * CMat::Identity(u.ambient, k);
    return {u.ambient, q};
}

Subspace subspace_sum(const Subspace& u, const Subspace& v,
                      const ToleranceConfig& cfg) {
    if (u.ambient != v.ambient)
        throw shape_error("subspace_sum: ambient dimension mismatch");
    if (u.dim() == 0) return v;
    if (v.dim() == 0) return u;
    CMat joint(u.ambient, u.dim() + v.dim());
    joint << u.basis, v.basis;
    Eigen::JacobiSVD<CMat> svd(joint, Eigen::ComputeThinU);
    // A principal angle theta between the spans yields a singular value
    // sqrt(1 - cos theta) ~ theta / sqrt(2); the cutoff is matched to
    // angle_tol so that the dimension formula holds exactly.
    const double cutoff = cfg.angle_tol / std::sqrt(2.0);
    const auto& sv = svd.singularValues();
    Eigen::Index r = 0;
    while (r < sv.size() && sv(r) > cutoff) ++r;
    return {u.ambient, svd.matrixU().leftCols(r)};
}

bool subspace_contains(const Subspace& big, const Subspace& small,
                       const ToleranceConfig& cfg) {
    if (big.ambient != small.ambient)
        throw shape_error("subspace_contains: ambient dimension mismatch");
    if (small.dim() == 0) return true;
    CMat resid = small.basis - big.projector() * small.basis;
    return resid.norm() <= cfg.angle_tol * std::sqrt(double(small.dim()));
}

bool subspace_equal(const Subspace& u, const Subspace& v,
                    const ToleranceConfig& cfg) {
    return u.dim() == v.dim() && subspace_contains(u, v, cfg) &&
           subspace_contains(v, u, cfg);
}

bool contains_vector(const Subspace& s, const CVec& x,
                     const ToleranceConfig& cfg) {
    if (s.ambient != x.size())
        throw shape_error("contains_vector: ambient dimension mismatch");
    double nx = x.norm();
    if (nx == 0.0) return true;
    CVec resid = x - s.projector() * x;
    return resid.norm() <= cfg.angle_tol * nx;
}

InvertibilityResult is_invertible(const CMat& a, const ToleranceConfig& cfg) {
    require_square(a, "is_invertible");
    if (a.size() == 0) return {true, 0.0};
    Eigen::JacobiSVD<CMat> svd(a);
    const auto& sv = svd.singularValues();
    double smax = sv(0);
    double smin = sv(sv.size() - 1);
    // Anchor the threshold at the unit's scale: a matrix that is tiny in
    // absolute terms (for example a commutator that vanishes up to rounding)
    // must not count as invertible just because its rounding noise happens
    // to be well conditioned.
    bool inv = smin > cfg.invertibility_tol * std::max(1.0, smax);
    return {inv, smin};
}

CMat inverse(const CMat& a, const ToleranceConfig& cfg) {
    auto chk = is_invertible(a, cfg);
    if (!chk.invertible)
        throw singular_error("inverse: matrix is numerically singular", chk.margin);
    return a.partialPivLu().inverse();
}

} // namespace coep
