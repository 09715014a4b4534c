#include "coep/pseudoinverse.hpp"

#include "coep/subspace.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <vector>

namespace coep {

namespace {

double rel_scale(const CMat& a) { return std::max(1.0, a.norm()); }

// QR rank factorization a = f g with f having orthonormal columns.
struct RankFactorization {
    CMat f; // n x r, orthonormal
    CMat g; // r x n
    Eigen::Index rank;
};

RankFactorization rank_factorize(const CMat& a, const ToleranceConfig& cfg) {
    const Eigen::Index n = a.rows();
    Eigen::ColPivHouseholderQR<CMat> qr(a);
    Eigen::VectorXd diag = qr.matrixR().diagonal().cwiseAbs();
    double dmax = diag.size() ? diag.maxCoeff() : 0.0;
    Eigen::Index r = 0;
    while (r < diag.size() && diag(r) > cfg.rank_tol * dmax && dmax > 0.0) ++r;
    CMat q = qr.householderQ() * CMat::Identity(n, r);
    CMat rmat = qr.matrixR()
                    .topRows(r)
                    .template triangularView<Eigen::Upper>()
                    .toDenseMatrix();
    CMat g = rmat * qr.colsPermutation().transpose();
    return {q, g, r};
}

std::vector<Eigen::Index> pivot_indices(const CMat& a, Eigen::Index r) {
    Eigen::ColPivHouseholderQR<CMat> qr(a);
    auto perm = qr.colsPermutation().indices();
    std::vector<Eigen::Index> idx(r);
    for (Eigen::Index i = 0; i < r; ++i) idx[i] = perm(i);
    return idx;
}

} // namespace

CMat mp_rank_factorization(const CMat& a, const ToleranceConfig& cfg) {
    require_square(a, "mp_rank_factorization");
    require_finite(a, "mp_rank_factorization");
    auto rf = rank_factorize(a, cfg);
    if (rf.rank == 0) return CMat::Zero(a.rows(), a.cols());
    CMat ggh = rf.g * rf.g.adjoint();
    return rf.g.adjoint() * ggh.partialPivLu().solve(rf.f.adjoint());
}

CMat generalized_inverse(const CMat& a, const ToleranceConfig& cfg) {
    require_square(a, "generalized_inverse");
    require_finite(a, "generalized_inverse");
    const Eigen::Index n = a.rows();
    Eigen::Index r = numerical_rank(a, cfg);
    if (r == 0) return CMat::Zero(n, n);

    // Pick r independent columns and r independent rows; invert the pivot
    // submatrix and embed its inverse at the transposed index positions.
    auto cols = pivot_indices(a, r);
    auto rows = pivot_indices(a.adjoint(), r);
    CMat a11(r, r);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j) a11(i, j) = a(rows[i], cols[j]);
    auto chk = is_invertible(a11, cfg);
    if (chk.invertible) {
        CMat a11inv = a11.partialPivLu().inverse();
        CMat b = CMat::Zero(n, n);
        for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index j = 0; j < r; ++j) b(cols[i], rows[j]) = a11inv(i, j);
        if ((a * b * a - a).norm() <= cfg.residual_tol * rel_scale(a)) return b;
    }
    // Pivot submatrix degenerate; the rank-factorization inverse always works.
    return mp_rank_factorization(a, cfg);
}

CMat normalize(const CMat& a, const CMat& b, const ToleranceConfig& cfg) {
    require_square(a, "normalize");
    if (b.rows() != a.rows() || b.cols() != a.cols())
        throw shape_error("normalize: shape mismatch");
    double res = (a * b * a - a).norm();
    if (res > cfg.residual_tol * rel_scale(a))
        throw contract_error("normalize: b is not a generalized inverse of a", res);
    return b * a * b;
}

MPCertificate mp_verify(const CMat& a, const CMat& x, const NormSpec& n,
                        const ToleranceConfig& cfg) {
    require_square(a, "mp_verify");
    if (x.rows() != a.rows() || x.cols() != a.cols())
        throw shape_error("mp_verify: shape mismatch");
    MPCertificate cert;
    cert.norm = n;
    cert.residual_axa = operator_norm(a * x * a - a, n);
    cert.residual_xax = operator_norm(x * a * x - x, n);
    cert.ax = is_hermitian(a * x, n, cfg);
    cert.xa = is_hermitian(x * a, n, cfg);
    return cert;
}

std::pair<CMat, MPCertificate> mp_inverse_euclidean(const CMat& a,
                                                    const ToleranceConfig& cfg) {
    require_square(a, "mp_inverse_euclidean");
    require_finite(a, "mp_inverse_euclidean");
    const Eigen::Index n = a.rows();
    CMat x = CMat::Zero(n, n);
    if (n > 0) {
        Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        double smax = sv.size() ? sv(0) : 0.0;
        CVec inv = CVec::Zero(sv.size());
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > cfg.rank_tol * smax && smax > 0.0) inv(i) = 1.0 / sv(i);
        x = svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
    }
    return {x, mp_verify(a, x, NormSpec::l2(), cfg)};
}

MPSearchOutcome mp_search_diagonalizable(const CMat& a, const NormSpec& n,
                                         const ToleranceConfig& cfg) {
    require_square(a, "mp_search_diagonalizable");
    require_finite(a, "mp_search_diagonalizable");
    if (n.kind == NormSpec::Kind::L2)
        throw std::invalid_argument(
            "mp_search_diagonalizable: L2 has a direct solver, use mp_inverse_euclidean");

    const Eigen::Index nn = a.rows();
    const double scale = rel_scale(a);
    MPSearchOutcome out;

    auto rf = rank_factorize(a, cfg);
    const Eigen::Index r = rf.rank;
    if (r == 0) {
        CMat z = CMat::Zero(nn, nn);
        out.found = {z, mp_verify(a, z, n, cfg)};
        out.note = "zero element";
        return out;
    }

    CMat apinv = mp_inverse_euclidean(a, cfg).first;

    // Candidate idempotents, in deterministic order: the rank-factorization
    // projection f (g f)^-1 g first, then 0/1 diagonal idempotents of trace r
    // by lexicographic support.
    std::vector<CMat> candidates;
    {
        CMat gf = rf.g * rf.f;
        if (is_invertible(gf, cfg).invertible)
            candidates.push_back(rf.f * gf.partialPivLu().solve(rf.g));
    }
    std::vector<Eigen::Index> support(r);
    for (Eigen::Index i = 0; i < r; ++i) support[i] = i;
    bool more = true;
    while (more) {
        CMat d = CMat::Zero(nn, nn);
        for (Eigen::Index i : support) d(i, i) = 1.0;
        candidates.push_back(d);
        // next r-subset of {0..nn-1} in lexicographic order
        more = false;
        for (Eigen::Index i = r; i-- > 0;) {
            if (support[i] < nn - r + i) {
                ++support[i];
                for (Eigen::Index j = i + 1; j < r; ++j)
                    support[j] = support[j - 1] + 1;
                more = true;
                break;
            }
        }
    }

    std::vector<const CMat*> left_ok, right_ok; // P a = a resp. a Q = a
    for (const CMat& p : candidates) {
        if ((p * a - a).norm() <= cfg.residual_tol * scale &&
            is_hermitian(p, n, cfg).hermitian)
            left_ok.push_back(&p);
    }
    for (const CMat& q : candidates) {
        if ((a * q - a).norm() <= cfg.residual_tol * scale &&
            is_hermitian(q, n, cfg).hermitian)
            right_ok.push_back(&q);
    }

    for (const CMat* p : left_ok) {
        for (const CMat* q : right_ok) {
            ++out.candidates_tried;
            CMat x = (*q) * apinv * (*p);
            MPCertificate cert = mp_verify(a, x, n, cfg);
            if (cert.valid(cfg)) {
                out.found = {x, cert};
                return out;
            }
        }
    }
    out.note = "no hermitian idempotent pair in the searched family yields a "
               "valid certificate";
    return out;
}

} // namespace coep
