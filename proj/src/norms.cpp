#include "coep/norms.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace coep {

namespace {

double lp_norm(const CVec& x, double p) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        s += std::pow(std::abs(x[i]), p);
    return std::pow(s, 1.0 / p);
}

Complex csign(Complex z) {
    double m = std::abs(z);
    return m == 0.0 ? Complex(0, 0) : z / m;
}

// Dual vector of x with respect to the p-norm: the unit q-norm vector u
// (1/p + 1/q = 1) with u^H x = ‖x‖_p.
CVec dual_vector(const CVec& x, double p) {
    double nx = lp_norm(x, p);
    CVec u = CVec::Zero(x.size());
    if (nx == 0.0) return u;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        double m = std::abs(x[i]);
        u[i] = std::pow(m / nx, p - 1.0) * csign(x[i]);
    }
    return u;
}

// Boyd/Higham power iteration for the induced p-norm.  Returns a lower
// bound converged to within a fixed tolerance of a stationary point of the norm
// ratio.  Each start ascends monotonically; we keep the best value.
double lp_operator_norm_estimate(const CMat& a, const NormSpec& n) {
    const double p = n.p;
    const double q = p / (p - 1.0);
    double best = 0.0;

    auto ascend = [&](CVec x) {
        double nx = lp_norm(x, p);
        if (nx == 0.0) return;
        x /= nx;
        double gamma = 0.0;
        for (int it = 0; it < n.iterations; ++it) {
            CVec y = a * x;
            double ny = lp_norm(y, p);
            if (ny == 0.0) break;
            gamma = ny;
            CVec z = a.adjoint() * dual_vector(y, p);
            double nz = lp_norm(z, q);
            double zx = (z.adjoint() * x).real()(0, 0);
            if (nz <= zx + n.tolerance * std::max(1.0, nz)) break;
            x = dual_vector(z, q);
            double nxx = lp_norm(x, p);
            if (nxx == 0.0) break;
            x /= nxx;
        }
        best = std::max(best, gamma);
    };

    ascend(CVec::Ones(a.cols()));
    // unit vector at the column with the largest p-norm
    Eigen::Index jmax = 0;
    double cmax = -1.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        double c = lp_norm(a.col(j), p);
        if (c > cmax) { cmax = c; jmax = j; }
    }
    CVec e = CVec::Zero(a.cols());
    e[jmax] = 1.0;
    ascend(e);
    return best;
}

} // namespace

double vector_norm(const CVec& x, const NormSpec& n) {
    switch (n.kind) {
        case NormSpec::Kind::L1: return x.cwiseAbs().sum();
        case NormSpec::Kind::L2: return x.norm();
        case NormSpec::Kind::LInf: return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
        case NormSpec::Kind::Lp: return lp_norm(x, n.p);
    }
    return 0.0;
}

double spectral_norm(const CMat& a) {
    if (a.size() == 0) return 0.0;
    return Eigen::JacobiSVD<CMat>(a).singularValues()(0);
}

double smallest_singular_value(const CMat& a) {
    if (a.size() == 0) return 0.0;
    auto sv = Eigen::JacobiSVD<CMat>(a).singularValues();
    return sv(sv.size() - 1);
}

double operator_norm(const CMat& a, const NormSpec& n) {
    require_finite(a, "operator_norm");
    switch (n.kind) {
        case NormSpec::Kind::L1: {
            double m = 0.0;
            for (Eigen::Index j = 0; j < a.cols(); ++j)
                m = std::max(m, a.col(j).cwiseAbs().sum());
            return m;
        }
        case NormSpec::Kind::LInf: {
            double m = 0.0;
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                m = std::max(m, a.row(i).cwiseAbs().sum());
            return m;
        }
        case NormSpec::Kind::L2:
            return spectral_norm(a);
        case NormSpec::Kind::Lp:
            return lp_operator_norm_estimate(a, n);
    }
    return 0.0;
}

} // namespace coep
