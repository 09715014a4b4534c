#include "coep/hermitian.hpp"

#include "coep/expm.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace coep {

namespace {

constexpr double kT0 = 1e-3;
constexpr int kDoublings = 20; // t = ±t0 * 2^k, k = 0..20

std::vector<double> grid_points() {
    std::vector<double> ts;
    ts.reserve(2 * (kDoublings + 1));
    double t = kT0;
    for (int k = 0; k <= kDoublings; ++k, t *= 2.0) {
        ts.push_back(t);
        ts.push_back(-t);
    }
    return ts;
}

double point_defect(const CMat& a, const NormSpec& n, double t) {
    CMat e = matrix_exp(Complex(0, t) * a);
    if (!all_finite(e)) return std::numeric_limits<double>::infinity();
    double nrm = operator_norm(e, n);
    return std::abs(nrm - 1.0);
}

double derivative_defect_at_zero(const CMat& a, const NormSpec& n) {
    const double eps = 1e-5;
    CMat id = identity_like(a);
    double fp = operator_norm(id + Complex(0, eps) * a, n);
    double fm = operator_norm(id - Complex(0, eps) * a, n);
    return std::abs((fp - fm) / (2.0 * eps));
}

} // namespace

namespace detail {

double grid_defect_serial(const CMat& a, const NormSpec& n) {
    double worst = 0.0;
    for (double t : grid_points())
        worst = std::max(worst, point_defect(a, n, t));
    return worst;
}

double grid_defect_parallel(const CMat& a, const NormSpec& n) {
    auto ts = grid_points();
    double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (int i = 0; i < int(ts.size()); ++i)
        worst = std::max(worst, point_defect(a, n, ts[i]));
    return worst;
}

} // namespace detail

double hermitian_defect(const CMat& a, const NormSpec& n,
                        const ToleranceConfig& cfg) {
    require_square(a, "hermitian_defect");
    require_finite(a, "hermitian_defect");
    (void)cfg;
    return detail::grid_defect_parallel(a, n);
}

HermitianVerdict is_hermitian(const CMat& a, const NormSpec& n,
                              const ToleranceConfig& cfg) {
    require_square(a, "is_hermitian");
    require_finite(a, "is_hermitian");
    HermitianVerdict v;
    if (n.kind == NormSpec::Kind::L2) {
        v.method = HermitianVerdict::Method::ExactL2;
        v.defect = (a - a.adjoint()).norm();
        v.derivative_defect = 0.0;
        v.hermitian = v.defect <= cfg.hermitian_tol;
        return v;
    }
    v.method = HermitianVerdict::Method::Sampled;
    v.defect = detail::grid_defect_parallel(a, n);
    v.derivative_defect = derivative_defect_at_zero(a, n);
    v.hermitian = v.defect <= cfg.hermitian_tol &&
                  v.derivative_defect <= cfg.hermitian_tol;
    return v;
}

} // namespace coep
