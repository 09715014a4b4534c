#include "coep/expm.hpp"

#include <Eigen/LU>
#include <array>
#include <cmath>

namespace coep {

namespace {

double one_norm(const CMat& a) {
    double m = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        m = std::max(m, a.col(j).cwiseAbs().sum());
    return m;
}

// Pade numerator/denominator for orders 3, 5, 7, 9 via the explicit
// coefficient recurrences; solves (V - U) X = (V + U).
CMat pade_low(const CMat& a, const std::vector<double>& b) {
    const Eigen::Index n = a.rows();
    CMat a2 = a * a;
    CMat u = CMat::Zero(n, n);
    CMat v = CMat::Zero(n, n);
    CMat pw = CMat::Identity(n, n);
    // u = a * (b1 I + b3 a2 + b5 a2^2 + ...), v = b0 I + b2 a2 + ...
    for (std::size_t k = 0; 2 * k + 1 < b.size(); ++k) {
        v += b[2 * k] * pw;
        u += b[2 * k + 1] * pw;
        if (2 * (k + 1) < b.size()) pw = pw * a2;
    }
    if (b.size() % 2 == 1) v += b[b.size() - 1] * pw;
    u = a * u;
    return (v - u).partialPivLu().solve(v + u);
}

CMat pade13(const CMat& a) {
    static const std::array<double, 14> b = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
        1187353796428800.0, 129060195264000.0, 10559470521600.0,
        670442572800.0, 33522128640.0, 1323241920.0, 40840800.0,
        960960.0, 16380.0, 182.0, 1.0};
    const Eigen::Index n = a.rows();
    CMat a2 = a * a;
    CMat a4 = a2 * a2;
    CMat a6 = a2 * a4;
    CMat u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                  b[7] * a6 + b[5] * a4 + b[3] * a2 +
                  b[1] * CMat::Identity(n, n));
    CMat v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
             b[6] * a6 + b[4] * a4 + b[2] * a2 +
             b[0] * CMat::Identity(n, n);
    return (v - u).partialPivLu().solve(v + u);
}

} // namespace

CMat matrix_exp(const CMat& a) {
    require_square(a, "matrix_exp");
    require_finite(a, "matrix_exp");
    const double nrm = one_norm(a);

    // Higham's order-selection thresholds.
    if (nrm <= 1.495585217958292e-2)
        return pade_low(a, {120.0, 60.0, 12.0, 1.0});
    if (nrm <= 2.539398330063230e-1)
        return pade_low(a, {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0});
    if (nrm <= 9.504178996162932e-1)
        return pade_low(a, {17297280.0, 8648640.0, 1995840.0, 277200.0,
                            25200.0, 1512.0, 56.0, 1.0});
    if (nrm <= 2.097847961257068e0)
        return pade_low(a, {17643225600.0, 8821612800.0, 2075673600.0,
                            302702400.0, 30270240.0, 2162160.0, 110880.0,
                            3960.0, 90.0, 1.0});

    const double theta13 = 5.371920351148152;
    int s = 0;
    if (nrm > theta13)
        s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
    CMat x = pade13(a / std::pow(2.0, s));
    for (int i = 0; i < s; ++i) x = x * x;
    return x;
}

} // namespace coep
