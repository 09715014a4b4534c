#include "coep/rng.hpp"

#include <Eigen/QR>

namespace coep {

CMat Rng::haar_unitary(Eigen::Index n) {
    CMat g = cgaussian_matrix(n, n);
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = qr.householderQ();
    CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        Complex d = r(j, j);
        double m = std::abs(d);
        q.col(j) *= (m == 0.0 ? Complex(1, 0) : d / m);
    }
    return q;
}

CMat Rng::random_with_spectrum(Eigen::Index n, Eigen::Index rank,
                               double smin, double smax) {
    CMat u = haar_unitary(n);
    CMat v = haar_unitary(n);
    CVec d = CVec::Zero(n);
    for (Eigen::Index i = 0; i < rank; ++i) d(i) = uniform(smin, smax);
    return u * d.asDiagonal() * v.adjoint();
}

} // namespace coep
