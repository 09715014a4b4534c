#ifndef COEP_RNG_HPP
#define COEP_RNG_HPP

#include "coep/matrix.hpp"

#include <cstdint>
#include <random>

namespace coep {

// Deterministic random source.  Distributions are built from raw 64-bit
// draws (not std:: distributions) so that a seed reproduces the same
// stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Derive an independent deterministic substream.
    Rng fork(std::uint64_t salt) {
        return Rng(engine_() ^ (salt * 0x9e3779b97f4a7c15ULL));
    }

    double uniform() { // [0, 1)
        return double(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        // Box-Muller
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    Complex cgaussian() { return {gaussian(), gaussian()}; }

    CMat cgaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
        CMat m(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i)
                m(i, j) = cgaussian();
        return m;
    }

    // Haar-distributed unitary via QR of a Ginibre matrix with the usual
    // phase fix on the diagonal of R.
    CMat haar_unitary(Eigen::Index n);

    // Random matrix with prescribed singular values in [smin, smax].
    CMat random_with_spectrum(Eigen::Index n, Eigen::Index rank,
                              double smin, double smax);

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace coep

#endif
