#ifndef COEP_TOLERANCE_HPP
#define COEP_TOLERANCE_HPP

#include <stdexcept>

namespace coep {

// Thresholds that discretize the exact algebraic statements.  Rank decisions
// are relative to the largest singular value; invertibility is a reciprocal
// condition number threshold; subspace coincidence uses a principal-angle
// tolerance.
struct ToleranceConfig {
    double rank_tol = 1e-10;        // relative singular-value cutoff
    double residual_tol = 1e-9;     // identity residuals (aba = a, ...)
    double invertibility_tol = 1e-9; // reciprocal condition threshold
    double angle_tol = 1e-5;        // principal-angle tolerance (radians)
    double hermitian_tol = 1e-8;    // |‖exp(ita)‖ − 1| defect threshold

    void validate() const {
        if (rank_tol <= 0 || residual_tol <= 0 || invertibility_tol <= 0 ||
            angle_tol <= 0 || hermitian_tol <= 0)
            throw std::invalid_argument("ToleranceConfig: all tolerances must be positive");
    }
};

} // namespace coep

#endif
