#ifndef COEP_HERMITIAN_HPP
#define COEP_HERMITIAN_HPP

#include "coep/matrix.hpp"
#include "coep/norms.hpp"
#include "coep/tolerance.hpp"

namespace coep {

// Outcome of testing whether ‖exp(ita)‖ = 1 for all real t.
//
// Under L2 the decision is exact (hermitian iff self-adjoint) and the
// defect is the self-adjointness residual.  For other norms the condition
// is sampled on the grid t = ±t0·2^k together with a central-difference
// derivative test at t = 0; those verdicts are numerical, not certificates.
struct HermitianVerdict {
    enum class Method { ExactL2, Sampled };

    bool hermitian = false;
    double defect = 0.0;            // sup over the grid of |‖exp(ita)‖ − 1|
    double derivative_defect = 0.0; // |d/dt ‖1 + ita‖| at t = 0
    Method method = Method::Sampled;

    bool numerical() const { return method == Method::Sampled; }
};

HermitianVerdict is_hermitian(const CMat& a, const NormSpec& n,
                              const ToleranceConfig& cfg = {});

// The grid defect alone (0 for hermitian elements up to floating error).
double hermitian_defect(const CMat& a, const NormSpec& n,
                        const ToleranceConfig& cfg = {});

namespace detail {
// Serial reference for the grid sweep; the OpenMP path must match it.
double grid_defect_serial(const CMat& a, const NormSpec& n);
double grid_defect_parallel(const CMat& a, const NormSpec& n);
} // namespace detail

} // namespace coep

#endif
