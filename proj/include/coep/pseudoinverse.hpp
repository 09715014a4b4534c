#ifndef COEP_PSEUDOINVERSE_HPP
#define COEP_PSEUDOINVERSE_HPP

#include "coep/hermitian.hpp"
#include "coep/matrix.hpp"
#include "coep/norms.hpp"
#include "coep/tolerance.hpp"

#include <optional>
#include <string>
#include <utility>

namespace coep {

// Evidence that x is the Moore-Penrose inverse of a with respect to a norm:
// the residuals of a = axa and x = xax, plus hermitian verdicts for ax and xa.
struct MPCertificate {
    double residual_axa = 0.0;
    double residual_xax = 0.0;
    HermitianVerdict ax;
    HermitianVerdict xa;
    NormSpec norm;

    bool valid(const ToleranceConfig& cfg = {}) const {
        return residual_axa <= cfg.residual_tol &&
               residual_xax <= cfg.residual_tol && ax.hermitian && xa.hermitian;
    }
};

// Some b with aba = a, built from an invertible pivot submatrix.  Not the
// Moore-Penrose inverse in general.
CMat generalized_inverse(const CMat& a, const ToleranceConfig& cfg = {});

// bab for a generalized inverse b of a; throws contract_error if aba != a.
CMat normalize(const CMat& a, const CMat& b, const ToleranceConfig& cfg = {});

// SVD-based pseudo-inverse; the certificate is exact under L2.
std::pair<CMat, MPCertificate> mp_inverse_euclidean(const CMat& a,
                                                    const ToleranceConfig& cfg = {});

// Independent construction through a QR rank factorization a = fg,
// x = g^H (g g^H)^-1 f^H.  Kept free of SVD so it can cross-check
// mp_inverse_euclidean.
CMat mp_rank_factorization(const CMat& a, const ToleranceConfig& cfg = {});

MPCertificate mp_verify(const CMat& a, const CMat& x, const NormSpec& n,
                        const ToleranceConfig& cfg = {});

// Outcome of the candidate search for non-Euclidean norms.  A miss only
// certifies non-existence relative to the searched idempotent family.
struct MPSearchOutcome {
    std::optional<std::pair<CMat, MPCertificate>> found;
    int candidates_tried = 0;
    std::string note;
};

// For L1/LInf/Lp: look for x whose products ax, xa are hermitian idempotents
// drawn from the rank-factorization candidate and the 0/1 diagonal family.
MPSearchOutcome mp_search_diagonalizable(const CMat& a, const NormSpec& n,
                                         const ToleranceConfig& cfg = {});

} // namespace coep

#endif
