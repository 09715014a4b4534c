#ifndef COEP_SUBSPACE_HPP
#define COEP_SUBSPACE_HPP

#include "coep/matrix.hpp"
#include "coep/tolerance.hpp"

namespace coep {

// A subspace of complex n-space, stored as a Euclidean-orthonormal basis.
struct Subspace {
    Eigen::Index ambient = 0;
    CMat basis; // ambient x dim, orthonormal columns

    Eigen::Index dim() const { return basis.cols(); }

    static Subspace zero(Eigen::Index ambient) {
        return {ambient, CMat(ambient, 0)};
    }
    static Subspace full(Eigen::Index ambient) {
        return {ambient, CMat::Identity(ambient, ambient)};
    }

    // Orthogonal projector onto the subspace.
    CMat projector() const { return basis * basis.adjoint(); }
};

// Orthonormal basis of the column span of a, keeping singular directions
// above cfg.rank_tol relative to max(largest singular value, scale_floor).
// The floor matters when a is a product of unit-scale factors that cancels
// to zero up to rounding: a purely relative cutoff would promote the
// rounding noise to a genuine direction.  Audit code passes scale_floor = 1.
Subspace range_basis(const CMat& a, const ToleranceConfig& cfg = {},
                     double scale_floor = 0.0);
Subspace null_basis(const CMat& a, const ToleranceConfig& cfg = {},
                    double scale_floor = 0.0);

Eigen::Index numerical_rank(const CMat& a, const ToleranceConfig& cfg = {},
                            double scale_floor = 0.0);

// Span of an arbitrary (not necessarily orthonormal) set of columns.
Subspace span_of(const CMat& columns, const ToleranceConfig& cfg = {},
                 double scale_floor = 0.0);

// Intersection via principal angles: directions whose angle between the two
// spans falls below cfg.angle_tol.
Subspace subspace_intersect(const Subspace& u, const Subspace& v,
                            const ToleranceConfig& cfg = {});
Subspace subspace_sum(const Subspace& u, const Subspace& v,
                      const ToleranceConfig& cfg = {});

bool subspace_contains(const Subspace& big, const Subspace& small,
                       const ToleranceConfig& cfg = {});
bool subspace_equal(const Subspace& u, const Subspace& v,
                    const ToleranceConfig& cfg = {});
bool contains_vector(const Subspace& s, const CVec& x,
                     const ToleranceConfig& cfg = {});

struct InvertibilityResult {
    bool invertible = false;
    double margin = 0.0; // smallest singular value
};

// True iff the reciprocal condition number exceeds cfg.invertibility_tol.
InvertibilityResult is_invertible(const CMat& a, const ToleranceConfig& cfg = {});

// Inverse of a numerically invertible matrix; throws singular_error otherwise.
CMat inverse(const CMat& a, const ToleranceConfig& cfg = {});

} // namespace coep

#endif
