#ifndef COEP_MULT_OPERATORS_HPP
#define COEP_MULT_OPERATORS_HPP

#include "coep/matrix.hpp"
#include "coep/subspace.hpp"
#include "coep/tolerance.hpp"

#include <array>

namespace coep {

enum class Side { Left, Right };

// An algebra element lifted to the multiplication operator it induces on the
// algebra itself, viewed as n^2-space under column-major vectorization:
// vec(ax) = (I kron a) vec(x), vec(xa) = (a^T kron I) vec(x).
struct LiftedOperator {
    Side side = Side::Left;
    CMat element;
    CMat action; // n^2 x n^2

    CMat apply(const CMat& x) const {
        CVec y = action * vec(x);
        return unvec(y, x.rows(), x.cols());
    }
};

LiftedOperator lift(const CMat& a, Side side);

// Ideal and annihilator subspaces of the vectorized algebra.  Built through
// the Kronecker structure (the dense lifted action is the test oracle):
//   aA        = range(L_a)  -> I kron range(a)
//   Aa        = range(R_a)  -> conj(range(a^H)) kron I
//   a^{-1}(0) = N(L_a)      -> I kron null(a)
//   a_{-1}(0) = N(R_a)      -> conj(null(a^H)) kron I
Subspace right_ideal(const CMat& a, const ToleranceConfig& cfg = {});
Subspace left_ideal(const CMat& a, const ToleranceConfig& cfg = {});
Subspace left_annihilator_space(const CMat& a, const ToleranceConfig& cfg = {});
Subspace right_annihilator_space(const CMat& a, const ToleranceConfig& cfg = {});

// Structured report for the multiplication-operator inclusions and the
// kernel-intersection equivalence triple.
struct IdealAuditReport {
    bool image_equality_range = false;  // (i) equality part
    bool image_inclusion_range = false; // (i) inclusion part
    bool image_equality_corange = false;  // (ii)
    bool image_inclusion_corange = false;
    std::array<bool, 3> triple{};       // (iii.a)..(iii.c)
    bool triple_agrees = false;
    bool iv_applicable = false;
    bool iv_holds = false;
    bool v_applicable = false;
    bool v_holds = false;

    bool pass() const {
        return image_equality_range && image_inclusion_range &&
               image_equality_corange && image_inclusion_corange &&
               triple_agrees && (!iv_applicable || iv_holds) &&
               (!v_applicable || v_holds);
    }
};

IdealAuditReport audit_prop8(const CMat& a, const CMat& a_dag, Complex lambda,
                             Complex mu, const ToleranceConfig& cfg = {});

// lhs/rhs pairs for the injectivity and surjectivity characterizations of
// left multiplication by aa^dag + a^dag a, and the combined invertibility
// statement.  Each side is computed independently; equality of the two
// booleans is what the audits assert.
struct BoolPair {
    bool lhs = false;
    bool rhs = false;
    bool agree() const { return lhs == rhs; }
};

BoolPair check_pro37(const CMat& a, const CMat& a_dag,
                     const ToleranceConfig& cfg = {});
BoolPair check_pro38(const CMat& a, const CMat& a_dag,
                     const ToleranceConfig& cfg = {});

struct Thm39Report {
    bool invertible = false;
    std::array<bool, 4> conditions{}; // regular, right-annihilator zero,
                                      // ideal intersection, annihilator intersection
    bool rhs() const {
        return conditions[0] && conditions[1] && conditions[2] && conditions[3];
    }
    bool agree() const { return invertible == rhs(); }
};

Thm39Report check_thm39(const CMat& a, const CMat& a_dag,
                        const ToleranceConfig& cfg = {});

// Throws contract_error unless (a, a_dag) is a valid Euclidean MP pair.
void require_mp_pair(const CMat& a, const CMat& a_dag,
                     const ToleranceConfig& cfg = {});

} // namespace coep

#endif
