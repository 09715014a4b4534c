#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coep/expm.hpp"
#include "coep/json_io.hpp"
#include "coep/matrix.hpp"
#include "coep/norms.hpp"
#include "coep/rng.hpp"
#include "coep/subspace.hpp"

#include <Eigen/SVD>

#include <cmath>

using namespace coep;

namespace {

CMat mat2(Complex a, Complex b, Complex c, Complex d) {
    CMat m(2, 2);
    m << a, b, c, d;
    return m;
}

} // namespace

TEST_CASE("operator norms on closed-form matrices") {
    CMat m = mat2(1, -2, {0, 3}, 4);

    // max absolute column sum / row sum
    CHECK(operator_norm(m, NormSpec::l1()) == doctest::Approx(6.0));
    CHECK(operator_norm(m, NormSpec::linf()) == doctest::Approx(7.0));

    // the L2 norm of [[1,1],[0,1]] is the golden ratio
    CMat shear = mat2(1, 1, 0, 1);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(operator_norm(shear, NormSpec::l2()) == doctest::Approx(golden));

    // unitary diagonal phases leave every induced p-norm at 1
    CMat phases = mat2(Complex(0, 1), 0, 0, Complex(std::sqrt(0.5), std::sqrt(0.5)));
    CHECK(operator_norm(phases, NormSpec::l1()) == doctest::Approx(1.0));
    CHECK(operator_norm(phases, NormSpec::l2()) == doctest::Approx(1.0));
    CHECK(operator_norm(phases, NormSpec::linf()) == doctest::Approx(1.0));
}

TEST_CASE("Lp estimates interpolate and lower-bound") {
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        CMat m = rng.cgaussian_matrix(5, 5);
        double l2 = operator_norm(m, NormSpec::l2());
        double lp = operator_norm(m, NormSpec::lp(2.0));
        // the ascent produces a certified lower bound, and at p = 2 it
        // should essentially reach the exact value
        CHECK(lp <= l2 * (1.0 + 1e-9));
        CHECK(lp >= l2 * (1.0 - 1e-6));

        // any estimate is at least the norm of the best column image
        double l3 = operator_norm(m, NormSpec::lp(3.0));
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            CVec e = CVec::Zero(m.cols());
            e(j) = 1.0;
            CHECK(l3 >= vector_norm(m * e, NormSpec::lp(3.0)) - 1e-12);
        }
    }
}

TEST_CASE("operator norms are submultiplicative and unital") {
    Rng rng(7);
    for (const auto& spec : {NormSpec::l1(), NormSpec::l2(), NormSpec::linf()}) {
        CHECK(operator_norm(CMat::Identity(4, 4), spec) == doctest::Approx(1.0));
        for (int trial = 0; trial < 10; ++trial) {
            CMat a = rng.cgaussian_matrix(4, 4);
            CMat b = rng.cgaussian_matrix(4, 4);
            CHECK(operator_norm(a * b, spec) <=
                  operator_norm(a, spec) * operator_norm(b, spec) * (1 + 1e-12));
        }
    }
}

TEST_CASE("matrix exponential basics") {
    CHECK((matrix_exp(CMat::Zero(3, 3)) - CMat::Identity(3, 3)).norm() ==
          doctest::Approx(0.0));

    CMat d = CMat::Zero(2, 2);
    d(0, 0) = Complex(1.0, 0.0);
    d(1, 1) = Complex(0.0, 2.0);
    CMat ed = matrix_exp(d);
    CHECK(std::abs(ed(0, 0) - std::exp(Complex(1.0, 0.0))) < 1e-13);
    CHECK(std::abs(ed(1, 1) - std::exp(Complex(0.0, 2.0))) < 1e-13);

    // nilpotent: exp truncates to I + N
    CMat nil = mat2(0, 5, 0, 0);
    CHECK((matrix_exp(nil) - (CMat::Identity(2, 2) + nil)).norm() < 1e-13);

    // exp(A+B) = exp(A)exp(B) for commuting A, B
    Rng rng(3);
    CMat a = rng.cgaussian_matrix(4, 4);
    CMat a2 = a * a;
    CHECK((matrix_exp(a + a2) - matrix_exp(a) * matrix_exp(a2)).norm() < 1e-10);

    // exp(itH) of self-adjoint H is unitary: spectral norm exactly 1
    CMat g = rng.cgaussian_matrix(4, 4);
    CMat h = (g + g.adjoint()) / 2.0;
    for (double t : {0.1, 1.0, 7.5}) {
        CMat u = matrix_exp(Complex(0, t) * h);
        CHECK(spectral_norm(u) == doctest::Approx(1.0).epsilon(1e-12));
    }

    // scaling-and-squaring regime: large norm input stays accurate
    CMat big = 40.0 * h;
    CMat back = matrix_exp(Complex(0, 1) * big);
    CHECK(spectral_norm(back) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("subspace calculus dimension formulas") {
    Rng rng(11);
    ToleranceConfig cfg;
    for (int trial = 0; trial < 15; ++trial) {
        Eigen::Index n = 6;
        Eigen::Index r = Eigen::Index(rng.raw() % 7);
        CMat a = rng.random_with_spectrum(n, r, 0.5, 2.0);

        // rank-nullity through the two SVD-based constructions
        Subspace range = range_basis(a, cfg);
        Subspace null = null_basis(a, cfg);
        CHECK(range.dim() == r);
        CHECK(range.dim() + null.dim() == n);

        // range and null space of a are orthogonal complements exactly when
        // a is self-adjoint; always: a maps the null space to zero
        if (null.dim() > 0)
            CHECK((a * null.basis).norm() < 1e-10);
    }
}

TEST_CASE("subspace sum and intersection are consistent") {
    Rng rng(13);
    ToleranceConfig cfg;
    for (int trial = 0; trial < 15; ++trial) {
        CMat u = rng.cgaussian_matrix(8, 3);
        CMat v = rng.cgaussian_matrix(8, 4);
        Subspace su = span_of(u, cfg);
        Subspace sv = span_of(v, cfg);
        Subspace meet = subspace_intersect(su, sv, cfg);
        Subspace join = subspace_sum(su, sv, cfg);
        CHECK(join.dim() == su.dim() + sv.dim() - meet.dim());
        CHECK(subspace_contains(join, su, cfg));
        CHECK(subspace_contains(join, sv, cfg));
        CHECK(subspace_contains(su, meet, cfg));
        CHECK(subspace_contains(sv, meet, cfg));
    }

    // forced overlap: share two directions
    CMat w = rng.cgaussian_matrix(8, 2);
    CMat u2(8, 4), v2(8, 3);
    u2 << w, rng.cgaussian_matrix(8, 2);
    v2 << w, rng.cgaussian_matrix(8, 1);
    Subspace meet = subspace_intersect(span_of(u2, cfg), span_of(v2, cfg), cfg);
    CHECK(meet.dim() == 2);
}

TEST_CASE("invertibility decision anchors at the unit scale") {
    ToleranceConfig cfg;
    CHECK(is_invertible(CMat::Identity(3, 3), cfg).invertible);
    CHECK_FALSE(is_invertible(CMat::Zero(3, 3), cfg).invertible);

    // rounding-noise matrix: well-conditioned but absolutely tiny
    Rng rng(5);
    CMat noise = 1e-16 * rng.cgaussian_matrix(3, 3);
    CHECK_FALSE(is_invertible(noise, cfg).invertible);

    CHECK_THROWS_AS((void)inverse(CMat::Zero(2, 2), cfg), singular_error);

    // same story for rank decisions with the unit floor
    CHECK(numerical_rank(noise, cfg, 1.0) == 0);
    CHECK(null_basis(noise, cfg, 1.0).dim() == 3);
}

TEST_CASE("seeded generators are deterministic and well-formed") {
    Rng a(99), b(99);
    for (int i = 0; i < 50; ++i) CHECK(a.raw() == b.raw());

    Rng r1(4), r2(4);
    CMat u1 = r1.haar_unitary(5);
    CMat u2 = r2.haar_unitary(5);
    CHECK((u1 - u2).norm() == 0.0);
    CHECK((u1.adjoint() * u1 - CMat::Identity(5, 5)).norm() < 1e-13);

    // fork decorrelates without disturbing the parent stream
    Rng parent(8);
    Rng child = parent.fork(1);
    CHECK(Rng(8).fork(1).raw() != Rng(8).fork(2).raw());
    (void)child;

    CMat m = Rng(21).random_with_spectrum(6, 4, 0.5, 2.0);
    Eigen::JacobiSVD<CMat> svd(m);
    CHECK(svd.singularValues()(0) <= 2.0 + 1e-12);
    CHECK(svd.singularValues()(3) >= 0.5 - 1e-12);
    CHECK(svd.singularValues()(4) < 1e-12);
}

TEST_CASE("matrix json round-trips bit-exactly") {
    Rng rng(17);
    CMat m = rng.cgaussian_matrix(3, 4);
    ordered_json j = matrix_to_json(m);
    CMat back = matrix_from_json(j);
    REQUIRE(back.rows() == m.rows());
    REQUIRE(back.cols() == m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            CHECK(back(i, k) == m(i, k)); // exact, not approximate

    // serialized text is also stable
    CHECK(matrix_to_json(back).dump() == j.dump());
}

TEST_CASE("matrix json rejects malformed input") {
    CHECK_THROWS_AS((void)matrix_from_json(ordered_json::object()),
                    std::invalid_argument);
    ordered_json bad = {{"rows", 2}, {"cols", 2}, {"entries", {1, 2, 3, 4}}};
    CHECK_THROWS_AS((void)matrix_from_json(bad), std::invalid_argument);
    ordered_json short_entries = {
        {"rows", 2}, {"cols", 2}, {"entries", ordered_json::array()}};
    CHECK_THROWS_AS((void)matrix_from_json(short_entries), std::invalid_argument);
    CHECK_THROWS_AS(norm_from_string("l3"), std::invalid_argument);
    CHECK(norm_from_string("lp:2.5").p == doctest::Approx(2.5));
}
