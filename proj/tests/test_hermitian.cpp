#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coep/hermitian.hpp"
#include "coep/rng.hpp"

using namespace coep;

TEST_CASE("under the Euclidean norm hermitian means self-adjoint") {
    Rng rng(31);
    ToleranceConfig cfg;
    for (int trial = 0; trial < 100; ++trial) {
        CMat g = rng.cgaussian_matrix(4, 4);
        CMat sym = (g + g.adjoint()) / 2.0;

        auto v = is_hermitian(sym, NormSpec::l2(), cfg);
        CHECK(v.hermitian);
        CHECK(v.method == HermitianVerdict::Method::ExactL2);
        CHECK_FALSE(v.numerical());

        // a generic non-self-adjoint matrix must be rejected
        if ((g - g.adjoint()).norm() > 1e-6) {
            auto w = is_hermitian(g, NormSpec::l2(), cfg);
            CHECK_FALSE(w.hermitian);
            CHECK(w.defect > cfg.hermitian_tol);
        }
    }
}

TEST_CASE("real diagonal matrices are hermitian in every norm") {
    ToleranceConfig cfg;
    CMat d = CMat::Zero(3, 3);
    d(0, 0) = 2.0;
    d(1, 1) = -0.7;
    d(2, 2) = 0.0;
    for (const auto& spec :
         {NormSpec::l1(), NormSpec::l2(), NormSpec::linf(), NormSpec::lp(3.0)}) {
        auto v = is_hermitian(d, spec, cfg);
        CHECK(v.hermitian);
        CHECK(v.defect <= cfg.hermitian_tol);
    }
}

TEST_CASE("an imaginary diagonal entry breaks the sampled criterion") {
    ToleranceConfig cfg;
    CMat d = CMat::Zero(2, 2);
    d(0, 0) = Complex(1.0, 0.5);
    d(1, 1) = 1.0;
    // exp(itd) has an entry of modulus exp(-0.5 t) or exp(0.5 t): the grid
    // catches the norm drifting away from 1 in each norm
    for (const auto& spec : {NormSpec::l1(), NormSpec::l2(), NormSpec::linf()}) {
        auto v = is_hermitian(d, spec, cfg);
        CHECK_FALSE(v.hermitian);
    }
}

TEST_CASE("off-diagonal real matrices fail the L1 grid test") {
    ToleranceConfig cfg;
    // self-adjoint, so hermitian under L2, but rotations exp(it a) have
    // L1 norm above 1, so the sampled L1 verdict must say no
    CMat a(2, 2);
    a << 0, 1, 1, 0;
    CHECK(is_hermitian(a, NormSpec::l2(), cfg).hermitian);
    auto v1 = is_hermitian(a, NormSpec::l1(), cfg);
    CHECK_FALSE(v1.hermitian);
    CHECK(v1.defect > cfg.hermitian_tol);
}

TEST_CASE("parallel grid sweep reproduces the serial reference") {
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        CMat m = rng.cgaussian_matrix(5, 5);
        for (const auto& spec : {NormSpec::l1(), NormSpec::linf(), NormSpec::l2()}) {
            double s = detail::grid_defect_serial(m, spec);
            double p = detail::grid_defect_parallel(m, spec);
            CHECK(s == p); // bitwise: the reduction is a max, order-free
        }
    }
}

TEST_CASE("hermitian defect scales continuously") {
    ToleranceConfig cfg;
    CMat base(2, 2);
    base << 1, 0, 0, -1;
    CMat skew(2, 2);
    skew << Complex(0, 1), 0, 0, 0;
    double prev = 0.0;
    for (double eps : {1e-6, 1e-4, 1e-2}) {
        double d = hermitian_defect(base + eps * skew, NormSpec::l2(), cfg);
        CHECK(d >= prev);
        prev = d;
    }
    CHECK(prev > cfg.hermitian_tol);
}
