#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coep/pseudoinverse.hpp"
#include "coep/rng.hpp"

using namespace coep;

namespace {

CMat nilpotent_e() {
    CMat e = CMat::Zero(2, 2);
    e(0, 1) = 1.0;
    return e;
}

} // namespace

TEST_CASE("closed-form pseudo-inverses") {
    ToleranceConfig cfg;

    // the 2x2 nilpotent: inverse is the transpose
    CMat e = nilpotent_e();
    auto [x, cert] = mp_inverse_euclidean(e, cfg);
    CHECK((x - e.adjoint()).norm() < 1e-14);
    CHECK(cert.valid(cfg));

    // diagonal: entrywise reciprocal on the support
    CMat d = CMat::Zero(3, 3);
    d(0, 0) = 2.0;
    d(2, 2) = Complex(0.0, -4.0);
    auto [dx, dcert] = mp_inverse_euclidean(d, cfg);
    CHECK(std::abs(dx(0, 0) - Complex(0.5, 0.0)) < 1e-14);
    CHECK(std::abs(dx(1, 1)) < 1e-14);
    CHECK(std::abs(dx(2, 2) - Complex(0.0, 0.25)) < 1e-14);
    CHECK(dcert.valid(cfg));

    // zero matrix: pseudo-inverse is zero and the certificate still holds
    auto [zx, zcert] = mp_inverse_euclidean(CMat::Zero(3, 3), cfg);
    CHECK(zx.norm() == 0.0);
    CHECK(zcert.valid(cfg));
}

TEST_CASE("SVD route and QR rank-factorization route coincide") {
    Rng rng(19);
    ToleranceConfig cfg;
    for (int trial = 0; trial < 200; ++trial) {
        Eigen::Index n = 2 + Eigen::Index(rng.raw() % 5);
        Eigen::Index r = Eigen::Index(rng.raw() % std::uint64_t(n + 1));
        CMat a = rng.random_with_spectrum(n, r, 0.5, 2.0);

        auto [x_svd, cert] = mp_inverse_euclidean(a, cfg);
        CMat x_qr = mp_rank_factorization(a, cfg);
        CHECK(cert.valid(cfg));
        CHECK((x_svd - x_qr).norm() <= 1e-9 * std::max(1.0, x_svd.norm()));
    }
}

TEST_CASE("certificates reject wrong candidates") {
    ToleranceConfig cfg;
    CMat e = nilpotent_e();

    // right annihilation equations hold for 0, but x = xax fails the
    // normalized part only when x != 0; here: a wrong scaling
    MPCertificate bad = mp_verify(e, 2.0 * e.adjoint(), NormSpec::l2(), cfg);
    CHECK_FALSE(bad.valid(cfg));

    // non-hermitian products: generalized inverse that is not Moore-Penrose
    CMat a(2, 2);
    a << 1, 1, 0, 0;
    CMat g(2, 2); // satisfies aga = a but ga is a non-hermitian idempotent
    g << 1, 0, 0, 0;
    CHECK((a * g * a - a).norm() < 1e-14);
    MPCertificate cert = mp_verify(a, g, NormSpec::l2(), cfg);
    CHECK_FALSE(cert.valid(cfg));
}

TEST_CASE("generalized inverse and normalization") {
    Rng rng(23);
    ToleranceConfig cfg;
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::Index n = 2 + Eigen::Index(rng.raw() % 4);
        Eigen::Index r = 1 + Eigen::Index(rng.raw() % std::uint64_t(n));
        CMat a = rng.random_with_spectrum(n, r, 0.5, 2.0);

        CMat b = generalized_inverse(a, cfg);
        CHECK((a * b * a - a).norm() <= 1e-8 * a.norm());

        CMat nb = normalize(a, b, cfg);
        CHECK((a * nb * a - a).norm() <= 1e-8 * a.norm());
        CHECK((nb * a * nb - nb).norm() <= 1e-8 * std::max(1.0, nb.norm()));
    }

    // normalize must reject a non-inverse
    CMat a = nilpotent_e();
    CHECK_THROWS_AS((void)normalize(a, CMat::Identity(2, 2), cfg), contract_error);
}

TEST_CASE("search for inverses under non-Euclidean norms") {
    ToleranceConfig cfg;

    // real diagonal matrices have hermitian products under L1/LInf, so the
    // search succeeds and reproduces the Euclidean inverse
    CMat d = CMat::Zero(3, 3);
    d(0, 0) = 2.0;
    d(1, 1) = -0.5;
    for (const auto& spec : {NormSpec::l1(), NormSpec::linf()}) {
        auto outcome = mp_search_diagonalizable(d, spec, cfg);
        REQUIRE(outcome.found.has_value());
        CHECK(outcome.found->second.valid(cfg));
        CHECK((outcome.found->first - mp_inverse_euclidean(d, cfg).first).norm() <
              1e-10);
    }

    // the dense rank-1 all-ones matrix has no L1-hermitian product
    // idempotents in the searched family, so the search reports a miss
    CMat dense = CMat::Ones(2, 2);
    auto miss = mp_search_diagonalizable(dense, NormSpec::l1(), cfg);
    CHECK_FALSE(miss.found.has_value());
    CHECK_FALSE(miss.note.empty());

    // an invertible element always has x = a^-1 (both products are the
    // identity), whatever the norm
    CMat inv_el(2, 2);
    inv_el << 1, 1, 0.3, 1;
    auto hit = mp_search_diagonalizable(inv_el, NormSpec::l1(), cfg);
    REQUIRE(hit.found.has_value());
    CHECK((hit.found->first * inv_el - CMat::Identity(2, 2)).norm() < 1e-10);

    CHECK_THROWS_AS((void)mp_search_diagonalizable(d, NormSpec::l2(), cfg),
                    std::invalid_argument);
}

TEST_CASE("input validation") {
    ToleranceConfig cfg;
    CMat bad(2, 2);
    bad.setZero();
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((void)mp_inverse_euclidean(bad, cfg), invalid_input_error);
}
