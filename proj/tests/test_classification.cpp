#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coep/classification.hpp"
#include "coep/pseudoinverse.hpp"
#include "coep/rng.hpp"

using namespace coep;

namespace {

CMat nilpotent_e() {
    CMat e = CMat::Zero(2, 2);
    e(0, 1) = 1.0;
    return e;
}

// rank-1 element u v* with non-orthogonal unit vectors u = (1,0),
// v = (1,1)/sqrt(2): co-EP but not hermitian co-EP
CMat skew_rank1() {
    CMat a(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    a << s, s, 0, 0;
    return a;
}

} // namespace

TEST_CASE("pinned 2x2 classifications") {
    ToleranceConfig cfg;

    CMat e = nilpotent_e();
    auto rep = classify(e, NormSpec::l2(), cfg);
    CHECK(rep.mp_invertible);
    CHECK_FALSE(rep.ep);
    CHECK(rep.co_ep);
    CHECK(rep.bi_ep);
    CHECK(rep.hermitian_co_ep);
    REQUIRE(rep.h.has_value());
    CMat h_expected = CMat::Zero(2, 2);
    h_expected(0, 0) = 1.0;
    CHECK((*rep.h - h_expected).norm() < 1e-12);
    CHECK((*rep.k - h_expected).norm() < 1e-12);

    CMat a = skew_rank1();
    auto ra = classify(a, NormSpec::l2(), cfg);
    CHECK(ra.co_ep);
    CHECK_FALSE(ra.ep);
    CHECK_FALSE(ra.bi_ep);
    CHECK_FALSE(ra.hermitian_co_ep);
    REQUIRE(ra.h.has_value());
    CMat h_skew(2, 2);
    h_skew << 1, -1, 0, 0;
    CHECK((*ra.h - h_skew).norm() < 1e-12);
    // determinant of aa+ - a+a is -1/2 for this element
    auto a_dag = mp_inverse_euclidean(a, cfg).first;
    CMat diff = a * a_dag - a_dag * a;
    CHECK(std::abs(diff.determinant() - Complex(-0.5, 0.0)) < 1e-12);

    // idempotent algebra: ha = a, ha+ = 0, ak = 0, a+k = a+
    CHECK(((*ra.h) * a - a).norm() < 1e-12);
    CHECK(((*ra.h) * a_dag).norm() < 1e-12);
    CHECK((a * (*ra.k)).norm() < 1e-12);
    CHECK((a_dag * (*ra.k) - a_dag).norm() < 1e-12);
}

TEST_CASE("EP and invertible elements are not co-EP") {
    ToleranceConfig cfg;
    auto rid = classify(CMat::Identity(3, 3), NormSpec::l2(), cfg);
    CHECK(rid.ep);
    CHECK_FALSE(rid.co_ep);
    CHECK(rid.bi_ep);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto rep = classify(gen_ep(4, seed), NormSpec::l2(), cfg);
        CHECK(rep.ep);
        CHECK_FALSE(rep.co_ep);
    }
}

TEST_CASE("generators hit their advertised classes") {
    ToleranceConfig cfg;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto hc = classify(gen_hermitian_coep(4, seed), NormSpec::l2(), cfg);
        CHECK(hc.co_ep);
        CHECK(hc.hermitian_co_ep);
        CHECK(hc.bi_ep);

        auto nc = classify(gen_coep_non_hermitian(4, seed), NormSpec::l2(), cfg);
        CHECK(nc.co_ep);
        CHECK_FALSE(nc.hermitian_co_ep);
        CHECK_FALSE(nc.bi_ep);
    }

    // determinism: the same seed reproduces the same instance
    CHECK((gen_coep_non_hermitian(6, 5) - gen_coep_non_hermitian(6, 5)).norm() ==
          0.0);
    CHECK((gen_hermitian_coep(6, 5) - gen_hermitian_coep(6, 5)).norm() == 0.0);
}

TEST_CASE("nine-way audit agrees on pinned and generated instances") {
    ToleranceConfig cfg;
    const Complex one(1.0, 0.0);

    auto all_true = audit_thm7(nilpotent_e(), nilpotent_e().adjoint(), one, one, cfg);
    CHECK(all_true.all_agree());
    CHECK(all_true.all_true());

    CMat d = CMat::Zero(2, 2);
    d(0, 0) = 1.0;
    auto all_false = audit_thm7(d, d, one, one, cfg);
    CHECK(all_false.all_agree());
    CHECK_FALSE(all_false.statements.front().value);

    CMat z = CMat::Zero(2, 2);
    auto zero_audit = audit_thm7(z, z, one, one, cfg);
    CHECK(zero_audit.all_agree());
    CHECK_FALSE(zero_audit.statements.front().value);

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Complex lambda(0.4 + 0.1 * double(seed), -0.9);
        Complex mu(-1.2, 0.2 + 0.05 * double(seed));
        for (const CMat& a :
             {gen_coep_non_hermitian(4, seed), gen_hermitian_coep(4, seed),
              gen_ep(3, seed), gen_random(5, seed)}) {
            auto a_dag = mp_inverse_euclidean(a, cfg).first;
            auto audit = audit_thm7(a, a_dag, lambda, mu, cfg);
            CHECK(audit.all_agree());
        }
    }
}

TEST_CASE("twelve-way audit separates the hermitian co-EP class") {
    ToleranceConfig cfg;

    auto e_audit =
        audit_thm5(nilpotent_e(), nilpotent_e().adjoint(), NormSpec::l2(), cfg);
    CHECK(e_audit.all_agree());
    CHECK(e_audit.all_true());
    REQUIRE(e_audit.statements.size() == 12);

    CMat a = skew_rank1();
    auto a_dag = mp_inverse_euclidean(a, cfg).first;
    auto skew_audit = audit_thm5(a, a_dag, NormSpec::l2(), cfg);
    CHECK(skew_audit.all_agree());
    CHECK_FALSE(skew_audit.statements.front().value); // co-EP but h not hermitian

    auto id_audit = audit_thm5(CMat::Identity(3, 3), CMat::Identity(3, 3),
                               NormSpec::l2(), cfg);
    CHECK(id_audit.all_agree());
    CHECK_FALSE(id_audit.statements.front().value);

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        CMat g = gen_hermitian_coep(4, seed);
        auto g_dag = mp_inverse_euclidean(g, cfg).first;
        auto audit = audit_thm5(g, g_dag, NormSpec::l2(), cfg);
        CHECK(audit.all_agree());
        CHECK(audit.all_true());

        CMat b = gen_coep_non_hermitian(4, seed);
        auto b_dag = mp_inverse_euclidean(b, cfg).first;
        auto bad = audit_thm5(b, b_dag, NormSpec::l2(), cfg);
        CHECK(bad.all_agree());
        CHECK_FALSE(bad.statements.front().value);
    }
}

TEST_CASE("operator-level audits agree") {
    ToleranceConfig cfg;
    const Complex lambda(1.0, 0.5), mu(-0.7, 0.1);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        for (const CMat& t :
             {gen_coep_non_hermitian(4, seed), gen_ep(4, seed),
              gen_random(4, seed), CMat(CMat::Identity(4, 4)),
              CMat(CMat::Zero(4, 4))}) {
            auto t_dag = mp_inverse_euclidean(t, cfg).first;
            CHECK(audit_cor8(t, t_dag, lambda, mu, cfg).all_agree());
            CHECK(audit_cor9(t, t_dag, cfg).all_agree());
        }
    }
}

TEST_CASE("dimension constraint for finite-dimensional co-EP operators") {
    ToleranceConfig cfg;
    auto res = check_rem10(nilpotent_e(), cfg);
    CHECK(res.applicable);
    CHECK(res.holds);

    auto na = check_rem10(CMat::Identity(3, 3), cfg);
    CHECK_FALSE(na.applicable);
    CHECK(na.holds);

    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto r = check_rem10(gen_coep_non_hermitian(6, seed), cfg);
        CHECK(r.applicable);
        CHECK(r.holds);
    }
}

TEST_CASE("the projector difference stays away from the identity") {
    ToleranceConfig cfg;
    CMat e = nilpotent_e();
    CHECK(rem34_distance(e, e.adjoint()) == doctest::Approx(2.0));
    CHECK(check_rem34(e, e.adjoint(), cfg));
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        CMat a = gen_random(4, seed);
        auto a_dag = mp_inverse_euclidean(a, cfg).first;
        CHECK(check_rem34(a, a_dag, cfg));
    }
}
