#include <cmath>

#include "doctest.h"
#include "exclusion/incoherence.hpp"
#include "test_helpers.hpp"

using namespace exclusion;

namespace {

double entry_sum_gap(const Gram& g, const Decomposition& d) {
    CMatrix s(g.size(), g.size());
    for (const CMatrix& f : d.blocks) s += f;
    return (g.m - s).frobenius_norm();
}

}  // namespace

TEST_CASE("project_onto_cone_sum on feasible equal-real Grams") {
    for (double gamma : {0.0, 0.2, 0.5}) {
        const Gram g = testing::equal_real_gram(3, gamma);
        const ConeSumProjection p = project_onto_cone_sum(g);
        REQUIRE(p.gap <= 1e-8);
        REQUIRE(int(p.blocks.blocks.size()) == 3);
        const CheckResult check = verify_decomposition(g, p.blocks);
        REQUIRE_MESSAGE(check.pass, check.reason);
        REQUIRE(entry_sum_gap(g, p.blocks) <= 1e-7);
    }
}

TEST_CASE("project_onto_cone_sum respects the zero pattern") {
    const Gram g = gram_of(testing::trefoil());
    const ConeSumProjection p = project_onto_cone_sum(g);
    REQUIRE(p.gap <= 1e-8);
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c) {
            CHECK(std::abs(p.blocks.blocks[i](i, c)) <= 1e-7);
            CHECK(std::abs(p.blocks.blocks[i](c, i)) <= 1e-7);
        }
}

TEST_CASE("project_onto_cone_sum reports a positive gap on infeasible Grams") {
    const ConeSumProjection p = project_onto_cone_sum(testing::equal_real_gram(3, 0.8));
    CHECK(p.gap > 1e-4);
}

TEST_CASE("serial and parallel projections agree") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 10; ++trial) {
        const Gram g = gram_of(testing::random_states(rng, 4, 4));
        const ConeSumProjection a = project_onto_cone_sum(g, 2000, 1e-10, ExecPolicy::Serial);
        const ConeSumProjection b = project_onto_cone_sum(g, 2000, 1e-10, ExecPolicy::Parallel);
        REQUIRE((a.p - b.p).frobenius_norm() <= 1e-9);
        REQUIRE(a.gap == doctest::Approx(b.gap).epsilon(1e-9));
    }
}

TEST_CASE("dual_witness separates infeasible Grams") {
    for (double gamma : {0.55, 0.6, 0.8, 0.95}) {
        const Gram g = testing::equal_real_gram(3, gamma);
        const DualWitness w = dual_witness(g);
        REQUIRE(w.distance > 1e-6);
        CHECK(w.h.frobenius_norm() == doctest::Approx(1.0).epsilon(1e-9));
        // separation: <H, G> must be strictly negative
        CHECK(CMatrix::inner_real(w.h, g.m) < -1e-8);
        const CheckResult check = verify_certificate(g, {w.h, -CMatrix::inner_real(w.h, g.m)});
        REQUIRE_MESSAGE(check.pass, check.reason);
    }
}

TEST_CASE("dual_witness distance vanishes on feasible Grams") {
    const DualWitness w = dual_witness(testing::equal_real_gram(3, 0.4), 20000);
    CHECK(w.distance <= 1e-5);
}

TEST_CASE("decide_incoherent on canonical inputs") {
    SUBCASE("feasible side with a verified decomposition") {
        const Verdict v = decide_incoherent(testing::equal_real_gram(4, 0.5));
        REQUIRE(v.decision == Decision::Antidistinguishable);
        REQUIRE(std::holds_alternative<Decomposition>(v.certificate));
        const auto& d = std::get<Decomposition>(v.certificate);
        CHECK(verify_decomposition(testing::equal_real_gram(4, 0.5), d).pass);
    }
    SUBCASE("infeasible side with a verified witness") {
        const Gram g = testing::equal_real_gram(4, 0.8);
        const Verdict v = decide_incoherent(g);
        REQUIRE(v.decision == Decision::NotAntidistinguishable);
        REQUIRE(std::holds_alternative<InfeasibilityCertificate>(v.certificate));
        const auto& c = std::get<InfeasibilityCertificate>(v.certificate);
        CHECK(c.violation > 0.0);
        CHECK(verify_certificate(g, c).pass);
    }
    SUBCASE("identity Gram decomposes immediately") {
        const Verdict v = decide_incoherent(Gram{CMatrix::identity(5)});
        CHECK(v.decision == Decision::Antidistinguishable);
    }
}

TEST_CASE("decide_incoherent agrees with the exact three-state rule") {
    std::mt19937_64 rng(321);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const Gram g = gram_of(testing::random_states(rng, 3, 3));
        const Verdict exact = three_state_iff(g);
        if (exact.borderline) continue;  // stay away from the cone boundary
        const Verdict solver = decide_incoherent(g);
        if (solver.decision == Decision::Inconclusive) continue;
        REQUIRE(solver.decision == exact.decision);
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("decide_incoherent tracks the equal-real threshold across k") {
    for (int k = 3; k <= 5; ++k) {
        const double s_k = double(k - 2) / double(k - 1);
        CHECK(decide_incoherent(testing::equal_real_gram(k, s_k - 0.05)).decision ==
              Decision::Antidistinguishable);
        CHECK(decide_incoherent(testing::equal_real_gram(k, s_k + 0.05)).decision ==
              Decision::NotAntidistinguishable);
    }
}

TEST_CASE("verify_decomposition rejects corrupted inputs") {
    const Gram g = testing::equal_real_gram(3, 0.4);
    const Verdict v = decide_incoherent(g);
    REQUIRE(std::holds_alternative<Decomposition>(v.certificate));
    Decomposition d = std::get<Decomposition>(v.certificate);

    SUBCASE("wrong block count") {
        d.blocks.pop_back();
        CHECK_FALSE(verify_decomposition(g, d).pass);
    }
    SUBCASE("broken zero pattern") {
        d.blocks[0](0, 1) = 0.3;
        d.blocks[0](1, 0) = 0.3;
        CHECK_FALSE(verify_decomposition(g, d).pass);
    }
    SUBCASE("indefinite block") {
        d.blocks[1](1, 1) = -0.5;
        CHECK_FALSE(verify_decomposition(g, d).pass);
    }
    SUBCASE("sum mismatch") {
        d.blocks[2](1, 1) += 0.2;
        CHECK_FALSE(verify_decomposition(g, d).pass);
    }
}

TEST_CASE("verify_certificate rejects corrupted witnesses") {
    const Gram g = testing::equal_real_gram(3, 0.8);
    const Verdict v = decide_incoherent(g);
    REQUIRE(std::holds_alternative<InfeasibilityCertificate>(v.certificate));
    InfeasibilityCertificate c = std::get<InfeasibilityCertificate>(v.certificate);

    SUBCASE("witness with the wrong separation sign") {
        c.h = c.h * -1.0;
        CHECK_FALSE(verify_certificate(g, c).pass);
    }
    SUBCASE("witness with an indefinite compression") {
        for (int i = 0; i < 3; ++i) c.h(i, i) = -1.0;
        CHECK_FALSE(verify_certificate(g, c).pass);
    }
}
