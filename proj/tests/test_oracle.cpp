#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ipent/boson.hpp"
#include "ipent/fermion.hpp"
#include "ipent/oracle.hpp"
#include "support/random_gen.hpp"

using namespace ipent;
using namespace ipent::oracle;
using states::TwoBosonState;
using states::TwoFermionState;

namespace {

Options fast_options(std::uint64_t seed, std::size_t restarts = 8) {
    Options opt;
    opt.restarts = restarts;
    opt.seed = seed;
    return opt;
}

}  // namespace

TEST_CASE("oracle confirms the same-mode state") {
    ComplexMatrix omega(2, 2);
    omega(0, 0) = 1.0;
    const auto state = TwoBosonState::from_matrix(omega).normalized();
    const auto verdict = oracle_separability(state, fast_options(1));
    CHECK(verdict.separable);
    CHECK(verdict.branch == Branch::SameMode);
    CHECK(verdict.best_overlap == doctest::Approx(1.0).epsilon(1e-10));
    REQUIRE(verdict.witness.has_value());
}

TEST_CASE("oracle confirms the orthogonal pair") {
    ComplexMatrix omega(2, 2);
    omega(0, 1) = 0.5;
    omega(1, 0) = 0.5;
    const auto state = TwoBosonState::from_matrix(omega);
    const auto verdict = oracle_separability(state, fast_options(2));
    CHECK(verdict.separable);
    CHECK(verdict.branch == Branch::OrthogonalPair);
    CHECK(verdict.best_overlap == doctest::Approx(1.0).epsilon(1e-10));
    REQUIRE(verdict.witness.has_value());
    const auto& [c, d] = *verdict.witness;
    Complex ortho(0.0, 0.0);
    for (std::size_t i = 0; i < 2; ++i) ortho += std::conj(c[i]) * d[i];
    CHECK(std::abs(ortho) <= 1e-9);
}

TEST_CASE("oracle rejects the cross-pair state at the predicted overlap") {
    ComplexMatrix omega(2, 2);
    omega(0, 0) = 1.0;
    omega(0, 1) = 0.5;
    omega(1, 0) = 0.5;
    const auto state = TwoBosonState::from_matrix(omega).normalized();
    const auto verdict = oracle_separability(state, fast_options(3, 16));
    CHECK(!verdict.separable);
    CHECK(!verdict.witness.has_value());
    // Best same-mode overlap is sqrt(2) lambda_1 with
    // lambda_1 = (1 + sqrt(2)) / (2 sqrt(3)); the pair branch reaches only
    // lambda_1 + lambda_2 = sqrt(2/3).
    const double lambda1 = (1.0 + std::sqrt(2.0)) / (2.0 * std::sqrt(3.0));
    const double expected = std::sqrt(2.0) * lambda1;
    CHECK(verdict.best_overlap == doctest::Approx(expected).epsilon(1e-7));
    CHECK(verdict.best_overlap < 1.0 - 1e-7);
    CHECK(verdict.branch == Branch::SameMode);
}

TEST_CASE("oracle rejects the double Slater fermion state") {
    ComplexMatrix omega(4, 4);
    const double v = 1.0 / (2.0 * std::sqrt(2.0));
    omega(0, 1) = v;
    omega(1, 0) = -v;
    omega(2, 3) = v;
    omega(3, 2) = -v;
    const auto state = TwoFermionState::from_matrix(omega);
    const auto verdict = oracle_separability(state, fast_options(4, 16));
    CHECK(!verdict.separable);
    CHECK(verdict.branch == Branch::OrthogonalPair);
    // Best product overlap of the balanced rank-4 state is 1/sqrt(2).
    CHECK(verdict.best_overlap == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-7));
}

TEST_CASE("witness states re-synthesize the input") {
    SplitMix64 rng(50);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 2 + rng.next() % 3;
        const auto state = ipent_test::random_separable_boson(rng, n);
        const auto verdict = oracle_separability(state, fast_options(60 + rep));
        CHECK(verdict.separable);
        REQUIRE(verdict.witness.has_value());
        const auto& [c, d] = *verdict.witness;
        const auto synth = verdict.branch == Branch::SameMode
                               ? states::boson_same_mode_state(c)
                               : states::boson_pair_state(c, d);
        CHECK(std::abs(states::overlap(state, synth)) >= 1.0 - 1e-9);
    }
}

TEST_CASE("oracle agrees with the classifier on random states") {
    SplitMix64 rng(51);
    int checked = 0;
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 2 + rng.next() % 3;
        const auto state = ipent_test::random_boson_state(rng, n);
        const bool classifier = boson::is_separable(boson::classify(state).kind);
        const auto verdict = oracle_separability(state, fast_options(100 + rep, 16));
        CHECK(classifier == verdict.separable);
        ++checked;

        const auto fstate = ipent_test::random_fermion_state(rng, n + 1);
        const bool fclassifier =
            fermion::classify(fstate).kind == fermion::VerdictKind::Separable;
        const auto fverdict = oracle_separability(fstate, fast_options(200 + rep, 16));
        CHECK(fclassifier == fverdict.separable);
    }
    CHECK(checked == 40);
}

TEST_CASE("oracle agrees with the classifier on constructed separable states") {
    SplitMix64 rng(52);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 2 + rng.next() % 3;
        const auto boson_state = ipent_test::random_separable_boson(rng, n);
        CHECK(oracle_separability(boson_state, fast_options(300 + rep)).separable);
        const auto fermion_state = ipent_test::random_separable_fermion(rng, n);
        CHECK(oracle_separability(fermion_state, fast_options(400 + rep)).separable);
    }
}

TEST_CASE("a single-mode boson state is separable through the same-mode branch") {
    ComplexMatrix omega(1, 1);
    omega(0, 0) = 1.0;
    const auto state = TwoBosonState::from_matrix(omega).normalized();
    const auto verdict = oracle_separability(state, fast_options(6));
    CHECK(verdict.separable);
    CHECK(verdict.branch == Branch::SameMode);
    CHECK(boson::classify(state).kind == boson::VerdictKind::SeparableSameMode);
}

TEST_CASE("best overlap is non-decreasing in the number of restarts") {
    ComplexMatrix omega(3, 3);
    omega(0, 0) = 1.0;
    omega(1, 2) = 0.5;
    omega(2, 1) = 0.5;
    const auto state = TwoBosonState::from_matrix(omega).normalized();
    double prev = -1.0;
    for (std::size_t restarts = 1; restarts <= 9; restarts += 2) {
        const auto verdict = oracle_separability(state, fast_options(7, restarts));
        CHECK(verdict.best_overlap >= prev - 1e-15);
        prev = verdict.best_overlap;
    }
}

TEST_CASE("deterministic given the seed") {
    SplitMix64 rng(53);
    const auto state = ipent_test::random_boson_state(rng, 4);
    const auto a = oracle_separability(state, fast_options(11));
    const auto b = oracle_separability(state, fast_options(11));
    CHECK(a.best_overlap == b.best_overlap);
    CHECK(a.separable == b.separable);
    CHECK(a.restarts_used == b.restarts_used);
}
