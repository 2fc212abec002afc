#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ipent/correlation.hpp"
#include "ipent/error.hpp"
#include "ipent/fermion.hpp"
#include "support/random_gen.hpp"

using namespace ipent;
using namespace ipent::correlation;
using states::SingleParticleState;
using states::TwoBosonState;
using states::TwoFermionState;

namespace {

TwoBosonState cross_pair_state() {
    return TwoBosonState::from_matrix(ComplexMatrix{{1.0, 0.5}, {0.5, 0.0}}).normalized();
}

TwoBosonState pair_ab() {
    return TwoBosonState::from_matrix(ComplexMatrix{{0.0, 0.5}, {0.5, 0.0}});
}

}  // namespace

TEST_CASE("the identity operator doubles the coefficient matrix") {
    SplitMix64 rng(30);
    const auto state = ipent_test::random_boson_state(rng, 3);
    const auto op = OneBodyOperator::from_matrix(ComplexMatrix::identity(3));
    const auto out = apply(op, state);
    CHECK((out.omega() - state.omega() * Complex(2.0, 0.0)).frobenius_norm() < 1e-14);
    CHECK(expectation(op, state) == doctest::Approx(2.0));
}

TEST_CASE("a number operator leaves its eigenstate fixed") {
    const auto op = OneBodyOperator::number_operator(2, 0);
    const auto state = pair_ab();
    const auto out = apply(op, state);
    CHECK((out.omega() - state.omega()).frobenius_norm() < 1e-15);
}

TEST_CASE("coefficient action matches direct arithmetic") {
    ComplexMatrix f(2, 2);
    f(0, 0) = 1.0;
    const auto op = OneBodyOperator::from_matrix(f);
    const auto state = TwoBosonState::from_matrix(ComplexMatrix{{1.0, 0.5}, {0.5, 0.0}});
    const auto out = apply(op, state);
    CHECK(out.omega()(0, 0).real() == doctest::Approx(2.0));
    CHECK(out.omega()(0, 1).real() == doctest::Approx(0.5));
    CHECK(out.omega()(1, 0).real() == doctest::Approx(0.5));
    CHECK(std::abs(out.omega()(1, 1)) == 0.0);
}

TEST_CASE("expectation of n_a in the superposed single-particle state") {
    const auto state =
        SingleParticleState::from_vector({Complex(1.0, 0.0), Complex(1.0, 0.0)}).normalized();
    const auto op = OneBodyOperator::number_operator(2, 0);
    CHECK(expectation(op, state) == doctest::Approx(0.5));
}

TEST_CASE("expectation of n_a in the three-mode state is 4/3") {
    const auto state = TwoBosonState::from_matrix(ComplexMatrix{{1.0, 0.0, 0.0},
                                                                {0.0, 0.0, 0.5},
                                                                {0.0, 0.5, 0.0}})
                           .normalized();
    const auto op = OneBodyOperator::number_operator(3, 0);
    CHECK(expectation(op, state) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("(a+b) single-particle state is correlated relative to n_a") {
    const auto state =
        SingleParticleState::from_vector({Complex(1.0, 0.0), Complex(1.0, 0.0)}).normalized();
    const auto rep = relative_correlation(OneBodyOperator::number_operator(2, 0), state);
    CHECK(rep.correlated);
    CHECK(rep.residual == doctest::Approx(0.5));
    CHECK(!rep.eigenvalue.has_value());
}

TEST_CASE("a b |0> is uncorrelated relative to both number operators") {
    const auto state = pair_ab();
    for (std::size_t mode = 0; mode < 2; ++mode) {
        const auto rep = relative_correlation(OneBodyOperator::number_operator(2, mode), state);
        CHECK(!rep.correlated);
        CHECK(rep.residual <= 1e-12);
        REQUIRE(rep.eigenvalue.has_value());
        CHECK(*rep.eigenvalue == doctest::Approx(1.0));
    }
}

TEST_CASE("the cross-pair state is correlated relative to n_c") {
    const auto rep =
        relative_correlation(OneBodyOperator::number_operator(2, 0), cross_pair_state());
    CHECK(rep.correlated);
    CHECK(rep.residual > 1e-3);
}

TEST_CASE("shifting F by the identity leaves the residual unchanged") {
    SplitMix64 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        const auto state = ipent_test::random_boson_state(rng, 3);
        const auto f = ipent_test::random_hermitian(rng, 3);
        const double shift = ipent_test::rand_gauss(rng);
        ComplexMatrix shifted = f;
        for (std::size_t i = 0; i < 3; ++i) shifted(i, i) += shift;
        const auto r1 = relative_correlation(OneBodyOperator::from_matrix(f), state);
        const auto r2 = relative_correlation(OneBodyOperator::from_matrix(shifted), state);
        CHECK(r1.residual == doctest::Approx(r2.residual).epsilon(1e-9));
        CHECK(r1.correlated == r2.correlated);
    }
}

TEST_CASE("operator application preserves the coefficient structure") {
    SplitMix64 rng(32);
    for (int rep = 0; rep < 500; ++rep) {
        const std::size_t n = 2 + rng.next() % 5;
        const auto f = OneBodyOperator::from_matrix(ipent_test::random_hermitian(rng, n));
        const auto boson = ipent_test::random_boson_state(rng, n);
        const auto bout = apply(f, boson);
        CHECK(symmetric_deviation(bout.omega()) <= 1e-11 * std::max(1.0, bout.omega().frobenius_norm()));
        const auto fermion = ipent_test::random_fermion_state(rng, n);
        const auto fout = apply(f, fermion);
        CHECK(antisymmetric_deviation(fout.omega()) <=
              1e-11 * std::max(1.0, fout.omega().frobenius_norm()));
    }
}

TEST_CASE("operator application can annihilate a state") {
    // n_a on b^dag b^dag |0> gives zero; the raw state carries it.
    ComplexMatrix omega(2, 2);
    omega(1, 1) = 1.0;
    const auto state = TwoBosonState::from_matrix(omega).normalized();
    const auto out = apply(OneBodyOperator::number_operator(2, 0), state);
    CHECK(out.omega().frobenius_norm() == 0.0);
}

TEST_CASE("operators reject dimension mismatches and non-hermitian input") {
    SplitMix64 rng(33);
    const auto state = ipent_test::random_boson_state(rng, 3);
    try {
        (void)apply(OneBodyOperator::number_operator(4, 0), state);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DimensionMismatch);
    }
    try {
        (void)OneBodyOperator::from_matrix(ComplexMatrix{{0.0, 1.0}, {2.0, 0.0}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotHermitian);
    }
}

TEST_CASE("witness for the same-mode state") {
    ComplexMatrix omega(2, 2);
    omega(0, 0) = 1.0;
    const auto state = TwoBosonState::from_matrix(omega).normalized();
    const auto witness = complete_set_witness(state);
    REQUIRE(witness.has_value());
    for (const double r : witness->residuals) CHECK(r <= 1e-9);
    // The first witness mode is c itself: eigenvalue 2 for its number operator.
    const auto op = OneBodyOperator::mode_number_operator(witness->basis.column(0));
    const auto rep = relative_correlation(op, state);
    REQUIRE(rep.eigenvalue.has_value());
    CHECK(*rep.eigenvalue == doctest::Approx(2.0));
}

TEST_CASE("witness for a b |0> is the input basis") {
    const auto state = pair_ab();
    const auto witness = complete_set_witness(state);
    REQUIRE(witness.has_value());
    for (const double r : witness->residuals) CHECK(r <= 1e-9);
    // Up to phases and mode order, the witness basis is the standard one.
    for (std::size_t c = 0; c < 2; ++c) {
        const auto col = witness->basis.column(c);
        const double top = std::max(std::abs(col[0]), std::abs(col[1]));
        CHECK(top == doctest::Approx(1.0).epsilon(1e-10));
    }
    for (std::size_t mode = 0; mode < 2; ++mode) {
        const auto op = OneBodyOperator::mode_number_operator(witness->basis.column(mode));
        const auto rep = relative_correlation(op, state);
        REQUIRE(rep.eigenvalue.has_value());
        CHECK(*rep.eigenvalue == doctest::Approx(1.0));
    }
}

TEST_CASE("witness pipeline on random balanced rank-2 boson states") {
    SplitMix64 rng(34);
    for (int rep = 0; rep < 15; ++rep) {
        const std::size_t n = 2 + rng.next() % 3;
        auto [c, d] = ipent_test::random_orthonormal_pair(rng, n);
        const auto state = states::boson_pair_state(c, d);
        const auto witness = complete_set_witness(state);
        REQUIRE(witness.has_value());
        CHECK(witness->residuals.size() == n);
        for (const double r : witness->residuals) CHECK(r <= 1e-9);
    }
}

TEST_CASE("witness is empty for entangled states, which fail some number operator") {
    SplitMix64 rng(35);
    for (int rep = 0; rep < 15; ++rep) {
        const std::size_t n = 2 + rng.next() % 3;
        const auto state = ipent_test::random_boson_state(rng, n);
        const auto verdict = boson::classify(state);
        if (boson::is_separable(verdict.kind)) continue;  // essentially never for random input
        CHECK(!complete_set_witness(state).has_value());
        // In the standard-form basis at least one mode number operator sees a
        // correlated state.
        const auto form = boson::standard_form(state);
        double worst = 0.0;
        for (std::size_t mode = 0; mode < n; ++mode) {
            const auto op = OneBodyOperator::mode_number_operator(form.basis.column(mode));
            worst = std::max(worst, relative_correlation(op, state).residual);
        }
        CHECK(worst > 1e-6);
    }
}

TEST_CASE("witness for fermion states") {
    SplitMix64 rng(36);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 2 + rng.next() % 3;
        const auto separable = ipent_test::random_separable_fermion(rng, n);
        const auto witness = complete_set_witness(separable);
        REQUIRE(witness.has_value());
        for (const double r : witness->residuals) CHECK(r <= 1e-9);
    }
    ComplexMatrix omega(4, 4);
    const double v = 1.0 / (2.0 * std::sqrt(2.0));
    omega(0, 1) = v;
    omega(1, 0) = -v;
    omega(2, 3) = v;
    omega(3, 2) = -v;
    const auto entangled = TwoFermionState::from_matrix(omega);
    CHECK(!complete_set_witness(entangled).has_value());
    // In the canonical basis some mode number operator must see correlation.
    const auto form = fermion::standard_form(entangled);
    double worst = 0.0;
    for (std::size_t mode = 0; mode < 4; ++mode) {
        const auto op = OneBodyOperator::mode_number_operator(form.basis.column(mode));
        worst = std::max(worst, relative_correlation(op, entangled).residual);
    }
    CHECK(worst > 1e-6);
}
