#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>
#include <set>

#include "kudef/characters.hpp"

using kudef::CharacterPoint;
using kudef::Complex;
using kudef::ComplexMatrix;
using kudef::GroupExpr;
using kudef::relation_defect;
using kudef::stable_eigenvalue_map;
using kudef::u1_characters;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix scalar(Complex z) {
    ComplexMatrix m(1);
    m(0, 0) = z;
    return m;
}

}  // namespace

TEST_CASE("relation defect vanishes on commuting pairs and trivial tuples") {
    std::mt19937_64 rng(3);
    const ComplexMatrix v = kudef::random_unitary(3, rng);
    const ComplexMatrix a =
        v * ComplexMatrix::diagonal({std::polar(1.0, 0.3), std::polar(1.0, 1.0),
                                     std::polar(1.0, 2.0)}) *
        v.adjoint();
    const ComplexMatrix b =
        v * ComplexMatrix::diagonal({std::polar(1.0, 0.9), std::polar(1.0, 0.1),
                                     std::polar(1.0, 5.0)}) *
        v.adjoint();
    CHECK(relation_defect({a, b}, GroupExpr::orientable(1)) < 1e-12);

    const ComplexMatrix id = ComplexMatrix::identity(2);
    CHECK(relation_defect({id, id, id, id}, GroupExpr::orientable(2)) == 0.0);
    CHECK(relation_defect({id, id, id}, GroupExpr::non_orientable(3)) == 0.0);
}

TEST_CASE("relation defect matches the direct commutator expansion") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix a = kudef::random_unitary(3, rng);
        const ComplexMatrix b = kudef::random_unitary(3, rng);
        const double direct =
            (a * b * a.adjoint() * b.adjoint() - ComplexMatrix::identity(3)).frobenius_norm();
        CHECK_THAT(relation_defect({a, b}, GroupExpr::orientable(1)),
                   Catch::Matchers::WithinAbs(direct, 1e-13));
    }
}

TEST_CASE("relation defect is conjugation invariant") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix a = kudef::random_unitary(3, rng);
        const ComplexMatrix b = kudef::random_unitary(3, rng);
        const ComplexMatrix u = kudef::random_unitary(3, rng);
        const double base = relation_defect({a, b}, GroupExpr::orientable(1));
        const double moved = relation_defect({u * a * u.adjoint(), u * b * u.adjoint()},
                                             GroupExpr::orientable(1));
        CHECK_THAT(moved, Catch::Matchers::WithinAbs(base, 1e-12));
    }
}

TEST_CASE("relation defect input validation") {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    CHECK_THROWS_AS(relation_defect({id, id, id}, GroupExpr::orientable(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(relation_defect({id, id}, GroupExpr::non_orientable(3)),
                    std::invalid_argument);
    ComplexMatrix not_unitary(2);
    not_unitary(0, 0) = 2.0;
    not_unitary(1, 1) = 1.0;
    CHECK_THROWS_AS(relation_defect({not_unitary, id}, GroupExpr::orientable(1)),
                    kudef::NumericError);
    CHECK_THROWS_AS(relation_defect({id, id}, GroupExpr::integers()), kudef::SemanticError);
}

TEST_CASE("u1 character samples realize exactly two components") {
    for (int q = 2; q <= 4; ++q) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto samples = u1_characters(q, 32, seed);
            REQUIRE(samples.size() == 32);
            std::set<int> labels;
            for (const auto& s : samples) {
                labels.insert(s.label);
                CHECK((s.label == 1 || s.label == -1));
                CHECK(s.point.crosscaps() == q);
                // the relation holds on the nose
                Complex product = 1.0;
                for (auto x : s.point.values()) product *= x;
                CHECK(std::abs(product * product - 1.0) < 1e-12);
            }
            CHECK(labels == std::set<int>{-1, 1});
        }
    }
    CHECK_THROWS_AS(u1_characters(1, 8, 0), kudef::SemanticError);
}

TEST_CASE("character point validation") {
    CHECK_THROWS_AS(CharacterPoint({Complex(2.0, 0.0), Complex(0.5, 0.0)}),
                    kudef::NumericError);
    CHECK_THROWS_AS(CharacterPoint({std::polar(1.0, 0.3), std::polar(1.0, 0.4)}),
                    kudef::NumericError);  // product not a sign
    const CharacterPoint ok({std::polar(1.0, 0.3), -std::polar(1.0, -0.3)});
    CHECK(ok.component() == -1);
}

TEST_CASE("stable eigenvalue map on U(1) characters") {
    const double theta = 0.7;
    // (e^{i theta}, -e^{-i theta}): product -1, relation holds
    const CharacterPoint chi({std::polar(1.0, theta), -std::polar(1.0, -theta)});
    const auto result = stable_eigenvalue_map(chi);
    REQUIRE(result.component.has_value());
    CHECK(*result.component == -1);
    REQUIRE(result.spectra.size() == 2);
    CHECK_THAT(result.spectra[0][0], Catch::Matchers::WithinAbs(theta, 1e-12));
    CHECK_THAT(result.spectra[1][0], Catch::Matchers::WithinAbs(kPi - theta, 1e-12));
}

TEST_CASE("stable eigenvalue map on the trivial representation") {
    const std::vector<ComplexMatrix> rho(3, ComplexMatrix::identity(1));
    const auto result = stable_eigenvalue_map(rho, GroupExpr::non_orientable(3));
    REQUIRE(result.component.has_value());
    CHECK(*result.component == 1);
    for (const auto& spectrum : result.spectra)
        for (double angle : spectrum) CHECK_THAT(angle, Catch::Matchers::WithinAbs(0.0, 1e-12));
}

TEST_CASE("stable eigenvalue map on a free group tuple") {
    std::mt19937_64 rng(11);
    const ComplexMatrix a = kudef::random_unitary(3, rng);
    const ComplexMatrix b = kudef::random_unitary(3, rng);
    const auto result = stable_eigenvalue_map({a, b}, GroupExpr::free_group(2));
    CHECK_FALSE(result.component.has_value());
    REQUIRE(result.spectra.size() == 2);
    // each spectrum matches the independently computed eigenvalues
    for (int which = 0; which < 2; ++which) {
        const auto values = kudef::unitary_eigenvalues(which == 0 ? a : b);
        std::vector<double> angles;
        for (auto z : values) angles.push_back(kudef::canonical_angle(z));
        std::sort(angles.begin(), angles.end());
        REQUIRE(angles.size() == result.spectra[which].size());
        for (std::size_t i = 0; i < angles.size(); ++i)
            CHECK_THAT(result.spectra[which][i],
                       Catch::Matchers::WithinAbs(angles[i], 1e-9));
    }
}

TEST_CASE("stable eigenvalue map rejects relation violations") {
    std::mt19937_64 rng(13);
    // generic unitary pair will not satisfy the genus-1 relation
    const ComplexMatrix a = kudef::random_unitary(3, rng);
    const ComplexMatrix b = kudef::random_unitary(3, rng);
    CHECK_THROWS_AS(stable_eigenvalue_map({a, b}, GroupExpr::orientable(1)),
                    kudef::NumericError);
    // wrong arity for a free group
    CHECK_THROWS_AS(stable_eigenvalue_map({a}, GroupExpr::free_group(2)),
                    std::invalid_argument);
}

TEST_CASE("higher rank non-orientable input gets no component label") {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    const auto result = stable_eigenvalue_map({id, id}, GroupExpr::non_orientable(2));
    CHECK_FALSE(result.component.has_value());
    CHECK(result.spectra.size() == 2);
}
