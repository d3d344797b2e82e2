#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numbers>
#include <random>

#include "kudef/torus_moduli.hpp"

using kudef::Complex;
using kudef::ComplexMatrix;
using kudef::EigenPairMultiset;
using kudef::multiset_distance;
using kudef::torus_moduli_map;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix unit_diag(const std::vector<double>& angles) {
    std::vector<Complex> d;
    for (double a : angles) d.push_back(std::polar(1.0, a));
    return ComplexMatrix::diagonal(d);
}

EigenPairMultiset zip(const std::vector<double>& alpha, const std::vector<double>& beta) {
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t i = 0; i < alpha.size(); ++i) pairs.emplace_back(alpha[i], beta[i]);
    return EigenPairMultiset(std::move(pairs));
}

}  // namespace

TEST_CASE("identity pair maps to the repeated trivial pair") {
    const auto result = torus_moduli_map(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
    CHECK(multiset_distance(result.point, zip({0, 0}, {0, 0})) < 1e-12);
}

TEST_CASE("already diagonal pair keeps index pairing") {
    // (diag(i, -i), diag(1, -1)) -> {(i, 1), (-i, -1)}
    const auto result =
        torus_moduli_map(unit_diag({kPi / 2, -kPi / 2}), unit_diag({0.0, kPi}));
    CHECK(multiset_distance(result.point, zip({kPi / 2, 3 * kPi / 2}, {0.0, kPi})) < 1e-12);
    // and NOT the independently sorted pairing
    CHECK(multiset_distance(result.point, zip({kPi / 2, 3 * kPi / 2}, {kPi, 0.0})) > 1.0);
}

TEST_CASE("circle distance and single pair distance") {
    CHECK_THAT(kudef::circle_distance(0.1, 2 * kPi - 0.1),
               Catch::Matchers::WithinAbs(0.2, 1e-12));
    const double eps = 1e-3;
    CHECK_THAT(multiset_distance(zip({0}, {0}), zip({eps}, {0})),
               Catch::Matchers::WithinAbs(eps, 1e-12));
}

TEST_CASE("matching finds permutations") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<double, double>> pairs;
        for (int i = 0; i < 6; ++i) pairs.emplace_back(angle(rng), angle(rng));
        auto shuffled = pairs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(multiset_distance(EigenPairMultiset(pairs), EigenPairMultiset(shuffled)) < 1e-12);
    }
}

TEST_CASE("matching agrees with brute force") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 5;
        std::vector<std::pair<double, double>> xs, ys;
        for (int i = 0; i < n; ++i) {
            xs.emplace_back(angle(rng), angle(rng));
            ys.emplace_back(angle(rng), angle(rng));
        }
        const double fast = multiset_distance(EigenPairMultiset(xs), EigenPairMultiset(ys));

        std::vector<int> perm{0, 1, 2, 3, 4};
        double best = 1e300;
        do {
            double total = 0;
            for (int i = 0; i < n; ++i) {
                const double dt = kudef::circle_distance(xs[i].first, ys[perm[i]].first);
                const double dp = kudef::circle_distance(xs[i].second, ys[perm[i]].second);
                total += std::sqrt(dt * dt + dp * dp);
            }
            best = std::min(best, total);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK_THAT(fast, Catch::Matchers::WithinAbs(best, 1e-9));
    }
}

TEST_CASE("size mismatch is rejected") {
    CHECK_THROWS_AS(multiset_distance(zip({0}, {0}), zip({0, 1}, {0, 1})),
                    std::invalid_argument);
}

TEST_CASE("round trip recovers the eigenvalue pairs") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 5;
        std::vector<double> alpha, beta;
        for (int i = 0; i < n; ++i) {
            alpha.push_back(angle(rng));
            beta.push_back(angle(rng));
        }
        // multiplicity in the first factor, split by the second
        alpha[1] = alpha[0];
        const ComplexMatrix v = kudef::random_unitary(n, rng);
        const ComplexMatrix a = v * unit_diag(alpha) * v.adjoint();
        const ComplexMatrix b = v * unit_diag(beta) * v.adjoint();
        const auto result = torus_moduli_map(a, b, 1e-8, 100 + trial);
        CHECK(multiset_distance(result.point, zip(alpha, beta)) <= 1e-8);
    }
}

TEST_CASE("the map factors through conjugation") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4;
        std::vector<double> alpha, beta;
        for (int i = 0; i < n; ++i) {
            alpha.push_back(angle(rng));
            beta.push_back(angle(rng));
        }
        const ComplexMatrix v = kudef::random_unitary(n, rng);
        const ComplexMatrix a = v * unit_diag(alpha) * v.adjoint();
        const ComplexMatrix b = v * unit_diag(beta) * v.adjoint();
        const ComplexMatrix u = kudef::random_unitary(n, rng);
        const auto direct = torus_moduli_map(a, b, 1e-8, 55);
        const auto conjugated =
            torus_moduli_map(u * a * u.adjoint(), u * b * u.adjoint(), 1e-8, 56);
        CHECK(multiset_distance(direct.point, conjugated.point) <= 1e-8);
    }
}

TEST_CASE("small perturbations move the multiset a little") {
    // statistical continuity check on diagonal models
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    std::uniform_real_distribution<double> bump(-1e-6, 1e-6);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4;
        std::vector<double> alpha, beta, alpha2, beta2;
        for (int i = 0; i < n; ++i) {
            alpha.push_back(angle(rng));
            beta.push_back(angle(rng));
            alpha2.push_back(alpha.back() + bump(rng));
            beta2.push_back(beta.back() + bump(rng));
        }
        const ComplexMatrix v = kudef::random_unitary(n, rng);
        const auto base =
            torus_moduli_map(v * unit_diag(alpha) * v.adjoint(),
                             v * unit_diag(beta) * v.adjoint(), 1e-8, 77);
        const auto moved =
            torus_moduli_map(v * unit_diag(alpha2) * v.adjoint(),
                             v * unit_diag(beta2) * v.adjoint(), 1e-8, 78);
        CHECK(multiset_distance(base.point, moved.point) <= 1e-4);
    }
}
