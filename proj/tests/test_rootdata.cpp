#include "doctest.h"
#include "lgpeterson/error.hpp"
#include "lgpeterson/rootdata.hpp"

#include <sstream>

using namespace lgpet;

namespace {

LatticeVector iv(std::initializer_list<std::int64_t> c) { return LatticeVector::from_integers(c); }

}  // namespace

TEST_CASE("root system rank") {
    CHECK(RootSystemC(3).rank() == 3);
    CHECK_THROWS_AS(RootSystemC(0), InvalidArgument);
    CHECK_THROWS_AS(RootSystemC(-2), InvalidArgument);
}

TEST_CASE("simple roots") {
    CHECK(simple_root(RootSystemC(2), 1) == iv({1, -1}));
    CHECK(simple_root(RootSystemC(2), 2) == iv({0, 2}));
    CHECK(simple_root(RootSystemC(4), 3) == iv({0, 0, 1, -1}));
    CHECK_THROWS_AS(simple_root(RootSystemC(2), 0), InvalidArgument);
    CHECK_THROWS_AS(simple_root(RootSystemC(2), 3), InvalidArgument);
}

TEST_CASE("simple coroots") {
    CHECK(simple_coroot(RootSystemC(2), 2) == iv({0, 1}));
    CHECK(simple_coroot(RootSystemC(3), 1) == iv({1, -1, 0}));
    CHECK(simple_coroot(RootSystemC(1), 1) == iv({1}));
}

TEST_CASE("fundamental coweights") {
    const RootSystemC c2(2);
    const auto w2 = fundamental_coweight(c2, 2);
    CHECK(w2 == LatticeVector::from_doubled({1, 1}));
    CHECK(w2[0] == Rational(1, 2));
    CHECK_FALSE(w2.is_integral());
    CHECK(fundamental_coweight(c2, 0) == iv({0, 0}));
    CHECK(fundamental_coweight(RootSystemC(3), 2) == iv({1, 1, 0}));
    CHECK_THROWS_AS(fundamental_coweight(c2, 3), InvalidArgument);

    // <w_i, a_j> = delta_ij
    for (int n = 1; n <= 5; ++n) {
        const RootSystemC sys(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(pair(fundamental_coweight(sys, i), simple_root(sys, j)) == Rational(i == j ? 1 : 0));
    }
}

TEST_CASE("pairing") {
    CHECK(pair(iv({1, 0}), iv({1, -1})) == Rational(1));
    CHECK(pair(iv({1, 1}), iv({0, 2})) == Rational(2));
    CHECK(pair(iv({1, 2}), iv({1, -1})) == Rational(-1));
    CHECK_THROWS_AS(pair(iv({1, 2}), iv({1})), InvalidArgument);
}

TEST_CASE("coroot coordinates") {
    const RootSystemC c2(2);
    CHECK(coroot_coordinates(c2, iv({1, 0})) == std::vector<std::int64_t>{1, 1});
    CHECK(coroot_coordinates(c2, iv({1, 1})) == std::vector<std::int64_t>{1, 2});
    CHECK(coroot_coordinates(RootSystemC(3), iv({0, 0, 0})) == std::vector<std::int64_t>{0, 0, 0});

    // Re-expanding sum c_i a_i^vee recovers xi.
    const RootSystemC c3(3);
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) {
                const auto xi = iv({a, b, c});
                const auto coords = coroot_coordinates(c3, xi);
                auto sum = LatticeVector::zero(3);
                for (int i = 0; i < 3; ++i) sum += coords[i] * simple_coroot(c3, i + 1);
                CHECK(sum == xi);
            }
    CHECK_THROWS_AS(coroot_coordinates(c2, fundamental_coweight(c2, 2)), InvalidArgument);
}

TEST_CASE("bracket projection") {
    const RootSystemC c2(2);
    CHECK(bracket_projection(c2, iv({1, 0})) == 1);
    CHECK(bracket_projection(c2, iv({1, 1})) == 2);
    for (int n = 1; n <= 6; ++n) CHECK(bracket_projection(RootSystemC(n), LatticeVector::zero(n)) == 0);
}

TEST_CASE("positive roots") {
    for (int n = 1; n <= 6; ++n) {
        const RootSystemC sys(n);
        const auto roots = positive_roots(sys);
        CHECK(roots.size() == static_cast<std::size_t>(n * n));
        for (const auto& r : roots) {
            CHECK(is_positive_root(r));
            CHECK_FALSE(is_positive_root(-r));
        }
        for (int i = 1; i <= n; ++i) CHECK(is_positive_root(simple_root(sys, i)));
    }
}

TEST_CASE("lattice vector arithmetic and printing") {
    const auto a = iv({1, -2});
    const auto b = LatticeVector::from_doubled({1, 3});
    CHECK(a + b - b == a);
    CHECK(2 * b == iv({1, 3}));
    CHECK(-a == iv({-1, 2}));
    CHECK(LatticeVector::unit(3, 2) == iv({0, 1, 0}));
    std::ostringstream os;
    os << a << ' ' << b;
    CHECK(os.str() == "(1, -2) (1/2, 3/2)");
    CHECK_THROWS_AS(a + iv({1}), InvalidArgument);
}
