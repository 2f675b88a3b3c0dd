#include "doctest.h"
#include "lgpeterson/error.hpp"
#include "lgpeterson/shapes.hpp"
#include "lgpeterson/weyl.hpp"
#include "oracle.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

using namespace lgpet;

namespace {

LatticeVector iv(std::initializer_list<std::int64_t> c) { return LatticeVector::from_integers(c); }

AffineElement word(const RootSystemC& sys, std::vector<int> w) { return word_product(sys, w); }

}  // namespace

TEST_CASE("signed permutations") {
    const auto s1 = SignedPermutation::generator(3, 1);
    CHECK(s1.images() == std::vector<int>{2, 1, 3});
    CHECK(SignedPermutation::generator(2, 2).images() == std::vector<int>{1, -2});
    CHECK((s1 * s1).is_identity());
    const SignedPermutation w({-2, 3, 1});
    CHECK((w * w.inverse()).is_identity());
    CHECK(w.apply(iv({1, 0, 0})) == iv({0, -1, 0}));
    CHECK_THROWS_AS(SignedPermutation({1, 1}), InvalidArgument);
    CHECK_THROWS_AS(SignedPermutation({1, 3}), InvalidArgument);
    CHECK_THROWS_AS(SignedPermutation({0, 1}), InvalidArgument);
    std::ostringstream os;
    os << SignedPermutation({2, -1});
    CHECK(os.str() == "[2, -1]");
}

TEST_CASE("finite length matches the finite group oracle") {
    for (int n = 1; n <= 4; ++n) {
        const RootSystemC sys(n);
        const auto group = oracle::finite_group(n);
        std::size_t count = 0;
        // Every element is a product of at most n^2 generators; enumerate by BFS on words.
        std::map<SignedPermutation, int> seen{{SignedPermutation::identity(n), 0}};
        std::vector<SignedPermutation> frontier{SignedPermutation::identity(n)};
        while (!frontier.empty()) {
            std::vector<SignedPermutation> next;
            for (const auto& w : frontier)
                for (int i = 1; i <= n; ++i) {
                    auto v = w * SignedPermutation::generator(n, i);
                    if (seen.emplace(v, seen[w] + 1).second) next.push_back(v);
                }
            frontier = std::move(next);
        }
        for (const auto& [w, d] : seen) {
            CHECK(w.length() == d);
            CHECK(group.at(oracle::from_perm(w)) == d);
            for (int i = 1; i <= n; ++i)
                CHECK(w.has_right_descent(i) == ((w * SignedPermutation::generator(n, i)).length() < d));
            ++count;
        }
        CHECK(count == group.size());
    }
}

TEST_CASE("simple reflections") {
    const RootSystemC c2(2);
    CHECK(simple_reflection(c2, 2) == AffineElement(SignedPermutation({1, -2}), iv({0, 0})));
    CHECK(simple_reflection(c2, 0) == AffineElement(SignedPermutation({-1, 2}), iv({-1, 0})));
    CHECK(simple_reflection(RootSystemC(3), 1) == AffineElement(SignedPermutation({2, 1, 3}), iv({0, 0, 0})));
    CHECK_THROWS_AS(simple_reflection(c2, 3), InvalidArgument);
    CHECK_THROWS_AS(simple_reflection(c2, -1), InvalidArgument);
    for (int n = 1; n <= 4; ++n) {
        const RootSystemC sys(n);
        for (int i = 0; i <= n; ++i) {
            const auto s = simple_reflection(sys, i);
            CHECK(oracle::from_element(s) == oracle::generator(n, i));
            CHECK((s * s).is_identity());
        }
    }
}

TEST_CASE("multiplication agrees with composition of affine maps") {
    const RootSystemC c2(2);
    const auto x = word(c2, {0, 1, 0});
    CHECK(x == AffineElement(SignedPermutation({-2, -1}), iv({-1, -1})));
    CHECK(oracle::from_element(x) == oracle::word(2, {0, 1, 0}));
    CHECK(x * AffineElement::identity(2) == x);
    CHECK((x * inverse(x)).is_identity());
    CHECK(x == x_of(PartitionPC(2, {2, 1})));

    std::mt19937_64 rng(7);
    for (int n = 1; n <= 4; ++n) {
        const RootSystemC sys(n);
        std::uniform_int_distribution<int> gen(0, n);
        for (int t = 0; t < 200; ++t) {
            std::vector<int> a(t % 9), b(t % 7);
            for (auto& i : a) i = gen(rng);
            for (auto& i : b) i = gen(rng);
            const auto xa = word_product(sys, a);
            const auto xb = word_product(sys, b);
            CHECK(oracle::from_element(xa * xb) == oracle::compose(oracle::word(n, a), oracle::word(n, b)));
            CHECK((inverse(xa) * xa).is_identity());
        }
    }
}

TEST_CASE("inverse") {
    const RootSystemC c2(2);
    CHECK(inverse(AffineElement::identity(2)).is_identity());
    const AffineElement s0(SignedPermutation({-1, 2}), iv({-1, 0}));
    CHECK(inverse(s0) == s0);
    CHECK(s0 * s0 == AffineElement::identity(2));
    CHECK(inverse(AffineElement::translation(iv({3, -1}))) == AffineElement::translation(iv({-3, 1})));
    CHECK_THROWS_AS(AffineElement(SignedPermutation::identity(2), LatticeVector::from_doubled({1, 0})),
                    InvalidArgument);
}

TEST_CASE("length") {
    const RootSystemC c2(2);
    CHECK(length(AffineElement::identity(2)) == 0);
    CHECK(length(x_of(PartitionPC(2, {3}))) == 3);
    CHECK(x_of(PartitionPC(2, {3})) == word(c2, {2, 1, 0}));
    CHECK(length(x_of(PartitionPC(2, {2, 1}))) == 3);
    CHECK(oracle::bfs(2, 4).at(oracle::from_element(x_of(PartitionPC(2, {2, 1})))) == 3);
}

TEST_CASE("length equals BFS distance in the affine map model") {
    for (int n = 1; n <= 3; ++n) {
        const int depth = n == 3 ? 6 : 8;
        const auto dist = oracle::bfs(n, depth);
        const auto elems = bfs_enumerate(RootSystemC(n), depth);
        CHECK(elems.size() == dist.size());
        for (const auto& e : elems) {
            const auto m = oracle::from_element(e.element);
            REQUIRE(dist.count(m) == 1);
            CHECK(dist.at(m) == e.length);
            CHECK(length(e.element) == e.length);
        }
    }
}

TEST_CASE("grassmannian test") {
    const RootSystemC c2(2);
    CHECK(is_grassmannian(AffineElement::identity(2)));
    CHECK_FALSE(is_grassmannian(simple_reflection(c2, 1)));
    CHECK(is_grassmannian(word(c2, {0, 1, 0})));

    for (int n = 1; n <= 3; ++n) {
        const auto dist = oracle::bfs(n, 7);
        for (const auto& e : bfs_enumerate(RootSystemC(n), 6))
            CHECK(is_grassmannian(e.element) == oracle::grassmannian(dist, oracle::from_element(e.element)));
    }
}

TEST_CASE("minimal coset representatives") {
    const RootSystemC c2(2);
    CHECK(min_coset_rep(SignedPermutation::identity(2)).is_identity());
    for (int n = 1; n <= 5; ++n) CHECK(min_coset_rep(v_of_index(RootSystemC(n), n + 1)).is_identity());
    const SignedPermutation v21({-2, -1});
    CHECK(v21 == v_of(PartitionPC(2, {2, 1})));
    const std::vector<int> u{2, 1, 2};
    CHECK(min_coset_rep(v21) == finite_word_product(c2, u));

    for (int n = 1; n <= 4; ++n) {
        for (const auto& [m, d] : oracle::finite_group(n)) {
            // Recover the signed permutation from its matrix.
            std::vector<int> images(n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i)
                    if (m.a[i][j] != 0) images[j] = m.a[i][j] * (i + 1);
            const SignedPermutation w(images);
            CHECK(oracle::from_perm(min_coset_rep(w)) == oracle::shortest_in_coset(m));
        }
    }
}

TEST_CASE("peterson coset criterion") {
    const RootSystemC c2(2);
    CHECK(is_peterson_rep(AffineElement::identity(2)));
    CHECK(is_peterson_rep(x_of(PartitionPC(2, {3}))));
    CHECK_FALSE(is_peterson_rep(x_of(PartitionPC(2, {4}))));
}

TEST_CASE("bfs enumeration") {
    const auto e1 = bfs_enumerate(RootSystemC(1), 2);
    REQUIRE(e1.size() == 5);
    const RootSystemC c1(1);
    std::vector<AffineElement> expected{AffineElement::identity(1), word(c1, {0}), word(c1, {1}),
                                        word(c1, {0, 1}), word(c1, {1, 0})};
    for (const auto& x : expected) {
        CHECK(std::count_if(e1.begin(), e1.end(), [&](const auto& e) { return e.element == x; }) == 1);
    }
    const auto e0 = bfs_enumerate(c1, 0);
    REQUIRE(e0.size() == 1);
    CHECK(e0[0].element.is_identity());

    const auto e2 = bfs_enumerate(RootSystemC(2), 3);
    CHECK(std::count_if(e2.begin(), e2.end(),
                        [](const auto& e) { return e.length == 3 && is_grassmannian(e.element); }) == 2);
    for (std::size_t i = 1; i < e2.size(); ++i) CHECK(e2[i - 1].length <= e2[i].length);

    CHECK_THROWS_AS(bfs_enumerate(RootSystemC(3), 10, 50), ResourceLimit);
}

TEST_CASE("bfs cap from the environment") {
    ::setenv("PETERSON_BFS_CAP", "123", 1);
    CHECK(default_bfs_cap() == 123);
    ::setenv("PETERSON_BFS_CAP", "junk", 1);
    CHECK(default_bfs_cap() == kDefaultBfsCap);
    ::unsetenv("PETERSON_BFS_CAP");
    CHECK(default_bfs_cap() == kDefaultBfsCap);
}

TEST_CASE("reduced words") {
    const RootSystemC c2(2);
    CHECK(reduced_word(AffineElement::identity(2)).empty());
    CHECK(reduced_word(simple_reflection(c2, 0)) == std::vector<int>{0});
    const auto x = x_of(PartitionPC(2, {2, 1}));
    const auto w = reduced_word(x);
    CHECK(w.size() == 3);
    CHECK(word_product(c2, w) == word(c2, {0, 1, 0}));

    for (int n = 1; n <= 3; ++n) {
        const RootSystemC sys(n);
        for (const auto& e : bfs_enumerate(sys, 6)) {
            const auto rw = reduced_word(e.element);
            CHECK(static_cast<int>(rw.size()) == e.length);
            CHECK(word_product(sys, rw) == e.element);
        }
    }
}
