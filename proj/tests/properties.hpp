#pragma once

// Randomized property checks with fixed seeds. Each returns the number of
// generated cases and the number that failed, so that both the unit tests and
// the acceptance runner can use them.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lgpeterson/kring.hpp"
#include "lgpeterson/shapes.hpp"
#include "lgpeterson/textio.hpp"

namespace props {

struct Result {
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++cases;
        if (!ok && failures++ == 0) first_failure = what;
    }
};

inline lgpet::NovikovCoeff random_coeff(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> terms(0, 4), exp(-3, 3), q(-2, 2);
    std::uniform_int_distribution<std::int64_t> coef(-5, 5);
    lgpet::NovikovCoeff c(n);
    const int k = terms(rng);
    for (int t = 0; t < k; ++t) {
        lgpet::Exponent eps(n);
        for (auto& e : eps) e = exp(rng);
        c.add_term({q(rng), eps}, coef(rng));
    }
    return c;
}

inline lgpet::LaurentCoeff random_laurent(std::mt19937_64& rng, int n) {
    lgpet::LaurentCoeff out(n);
    const auto c = random_coeff(rng, n);
    for (const auto& [m, v] : c.terms()) out.add_term({m.eps}, v);
    return out;
}

// A random, non-canonical spelling of c: terms shuffled, coefficients split,
// exponents spread over repeated variables, and cancelling pairs inserted.
inline std::string random_spelling(std::mt19937_64& rng, const lgpet::NovikovCoeff& c) {
    const int n = c.rank();
    std::uniform_int_distribution<int> coin(0, 1), small(-3, 3), var(0, n - 1);
    auto lin = [&](const lgpet::Exponent& eps) {
        std::vector<std::string> parts;
        for (int i = 0; i < n; ++i) {
            int left = eps[i];
            while (left != 0) {
                const int step = coin(rng) ? left : (left > 0 ? 1 : -1);
                parts.push_back(std::to_string(step) + "eps" + std::to_string(i + 1));
                left -= step;
            }
        }
        if (coin(rng)) parts.push_back("0");
        if (coin(rng)) {
            // a_i written next to its negation in eps coordinates.
            const int i = var(rng) + 1;
            parts.push_back("1a" + std::to_string(i));
            if (i < n) {
                parts.push_back("-1eps" + std::to_string(i));
                parts.push_back("1eps" + std::to_string(i + 1));
            } else {
                parts.push_back("-2eps" + std::to_string(i));
            }
        }
        std::shuffle(parts.begin(), parts.end(), rng);
        if (parts.empty()) return std::string("0");
        std::string s;
        for (const auto& p : parts) s += (s.empty() || p[0] == '-' ? "" : " + ") + p;
        return s;
    };
    auto monomial = [&](const lgpet::NovikovMonomial& m) {
        std::vector<std::string> f;
        f.push_back("e^{" + lin(m.eps) + "}");
        if (m.q != 0 || coin(rng)) f.push_back(coin(rng) ? "Q^{" + std::to_string(m.q) + "}" : "Q^" + std::to_string(m.q));
        std::shuffle(f.begin(), f.end(), rng);
        return f.size() == 1 ? f[0] : f[0] + " * " + f[1];
    };
    std::vector<std::string> pieces;
    for (const auto& [m, v] : c.terms()) {
        const std::int64_t a = small(rng);
        for (const std::int64_t part : {a, v - a}) {
            if (part == 0 && coin(rng)) continue;
            pieces.push_back("(" + std::to_string(part) + ") * " + monomial(m));
        }
    }
    if (coin(rng)) {
        lgpet::Exponent eps(n, 0);
        eps[var(rng)] = small(rng);
        const auto m = monomial({small(rng), eps});
        pieces.push_back(m);
        pieces.push_back("-" + m);
    }
    std::shuffle(pieces.begin(), pieces.end(), rng);
    if (pieces.empty()) return "0";
    std::string s;
    for (const auto& p : pieces) {
        if (s.empty())
            s = p;
        else
            s += p[0] == '-' ? " - " + p.substr(1) : " + " + p;
    }
    return s;
}

inline Result ring_axioms(std::uint64_t seed, long count) {
    std::mt19937_64 rng(seed);
    Result r;
    for (long i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(i % 3);
        const auto a = random_coeff(rng, n), b = random_coeff(rng, n), c = random_coeff(rng, n);
        const auto zero = lgpet::NovikovCoeff::zero(n), one = lgpet::NovikovCoeff::one(n);
        const bool ok = (a + b) + c == a + (b + c) && a + b == b + a && a + zero == a && a + (-a) == zero &&
                        (a * b) * c == a * (b * c) && a * b == b * a && a * one == a && a * zero == zero &&
                        a * (b + c) == a * b + a * c;
        const auto x = random_laurent(rng, n), y = random_laurent(rng, n), z = random_laurent(rng, n);
        const bool ok_laurent = lgpet::coeff_mul(x, lgpet::coeff_add(y, z)) ==
                                    lgpet::coeff_add(lgpet::coeff_mul(x, y), lgpet::coeff_mul(x, z)) &&
                                lgpet::coeff_add(x, lgpet::coeff_neg(x)).is_zero() &&
                                lgpet::to_novikov(x * y) == lgpet::to_novikov(x) * lgpet::to_novikov(y);
        r.expect(ok && ok_laurent, lgpet::print_coeff(a) + " | " + lgpet::print_coeff(b) + " | " +
                                       lgpet::print_coeff(c));
    }
    return r;
}

inline Result parse_round_trip(std::uint64_t seed, long count) {
    std::mt19937_64 rng(seed);
    Result r;
    for (long i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(i % 4);
        const lgpet::RootSystemC sys(n);
        const auto c = random_coeff(rng, n);
        const auto text = lgpet::print_coeff(c);
        r.expect(lgpet::parse_coeff(sys, text) == c, text);
    }
    return r;
}

inline Result canonical_uniqueness(std::uint64_t seed, long count) {
    std::mt19937_64 rng(seed);
    Result r;
    for (long i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(i % 4);
        const lgpet::RootSystemC sys(n);
        const auto c = random_coeff(rng, n);
        const auto spelled = random_spelling(rng, c);
        const auto d = random_coeff(rng, n);
        const bool same_text = lgpet::print_coeff(lgpet::parse_coeff(sys, spelled)) == lgpet::print_coeff(c);
        const bool injective = (lgpet::print_coeff(c) == lgpet::print_coeff(d)) == (c == d);
        r.expect(same_text && injective, spelled);
    }
    return r;
}

inline Result star_involution(std::uint64_t seed, long count) {
    std::mt19937_64 rng(seed);
    Result r;
    for (long i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(rng() % 24);
        std::vector<int> parts;
        for (int k = n; k >= 1; --k)
            if (rng() & 1) parts.push_back(k);
        const lgpet::StrictPartition mu(n, parts);
        const auto s = lgpet::star(mu);
        const bool ok = lgpet::star(s) == mu && s.num_parts() == mu.num_parts() &&
                        s.weight() + mu.weight() == mu.num_parts() * (n + 1);
        r.expect(ok, lgpet::format_parts(parts) + " at n=" + std::to_string(n));
    }
    return r;
}

}  // namespace props
