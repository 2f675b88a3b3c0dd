#include "lgpeterson/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>
#include <unordered_set>

#include "lgpeterson/error.hpp"

namespace lgpet {

namespace {

// c_i eps_i + c_j eps_j, with j < 0 for the long roots +-2 eps_i. Indices 0-based.
struct SparseRoot {
    int i;
    int ci;
    int j;
    int cj;
};

std::vector<SparseRoot> all_roots(int n) {
    std::vector<SparseRoot> roots;
    roots.reserve(static_cast<std::size_t>(2 * n * n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int a : {-1, 1})
                for (int b : {-1, 1}) roots.push_back({i, a, j, b});
        }
        roots.push_back({i, 2, -1, 0});
        roots.push_back({i, -2, -1, 0});
    }
    return roots;
}

const std::vector<SparseRoot>& roots_for(int n) {
    // Ranks are tiny; one table per rank up to a generous bound.
    static const std::vector<std::vector<SparseRoot>> tables = [] {
        std::vector<std::vector<SparseRoot>> t(65);
        for (int k = 1; k <= 64; ++k) t[k] = all_roots(k);
        return t;
    }();
    if (n < 1 || n > 64) throw InvalidArgument("rank out of supported range");
    return tables[n];
}

bool root_positive(const SparseRoot& r) {
    if (r.j < 0) return r.ci > 0;
    return (r.i < r.j ? r.ci : r.cj) > 0;
}

// Sign of w(alpha): positive iff the coefficient at the smaller target index is positive.
bool image_positive(const SignedPermutation& w, const SparseRoot& r) {
    const int a = w.images()[r.i];
    const int ka = std::abs(a);
    const int ca = a > 0 ? r.ci : -r.ci;
    if (r.j < 0) return ca > 0;
    const int b = w.images()[r.j];
    const int kb = std::abs(b);
    const int cb = b > 0 ? r.cj : -r.cj;
    return (ka < kb ? ca : cb) > 0;
}

std::int64_t pair_root(const LatticeVector& xi, const SparseRoot& r) {
    std::int64_t p = r.ci * xi.doubled(r.i);
    if (r.j >= 0) p += r.cj * xi.doubled(r.j);
    return p / 2;
}

void check_rank(int a, int b) {
    if (a != b) {
        throw InvalidArgument("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = rank();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
        const int k = std::abs(v);
        if (k < 1 || k > n || seen[k]) {
            throw InvalidArgument("signed permutation images must be a signed permutation of 1.." +
                                  std::to_string(n));
        }
        seen[k] = true;
    }
}

SignedPermutation SignedPermutation::identity(int rank) {
    std::vector<int> img(static_cast<std::size_t>(rank));
    for (int j = 0; j < rank; ++j) img[j] = j + 1;
    return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::generator(int rank, int i) {
    if (i < 1 || i > rank) throw InvalidArgument("finite generator index out of range");
    auto w = identity(rank);
    if (i < rank)
        std::swap(w.images_[i - 1], w.images_[i]);
    else
        w.images_[rank - 1] = -rank;
    return w;
}

bool SignedPermutation::is_identity() const noexcept {
    for (int j = 0; j < rank(); ++j)
        if (images_[j] != j + 1) return false;
    return true;
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int j = 0; j < rank(); ++j) {
        const int v = images_[j];
        inv[std::abs(v) - 1] = v > 0 ? j + 1 : -(j + 1);
    }
    SignedPermutation r;
    r.images_ = std::move(inv);
    return r;
}

LatticeVector SignedPermutation::apply(const LatticeVector& v) const {
    check_rank(rank(), v.rank());
    std::vector<std::int64_t> out(images_.size(), 0);
    for (int j = 0; j < rank(); ++j) {
        const int t = images_[j];
        out[std::abs(t) - 1] = t > 0 ? v.doubled(j) : -v.doubled(j);
    }
    return LatticeVector::from_doubled(std::move(out));
}

int SignedPermutation::length() const {
    int count = 0;
    for (const auto& r : roots_for(rank()))
        if (root_positive(r) && !image_positive(*this, r)) ++count;
    return count;
}

bool SignedPermutation::has_right_descent(int i) const {
    const int n = rank();
    if (i < 1 || i > n) throw InvalidArgument("descent index out of range");
    const SparseRoot alpha = i < n ? SparseRoot{i - 1, 1, i, -1} : SparseRoot{n - 1, 2, -1, 0};
    return !image_positive(*this, alpha);
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
    check_rank(a.rank(), b.rank());
    // (ab)(eps_j) = a(b(eps_j)).
    std::vector<int> img(b.images_.size());
    for (int j = 0; j < b.rank(); ++j) {
        const int t = b.images_[j];
        const int u = a.images_[std::abs(t) - 1];
        img[j] = t > 0 ? u : -u;
    }
    SignedPermutation r;
    r.images_ = std::move(img);
    return r;
}

std::ostream& operator<<(std::ostream& os, const SignedPermutation& w) {
    os << '[';
    for (int j = 0; j < w.rank(); ++j) {
        if (j) os << ", ";
        os << w.images()[j];
    }
    return os << ']';
}

AffineElement::AffineElement(SignedPermutation w, LatticeVector xi) : w_(std::move(w)), xi_(std::move(xi)) {
    check_rank(w_.rank(), xi_.rank());
    if (!xi_.is_integral()) throw InvalidArgument("translation part must lie in Q^vee");
}

AffineElement AffineElement::identity(int rank) {
    return {SignedPermutation::identity(rank), LatticeVector::zero(rank)};
}

AffineElement AffineElement::translation(LatticeVector xi) {
    const int n = xi.rank();
    return {SignedPermutation::identity(n), std::move(xi)};
}

AffineElement AffineElement::finite(SignedPermutation w) {
    const int n = w.rank();
    return {std::move(w), LatticeVector::zero(n)};
}

std::ostream& operator<<(std::ostream& os, const AffineElement& x) {
    return os << x.finite_part() << " t" << x.translation_part();
}

std::size_t AffineElementHash::operator()(const AffineElement& x) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::int64_t v) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (int v : x.finite_part().images()) mix(v);
    for (auto v : x.translation_part().doubled_coords()) mix(v);
    return h;
}

AffineElement simple_reflection(const RootSystemC& sys, int i) {
    const int n = sys.rank();
    if (i < 0 || i > n) throw InvalidArgument("simple reflection index out of range");
    if (i > 0) return AffineElement::finite(SignedPermutation::generator(n, i));
    // s_0 = s_theta t_{-eps_1}; s_theta negates eps_1.
    auto img = SignedPermutation::identity(n).images();
    img[0] = -1;
    return {SignedPermutation(std::move(img)), -LatticeVector::unit(n, 1)};
}

AffineElement multiply(const AffineElement& x, const AffineElement& y) {
    check_rank(x.rank(), y.rank());
    const auto& wy = y.finite_part();
    return {x.finite_part() * wy, wy.inverse().apply(x.translation_part()) + y.translation_part()};
}

AffineElement inverse(const AffineElement& x) {
    const auto& w = x.finite_part();
    return {w.inverse(), -w.apply(x.translation_part())};
}

AffineElement word_product(const RootSystemC& sys, std::span<const int> word) {
    auto x = AffineElement::identity(sys.rank());
    for (int i : word) x = multiply(x, simple_reflection(sys, i));
    return x;
}

SignedPermutation finite_word_product(const RootSystemC& sys, std::span<const int> word) {
    auto w = SignedPermutation::identity(sys.rank());
    for (int i : word) w = w * SignedPermutation::generator(sys.rank(), i);
    return w;
}

int length(const AffineElement& x) {
    // x(alpha + k delta) = w(alpha) + (k - <xi, alpha>) delta. For each finite root
    // alpha count the k with alpha + k delta > 0 and its image < 0.
    const auto& w = x.finite_part();
    const auto& xi = x.translation_part();
    std::int64_t total = 0;
    for (const auto& r : roots_for(x.rank())) {
        const std::int64_t p = pair_root(xi, r);
        const std::int64_t k_min = root_positive(r) ? 0 : 1;
        const std::int64_t m_max = image_positive(w, r) ? -1 : 0;
        total += std::max<std::int64_t>(0, p + m_max - k_min + 1);
    }
    return static_cast<int>(total);
}

bool is_grassmannian(const AffineElement& x) {
    const RootSystemC sys(x.rank());
    const int l = length(x);
    for (int i = 1; i <= sys.rank(); ++i) {
        if (length(multiply(x, simple_reflection(sys, i))) != l + 1) return false;
    }
    return true;
}

SignedPermutation min_coset_rep(const SignedPermutation& w) {
    const int n = w.rank();
    auto cur = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i < n; ++i) {
            if (cur.has_right_descent(i)) {
                cur = cur * SignedPermutation::generator(n, i);
                changed = true;
            }
        }
    }
    return cur;
}

bool is_peterson_rep(const AffineElement& x) {
    const int n = x.rank();
    const auto& w = x.finite_part();
    const auto& xi = x.translation_part();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const SparseRoot alpha{i, 1, j, -1};
            const std::int64_t p = pair_root(xi, alpha);
            const std::int64_t expected = image_positive(w, alpha) ? 0 : -1;
            if (p != expected) return false;
        }
    }
    return true;
}

std::vector<int> reduced_word(const AffineElement& x) {
    const RootSystemC sys(x.rank());
    std::vector<int> word;
    auto cur = x;
    int l = length(cur);
    while (l > 0) {
        bool found = false;
        for (int i = 0; i <= sys.rank(); ++i) {
            auto next = multiply(simple_reflection(sys, i), cur);
            if (length(next) < l) {
                word.push_back(i);
                cur = std::move(next);
                --l;
                found = true;
                break;
            }
        }
        if (!found) throw InternalError("no left descent found for element of positive length");
    }
    return word;
}

std::size_t default_bfs_cap() {
    if (const char* env = std::getenv("PETERSON_BFS_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultBfsCap;
}

std::vector<EnumeratedElement> bfs_enumerate(const RootSystemC& sys, int max_len, std::size_t cap) {
    if (max_len < 0) throw InvalidArgument("max_len must be non-negative");
    std::vector<AffineElement> gens;
    for (int i = 0; i <= sys.rank(); ++i) gens.push_back(simple_reflection(sys, i));

    std::unordered_set<AffineElement, AffineElementHash> seen;
    std::vector<EnumeratedElement> out;
    std::vector<AffineElement> frontier{AffineElement::identity(sys.rank())};
    seen.insert(frontier.front());
    out.push_back({frontier.front(), 0});

    for (int depth = 1; depth <= max_len && !frontier.empty(); ++depth) {
        std::vector<AffineElement> next;
        for (const auto& x : frontier) {
            for (const auto& s : gens) {
                auto y = multiply(s, x);
                if (seen.insert(y).second) {
                    if (seen.size() > cap) {
                        throw ResourceLimit("BFS exceeded state cap of " + std::to_string(cap));
                    }
                    next.push_back(std::move(y));
                }
            }
        }
        std::sort(next.begin(), next.end());
        for (const auto& y : next) out.push_back({y, depth});
        frontier = std::move(next);
    }
    return out;
}

}  // namespace lgpet
