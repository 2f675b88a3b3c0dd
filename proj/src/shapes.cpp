#include "lgpeterson/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "lgpeterson/error.hpp"

namespace lgpet {

namespace {

void strip_zeros(std::vector<int>& parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

std::string describe(const std::vector<int>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

std::strong_ordering compare_parts(int na, const std::vector<int>& a, int nb, const std::vector<int>& b) {
    if (auto c = na <=> nb; c != 0) return c;
    const int wa = std::accumulate(a.begin(), a.end(), 0);
    const int wb = std::accumulate(b.begin(), b.end(), 0);
    if (auto c = wa <=> wb; c != 0) return c;
    return a <=> b;
}

void check_rank_index(const RootSystemC& sys, int i, int lo, int hi, const char* what) {
    if (i < lo || i > hi) {
        throw InvalidArgument(std::string(what) + " index " + std::to_string(i) + " out of range [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "] for rank " +
                              std::to_string(sys.rank()));
    }
}

}  // namespace

PartitionPC::PartitionPC(int rank, std::vector<int> parts) : n_(rank), parts_(std::move(parts)) {
    if (rank < 1) throw InvalidArgument("rank must be at least 1");
    strip_zeros(parts_);
    if (!is_valid(n_, parts_)) {
        throw InvalidArgument(describe(parts_) + " is not a partition in P^" + std::to_string(n_) + "_C");
    }
}

bool PartitionPC::is_valid(int rank, const std::vector<int>& parts) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const int p = parts[k];
        if (p < 1 || p > 2 * rank) return false;
        const int next = k + 1 < parts.size() ? parts[k + 1] : 0;
        if (next > p) return false;
        if (p <= rank && next == p) return false;
    }
    return true;
}

int PartitionPC::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::strong_ordering operator<=>(const PartitionPC& a, const PartitionPC& b) {
    return compare_parts(a.n_, a.parts_, b.n_, b.parts_);
}

StrictPartition::StrictPartition(int rank, std::vector<int> parts) : n_(rank), parts_(std::move(parts)) {
    if (rank < 1) throw InvalidArgument("rank must be at least 1");
    strip_zeros(parts_);
    if (!is_valid(n_, parts_)) {
        throw InvalidArgument(describe(parts_) + " is not a strict partition with parts <= " +
                              std::to_string(n_));
    }
}

bool StrictPartition::is_valid(int rank, const std::vector<int>& parts) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] < 1 || parts[k] > rank) return false;
        if (k + 1 < parts.size() && parts[k + 1] >= parts[k]) return false;
    }
    return true;
}

int StrictPartition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::strong_ordering operator<=>(const StrictPartition& a, const StrictPartition& b) {
    return compare_parts(a.n_, a.parts_, b.n_, b.parts_);
}

std::ostream& operator<<(std::ostream& os, const PartitionPC& p) { return os << describe(p.parts()); }
std::ostream& operator<<(std::ostream& os, const StrictPartition& p) { return os << describe(p.parts()); }

std::vector<int> rho_word(const RootSystemC& sys, int i) {
    const int n = sys.rank();
    check_rank_index(sys, i, 1, 2 * n, "rho");
    std::vector<int> word;
    if (i <= n) {
        for (int k = i - 1; k >= 0; --k) word.push_back(k);
    } else {
        for (int k = 2 * n - i + 1; k <= n; ++k) word.push_back(k);
        for (int k = n - 1; k >= 0; --k) word.push_back(k);
    }
    return word;
}

AffineElement rho(const RootSystemC& sys, int i) { return word_product(sys, rho_word(sys, i)); }

AffineElement x_of(const PartitionPC& lambda) {
    const RootSystemC sys(lambda.rank());
    auto x = AffineElement::identity(sys.rank());
    const auto& p = lambda.parts();
    for (auto it = p.rbegin(); it != p.rend(); ++it) x = multiply(x, rho(sys, *it));
    return x;
}

std::vector<int> v_word(const RootSystemC& sys, int i) {
    const int n = sys.rank();
    check_rank_index(sys, i, 1, 2 * n, "v");
    std::vector<int> word;
    if (i <= n) {
        for (int k = i; k <= n; ++k) word.push_back(k);
        for (int k = n - 1; k >= 1; --k) word.push_back(k);
    } else {
        for (int k = 2 * n - i; k >= 1; --k) word.push_back(k);
    }
    return word;
}

SignedPermutation v_of_index(const RootSystemC& sys, int i) {
    return finite_word_product(sys, v_word(sys, i));
}

SignedPermutation v_of(const PartitionPC& lambda) {
    const RootSystemC sys(lambda.rank());
    auto w = SignedPermutation::identity(sys.rank());
    const auto& p = lambda.parts();
    for (auto it = p.rbegin(); it != p.rend(); ++it) w = w * v_of_index(sys, *it);
    return w;
}

LatticeVector xi_of(const PartitionPC& lambda) {
    const RootSystemC sys(lambda.rank());
    const auto e1 = LatticeVector::unit(sys.rank(), 1);
    auto xi = LatticeVector::zero(sys.rank());
    auto acc = SignedPermutation::identity(sys.rank());
    for (int part : lambda.parts()) {
        xi += acc.apply(e1);
        acc = acc * v_of_index(sys, part).inverse();
    }
    return xi;
}

std::int64_t bracket_xi(const PartitionPC& lambda) {
    return bracket_projection(RootSystemC(lambda.rank()), xi_of(lambda));
}

PartitionPC remove_first_row(const PartitionPC& lambda) {
    if (lambda.is_empty()) throw InvalidArgument("cannot remove the first row of the empty partition");
    return PartitionPC(lambda.rank(), std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
}

StrictPartition truncate(const PartitionPC& lambda) {
    std::vector<int> small;
    for (int p : lambda.parts())
        if (p <= lambda.rank()) small.push_back(p);
    return StrictPartition(lambda.rank(), std::move(small));
}

StrictPartition star(const StrictPartition& mu) {
    const int n = mu.rank();
    std::vector<int> out;
    const auto& p = mu.parts();
    for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(n + 1 - *it);
    return StrictPartition(n, std::move(out));
}

SignedPermutation u_of_index(const RootSystemC& sys, int k) {
    const int n = sys.rank();
    check_rank_index(sys, k, 1, n, "u");
    std::vector<int> word;
    for (int i = n + 1 - k; i <= n; ++i) word.push_back(i);
    return finite_word_product(sys, word);
}

SignedPermutation u_of(const StrictPartition& mu) {
    const RootSystemC sys(mu.rank());
    auto w = SignedPermutation::identity(sys.rank());
    const auto& p = mu.parts();
    for (auto it = p.rbegin(); it != p.rend(); ++it) w = w * u_of_index(sys, *it);
    return w;
}

int big_part_count(const PartitionPC& lambda) {
    return static_cast<int>(std::count_if(lambda.parts().begin(), lambda.parts().end(),
                                          [&](int p) { return p >= lambda.rank() + 1; }));
}

namespace {

void extend_pc(int n, int budget, int max_part, std::vector<int>& cur, std::vector<PartitionPC>& out) {
    out.emplace_back(n, cur);
    for (int p = std::min(max_part, budget); p >= 1; --p) {
        cur.push_back(p);
        // A part <= n may not repeat, so the next part must be strictly smaller.
        extend_pc(n, budget - p, p <= n ? p - 1 : p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<PartitionPC> enumerate_pc(const RootSystemC& sys, int max_weight) {
    std::vector<PartitionPC> out;
    if (max_weight < 0) return out;
    std::vector<int> cur;
    extend_pc(sys.rank(), max_weight, 2 * sys.rank(), cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StrictPartition> enumerate_sp(const RootSystemC& sys) {
    const int n = sys.rank();
    if (n > 30) throw InvalidArgument("enumerate_sp: rank too large");
    std::vector<StrictPartition> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> parts;
        for (int k = n; k >= 1; --k)
            if (mask & (1u << (k - 1))) parts.push_back(k);
        out.emplace_back(n, std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lgpet
