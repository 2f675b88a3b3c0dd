#pragma once

// Partition models for the affine Grassmannian elements of type C_n^(1) and
// for the Schubert basis of LG(n).
//
//   PartitionPC:      2n >= l_1 >= ... >= l_k > 0, and every part <= n is
//                     strictly larger than the next one (only parts >= n+1 repeat).
//   StrictPartition:  n >= l_1 > ... > l_k > 0.
//
// Products are taken in the order x_l = rho_{l_k} ... rho_{l_1} (smallest part leftmost),
// and likewise for v(l) and u_l.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lgpeterson/rootdata.hpp"
#include "lgpeterson/weyl.hpp"

namespace lgpet {

class StrictPartition;

class PartitionPC {
public:
    /// Trailing zeros are dropped; throws InvalidArgument if the result is not in P^n_C.
    PartitionPC(int rank, std::vector<int> parts);
    static PartitionPC empty(int rank) { return PartitionPC(rank, {}); }

    static bool is_valid(int rank, const std::vector<int>& parts);

    int rank() const noexcept { return n_; }
    const std::vector<int>& parts() const noexcept { return parts_; }
    int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept;
    /// Largest part, 0 for the empty partition.
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    bool is_empty() const noexcept { return parts_.empty(); }

    friend bool operator==(const PartitionPC&, const PartitionPC&) = default;
    /// Rank, then weight, then lexicographic on parts.
    friend std::strong_ordering operator<=>(const PartitionPC& a, const PartitionPC& b);

private:
    int n_;
    std::vector<int> parts_;
};

class StrictPartition {
public:
    StrictPartition(int rank, std::vector<int> parts);
    static StrictPartition empty(int rank) { return StrictPartition(rank, {}); }

    static bool is_valid(int rank, const std::vector<int>& parts);

    int rank() const noexcept { return n_; }
    const std::vector<int>& parts() const noexcept { return parts_; }
    int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept;
    bool is_empty() const noexcept { return parts_.empty(); }

    PartitionPC to_pc() const { return PartitionPC(n_, parts_); }

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    friend std::strong_ordering operator<=>(const StrictPartition& a, const StrictPartition& b);

private:
    int n_;
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const PartitionPC& p);
std::ostream& operator<<(std::ostream& os, const StrictPartition& p);

/// Generator word of rho_i, 1 <= i <= 2n.
std::vector<int> rho_word(const RootSystemC& sys, int i);
AffineElement rho(const RootSystemC& sys, int i);

AffineElement x_of(const PartitionPC& lambda);

/// Finite generator word of v_i, 1 <= i <= 2n (empty for i = 2n).
std::vector<int> v_word(const RootSystemC& sys, int i);
SignedPermutation v_of_index(const RootSystemC& sys, int i);

SignedPermutation v_of(const PartitionPC& lambda);
/// xi(l) = eps_1 + v_{l_1}^{-1} eps_1 + v_{l_1}^{-1} v_{l_2}^{-1} eps_1 + ... (l terms).
LatticeVector xi_of(const PartitionPC& lambda);

/// [xi(l)] as a multiple of alpha_n^vee.
std::int64_t bracket_xi(const PartitionPC& lambda);

/// l^- = (l_2, ..., l_k). Throws on the empty partition.
PartitionPC remove_first_row(const PartitionPC& lambda);
/// Drops every part greater than n.
StrictPartition truncate(const PartitionPC& lambda);
/// (n+1-l_k, ..., n+1-l_1).
StrictPartition star(const StrictPartition& mu);

/// u_k = s_{n+1-k} ... s_{n-1} s_n, 1 <= k <= n.
SignedPermutation u_of_index(const RootSystemC& sys, int k);
SignedPermutation u_of(const StrictPartition& mu);

/// Number of parts >= n+1.
int big_part_count(const PartitionPC& lambda);

/// All of P^n_C with weight <= max_weight, ordered by (weight, lex).
std::vector<PartitionPC> enumerate_pc(const RootSystemC& sys, int max_weight);
/// All 2^n strict partitions with parts <= n, ordered by (weight, lex).
std::vector<StrictPartition> enumerate_sp(const RootSystemC& sys);

}  // namespace lgpet
