#pragma once

// The affine Weyl group W_af = W x| Q^vee of type C_n^(1).
//
// Elements are kept in the normal form w t_xi with w a signed permutation and
// xi an integral coweight; words in s_0..s_n are only produced on request.
// Multiplication follows (w t_a)(w' t_b) = w w' t_{w'^{-1} a + b}, and
// s_0 = s_theta t_{-theta^vee} with theta^vee = eps_1.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lgpeterson/rootdata.hpp"

namespace lgpet {

/// Element of W(C_n): images[j-1] = +-k encodes w(eps_j) = +-eps_k.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> images);

    static SignedPermutation identity(int rank);
    /// Finite simple reflection s_i, 1 <= i <= n.
    static SignedPermutation generator(int rank, int i);

    int rank() const noexcept { return static_cast<int>(images_.size()); }
    /// Signed image index of eps_j, 1-based.
    int image(int j) const { return images_[j - 1]; }
    const std::vector<int>& images() const noexcept { return images_; }

    bool is_identity() const noexcept;
    SignedPermutation inverse() const;
    LatticeVector apply(const LatticeVector& v) const;

    /// Number of positive roots sent to negative roots.
    int length() const;
    /// True when w(alpha_i) < 0, i.e. l(w s_i) < l(w). Index 1..n.
    bool has_right_descent(int i) const;

    friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const SignedPermutation& w);

/// The element w t_xi.
class AffineElement {
public:
    AffineElement() = default;
    AffineElement(SignedPermutation w, LatticeVector xi);

    static AffineElement identity(int rank);
    static AffineElement translation(LatticeVector xi);
    static AffineElement finite(SignedPermutation w);

    int rank() const noexcept { return w_.rank(); }
    const SignedPermutation& finite_part() const noexcept { return w_; }
    const LatticeVector& translation_part() const noexcept { return xi_; }
    bool is_identity() const noexcept { return w_.is_identity() && xi_ == LatticeVector::zero(rank()); }

    friend bool operator==(const AffineElement&, const AffineElement&) = default;
    friend auto operator<=>(const AffineElement&, const AffineElement&) = default;

private:
    SignedPermutation w_;
    LatticeVector xi_;
};

std::ostream& operator<<(std::ostream& os, const AffineElement& x);

struct AffineElementHash {
    std::size_t operator()(const AffineElement& x) const noexcept;
};

/// s_i for 0 <= i <= n.
AffineElement simple_reflection(const RootSystemC& sys, int i);

AffineElement multiply(const AffineElement& x, const AffineElement& y);
AffineElement inverse(const AffineElement& x);
inline AffineElement operator*(const AffineElement& x, const AffineElement& y) { return multiply(x, y); }

/// Product s_{w[0]} s_{w[1]} ... of affine generators.
AffineElement word_product(const RootSystemC& sys, std::span<const int> word);
/// Product of finite generators (indices 1..n).
SignedPermutation finite_word_product(const RootSystemC& sys, std::span<const int> word);

/// Coxeter length, by counting positive affine roots a with x(a) < 0.
int length(const AffineElement& x);

/// l(x s_i) = l(x) + 1 for every finite i.
bool is_grassmannian(const AffineElement& x);

/// Minimal length representative of w W_P, W_P = <s_1, ..., s_{n-1}>.
SignedPermutation min_coset_rep(const SignedPermutation& w);

/// Peterson coset criterion over R_P^+ = { eps_i - eps_j : i < j }.
bool is_peterson_rep(const AffineElement& x);

/// A reduced word whose generator product is x.
std::vector<int> reduced_word(const AffineElement& x);

struct EnumeratedElement {
    AffineElement element;
    int length;
};

inline constexpr std::size_t kDefaultBfsCap = 5'000'000;

/// The cap from PETERSON_BFS_CAP when set and valid, otherwise kDefaultBfsCap.
std::size_t default_bfs_cap();

/// Every element of length <= max_len, with its word length, sorted by
/// (length, element). Throws ResourceLimit if more than `cap` states are seen.
std::vector<EnumeratedElement> bfs_enumerate(const RootSystemC& sys, int max_len,
                                             std::size_t cap = default_bfs_cap());

}  // namespace lgpet
