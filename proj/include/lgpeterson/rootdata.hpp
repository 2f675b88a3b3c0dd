#pragma once

// Lattice arithmetic for the root system of type C_n in the epsilon basis.
//
// Conventions:
//   alpha_i      = eps_i - eps_{i+1}  (1 <= i < n),   alpha_n      = 2 eps_n
//   alpha_i^vee  = eps_i - eps_{i+1}  (1 <= i < n),   alpha_n^vee  = eps_n
//   varpi_i^vee  = eps_1 + ... + eps_i (1 <= i < n),  varpi_n^vee  = (eps_1 + ... + eps_n) / 2
//
// The coroot lattice Q^vee is Z^n in these coordinates.

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <iosfwd>
#include <vector>

#include <boost/rational.hpp>

namespace lgpet {

using Rational = boost::rational<std::int64_t>;

class RootSystemC {
public:
    explicit RootSystemC(int rank);

    int rank() const noexcept { return n_; }

    friend bool operator==(const RootSystemC&, const RootSystemC&) = default;

private:
    int n_;
};

/// Vector in the epsilon basis with coordinates in (1/2)Z.
///
/// Coordinates are held doubled so that every stored value is an integer.
class LatticeVector {
public:
    LatticeVector() = default;

    static LatticeVector zero(int rank);
    static LatticeVector from_integers(std::vector<std::int64_t> coords);
    static LatticeVector from_integers(std::initializer_list<std::int64_t> coords);
    static LatticeVector from_doubled(std::vector<std::int64_t> doubled);
    /// Unit vector eps_i, 1-based.
    static LatticeVector unit(int rank, int i);

    /// Same as from_integers but documents that the result must lie in Q^vee.
    static LatticeVector coroot_lattice(std::vector<std::int64_t> coords) {
        return from_integers(std::move(coords));
    }

    int rank() const noexcept { return static_cast<int>(doubled_.size()); }
    Rational operator[](int i) const { return {doubled_[i], 2}; }
    std::int64_t doubled(int i) const { return doubled_[i]; }
    const std::vector<std::int64_t>& doubled_coords() const noexcept { return doubled_; }

    bool is_integral() const noexcept;
    /// Integer coordinates; throws InvalidArgument when any coordinate is a half-integer.
    std::vector<std::int64_t> integer_coords() const;
    std::int64_t integer_coord(int i) const;

    LatticeVector& operator+=(const LatticeVector& o);
    LatticeVector& operator-=(const LatticeVector& o);
    LatticeVector& operator*=(std::int64_t k);
    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(std::int64_t k, LatticeVector a) { return a *= k; }
    LatticeVector operator-() const;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

private:
    explicit LatticeVector(std::vector<std::int64_t> doubled) : doubled_(std::move(doubled)) {}

    std::vector<std::int64_t> doubled_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

LatticeVector simple_root(const RootSystemC& sys, int i);
LatticeVector simple_coroot(const RootSystemC& sys, int i);
/// varpi_0^vee is the zero vector.
LatticeVector fundamental_coweight(const RootSystemC& sys, int i);

/// Standard pairing <eps_i, eps_j> = delta_ij.
Rational pair(const LatticeVector& xi, const LatticeVector& alpha);

/// Coefficients c with xi = sum_i c_i alpha_i^vee. Requires integral xi.
std::vector<std::int64_t> coroot_coordinates(const RootSystemC& sys, const LatticeVector& xi);

/// The alpha_n^vee coefficient of xi, i.e. [xi] for the parabolic with J = {1..n-1}.
std::int64_t bracket_projection(const RootSystemC& sys, const LatticeVector& xi);

/// Positive roots: eps_i - eps_j, eps_i + eps_j (i < j), 2 eps_i.
std::vector<LatticeVector> positive_roots(const RootSystemC& sys);

/// A root is positive iff its first nonzero coordinate is positive.
bool is_positive_root(const LatticeVector& alpha);

}  // namespace lgpet
