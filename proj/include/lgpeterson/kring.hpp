#pragma once

// Exact coefficients in R(T) = Z[e^{+-eps_1}, ..., e^{+-eps_n}] and R(T)[Q, Q^{-1}],
// plus finite linear combinations of Schubert classes on both sides of the
// Peterson map.
//
// All arithmetic is on int64_t and throws std::overflow_error rather than wrapping.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lgpeterson/rootdata.hpp"
#include "lgpeterson/shapes.hpp"

namespace lgpet {

using Exponent = std::vector<int>;

struct LaurentMonomial {
    Exponent eps;

    int rank() const noexcept { return static_cast<int>(eps.size()); }
    friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;
    friend auto operator<=>(const LaurentMonomial&, const LaurentMonomial&) = default;
};

/// Q^q e^{eps}. Ordered by (q, eps lexicographic).
struct NovikovMonomial {
    int q = 0;
    Exponent eps;

    int rank() const noexcept { return static_cast<int>(eps.size()); }
    friend bool operator==(const NovikovMonomial&, const NovikovMonomial&) = default;
    friend auto operator<=>(const NovikovMonomial&, const NovikovMonomial&) = default;
};

LaurentMonomial operator*(const LaurentMonomial& a, const LaurentMonomial& b);
NovikovMonomial operator*(const NovikovMonomial& a, const NovikovMonomial& b);

/// Sparse integer combination of monomials with no zero coefficients stored.
template <class Monomial>
class SparseCoeff {
public:
    using Terms = std::map<Monomial, std::int64_t>;

    explicit SparseCoeff(int rank) : n_(rank) {}

    static SparseCoeff zero(int rank) { return SparseCoeff(rank); }
    static SparseCoeff one(int rank) { return constant(rank, 1); }
    static SparseCoeff constant(int rank, std::int64_t c);
    static SparseCoeff monomial(Monomial m, std::int64_t c = 1);

    int rank() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::int64_t coefficient(const Monomial& m) const;

    /// Adds c * m, dropping the entry if the result is zero.
    void add_term(const Monomial& m, std::int64_t c);

    SparseCoeff& operator+=(const SparseCoeff& o);
    SparseCoeff& operator-=(const SparseCoeff& o);
    SparseCoeff& operator*=(std::int64_t k);
    SparseCoeff operator-() const;
    SparseCoeff times(const SparseCoeff& o) const;

    friend SparseCoeff operator+(SparseCoeff a, const SparseCoeff& b) { return a += b; }
    friend SparseCoeff operator-(SparseCoeff a, const SparseCoeff& b) { return a -= b; }
    friend SparseCoeff operator*(const SparseCoeff& a, const SparseCoeff& b) { return a.times(b); }
    friend SparseCoeff operator*(std::int64_t k, SparseCoeff a) { return a *= k; }

    friend bool operator==(const SparseCoeff&, const SparseCoeff&) = default;

private:
    int n_;
    Terms terms_;
};

using LaurentCoeff = SparseCoeff<LaurentMonomial>;
using NovikovCoeff = SparseCoeff<NovikovMonomial>;

extern template class SparseCoeff<LaurentMonomial>;
extern template class SparseCoeff<NovikovMonomial>;

LaurentCoeff coeff_add(const LaurentCoeff& a, const LaurentCoeff& b);
LaurentCoeff coeff_mul(const LaurentCoeff& a, const LaurentCoeff& b);
LaurentCoeff coeff_neg(const LaurentCoeff& a);

/// e^{eps}.
LaurentCoeff character(const Exponent& eps, std::int64_t c = 1);

/// Q^q embedding of a Laurent coefficient.
NovikovCoeff to_novikov(const LaurentCoeff& c, int q = 0);
/// Multiplies by Q^shift.
NovikovCoeff q_shift(const NovikovCoeff& c, int shift);
/// Q^q.
NovikovCoeff q_power(int rank, int q);

/// Converts sum_i c_i alpha_i to epsilon coordinates.
Exponent root_expr_to_eps(const RootSystemC& sys, const std::vector<int>& root_coeffs);

/// Key of an affine-side term: O_part * (O_{(n+1)})^{loc_exp}.
struct AffineKey {
    PartitionPC part;
    int loc_exp = 0;

    friend bool operator==(const AffineKey&, const AffineKey&) = default;
    friend auto operator<=>(const AffineKey&, const AffineKey&) = default;
};

/// sum c * O^Gr_part * (O^Gr_{(n+1)})^{loc_exp}, coefficients in R(T).
class AffineCombo {
public:
    using Terms = std::map<AffineKey, LaurentCoeff>;

    explicit AffineCombo(int rank) : n_(rank) {}

    int rank() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const PartitionPC& part, int loc_exp, const LaurentCoeff& c);

    AffineCombo& operator+=(const AffineCombo& o);
    friend AffineCombo operator+(AffineCombo a, const AffineCombo& b) { return a += b; }
    friend bool operator==(const AffineCombo&, const AffineCombo&) = default;

private:
    int n_;
    Terms terms_;
};

AffineCombo combo_scale(const LaurentCoeff& c, const AffineCombo& x);
AffineCombo combo_add(const AffineCombo& a, const AffineCombo& b);
bool combo_equal(const AffineCombo& a, const AffineCombo& b);

/// sum c * O^mu_LG, coefficients in R(T)[Q, Q^{-1}].
class QuantumCombo {
public:
    using Terms = std::map<StrictPartition, NovikovCoeff>;

    explicit QuantumCombo(int rank) : n_(rank) {}

    int rank() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const StrictPartition& mu, const NovikovCoeff& c);

    QuantumCombo& operator+=(const QuantumCombo& o);
    friend QuantumCombo operator+(QuantumCombo a, const QuantumCombo& b) { return a += b; }
    friend bool operator==(const QuantumCombo&, const QuantumCombo&) = default;

private:
    int n_;
    Terms terms_;
};

QuantumCombo combo_scale(const NovikovCoeff& c, const QuantumCombo& x);
QuantumCombo combo_add(const QuantumCombo& a, const QuantumCombo& b);
bool combo_equal(const QuantumCombo& a, const QuantumCombo& b);

}  // namespace lgpet
