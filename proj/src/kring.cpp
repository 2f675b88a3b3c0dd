#include "lgpeterson/kring.hpp"

#include <stdexcept>
#include <string>

#include "lgpeterson/error.hpp"

namespace lgpet {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
    return r;
}

int checked_add(int a, int b) {
    int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

void check_rank(int a, int b) {
    if (a != b) throw InvalidArgument("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
    check_rank(static_cast<int>(a.size()), static_cast<int>(b.size()));
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

}  // namespace

LaurentMonomial operator*(const LaurentMonomial& a, const LaurentMonomial& b) {
    return {add_exponents(a.eps, b.eps)};
}

NovikovMonomial operator*(const NovikovMonomial& a, const NovikovMonomial& b) {
    return {checked_add(a.q, b.q), add_exponents(a.eps, b.eps)};
}

template <class Monomial>
SparseCoeff<Monomial> SparseCoeff<Monomial>::constant(int rank, std::int64_t c) {
    Monomial m;
    m.eps.assign(static_cast<std::size_t>(rank), 0);
    return monomial(std::move(m), c);
}

template <class Monomial>
SparseCoeff<Monomial> SparseCoeff<Monomial>::monomial(Monomial m, std::int64_t c) {
    SparseCoeff r(m.rank());
    r.add_term(m, c);
    return r;
}

template <class Monomial>
std::int64_t SparseCoeff<Monomial>::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

template <class Monomial>
void SparseCoeff<Monomial>::add_term(const Monomial& m, std::int64_t c) {
    check_rank(n_, m.rank());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

template <class Monomial>
SparseCoeff<Monomial>& SparseCoeff<Monomial>::operator+=(const SparseCoeff& o) {
    check_rank(n_, o.n_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

template <class Monomial>
SparseCoeff<Monomial>& SparseCoeff<Monomial>::operator-=(const SparseCoeff& o) {
    check_rank(n_, o.n_);
    for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
    return *this;
}

template <class Monomial>
SparseCoeff<Monomial>& SparseCoeff<Monomial>::operator*=(std::int64_t k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c = checked_mul(c, k);
    return *this;
}

template <class Monomial>
SparseCoeff<Monomial> SparseCoeff<Monomial>::operator-() const {
    SparseCoeff r = *this;
    r *= -1;
    return r;
}

template <class Monomial>
SparseCoeff<Monomial> SparseCoeff<Monomial>::times(const SparseCoeff& o) const {
    check_rank(n_, o.n_);
    SparseCoeff r(n_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, checked_mul(ca, cb));
    return r;
}

template class SparseCoeff<LaurentMonomial>;
template class SparseCoeff<NovikovMonomial>;

LaurentCoeff coeff_add(const LaurentCoeff& a, const LaurentCoeff& b) { return a + b; }
LaurentCoeff coeff_mul(const LaurentCoeff& a, const LaurentCoeff& b) { return a * b; }
LaurentCoeff coeff_neg(const LaurentCoeff& a) { return -a; }

LaurentCoeff character(const Exponent& eps, std::int64_t c) { return LaurentCoeff::monomial({eps}, c); }

NovikovCoeff to_novikov(const LaurentCoeff& c, int q) {
    NovikovCoeff r(c.rank());
    for (const auto& [m, v] : c.terms()) r.add_term({q, m.eps}, v);
    return r;
}

NovikovCoeff q_shift(const NovikovCoeff& c, int shift) {
    NovikovCoeff r(c.rank());
    for (const auto& [m, v] : c.terms()) r.add_term({checked_add(m.q, shift), m.eps}, v);
    return r;
}

NovikovCoeff q_power(int rank, int q) {
    return NovikovCoeff::monomial({q, Exponent(static_cast<std::size_t>(rank), 0)});
}

Exponent root_expr_to_eps(const RootSystemC& sys, const std::vector<int>& root_coeffs) {
    const int n = sys.rank();
    check_rank(n, static_cast<int>(root_coeffs.size()));
    Exponent e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n - 1; ++i) {
        e[i] = checked_add(e[i], root_coeffs[i]);
        e[i + 1] = checked_add(e[i + 1], -root_coeffs[i]);
    }
    e[n - 1] = checked_add(e[n - 1], static_cast<int>(checked_mul(2, root_coeffs[n - 1])));
    return e;
}

void AffineCombo::add_term(const PartitionPC& part, int loc_exp, const LaurentCoeff& c) {
    check_rank(n_, part.rank());
    check_rank(n_, c.rank());
    if (c.is_zero()) return;
    AffineKey key{part, loc_exp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

AffineCombo& AffineCombo::operator+=(const AffineCombo& o) {
    check_rank(n_, o.n_);
    for (const auto& [k, c] : o.terms_) add_term(k.part, k.loc_exp, c);
    return *this;
}

AffineCombo combo_scale(const LaurentCoeff& c, const AffineCombo& x) {
    check_rank(c.rank(), x.rank());
    AffineCombo r(x.rank());
    for (const auto& [k, v] : x.terms()) r.add_term(k.part, k.loc_exp, c * v);
    return r;
}

AffineCombo combo_add(const AffineCombo& a, const AffineCombo& b) { return a + b; }
bool combo_equal(const AffineCombo& a, const AffineCombo& b) { return a == b; }

void QuantumCombo::add_term(const StrictPartition& mu, const NovikovCoeff& c) {
    check_rank(n_, mu.rank());
    check_rank(n_, c.rank());
    if (c.is_zero()) return;
    auto it = terms_.find(mu);
    if (it == terms_.end()) {
        terms_.emplace(mu, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

QuantumCombo& QuantumCombo::operator+=(const QuantumCombo& o) {
    check_rank(n_, o.n_);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

QuantumCombo combo_scale(const NovikovCoeff& c, const QuantumCombo& x) {
    check_rank(c.rank(), x.rank());
    QuantumCombo r(x.rank());
    for (const auto& [k, v] : x.terms()) r.add_term(k, c * v);
    return r;
}

QuantumCombo combo_add(const QuantumCombo& a, const QuantumCombo& b) { return a + b; }
bool combo_equal(const QuantumCombo& a, const QuantumCombo& b) { return a == b; }

}  // namespace lgpet
