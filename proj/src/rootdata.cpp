#include "lgpeterson/rootdata.hpp"

#include <ostream>
#include <string>

#include "lgpeterson/error.hpp"

namespace lgpet {

namespace {

void check_index(const RootSystemC& sys, int i, int lo, const char* what) {
    if (i < lo || i > sys.rank()) {
        throw InvalidArgument(std::string(what) + " index " + std::to_string(i) +
                              " out of range [" + std::to_string(lo) + ", " +
                              std::to_string(sys.rank()) + "]");
    }
}

void check_same_rank(const LatticeVector& a, const LatticeVector& b) {
    if (a.rank() != b.rank()) {
        throw InvalidArgument("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                              std::to_string(b.rank()));
    }
}

}  // namespace

RootSystemC::RootSystemC(int rank) : n_(rank) {
    if (rank < 1) throw InvalidArgument("rank must be at least 1, got " + std::to_string(rank));
}

LatticeVector LatticeVector::zero(int rank) {
    return LatticeVector(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0));
}

LatticeVector LatticeVector::from_integers(std::vector<std::int64_t> coords) {
    for (auto& c : coords) c *= 2;
    return LatticeVector(std::move(coords));
}

LatticeVector LatticeVector::from_integers(std::initializer_list<std::int64_t> coords) {
    return from_integers(std::vector<std::int64_t>(coords));
}

LatticeVector LatticeVector::from_doubled(std::vector<std::int64_t> doubled) {
    return LatticeVector(std::move(doubled));
}

LatticeVector LatticeVector::unit(int rank, int i) {
    if (i < 1 || i > rank) throw InvalidArgument("unit vector index out of range");
    auto v = zero(rank);
    v.doubled_[i - 1] = 2;
    return v;
}

bool LatticeVector::is_integral() const noexcept {
    for (auto d : doubled_)
        if (d % 2 != 0) return false;
    return true;
}

std::vector<std::int64_t> LatticeVector::integer_coords() const {
    if (!is_integral()) throw InvalidArgument("vector has half-integer coordinates");
    std::vector<std::int64_t> out(doubled_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = doubled_[i] / 2;
    return out;
}

std::int64_t LatticeVector::integer_coord(int i) const {
    if (doubled_[i] % 2 != 0) throw InvalidArgument("coordinate is a half-integer");
    return doubled_[i] / 2;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
    check_same_rank(*this, o);
    for (std::size_t i = 0; i < doubled_.size(); ++i) doubled_[i] += o.doubled_[i];
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
    check_same_rank(*this, o);
    for (std::size_t i = 0; i < doubled_.size(); ++i) doubled_[i] -= o.doubled_[i];
    return *this;
}

LatticeVector& LatticeVector::operator*=(std::int64_t k) {
    for (auto& d : doubled_) d *= k;
    return *this;
}

LatticeVector LatticeVector::operator-() const {
    LatticeVector r = *this;
    r *= -1;
    return r;
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    os << '(';
    for (int i = 0; i < v.rank(); ++i) {
        if (i) os << ", ";
        auto d = v.doubled(i);
        if (d % 2 == 0)
            os << d / 2;
        else
            os << d << "/2";
    }
    return os << ')';
}

LatticeVector simple_root(const RootSystemC& sys, int i) {
    check_index(sys, i, 1, "simple root");
    const int n = sys.rank();
    std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
    if (i < n) {
        c[i - 1] = 1;
        c[i] = -1;
    } else {
        c[n - 1] = 2;
    }
    return LatticeVector::from_integers(std::move(c));
}

LatticeVector simple_coroot(const RootSystemC& sys, int i) {
    check_index(sys, i, 1, "simple coroot");
    const int n = sys.rank();
    std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
    c[i - 1] = 1;
    if (i < n) c[i] = -1;
    return LatticeVector::from_integers(std::move(c));
}

LatticeVector fundamental_coweight(const RootSystemC& sys, int i) {
    check_index(sys, i, 0, "fundamental coweight");
    const int n = sys.rank();
    std::vector<std::int64_t> d(static_cast<std::size_t>(n), 0);
    if (i == n) {
        for (auto& x : d) x = 1;
    } else {
        for (int j = 0; j < i; ++j) d[j] = 2;
    }
    return LatticeVector::from_doubled(std::move(d));
}

Rational pair(const LatticeVector& xi, const LatticeVector& alpha) {
    check_same_rank(xi, alpha);
    std::int64_t quadrupled = 0;
    for (int i = 0; i < xi.rank(); ++i) quadrupled += xi.doubled(i) * alpha.doubled(i);
    return {quadrupled, 4};
}

std::vector<std::int64_t> coroot_coordinates(const RootSystemC& sys, const LatticeVector& xi) {
    if (xi.rank() != sys.rank()) throw InvalidArgument("rank mismatch in coroot_coordinates");
    if (!xi.is_integral()) throw InvalidArgument("coroot_coordinates: vector is not in Q^vee");
    // Triangular solve: c_i = x_1 + ... + x_i.
    std::vector<std::int64_t> c(static_cast<std::size_t>(sys.rank()));
    std::int64_t running = 0;
    for (int i = 0; i < sys.rank(); ++i) {
        running += xi.integer_coord(i);
        c[i] = running;
    }
    return c;
}

std::int64_t bracket_projection(const RootSystemC& sys, const LatticeVector& xi) {
    return coroot_coordinates(sys, xi).back();
}

std::vector<LatticeVector> positive_roots(const RootSystemC& sys) {
    const int n = sys.rank();
    std::vector<LatticeVector> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int sign : {-1, 1}) {
                std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
                c[i] = 1;
                c[j] = sign;
                out.push_back(LatticeVector::from_integers(std::move(c)));
            }
        }
        std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
        c[i] = 2;
        out.push_back(LatticeVector::from_integers(std::move(c)));
    }
    return out;
}

bool is_positive_root(const LatticeVector& alpha) {
    for (int i = 0; i < alpha.rank(); ++i) {
        if (alpha.doubled(i) != 0) return alpha.doubled(i) > 0;
    }
    return false;
}

}  // namespace lgpet
