#include "lgpeterson/textio.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "lgpeterson/error.hpp"

namespace lgpet {

// ---------------------------------------------------------------------------
// Partitions

std::vector<int> parse_parts(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw ParseError("unbalanced '[' in partition", s.size());
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    if (s.empty()) return parts;
    std::size_t pos = 0;
    while (true) {
        int v = 0;
        auto [p, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
        if (ec != std::errc() || p == s.data() + pos) throw ParseError("expected a part", pos);
        parts.push_back(v);
        pos = static_cast<std::size_t>(p - s.data());
        if (pos == s.size()) break;
        if (s[pos] != ',') throw ParseError("expected ',' between parts", pos);
        ++pos;
    }
    return parts;
}

PartitionPC parse_partition(int rank, std::string_view text) { return PartitionPC(rank, parse_parts(text)); }

StrictPartition parse_strict_partition(int rank, std::string_view text) {
    return StrictPartition(rank, parse_parts(text));
}

std::string format_parts(const std::vector<int>& parts) {
    if (parts.empty()) return "[]";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

namespace {

std::string bracketed(const std::vector<int>& parts) {
    return parts.empty() ? "[]" : "[" + format_parts(parts) + "]";
}

// ---------------------------------------------------------------------------
// Coefficient parser

class CoeffParser {
public:
    CoeffParser(const RootSystemC& sys, std::string_view text) : sys_(sys), text_(text) {}

    NovikovCoeff parse() {
        auto r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    std::int64_t integer() {
        skip_ws();
        std::int64_t v = 0;
        bool any = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const int d = text_[pos_] - '0';
            if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) fail("integer too large");
            v = v * 10 + d;
            ++pos_;
            any = true;
        }
        if (!any) fail("expected an integer");
        return v;
    }

    int small_int(std::int64_t v) {
        if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min()) fail("exponent too large");
        return static_cast<int>(v);
    }

    NovikovCoeff expr() {
        NovikovCoeff acc(sys_.rank());
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        auto t = term();
        acc += negate ? -t : t;
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    NovikovCoeff term() {
        auto acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    NovikovCoeff factor() {
        const int n = sys_.rank();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return NovikovCoeff::constant(n, integer());
        }
        if (c == 'Q') {
            ++pos_;
            int q = 1;
            if (accept('^')) {
                const bool braced = accept('{');
                const bool neg = accept('-');
                q = small_int(neg ? -integer() : integer());
                if (braced) expect('}');
            }
            return q_power(n, q);
        }
        if (c == 'e') {
            ++pos_;
            expect('^');
            expect('{');
            auto eps = lin();
            expect('}');
            return NovikovCoeff::monomial({0, std::move(eps)});
        }
        if (c == '(') {
            ++pos_;
            auto r = expr();
            expect(')');
            return r;
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    Exponent lin() {
        Exponent eps(static_cast<std::size_t>(sys_.rank()), 0);
        int sign = 1;
        if (accept('-'))
            sign = -1;
        else
            accept('+');
        sterm(sign, eps);
        while (true) {
            if (accept('+')) {
                sterm(1, eps);
            } else if (accept('-')) {
                sterm(-1, eps);
            } else {
                break;
            }
        }
        return eps;
    }

    void sterm(int sign, Exponent& eps) {
        std::int64_t coef = 1;
        bool has_coef = false;
        if (at_digit()) {
            coef = integer();
            has_coef = true;
        }
        const char c = peek();
        if (c != 'a' && c != 'e') {
            if (!has_coef) fail("expected a variable (a<i> or eps<i>)");
            if (coef != 0) fail("constant term in exponent must be zero");
            return;
        }
        const std::size_t var_pos = pos_;
        bool is_root;
        if (text_.substr(pos_, 3) == "eps") {
            pos_ += 3;
            is_root = false;
        } else if (c == 'a') {
            ++pos_;
            is_root = true;
        } else {
            fail("unknown variable");
        }
        if (!at_digit()) fail("expected a variable index");
        const std::int64_t index = integer();
        if (index < 1 || index > sys_.rank()) {
            throw ParseError("variable index " + std::to_string(index) + " out of range for rank " +
                                 std::to_string(sys_.rank()),
                             var_pos);
        }
        const int k = small_int(sign * coef);
        if (is_root) {
            std::vector<int> roots(static_cast<std::size_t>(sys_.rank()), 0);
            roots[index - 1] = k;
            const auto add = root_expr_to_eps(sys_, roots);
            for (std::size_t i = 0; i < eps.size(); ++i) eps[i] += add[i];
        } else {
            eps[index - 1] += k;
        }
    }

    const RootSystemC& sys_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printing

std::string lin_text(const Exponent& eps) {
    std::string s;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        const int c = eps[i];
        if (c == 0) continue;
        if (c < 0)
            s += '-';
        else if (!s.empty())
            s += '+';
        const int a = c < 0 ? -c : c;
        if (a != 1) s += std::to_string(a);
        s += "eps" + std::to_string(i + 1);
    }
    return s;
}

std::string monomial_text(const NovikovMonomial& m) {
    std::string s;
    if (m.q == 1)
        s = "Q";
    else if (m.q != 0)
        s = "Q^" + std::to_string(m.q);
    const auto lin = lin_text(m.eps);
    if (!lin.empty()) {
        if (!s.empty()) s += " * ";
        s += "e^{" + lin + "}";
    }
    return s;
}

// Magnitude of a term with the sign stripped.
std::string term_text(const NovikovMonomial& m, std::uint64_t magnitude) {
    const auto mono = monomial_text(m);
    if (mono.empty()) return std::to_string(magnitude);
    if (magnitude == 1) return mono;
    return std::to_string(magnitude) + " * " + mono;
}

std::uint64_t magnitude(std::int64_t c) {
    return c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
}

// Appends "<sign><coefficient factor><basis>" for one combination term.
void append_combo_term(std::string& out, const NovikovCoeff& c, const std::string& basis) {
    bool negative = false;
    std::string factor;
    if (c.terms().size() == 1) {
        const auto& [m, v] = *c.terms().begin();
        negative = v < 0;
        const auto mono = monomial_text(m);
        const auto mag = magnitude(v);
        if (mono.empty())
            factor = mag == 1 ? "" : std::to_string(mag);
        else
            factor = term_text(m, mag);
    } else {
        factor = "(" + print_coeff(c) + ")";
    }
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    out += factor.empty() ? basis : factor + " * " + basis;
}

}  // namespace

NovikovCoeff parse_coeff(const RootSystemC& sys, std::string_view text) { return CoeffParser(sys, text).parse(); }

std::string print_coeff(const NovikovCoeff& c) {
    if (c.is_zero()) return "0";
    std::string s;
    for (const auto& [m, v] : c.terms()) {
        if (s.empty())
            s += v < 0 ? "-" : "";
        else
            s += v < 0 ? " - " : " + ";
        s += term_text(m, magnitude(v));
    }
    return s;
}

std::string print_coeff(const LaurentCoeff& c) { return print_coeff(to_novikov(c)); }

nlohmann::ordered_json coeff_to_json(const NovikovCoeff& c) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& [m, v] : c.terms()) {
        nlohmann::ordered_json t;
        t["eps"] = m.eps;
        t["q"] = m.q;
        t["c"] = v;
        j.push_back(std::move(t));
    }
    return j;
}

NovikovCoeff coeff_from_json(int rank, const nlohmann::json& j) {
    if (!j.is_array()) throw InvalidArgument("coefficient JSON must be an array");
    NovikovCoeff c(rank);
    for (const auto& t : j) {
        auto eps = t.at("eps").get<Exponent>();
        if (static_cast<int>(eps.size()) != rank) throw InvalidArgument("coefficient exponent has wrong rank");
        c.add_term({t.value("q", 0), std::move(eps)}, t.at("c").get<std::int64_t>());
    }
    return c;
}

std::string format_combo(const QuantumCombo& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [mu, c] : x.terms()) append_combo_term(out, c, "O" + bracketed(mu.parts()));
    return out;
}

std::string format_combo(const AffineCombo& x) {
    if (x.is_zero()) return "0";
    std::string out;
    const std::string loc = "OGr[" + std::to_string(x.rank() + 1) + "]";
    for (const auto& [key, c] : x.terms()) {
        std::string basis = "OGr" + bracketed(key.part.parts());
        if (key.loc_exp == 1)
            basis += " * " + loc;
        else if (key.loc_exp != 0)
            basis += " * " + loc + "^" + std::to_string(key.loc_exp);
        append_combo_term(out, to_novikov(c), basis);
    }
    return out;
}

std::string format_index(const QuantumIndex& q) {
    QuantumCombo c(q.mu.rank());
    c.add_term(q.mu, q_power(q.mu.rank(), static_cast<int>(q.q_exp)));
    return format_combo(c);
}

std::string format_homology(const HomologyImage& h) {
    if (h.is_zero()) return "0";
    const auto& v = *h.value;
    const std::string basis = "sigma" + bracketed(v.mu.parts());
    if (v.q_exp == 0) return basis;
    if (v.q_exp == 1) return "q * " + basis;
    return "q^" + std::to_string(v.q_exp) + " * " + basis;
}

std::string shifted_diagram(const StrictPartition& mu) {
    std::string s;
    for (int row = 0; row < mu.num_parts(); ++row) {
        s += std::string(static_cast<std::size_t>(2 * row), ' ');
        for (int k = 0; k < mu.parts()[row]; ++k) s += "[]";
        s += '\n';
    }
    return s;
}

// ---------------------------------------------------------------------------
// Relation files

RelationFile parse_relation(const nlohmann::json& j) {
    RelationFile rel;
    try {
        rel.n = j.at("n").get<int>();
        rel.kind = j.at("kind").get<std::string>();
        rel.lhs = j.at("lhs").get<std::vector<std::string>>();
        for (const auto& t : j.at("rhs")) {
            rel.rhs.push_back({t.at("coeff").get<std::string>(), t.at("part").get<std::string>(),
                               t.value("loc_exp", 0)});
        }
        rel.notes = j.value("notes", std::string());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed relation file: ") + e.what());
    }
    if (rel.kind != "affine-k-product") throw InvalidArgument("unsupported relation kind: " + rel.kind);
    if (rel.lhs.size() != 2) throw InvalidArgument("relation lhs must list exactly two partitions");
    const RootSystemC sys(rel.n);
    for (const auto& p : rel.lhs) parse_partition(rel.n, p);
    relation_rhs(rel);
    return rel;
}

RelationFile load_relation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open relation file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), e.byte);
    }
    return parse_relation(j);
}

AffineCombo relation_rhs(const RelationFile& rel) {
    const RootSystemC sys(rel.n);
    AffineCombo out(rel.n);
    for (const auto& t : rel.rhs) {
        const auto part = parse_partition(rel.n, t.part);
        const auto coeff = parse_coeff(sys, t.coeff);
        // Q acts on the affine side as (O_{(n+1)})^{-1}.
        for (const auto& [m, v] : coeff.terms()) {
            out.add_term(part, t.loc_exp - m.q, character(m.eps, v));
        }
    }
    return out;
}

TransportedRelation transport_relation(const RelationFile& rel) {
    const PetersonContext ctx(rel.n);
    return transport_product(ctx, parse_partition(rel.n, rel.lhs[0]), parse_partition(rel.n, rel.lhs[1]),
                             relation_rhs(rel));
}

std::string format_relation(const TransportedRelation& rel) {
    return "O" + bracketed(rel.left.parts()) + " * O" + bracketed(rel.right.parts()) + " = " +
           format_combo(rel.rhs);
}

nlohmann::ordered_json relation_to_json(const TransportedRelation& rel) {
    nlohmann::ordered_json j;
    j["n"] = rel.rhs.rank();
    j["kind"] = "qk-product";
    j["lhs"] = {format_parts(rel.left.parts()), format_parts(rel.right.parts())};
    j["rhs"] = nlohmann::ordered_json::array();
    for (const auto& [mu, c] : rel.rhs.terms()) {
        nlohmann::ordered_json t;
        t["part"] = format_parts(mu.parts());
        t["coeff"] = print_coeff(c);
        t["terms"] = coeff_to_json(c);
        j["rhs"].push_back(std::move(t));
    }
    j["relation"] = format_relation(rel);
    j["warnings"] = rel.warnings;
    return j;
}

}  // namespace lgpet
