#pragma once

// Text and JSON forms of partitions, coefficients, combinations, and relation files.
//
// Coefficient grammar (whitespace is insignificant):
//
//   expr   := ["+" | "-"] term { ("+" | "-") term }
//   term   := factor { "*" factor }
//   factor := integer | "Q" [ "^" sint ] | "e^{" lin "}" | "(" expr ")"
//   lin    := ["+" | "-"] sterm { ("+" | "-") sterm }
//   sterm  := [integer] var | integer
//   var    := "a" index | "eps" index
//   sint   := ["-"] integer
//
// "a i" is the simple root alpha_i and "eps i" the character eps_i. Q^sint also
// accepts braces, Q^{-1}. A bare integer inside e^{...} must be zero.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lgpeterson/kring.hpp"
#include "lgpeterson/peterson.hpp"
#include "lgpeterson/shapes.hpp"

namespace lgpet {

/// "3,3,2,1" or "[3,3,2,1]"; "[]" or "" for the empty partition.
std::vector<int> parse_parts(std::string_view text);
PartitionPC parse_partition(int rank, std::string_view text);
StrictPartition parse_strict_partition(int rank, std::string_view text);

/// "3,3,2,1", and "[]" for the empty partition.
std::string format_parts(const std::vector<int>& parts);

NovikovCoeff parse_coeff(const RootSystemC& sys, std::string_view text);

/// Canonical form: terms in (Q exponent, eps exponent) order, "0" for zero.
std::string print_coeff(const NovikovCoeff& c);
std::string print_coeff(const LaurentCoeff& c);

/// [{"eps": [...], "q": int, "c": int}, ...] in canonical order.
nlohmann::ordered_json coeff_to_json(const NovikovCoeff& c);
NovikovCoeff coeff_from_json(int rank, const nlohmann::json& j);

/// e.g. "(1 - e^{eps1}) * O[2,1] + Q * O[1]".
std::string format_combo(const QuantumCombo& x);
/// e.g. "e^{eps1} * OGr[3,2] * OGr[3]^-1".
std::string format_combo(const AffineCombo& x);

std::string format_index(const QuantumIndex& q);
/// "q^k * sigma[mu]" or "0".
std::string format_homology(const HomologyImage& h);

/// Rows of a shifted Young diagram, row i indented by i-1 cells.
std::string shifted_diagram(const StrictPartition& mu);

struct RelationTerm {
    std::string coeff;
    std::string part;
    int loc_exp = 0;
};

/// An affine K-homology product relation O_{lhs[0]} O_{lhs[1]} = sum of rhs terms.
struct RelationFile {
    int n = 0;
    std::string kind;
    std::vector<std::string> lhs;
    std::vector<RelationTerm> rhs;
    std::string notes;
};

/// Parses and validates: rank, kind "affine-k-product", partitions and coefficients.
RelationFile parse_relation(const nlohmann::json& j);
RelationFile load_relation(const std::string& path);

/// Right-hand side as an AffineCombo; a factor Q^q in a coefficient becomes (O_{(n+1)})^{-q}.
AffineCombo relation_rhs(const RelationFile& rel);

/// Transports the relation through the Peterson map.
TransportedRelation transport_relation(const RelationFile& rel);

std::string format_relation(const TransportedRelation& rel);
nlohmann::ordered_json relation_to_json(const TransportedRelation& rel);

}  // namespace lgpet
