#pragma once

// The K-theoretic Peterson correspondence for LG(n):
//
//   O^Gr_l (O^Gr_{(n+1)})^{-k}  |->  Q^{k - #parts(l)} O^{(l^{<=n})*}_LG
//
// together with the reduction modulo the first-row ideal, the form of the map on
// arbitrary Grassmannian elements w t_xi, transport of product relations, and the
// homology limit.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgpeterson/kring.hpp"
#include "lgpeterson/rootdata.hpp"
#include "lgpeterson/shapes.hpp"
#include "lgpeterson/weyl.hpp"

namespace lgpet {

class PetersonContext {
public:
    explicit PetersonContext(int rank) : sys_(rank) {}
    explicit PetersonContext(const RootSystemC& sys) : sys_(sys) {}

    const RootSystemC& system() const noexcept { return sys_; }
    int rank() const noexcept { return sys_.rank(); }
    /// The partition (n+1), whose class is inverted by localization.
    PartitionPC distinguished() const { return PartitionPC(rank(), {rank() + 1}); }
    /// deg(q) on the quantum cohomology side.
    int q_degree() const noexcept { return rank() + 1; }

private:
    RootSystemC sys_;
};

/// O_l == (O_{(n+1)})^power * O_remainder modulo J_LG(n).
struct JReduction {
    int power;
    StrictPartition remainder;

    friend bool operator==(const JReduction&, const JReduction&) = default;
};

/// Q^{q_exp} O^{mu}.
struct QuantumIndex {
    std::int64_t q_exp;
    StrictPartition mu;

    friend bool operator==(const QuantumIndex&, const QuantumIndex&) = default;
};

/// Image in quantum cohomology: empty means the class maps to zero.
struct HomologyImage {
    std::optional<QuantumIndex> value;

    bool is_zero() const noexcept { return !value.has_value(); }
    friend bool operator==(const HomologyImage&, const HomologyImage&) = default;
};

JReduction j_reduce(const PetersonContext& ctx, const PartitionPC& lambda);

/// Image of O_l * (O_{(n+1)})^{-k}.
QuantumIndex phi_index(const PetersonContext& ctx, const PartitionPC& lambda, std::int64_t k);

/// R(T)-linear extension of phi_index; a term with loc_exp d is O_l (O_{(n+1)})^d.
QuantumCombo phi_combo(const PetersonContext& ctx, const AffineCombo& x);

/// Image of O_x for a Grassmannian x = w t_xi: Q^{[xi]} O^{floor(w)}.
/// Throws InvalidArgument for non-Grassmannian x.
QuantumIndex phi_grassmannian(const PetersonContext& ctx, const AffineElement& x);

/// Strict partition mu with u_mu = w; w must be a minimal coset representative.
StrictPartition coset_rep_partition(const PetersonContext& ctx, const SignedPermutation& w);

/// Product relation O^{left} O^{right} = rhs in QK_T(LG(n)).
struct TransportedRelation {
    StrictPartition left;
    StrictPartition right;
    QuantumCombo rhs;
    std::vector<std::string> warnings;
};

/// Transports O_l O_m = rhs (an affine-side expansion supplied by the caller).
TransportedRelation transport_product(const PetersonContext& ctx, const PartitionPC& lambda,
                                      const PartitionPC& mu, const AffineCombo& rhs);

HomologyImage homology_transport(const PetersonContext& ctx, const PartitionPC& lambda, std::int64_t k);

/// Degree of sigma_l (sigma_{(n+1)})^{-k} plus degree of its image is zero.
/// Returns true for classes that map to zero.
bool degree_check(const PetersonContext& ctx, const PartitionPC& lambda, std::int64_t k);

}  // namespace lgpet
