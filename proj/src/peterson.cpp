#include "lgpeterson/peterson.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "lgpeterson/error.hpp"

namespace lgpet {

namespace {

void check_rank(const PetersonContext& ctx, int rank) {
    if (ctx.rank() != rank) {
        throw InvalidArgument("rank mismatch: context has rank " + std::to_string(ctx.rank()) +
                              ", argument has rank " + std::to_string(rank));
    }
}

int to_int_exponent(std::int64_t v) {
    if (v < INT32_MIN || v > INT32_MAX) throw std::overflow_error("Q exponent out of range");
    return static_cast<int>(v);
}

}  // namespace

JReduction j_reduce(const PetersonContext& ctx, const PartitionPC& lambda) {
    check_rank(ctx, lambda.rank());
    // Apply O_l - O_{(n+1)} O_{l^-} one generator at a time while the first row is >= n+1.
    int power = 0;
    PartitionPC cur = lambda;
    while (cur.first() >= ctx.rank() + 1) {
        cur = remove_first_row(cur);
        ++power;
    }
    return {power, StrictPartition(ctx.rank(), cur.parts())};
}

QuantumIndex phi_index(const PetersonContext& ctx, const PartitionPC& lambda, std::int64_t k) {
    check_rank(ctx, lambda.rank());
    return {k - lambda.num_parts(), star(truncate(lambda))};
}

QuantumCombo phi_combo(const PetersonContext& ctx, const AffineCombo& x) {
    check_rank(ctx, x.rank());
    QuantumCombo out(ctx.rank());
    for (const auto& [key, c] : x.terms()) {
        const auto img = phi_index(ctx, key.part, -static_cast<std::int64_t>(key.loc_exp));
        out.add_term(img.mu, to_novikov(c, to_int_exponent(img.q_exp)));
    }
    return out;
}

StrictPartition coset_rep_partition(const PetersonContext& ctx, const SignedPermutation& w) {
    check_rank(ctx, w.rank());
    for (const auto& mu : enumerate_sp(ctx.system())) {
        if (u_of(mu) == w) return mu;
    }
    std::ostringstream msg;
    msg << "element " << w << " is not of the form u_mu";
    throw InternalError(msg.str());
}

QuantumIndex phi_grassmannian(const PetersonContext& ctx, const AffineElement& x) {
    check_rank(ctx, x.rank());
    if (!is_grassmannian(x)) throw InvalidArgument("phi_grassmannian: element is not 0-Grassmannian");
    const auto q = bracket_projection(ctx.system(), x.translation_part());
    return {q, coset_rep_partition(ctx, min_coset_rep(x.finite_part()))};
}

TransportedRelation transport_product(const PetersonContext& ctx, const PartitionPC& lambda,
                                      const PartitionPC& mu, const AffineCombo& rhs) {
    check_rank(ctx, lambda.rank());
    check_rank(ctx, mu.rank());
    check_rank(ctx, rhs.rank());
    // Phi(O_l) Phi(O_m) = Q^{-l(l)-l(m)} O^{l*} O^{m*}; clear the Q power on both sides.
    const auto left = phi_index(ctx, lambda, 0);
    const auto right = phi_index(ctx, mu, 0);
    const int shift = to_int_exponent(-(left.q_exp + right.q_exp));

    TransportedRelation rel{left.mu, right.mu, QuantumCombo(ctx.rank()), {}};
    const auto image = phi_combo(ctx, rhs);
    for (const auto& [mu_out, c] : image.terms()) {
        rel.rhs.add_term(mu_out, q_shift(c, shift));
    }
    for (const auto& [mu_out, c] : rel.rhs.terms()) {
        for (const auto& [m, v] : c.terms()) {
            if (m.q < 0) {
                std::ostringstream w;
                w << "negative Q exponent " << m.q << " in the coefficient of O" << mu_out
                  << "; the input is probably not a product expansion";
                rel.warnings.push_back(w.str());
                break;
            }
        }
    }
    return rel;
}

HomologyImage homology_transport(const PetersonContext& ctx, const PartitionPC& lambda, std::int64_t k) {
    check_rank(ctx, lambda.rank());
    if (lambda.first() >= ctx.rank() + 2) return {};
    return {phi_index(ctx, lambda, k)};
}

bool degree_check(const PetersonContext& ctx, const PartitionPC& lambda, std::int64_t k) {
    const auto img = homology_transport(ctx, lambda, k);
    if (img.is_zero()) return true;
    const std::int64_t qdeg = ctx.q_degree();
    const std::int64_t source = lambda.weight() - k * qdeg;
    const std::int64_t target = img.value->q_exp * qdeg + img.value->mu.weight();
    return source + target == 0;
}

}  // namespace lgpet
