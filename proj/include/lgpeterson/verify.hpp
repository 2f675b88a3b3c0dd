#pragma once

// Exhaustive finite-range checks of the combinatorial statements the library
// relies on. Each check returns a CheckReport listing up to kMaxCounterexamples
// counterexamples; reports are deterministic for fixed inputs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lgpeterson/weyl.hpp"

namespace lgpet {

inline constexpr std::size_t kMaxCounterexamples = 10;

struct Counterexample {
    std::string input;
    std::string expected;
    std::string actual;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckReport {
    std::string name;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::int64_t cases = 0;
    std::int64_t failure_count = 0;
    std::vector<Counterexample> failures;

    bool passed() const noexcept { return failures.empty(); }
    /// Counts one case and records a counterexample unless `ok`.
    void expect(bool ok, std::string input, std::string expected, std::string actual);

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Deliberate faults used to show that a check is not vacuous.
enum class Mutation {
    none,
    drop_commutation_factor,  // u_{i*} u_{j*} = u_{(j+1)*} u_{i*}, without s_{n-1}
    identity_star,            // compare floor(v(l)) against u_l instead of u_{l*}
    kernel_no_shift,          // Phi(O_l) against Phi(O_{l^-}) without the Q^{-1}
};

struct VerifyBounds {
    int max_weight = 10;
    int max_len = 8;
    std::size_t bfs_cap = default_bfs_cap();
};

CheckReport check_bijection(int n, int max_weight, std::size_t bfs_cap = default_bfs_cap());
CheckReport check_decomposition(int n, int max_weight);
CheckReport check_bracket(int n, int max_weight);
CheckReport check_translation_steps(int n, int max_weight);
CheckReport check_commutations(int n, Mutation mutation = Mutation::none);
CheckReport check_mcr(int n, Mutation mutation = Mutation::none);
CheckReport check_kernel(int n, int max_weight, Mutation mutation = Mutation::none);
/// phi_grassmannian(x_l) = phi_index(l, 0).
CheckReport check_phi_consistency(int n, int max_weight);
CheckReport check_peterson_cosets(int n, int max_weight);
/// homology_transport is zero exactly for l_1 >= n+2 and for non-Peterson x_l.
CheckReport check_homology_limit(int n, int max_weight);
CheckReport check_length_oracle(int n, int max_len, std::size_t bfs_cap = default_bfs_cap());
CheckReport check_degree_reversal(int n, int max_weight);

/// Names accepted by run_suite, in run order.
const std::vector<std::string>& suite_names();

/// Runs one suite by name; throws InvalidArgument for unknown names.
CheckReport run_suite(const std::string& name, int n, const VerifyBounds& bounds);

/// Runs every suite (concurrently) and returns reports in suite_names() order.
std::vector<CheckReport> run_all(int n, const VerifyBounds& bounds);

std::string report_text(const CheckReport& r);
std::string report_json(const CheckReport& r);
std::string reports_json(const std::vector<CheckReport>& reports);

}  // namespace lgpet
