#include "lgpeterson/verify.hpp"

#include <future>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "lgpeterson/error.hpp"
#include "lgpeterson/peterson.hpp"
#include "lgpeterson/shapes.hpp"

namespace lgpet {

namespace {

template <class T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string str(const QuantumIndex& q) {
    std::ostringstream os;
    os << "Q^" << q.q_exp << " O" << q.mu;
    return os.str();
}

std::string str(const HomologyImage& h) { return h.is_zero() ? std::string("0") : str(*h.value); }

CheckReport make_report(std::string name, std::vector<std::pair<std::string, std::int64_t>> params) {
    CheckReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    return r;
}

AffineElement finite_times_translation(const SignedPermutation& w, const LatticeVector& xi) {
    return multiply(AffineElement::finite(w), AffineElement::translation(xi));
}

}  // namespace

void CheckReport::expect(bool ok, std::string input, std::string expected, std::string actual) {
    ++cases;
    if (ok) return;
    ++failure_count;
    if (failures.size() < kMaxCounterexamples) {
        failures.push_back({std::move(input), std::move(expected), std::move(actual)});
    }
}

CheckReport check_bijection(int n, int max_weight, std::size_t bfs_cap) {
    auto rep = make_report("bijection", {{"n", n}, {"max_weight", max_weight}});
    const RootSystemC sys(n);

    // One level deeper so every x s_i of an element of length <= max_weight is present.
    const auto all = bfs_enumerate(sys, max_weight + 1, bfs_cap);
    std::unordered_map<AffineElement, int, AffineElementHash> dist;
    for (const auto& e : all) dist.emplace(e.element, e.length);

    auto bfs_grassmannian = [&](const AffineElement& x, int d) {
        for (int i = 1; i <= n; ++i) {
            auto it = dist.find(multiply(x, simple_reflection(sys, i)));
            if (it == dist.end() || it->second != d + 1) return false;
        }
        return true;
    };

    std::map<int, std::int64_t> grass_count;
    for (const auto& e : all) {
        if (e.length <= max_weight && bfs_grassmannian(e.element, e.length)) ++grass_count[e.length];
    }
    std::map<int, std::int64_t> part_count;
    const auto parts = enumerate_pc(sys, max_weight);
    for (const auto& p : parts) ++part_count[p.weight()];

    for (int len = 0; len <= max_weight; ++len) {
        rep.expect(grass_count[len] == part_count[len], "length " + std::to_string(len),
                   std::to_string(grass_count[len]) + " Grassmannian elements",
                   std::to_string(part_count[len]) + " partitions");
    }

    std::set<AffineElement> images;
    for (const auto& p : parts) {
        const auto x = x_of(p);
        auto it = dist.find(x);
        const bool found = it != dist.end();
        rep.expect(found && it->second == p.weight() && bfs_grassmannian(x, it->second), str(p),
                   "Grassmannian of length " + std::to_string(p.weight()),
                   found ? "length " + std::to_string(it->second) +
                               (bfs_grassmannian(x, it->second) ? "" : ", not Grassmannian")
                         : "not reached by BFS");
        rep.expect(images.insert(x).second, str(p), "distinct x_lambda", "collides: " + str(x));
    }
    return rep;
}

CheckReport check_decomposition(int n, int max_weight) {
    auto rep = make_report("decomposition", {{"n", n}, {"max_weight", max_weight}});
    for (const auto& p : enumerate_pc(RootSystemC(n), max_weight)) {
        const auto x = x_of(p);
        const auto y = finite_times_translation(v_of(p), -xi_of(p));
        rep.expect(x == y, str(p), str(x), str(y));
    }
    return rep;
}

CheckReport check_bracket(int n, int max_weight) {
    auto rep = make_report("bracket", {{"n", n}, {"max_weight", max_weight}});
    for (const auto& p : enumerate_pc(RootSystemC(n), max_weight)) {
        const auto b = bracket_xi(p);
        rep.expect(b == p.num_parts(), str(p), std::to_string(p.num_parts()), std::to_string(b));
    }
    return rep;
}

CheckReport check_translation_steps(int n, int max_weight) {
    auto rep = make_report("translation_steps", {{"n", n}, {"max_weight", max_weight}});
    for (const auto& p : enumerate_pc(RootSystemC(n), max_weight)) {
        if (p.is_empty()) continue;
        const auto diff = xi_of(p) - xi_of(remove_first_row(p));
        if (p.first() <= n + 1) {
            // Index of eps_r taken modulo n, so r = 0 means eps_n.
            int r = p.num_parts() % n;
            if (r == 0) r = n;
            const auto expected = LatticeVector::unit(n, r);
            rep.expect(diff == expected, str(p), str(expected), str(diff));
        } else {
            bool ok = false;
            for (int i = 1; i <= n - 1; ++i) ok = ok || diff == LatticeVector::unit(n, i);
            rep.expect(ok, str(p), "eps_i with 1 <= i <= n-1", str(diff));
        }
    }
    return rep;
}

CheckReport check_commutations(int n, Mutation mutation) {
    auto rep = make_report("commutations", {{"n", n}});
    const RootSystemC sys(n);
    auto u_star = [&](int k) { return u_of_index(sys, n + 1 - k); };

    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i; j <= n - 1; ++j) {
            const auto lhs = u_star(i) * u_star(j);
            auto rhs = u_star(j + 1) * u_star(i);
            if (mutation != Mutation::drop_commutation_factor) {
                rhs = rhs * SignedPermutation::generator(n, n - 1);
            }
            rep.expect(lhs == rhs, "u_{i*}u_{j*}, i=" + std::to_string(i) + " j=" + std::to_string(j),
                       str(rhs), str(lhs));
        }
    }
    for (int i = 2; i <= n; ++i) {
        const auto lhs = v_of_index(sys, n + 1) * u_star(i);
        const auto rhs = u_star(i - 1) * v_of_index(sys, n + 2);
        rep.expect(lhs == rhs, "v_{n+1}u_{i*}, i=" + std::to_string(i), str(rhs), str(lhs));
    }
    for (int i = 1; i <= n; ++i) {
        const auto lhs = v_of_index(sys, i);
        const auto rhs = u_star(i) * v_of_index(sys, n + 1);
        rep.expect(lhs == rhs, "v_i = u_{i*}v_{n+1}, i=" + std::to_string(i), str(rhs), str(lhs));
    }
    return rep;
}

CheckReport check_mcr(int n, Mutation mutation) {
    auto rep = make_report("mcr", {{"n", n}});
    const RootSystemC sys(n);
    std::set<SignedPermutation> reps;
    for (const auto& mu : enumerate_sp(sys)) {
        const auto floor_v = min_coset_rep(v_of(mu.to_pc()));
        const auto target = mutation == Mutation::identity_star ? u_of(mu) : u_of(star(mu));
        rep.expect(floor_v == target, str(mu), str(target), str(floor_v));

        const auto u = u_of(mu);
        bool minimal = true;
        for (int i = 1; i < n; ++i) minimal = minimal && !u.has_right_descent(i);
        rep.expect(minimal, "u" + str(mu), "no right descent in s_1..s_{n-1}", "has a descent");
        rep.expect(reps.insert(u).second, "u" + str(mu), "distinct u_mu", "collides");
    }
    return rep;
}

CheckReport check_kernel(int n, int max_weight, Mutation mutation) {
    auto rep = make_report("kernel", {{"n", n}, {"max_weight", max_weight}});
    const PetersonContext ctx(n);
    const int shift = mutation == Mutation::kernel_no_shift ? 0 : 1;

    const auto distinguished = phi_grassmannian(ctx, x_of(ctx.distinguished()));
    rep.expect(distinguished == QuantumIndex{-1, StrictPartition::empty(n)}, "Phi(O_(n+1))", "Q^-1 O()",
               str(distinguished));

    for (const auto& p : enumerate_pc(ctx.system(), max_weight)) {
        if (p.first() < n + 1) continue;
        const auto minus = remove_first_row(p);
        for (std::int64_t k = -2; k <= 2; ++k) {
            const auto a = phi_index(ctx, p, k);
            const auto b = phi_index(ctx, minus, k - shift);
            rep.expect(a == b, str(p) + " k=" + std::to_string(k), str(b), str(a));
        }
        // Same identity through the Grassmannian element x_l = v(l) t_{-xi(l)}.
        const auto a = phi_grassmannian(ctx, x_of(p));
        auto b = phi_grassmannian(ctx, x_of(minus));
        b.q_exp -= shift;
        rep.expect(a == b, str(p) + " via x_lambda", str(b), str(a));
    }
    return rep;
}

CheckReport check_phi_consistency(int n, int max_weight) {
    auto rep = make_report("phi_consistency", {{"n", n}, {"max_weight", max_weight}});
    const PetersonContext ctx(n);
    for (const auto& p : enumerate_pc(ctx.system(), max_weight)) {
        const auto a = phi_grassmannian(ctx, x_of(p));
        const auto b = phi_index(ctx, p, 0);
        rep.expect(a == b, str(p), str(b), str(a));
    }
    return rep;
}

CheckReport check_peterson_cosets(int n, int max_weight) {
    auto rep = make_report("peterson_cosets", {{"n", n}, {"max_weight", max_weight}});
    for (const auto& p : enumerate_pc(RootSystemC(n), max_weight)) {
        const bool expected = p.first() <= n + 1;
        const bool actual = is_peterson_rep(x_of(p));
        rep.expect(expected == actual, str(p), expected ? "Peterson" : "not Peterson",
                   actual ? "Peterson" : "not Peterson");
    }
    return rep;
}

CheckReport check_homology_limit(int n, int max_weight) {
    auto rep = make_report("homology", {{"n", n}, {"max_weight", max_weight}});
    const PetersonContext ctx(n);
    for (const auto& p : enumerate_pc(ctx.system(), max_weight)) {
        for (std::int64_t k = -1; k <= 1; ++k) {
            const auto img = homology_transport(ctx, p, k);
            const std::string in = str(p) + " k=" + std::to_string(k);
            if (p.first() >= n + 2) {
                rep.expect(img.is_zero(), in, "0", str(img));
            } else {
                const QuantumIndex expected{k - p.num_parts(), star(truncate(p))};
                rep.expect(!img.is_zero() && *img.value == expected, in, str(expected), str(img));
            }
            const bool peterson = is_peterson_rep(x_of(p));
            rep.expect(img.is_zero() == !peterson, in, peterson ? "nonzero" : "0", str(img));
        }
    }
    return rep;
}

CheckReport check_length_oracle(int n, int max_len, std::size_t bfs_cap) {
    auto rep = make_report("length_oracle", {{"n", n}, {"max_len", max_len}});
    for (const auto& e : bfs_enumerate(RootSystemC(n), max_len, bfs_cap)) {
        const int l = length(e.element);
        rep.expect(l == e.length, str(e.element), std::to_string(e.length), std::to_string(l));
    }
    return rep;
}

CheckReport check_degree_reversal(int n, int max_weight) {
    auto rep = make_report("degree_reversal", {{"n", n}, {"max_weight", max_weight}});
    const PetersonContext ctx(n);
    for (const auto& p : enumerate_pc(ctx.system(), max_weight)) {
        if (p.first() > n + 1) continue;
        for (std::int64_t k = -2; k <= 2; ++k) {
            rep.expect(degree_check(ctx, p, k), str(p) + " k=" + std::to_string(k), "degree sum 0",
                       "nonzero degree sum");
        }
    }
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "bijection", "length_oracle", "decomposition", "bracket",         "translation_steps", "commutations",
        "mcr",       "kernel",        "phi_consistency", "peterson_cosets", "homology",          "degree_reversal",
    };
    return names;
}

CheckReport run_suite(const std::string& name, int n, const VerifyBounds& b) {
    if (name == "bijection") return check_bijection(n, b.max_weight, b.bfs_cap);
    if (name == "length_oracle") return check_length_oracle(n, b.max_len, b.bfs_cap);
    if (name == "decomposition") return check_decomposition(n, b.max_weight);
    if (name == "bracket") return check_bracket(n, b.max_weight);
    if (name == "translation_steps") return check_translation_steps(n, b.max_weight);
    if (name == "commutations") return check_commutations(n);
    if (name == "mcr") return check_mcr(n);
    if (name == "kernel") return check_kernel(n, b.max_weight);
    if (name == "phi_consistency") return check_phi_consistency(n, b.max_weight);
    if (name == "peterson_cosets") return check_peterson_cosets(n, b.max_weight);
    if (name == "homology") return check_homology_limit(n, b.max_weight);
    if (name == "degree_reversal") return check_degree_reversal(n, b.max_weight);
    throw InvalidArgument("unknown suite: " + name);
}

std::vector<CheckReport> run_all(int n, const VerifyBounds& bounds) {
    RootSystemC sys(n);  // validate once before spawning work
    std::vector<std::future<CheckReport>> pending;
    for (const auto& name : suite_names()) {
        pending.push_back(std::async(std::launch::async, [name, n, bounds] { return run_suite(name, n, bounds); }));
    }
    std::vector<CheckReport> out;
    for (auto& f : pending) out.push_back(f.get());
    return out;
}

std::string report_text(const CheckReport& r) {
    std::ostringstream os;
    os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.name;
    for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
    os << ": " << r.cases << " cases, " << r.failure_count << " failures\n";
    for (const auto& f : r.failures) {
        os << "  counterexample " << f.input << ": expected " << f.expected << ", got " << f.actual << '\n';
    }
    return os.str();
}

namespace {

nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["passed"] = r.passed();
    j["cases"] = r.cases;
    j["failure_count"] = r.failure_count;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) {
        j["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    }
    return j;
}

}  // namespace

std::string report_json(const CheckReport& r) { return to_json(r).dump(2); }

std::string reports_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json j;
    bool all = true;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        all = all && r.passed();
        j["reports"].push_back(to_json(r));
    }
    j["passed"] = all;
    return j.dump(2);
}

}  // namespace lgpet
