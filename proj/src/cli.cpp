#include "lgpeterson/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lgpeterson/error.hpp"
#include "lgpeterson/peterson.hpp"
#include "lgpeterson/textio.hpp"
#include "lgpeterson/verify.hpp"

namespace lgpet {

namespace {

struct Options {
    int n = 0;
    std::string partition;
    int loc_exp = 0;
    bool homology = false;
    bool diagram = false;
    std::string input;
    std::string format = "text";
    int max_weight = 10;
    int max_len = 8;
    std::string suite = "all";
    bool grassmannian_count = false;
};

std::string word_text(const std::vector<int>& word) {
    if (word.empty()) return "(empty)";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(word[i]);
    }
    return s;
}

int run_element(const Options& o, std::ostream& out) {
    const auto lambda = parse_partition(o.n, o.partition);
    const auto x = x_of(lambda);
    out << "partition: " << format_parts(lambda.parts()) << '\n';
    out << "finite part: " << x.finite_part() << '\n';
    out << "translation: " << x.translation_part() << '\n';
    out << "length: " << length(x) << '\n';
    out << "reduced word: " << word_text(reduced_word(x)) << '\n';
    out << "grassmannian: " << (is_grassmannian(x) ? "yes" : "no") << '\n';
    out << "peterson: " << (is_peterson_rep(x) ? "yes" : "no") << '\n';
    return kExitOk;
}

int run_map(const Options& o, std::ostream& out) {
    const PetersonContext ctx(o.n);
    const auto lambda = parse_partition(o.n, o.partition);
    const std::int64_t k = -static_cast<std::int64_t>(o.loc_exp);
    if (o.homology) {
        const auto h = homology_transport(ctx, lambda, k);
        out << format_homology(h) << '\n';
        if (o.diagram && !h.is_zero()) out << shifted_diagram(h.value->mu);
        return kExitOk;
    }
    const auto img = phi_index(ctx, lambda, k);
    out << format_index(img) << '\n';
    if (o.diagram) out << shifted_diagram(img.mu);
    return kExitOk;
}

int run_transport(const Options& o, std::ostream& out, std::ostream& err) {
    const auto rel = transport_relation(load_relation(o.input));
    for (const auto& w : rel.warnings) err << "warning: " << w << '\n';
    if (o.format == "json")
        out << relation_to_json(rel).dump(2) << '\n';
    else
        out << format_relation(rel) << '\n';
    return kExitOk;
}

int run_verify(const Options& o, std::ostream& out) {
    VerifyBounds bounds;
    bounds.max_weight = o.max_weight;
    bounds.max_len = o.max_len;
    if (o.n < 1) throw InvalidArgument("--n must be at least 1");
    std::vector<CheckReport> reports;
    if (o.suite == "all")
        reports = run_all(o.n, bounds);
    else
        reports.push_back(run_suite(o.suite, o.n, bounds));

    const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed(); });
    if (o.format == "json") {
        out << reports_json(reports) << '\n';
    } else {
        for (const auto& r : reports) out << report_text(r);
        out << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed") << '\n';
    }
    return failed == 0 ? kExitOk : kExitFailed;
}

int run_enumerate(const Options& o, std::ostream& out) {
    const RootSystemC sys(o.n);
    if (o.max_weight < 0) throw InvalidArgument("--max-weight must be non-negative");
    const auto parts = enumerate_pc(sys, o.max_weight);
    if (!o.grassmannian_count) {
        for (const auto& p : parts) out << format_parts(p.parts()) << '\n';
        return kExitOk;
    }
    std::map<int, std::int64_t> pc_count, bfs_count;
    for (const auto& p : parts) ++pc_count[p.weight()];
    for (const auto& e : bfs_enumerate(sys, o.max_weight)) {
        if (is_grassmannian(e.element)) ++bfs_count[e.length];
    }
    bool match = true;
    out << "length partitions grassmannian\n";
    for (int len = 0; len <= o.max_weight; ++len) {
        const auto a = pc_count[len];
        const auto b = bfs_count[len];
        match = match && a == b;
        out << len << ' ' << a << ' ' << b << '\n';
    }
    out << (match ? "counts agree" : "counts differ") << '\n';
    return match ? kExitOk : kExitFailed;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Affine type C Weyl group combinatorics and the K-Peterson map for LG(n)", "lgpet"};
    app.require_subcommand(1);
    Options o;

    auto* element = app.add_subcommand("element", "Show the affine Grassmannian element x_lambda");
    element->add_option("--n", o.n, "Rank")->required()->check(CLI::PositiveNumber);
    element->add_option("--partition", o.partition, "Partition, e.g. \"3,2\" or \"[]\"")->required();

    auto* map = app.add_subcommand("map", "Image of O_lambda * O_{(n+1)}^D under the Peterson map");
    map->add_option("--n", o.n, "Rank")->required()->check(CLI::PositiveNumber);
    map->add_option("--partition", o.partition, "Partition")->required();
    map->add_option("--loc-exp", o.loc_exp, "Exponent D of the localized class O_{(n+1)}");
    map->add_flag("--homology", o.homology, "Use the homology map instead");
    map->add_flag("--diagram", o.diagram, "Draw the target shifted diagram");

    auto* transport = app.add_subcommand("transport", "Transport an affine relation file");
    transport->add_option("--input", o.input, "Relation JSON file")->required();
    transport->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--n", o.n, "Rank")->required()->check(CLI::PositiveNumber);
    verify->add_option("--max-weight", o.max_weight, "Largest partition weight")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-len", o.max_len, "Largest length for the BFS length check")
        ->check(CLI::NonNegativeNumber);
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("--suite", o.suite, "Suite name or \"all\"")->check(CLI::IsMember(suites));
    verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* enumerate = app.add_subcommand("enumerate", "List partitions or compare counts against BFS");
    enumerate->add_option("--n", o.n, "Rank")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--max-weight", o.max_weight, "Largest weight")->required()->check(
        CLI::NonNegativeNumber);
    enumerate->add_flag("--grassmannian-count", o.grassmannian_count, "Compare per-length counts with BFS");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*element) return run_element(o, out);
        if (*map) return run_map(o, out);
        if (*transport) return run_transport(o, out, err);
        if (*verify) return run_verify(o, out);
        if (*enumerate) return run_enumerate(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitUsage;
}

}  // namespace lgpet
