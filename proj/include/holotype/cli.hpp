#pragma once

#include "holotype/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace holotype::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

namespace detail {

inline void emit(const Json& doc, const std::string& out_path, std::ostream& out)
{
    if (out_path.empty())
        out << doc.dump(2) << '\n';
    else
        write_json_file(out_path, doc);
}

template <typename T>
T require(const std::optional<T>& value, const char* flag, const std::string& kind)
{
    if (!value) throw Error("'" + kind + "' needs " + flag);
    return *value;
}

inline Metric load_metric(const std::string& path, std::size_t dim)
{
    if (path.empty()) return Metric::identity(dim);
    const auto doc = read_json_file(path);
    if (!doc.is_object() || !doc.contains("gram")) throw Error("metric document needs \"gram\"");
    Metric g(matrix_from_json(doc["gram"]));
    if (g.dim() != dim) throw Error("metric size does not match algebra dimension");
    return g;
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

} // namespace detail

/// Runs the command line; returns the process exit status.
/// 0 success, 1 suite failure or predicate false, 2 usage or input error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Holomorphic type of left-invariant almost complex structures on Lie algebras", "holotype"};
    app.require_subcommand(1);

    std::optional<std::size_t> n, q, p, dim;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    std::string alg_path, acs_path, metric_path, out_path, report_path;

    auto* build = app.add_subcommand("build", "Emit an algebra or almost complex structure as JSON");
    std::string kind;
    build->add_option("kind", kind,
                      "thurston | heisenberg | milnor | abelian | kim-acs | lemma-acs | compatible-acs | pairing-acs | random-acs")
        ->required();
    build->add_option("--n", n, "Thurston index (dimension 2n+2); for milnor the half dimension");
    build->add_option("--q", q, "Heisenberg q");
    build->add_option("--p", p, "Heisenberg p");
    build->add_option("--dim", dim, "Dimension for abelian, pairing-acs and random-acs");
    build->add_option("--seed", seed, "Seed for sampled structures");
    build->add_option("--out", out_path, "Output path (default: standard output)");

    auto* type = app.add_subcommand("type", "Holomorphic type, Nijenhuis space and minimal IJ-subalgebra");
    type->add_option("--alg", alg_path, "Algebra JSON")->required();
    type->add_option("--acs", acs_path, "Almost complex structure JSON")->required();
    type->add_option("--out", out_path, "Also write the result as JSON");

    auto* check = app.add_subcommand("check", "Compatibility, symplectic and block-form predicates");
    std::string predicate = "symplectic";
    check->add_option("--alg", alg_path, "Algebra JSON")->required();
    check->add_option("--acs", acs_path, "Almost complex structure JSON")->required();
    check->add_option("--metric", metric_path, "Metric JSON {\"gram\": [[...]]} (default: identity)");
    check->add_option("--predicate", predicate, "Predicate deciding the exit status")
        ->check(CLI::IsMember({"compatible", "symplectic", "block-form", "integrable"}));
    check->add_option("--out", out_path, "Also write the result as JSON");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "thurston-theorem | lemma-equivalence | milnor-integrable | type-t | algebra-sanity")->required();
    verify->add_option("--n", n, "n parameter");
    verify->add_option("--q", q, "Heisenberg q");
    verify->add_option("--p", p, "Heisenberg p");
    verify->add_option("--samples", samples, "Random samples per run");
    verify->add_option("--seed", seed, "Base seed");
    verify->add_option("--report", report_path, "Write the JSON report here");

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*build) {
            Json doc;
            if (kind == "thurston") doc = algebra_to_json(thurston(detail::require(n, "--n", kind)));
            else if (kind == "heisenberg") doc = algebra_to_json(gen_heisenberg(detail::require(q, "--q", kind), detail::require(p, "--p", kind)));
            else if (kind == "milnor") doc = algebra_to_json(milnor(2 * detail::require(n, "--n", kind)));
            else if (kind == "abelian") doc = algebra_to_json(abelian(detail::require(dim, "--dim", kind)));
            else if (kind == "kim-acs") doc = acs_to_json(kim_acs(detail::require(n, "--n", kind)));
            else if (kind == "lemma-acs") doc = acs_to_json(sample_lemma_family(detail::require(n, "--n", kind), seed));
            else if (kind == "compatible-acs") doc = acs_to_json(sample_compatible(2 * detail::require(n, "--n", kind) + 2, seed));
            else if (kind == "pairing-acs") doc = acs_to_json(standard_pairing(detail::require(dim, "--dim", kind)));
            else if (kind == "random-acs") doc = acs_to_json(random_acs(detail::require(dim, "--dim", kind), seed));
            else throw Error("unknown build kind '" + kind + "'");
            detail::emit(doc, out_path, out);
            return kSuccess;
        }

        if (*type) {
            const auto L = algebra_from_json(read_json_file(alg_path));
            const auto J = acs_from_json(read_json_file(acs_path));
            if (L.dim() != J.dim()) throw Error("algebra and almost complex structure dimensions differ");
            if (L.dim() % 2 != 0) throw Error("algebra dimension must be even");
            const auto ln = nijenhuis_space(L, J);
            const auto minimal = minimal_ij_subalgebra(L, J);
            const auto t = holomorphic_type(L, J);
            out << "holomorphic_type: " << t << '\n'
                << "nijenhuis_dim: " << ln.dim() << '\n'
                << "minimal_ij_dim: " << minimal.dim() << '\n'
                << "minimal_ij_basis: " << matrix_to_json(minimal.basis()).dump() << '\n';
            if (!out_path.empty())
                write_json_file(out_path, {{"holomorphic_type", t},
                                           {"nijenhuis_space", subspace_to_json(ln)},
                                           {"minimal_ij_subalgebra", subspace_to_json(minimal)}});
            return kSuccess;
        }

        if (*check) {
            const auto L = algebra_from_json(read_json_file(alg_path));
            const auto J = acs_from_json(read_json_file(acs_path));
            if (L.dim() != J.dim()) throw Error("algebra and almost complex structure dimensions differ");
            const auto g = detail::load_metric(metric_path, L.dim());
            Json result;
            result["compatible"] = is_compatible(g, J);
            result["symplectic"] = is_symplectic(L, g, J);
            result["integrable"] = is_integrable(L, J);
            if (L.dim() >= 4) result["block-form"] = block_form_check(J, L.dim() / 2 - 1);
            for (const auto& [key, value] : result.items()) out << key << ": " << detail::yes_no(value.get<bool>()) << '\n';
            if (!out_path.empty()) write_json_file(out_path, result);
            if (!result.contains(predicate)) throw Error("predicate '" + predicate + "' needs dimension at least 4");
            return result[predicate].get<bool>() ? kSuccess : kFailure;
        }

        SuiteConfig cfg;
        cfg.suite = suite;
        const bool sanity = suite == "algebra-sanity";
        cfg.n = n.value_or(sanity ? 5 : 1);
        cfg.q = q.value_or(sanity ? 4 : 1);
        cfg.p = p.value_or(sanity ? 4 : 1);
        cfg.samples = samples;
        cfg.seed = seed;
        const auto report = run_suite(cfg);
        out << "suite " << report.suite << ": " << (report.passed ? "passed" : "FAILED") << " (" << report.samples_run
            << " evaluations, " << report.failures.size() << " failures, seed " << report.seed << ")\n";
        for (const auto& f : report.failures)
            out << "  failure at sample " << f.sample_index << ": " << f.observed.dump() << '\n';
        if (!report_path.empty()) write_json_file(report_path, report_to_json(report));
        return report.passed ? kSuccess : kFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace holotype::cli
