#pragma once

#include "holotype/json_io.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace holotype {

inline constexpr std::array<std::string_view, 5> kSuiteNames = {
    "thurston-theorem", "lemma-equivalence", "milnor-integrable", "type-t", "algebra-sanity"};

/// Parameters of a verification run. `n` is the Thurston index for the
/// Thurston suites, half the dimension for milnor-integrable, and the largest
/// Thurston index for algebra-sanity. (q, p) select the Heisenberg factor.
struct SuiteConfig {
    std::string suite;
    std::size_t n = 1;
    std::size_t q = 1;
    std::size_t p = 1;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
};

struct SampleOutcome {
    bool ok = true;
    Json seed_material;
    Json expected;
    Json observed;
};

struct FailureRecord {
    std::size_t sample_index;
    Json seed_material;
    Json expected;
    Json observed;
};

struct VerificationReport {
    std::string suite;
    Json parameters;
    std::uint64_t seed = 0;
    std::size_t samples_run = 0;
    bool passed = true;
    std::vector<FailureRecord> failures;
};

inline Json report_to_json(const VerificationReport& r)
{
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"sample_index", f.sample_index},
                            {"seed_material", f.seed_material},
                            {"expected", f.expected},
                            {"observed", f.observed}});
    return {{"suite", r.suite},
            {"parameters", r.parameters},
            {"seed", r.seed},
            {"samples_run", r.samples_run},
            {"passed", r.passed},
            {"failures", failures}};
}

/// Evaluates every sample (no early exit) and records each failure.
inline VerificationReport run_samples(const std::string& suite, Json parameters, std::uint64_t seed, std::size_t count,
                                      const std::function<SampleOutcome(std::size_t)>& evaluate)
{
    VerificationReport report{suite, std::move(parameters), seed, count, true, {}};
    for (std::size_t i = 0; i < count; ++i) {
        auto outcome = evaluate(i);
        if (!outcome.ok)
            report.failures.push_back({i, std::move(outcome.seed_material), std::move(outcome.expected), std::move(outcome.observed)});
    }
    report.passed = report.failures.empty();
    return report;
}

namespace suites {

inline std::string hex(std::uint64_t v)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string s = "0x";
    for (int shift = 60; shift >= 0; shift -= 4) s += digits[(v >> shift) & 0xf];
    return s;
}

inline Json random_material(const SuiteConfig& cfg, std::size_t index)
{
    return {{"seed", cfg.seed}, {"sample_index", index}, {"stream_seed", hex(sample_stream_seed(cfg.seed, index))}};
}

/// Independent sub-streams of one sample for its secondary draws.
inline std::uint64_t sub_stream(std::uint64_t stream, std::uint64_t which) { return splitmix64(stream + which); }

/// H(q, p), doubled when q is odd so the summed q is even.
inline LieAlgebra heisenberg_product(std::size_t q, std::size_t p)
{
    const auto h = gen_heisenberg(q, p);
    return q % 2 == 0 ? h : direct_sum(h, h);
}

inline bool is_two_step_nilpotent(const LieAlgebra& L)
{
    const auto derived = commutator_ideal(L).basis_vectors();
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (const auto& v : derived)
            if (!is_zero_vector(bracket(L, unit(L.dim(), i), v))) return false;
    return true;
}

struct TheoremObservation {
    bool symplectic;
    bool block_form;
    std::size_t nijenhuis_dim;
    bool ln_is_ij;
    std::size_t type;
};

inline TheoremObservation observe_theorem(const LieAlgebra& L, const AlmostComplexStructure& J, std::size_t n)
{
    const auto ln = nijenhuis_space(L, J);
    return {is_symplectic(L, Metric::identity(L.dim()), J), block_form_check(J, n), ln.dim(),
            is_ij_subalgebra(L, J, ln), holomorphic_type(L, J)};
}

inline SampleOutcome theorem_outcome(const LieAlgebra& L, const AlmostComplexStructure& J, std::size_t n, Json material)
{
    const auto o = observe_theorem(L, J, n);
    SampleOutcome out;
    out.seed_material = std::move(material);
    out.expected = {{"symplectic", true}, {"block_form", true}, {"nijenhuis_dim", 2 * n}, {"ln_is_ij_subalgebra", true}, {"holomorphic_type", 1}};
    out.observed = {{"symplectic", o.symplectic}, {"block_form", o.block_form}, {"nijenhuis_dim", o.nijenhuis_dim}, {"ln_is_ij_subalgebra", o.ln_is_ij}, {"holomorphic_type", o.type}};
    out.ok = out.expected == out.observed;
    if (!out.ok) out.observed["matrix"] = matrix_to_json(J.matrix());
    return out;
}

inline std::vector<std::pair<std::string, AlmostComplexStructure>> theorem_fixed_cases(std::size_t n)
{
    std::vector<std::pair<std::string, AlmostComplexStructure>> cases;
    cases.emplace_back("kim", kim_acs(n));
    std::size_t k = 0;
    for (auto& J : handcrafted_lemma_cases(n)) cases.emplace_back("handcrafted-" + std::to_string(k++), std::move(J));
    return cases;
}

/// Per random index: one A = R D R^T structure and one twisted structure
/// (non-symmetric A). Fixed cases follow the random ones.
inline SampleOutcome thurston_theorem_sample(const SuiteConfig& cfg, std::size_t index)
{
    const auto L = thurston(cfg.n);
    if (index < cfg.samples) {
        const auto stream = sample_stream_seed(cfg.seed, index);
        auto first = theorem_outcome(L, sample_lemma_family(cfg.n, stream), cfg.n, random_material(cfg, index));
        if (!first.ok) return first;
        auto twisted = theorem_outcome(L, sample_twisted_lemma_family(cfg.n, sub_stream(stream, 1)), cfg.n, random_material(cfg, index));
        twisted.seed_material["variant"] = "twisted";
        return twisted;
    }
    auto cases = theorem_fixed_cases(cfg.n);
    auto& [name, J] = cases.at(index - cfg.samples);
    return theorem_outcome(L, J, cfg.n, {{"case", name}});
}

struct LemmaObservation {
    bool symplectic;
    bool block_form;
    bool coefficient_conditions;
};

inline LemmaObservation observe_lemma(const LieAlgebra& L, const AlmostComplexStructure& J, std::size_t n)
{
    return {is_symplectic(L, Metric::identity(L.dim()), J), block_form_check(J, n), lemma_coefficient_conditions(J, n)};
}

inline Json lemma_json(const LemmaObservation& o)
{
    return {{"symplectic", o.symplectic}, {"block_form", o.block_form}, {"coefficient_conditions", o.coefficient_conditions}};
}

/// Random compatible structures are generically not symplectic, so each
/// index also draws a structure that must be symplectic (A = R D R^T) and one
/// in block form with an unconstrained orthogonal A.
inline SampleOutcome lemma_equivalence_sample(const SuiteConfig& cfg, std::size_t index)
{
    const auto L = thurston(cfg.n);
    SampleOutcome out;
    if (index < cfg.samples) {
        const auto stream = sample_stream_seed(cfg.seed, index);
        out.seed_material = random_material(cfg, index);
        const auto compatible = observe_lemma(L, sample_compatible(2 * cfg.n + 2, stream), cfg.n);
        const auto family = observe_lemma(L, sample_lemma_family(cfg.n, sub_stream(stream, 1)), cfg.n);
        const auto blocky = observe_lemma(L, sample_block_orthogonal(cfg.n, sub_stream(stream, 2)), cfg.n);
        auto equivalent = [](const LemmaObservation& o) { return o.symplectic == o.block_form && o.symplectic == o.coefficient_conditions; };
        out.ok = equivalent(compatible) && equivalent(family) && family.symplectic && equivalent(blocky);
        out.expected = {{"compatible", "symplectic == block_form == coefficient_conditions"},
                        {"lemma_family", lemma_json({true, true, true})},
                        {"block_orthogonal", "symplectic == block_form == coefficient_conditions"}};
        out.observed = {{"compatible", lemma_json(compatible)}, {"lemma_family", lemma_json(family)}, {"block_orthogonal", lemma_json(blocky)}};
        return out;
    }
    std::vector<std::tuple<std::string, AlmostComplexStructure, bool>> cases;
    cases.emplace_back("kim", kim_acs(cfg.n), true);
    std::size_t k = 0;
    for (auto& J : handcrafted_lemma_cases(cfg.n)) cases.emplace_back("handcrafted-" + std::to_string(k++), std::move(J), true);
    if (cfg.n >= 2) cases.emplace_back("rotation-b", rotation_b_case(cfg.n), false);
    const auto& [name, J, expect] = cases.at(index - cfg.samples);
    const auto o = observe_lemma(L, J, cfg.n);
    out.seed_material = {{"case", name}};
    out.expected = lemma_json({expect, expect, expect});
    out.observed = lemma_json(o);
    out.ok = out.expected == out.observed;
    return out;
}

inline std::size_t lemma_fixed_count(std::size_t n) { return 1 + handcrafted_lemma_cases(n).size() + (n >= 2 ? 1 : 0); }

inline SampleOutcome milnor_sample(const SuiteConfig& cfg, std::size_t index)
{
    const auto L = milnor(2 * cfg.n);
    const auto J = random_acs(L, sample_stream_seed(cfg.seed, index));
    SampleOutcome out;
    out.seed_material = random_material(cfg, index);
    out.expected = {{"nijenhuis_dim", 0}, {"holomorphic_type", cfg.n}};
    out.observed = {{"nijenhuis_dim", nijenhuis_space(L, J).dim()}, {"holomorphic_type", holomorphic_type(L, J)}};
    out.ok = out.expected == out.observed;
    return out;
}

inline Json type_t_json(const LieAlgebra& L, const AlmostComplexStructure& J)
{
    const auto w = type_t_witness(L, J);
    const auto type = holomorphic_type(L, J);
    const bool ok = type >= 1 && w.is_ij_subalgebra && w.subspace.dim() + 2 <= L.dim();
    return {{"holomorphic_type", type}, {"witness_is_ij_subalgebra", w.is_ij_subalgebra}, {"witness_dim", w.subspace.dim()}, {"dim", L.dim()}, {"ok", ok}};
}

inline SampleOutcome type_t_sample(const SuiteConfig& cfg, std::size_t index)
{
    const auto stream = sample_stream_seed(cfg.seed, index);
    const auto T = thurston(cfg.n);
    const auto W = heisenberg_product(cfg.q, cfg.p);
    SampleOutcome out;
    out.seed_material = random_material(cfg, index);
    out.observed = {{"thurston", type_t_json(T, sample_compatible(T.dim(), stream))},
                    {"heisenberg_product", type_t_json(W, sample_compatible(W.dim(), sub_stream(stream, 1)))}};
    out.expected = "holomorphic_type >= 1, witness is an IJ-subalgebra, witness_dim <= dim - 2";
    out.ok = out.observed["thurston"]["ok"].get<bool>() && out.observed["heisenberg_product"]["ok"].get<bool>();
    return out;
}

struct SanityCheck {
    std::string name;
    std::function<Json()> observe;
    Json expected;
};

inline Json algebra_facts(const LieAlgebra& L)
{
    const auto v = validate(L);
    return {{"valid", static_cast<bool>(v)}, {"dim", L.dim()}, {"commutator_dim", commutator_ideal(L).dim()}};
}

inline std::vector<SanityCheck> sanity_checks(const SuiteConfig& cfg)
{
    std::vector<SanityCheck> checks;
    for (std::size_t n = 1; n <= cfg.n; ++n)
        checks.push_back({"thurston(" + std::to_string(n) + ")",
                          [n] {
                              const auto L = thurston(n);
                              auto facts = algebra_facts(L);
                              facts["two_step_nilpotent"] = is_two_step_nilpotent(L);
                              return facts;
                          },
                          {{"valid", true}, {"dim", 2 * n + 2}, {"commutator_dim", n}, {"two_step_nilpotent", true}}});
    for (std::size_t q = 1; q <= cfg.q; ++q)
        for (std::size_t p = 1; p <= cfg.p; ++p)
            checks.push_back({"gen_heisenberg(" + std::to_string(q) + "," + std::to_string(p) + ")",
                              [q, p] { return algebra_facts(gen_heisenberg(q, p)); },
                              {{"valid", true}, {"dim", 2 * q * p + q}, {"commutator_dim", q * p}}});
    for (std::size_t k = 1; k <= cfg.n + 1; ++k)
        checks.push_back({"milnor(" + std::to_string(2 * k) + ")",
                          [k] { return algebra_facts(milnor(2 * k)); },
                          {{"valid", true}, {"dim", 2 * k}, {"commutator_dim", 2 * k - 1}}});
    checks.push_back({"abelian(" + std::to_string(2 * cfg.n + 2) + ")",
                      [d = 2 * cfg.n + 2] { return algebra_facts(abelian(d)); },
                      {{"valid", true}, {"dim", 2 * cfg.n + 2}, {"commutator_dim", 0}}});
    checks.push_back({"direct_sum(gen_heisenberg(1,1), gen_heisenberg(1,1))",
                      [] { return algebra_facts(direct_sum(gen_heisenberg(1, 1), gen_heisenberg(1, 1))); },
                      {{"valid", true}, {"dim", 6}, {"commutator_dim", 2}}});
    return checks;
}

inline SampleOutcome sanity_sample(const SuiteConfig& cfg, std::size_t index)
{
    auto checks = sanity_checks(cfg);
    auto& check = checks.at(index);
    SampleOutcome out;
    out.seed_material = {{"case", check.name}};
    out.expected = check.expected;
    out.observed = check.observe();
    out.ok = out.expected == out.observed;
    return out;
}

} // namespace suites

inline void validate_config(const SuiteConfig& cfg)
{
    if (std::find(kSuiteNames.begin(), kSuiteNames.end(), cfg.suite) == kSuiteNames.end())
        throw Error("unknown suite '" + cfg.suite + "'");
    if (cfg.samples < 1) throw Error("samples must be at least 1");
    if (cfg.n < 1) throw Error("n must be at least 1");
    if (cfg.q < 1) throw Error("q must be at least 1");
}

/// Number of evaluations a run performs: random samples plus fixed cases.
inline std::size_t evaluation_count(const SuiteConfig& cfg)
{
    if (cfg.suite == "thurston-theorem") return cfg.samples + suites::theorem_fixed_cases(cfg.n).size();
    if (cfg.suite == "lemma-equivalence") return cfg.samples + suites::lemma_fixed_count(cfg.n);
    if (cfg.suite == "algebra-sanity") return suites::sanity_checks(cfg).size();
    return cfg.samples;
}

/// Runs one evaluation of a suite. Depends only on (cfg, index), which is
/// what makes a failure record replayable.
inline SampleOutcome evaluate_sample(const SuiteConfig& cfg, std::size_t index)
{
    validate_config(cfg);
    if (cfg.suite == "thurston-theorem") return suites::thurston_theorem_sample(cfg, index);
    if (cfg.suite == "lemma-equivalence") return suites::lemma_equivalence_sample(cfg, index);
    if (cfg.suite == "milnor-integrable") return suites::milnor_sample(cfg, index);
    if (cfg.suite == "type-t") return suites::type_t_sample(cfg, index);
    return suites::sanity_sample(cfg, index);
}

inline Json suite_parameters(const SuiteConfig& cfg)
{
    Json params = {{"samples", cfg.samples}};
    if (cfg.suite == "type-t" || cfg.suite == "algebra-sanity") {
        params["n"] = cfg.n;
        params["q"] = cfg.q;
        params["p"] = cfg.p;
    } else {
        params["n"] = cfg.n;
    }
    return params;
}

inline VerificationReport run_suite(const SuiteConfig& cfg)
{
    validate_config(cfg);
    return run_samples(cfg.suite, suite_parameters(cfg), cfg.seed, evaluation_count(cfg),
                       [&cfg](std::size_t index) { return evaluate_sample(cfg, index); });
}

} // namespace holotype
