#pragma once

// End-to-end run: labels -> basis -> generators -> relations -> 1-dim reps.

#include "walg/catalogue.hpp"
#include "walg/onedim.hpp"

#include <optional>
#include <string>
#include <thread>

namespace walg {

enum class Mode { Present, GeneratorsOnly, OneDimFast };

inline Mode parse_mode(const std::string &s) {
    if (s == "present") return Mode::Present;
    if (s == "generators-only") return Mode::GeneratorsOnly;
    if (s == "onedim-fast") return Mode::OneDimFast;
    throw InvalidInput("unknown mode '" + s + "' (present, generators-only, onedim-fast)");
}

inline std::string mode_name(Mode m) {
    switch (m) {
    case Mode::Present: return "present";
    case Mode::GeneratorsOnly: return "generators-only";
    case Mode::OneDimFast: return "onedim-fast";
    }
    return "";
}

struct RunConfig {
    char type = 'G';
    int rank = 2;
    std::string labels; // "1,0"; empty when orbit is given
    std::string orbit;
    Mode mode = Mode::Present;
    std::string out_dir = ".";
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::size_t max_candidates = 5000;
    GroebnerBounds solver;
    /// G2 only: negate e_{+-(a1+a2)} and e_{+-(3a1+a2)} to match GAP's basis.
    bool gap_signs = false;
};

/// The sign changes that turn our G2 Chevalley basis into GAP's.
inline const std::vector<int> &g2_gap_signs() {
    static const std::vector<int> s{1, 1, -1, 1, -1, 1};
    return s;
}

struct RunResult {
    RunConfig config;
    std::string orbit_name; // catalogue name if known
    DynkinLabels labels;
    LieAlgebraData lie;
    Grading grading;
    Sl2Triple triple;
    GradedBasis basis;
    std::vector<ThetaGenerator> generators;
    std::optional<Presentation> presentation;
    std::optional<OneDimSystem> system;
    std::optional<SolutionSet> solutions;
};

inline DynkinLabels resolve_labels(const RunConfig &c, std::string &orbit_name) {
    if (!c.orbit.empty() && !c.labels.empty()) throw InvalidInput("give either labels or an orbit name, not both");
    if (!c.orbit.empty()) {
        const auto &entry = find_orbit(c.type, c.rank, c.orbit);
        orbit_name = entry.name;
        return DynkinLabels{entry.labels};
    }
    if (c.labels.empty()) throw InvalidInput("labels or an orbit name are required");
    DynkinLabels lab = parse_labels(c.labels);
    for (const auto &e : orbit_catalogue())
        if (e.type == c.type && e.rank == c.rank && e.labels == lab.d) orbit_name = e.name;
    return lab;
}

inline LieAlgebraData lie_algebra_for(const RunConfig &c) {
    LieAlgebraData L = chevalley_constants(build_root_system(c.type, c.rank));
    if (c.gap_signs) {
        if (c.type != 'G' || c.rank != 2) throw InvalidInput("the GAP sign dictionary is only known for G2");
        L = flip_root_signs(L, g2_gap_signs());
    }
    return L;
}

inline RunResult run_pipeline(const RunConfig &c) {
    RunResult R;
    R.config = c;
    R.labels = resolve_labels(c, R.orbit_name);
    R.lie = lie_algebra_for(c);
    if (static_cast<int>(R.labels.d.size()) != c.rank)
        throw InvalidInput("expected " + std::to_string(c.rank) + " labels, got " + std::to_string(R.labels.d.size()));
    R.grading = grading_from_labels(R.lie, R.labels);
    R.triple = build_triple(R.lie, R.grading, R.labels);
    R.basis = build_graded_basis(R.lie, R.grading, R.triple);
    verify_graded_basis(R.lie, R.triple, R.basis);

    PbwEngine engine = PbwEngine::quotient(R.basis);
    GeneratorOptions gopts;
    gopts.max_candidates = c.max_candidates;
    R.generators = compute_generators(R.basis, engine, gopts, R.basis.ledger);
    if (c.mode == Mode::GeneratorsOnly) return R;

    RelationOptions ropts;
    ropts.threads = c.threads;
    if (c.mode == Mode::OneDimFast) {
        ropts.only = onedim_pairs(R.basis);
        if (ropts.only.empty()) ropts.only.push_back({0, 0}); // nothing to compute
    }
    R.presentation = build_presentation(R.basis, R.generators, ropts);
    R.system = build_system(*R.presentation, R.basis);
    R.solutions = solve_system(*R.system, c.solver);
    for (const auto &sol : R.solutions->rational)
        verify_representation(*R.presentation, representation_from_solution(sol, *R.system, R.basis));
    return R;
}

} // namespace walg
