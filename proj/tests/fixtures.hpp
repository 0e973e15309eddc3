#pragma once

// Shared setups for the unit tests.

#include "walg/pipeline.hpp"

#include <memory>
#include <random>

namespace walg::testing {

struct Case {
    LieAlgebraData L;
    Grading grading;
    Sl2Triple triple;
    GradedBasis B;
};

inline std::unique_ptr<Case> make_case(char type, int rank, const std::string &labels, bool gap_signs = false,
                                       const BasisOptions &opts = {}) {
    auto c = std::make_unique<Case>();
    c->L = chevalley_constants(build_root_system(type, rank));
    if (gap_signs) c->L = flip_root_signs(c->L, g2_gap_signs());
    const auto lab = parse_labels(labels);
    c->grading = grading_from_labels(c->L, lab);
    c->triple = build_triple(c->L, c->grading, lab);
    c->B = build_graded_basis(c->L, c->grading, c->triple, opts);
    return c;
}

/// G2, short-root orbit, GAP signs: the worked example.
inline const Case &g2_example() {
    static const auto c = make_case('G', 2, "1,0", true);
    return *c;
}

struct PresentedCase {
    std::unique_ptr<Case> base;
    std::vector<ThetaGenerator> generators;
    Presentation P;
};

inline std::unique_ptr<PresentedCase> present(std::unique_ptr<Case> c) {
    auto p = std::make_unique<PresentedCase>();
    p->base = std::move(c);
    PbwEngine engine = PbwEngine::quotient(p->base->B);
    p->generators = compute_generators(p->base->B, engine, {}, p->base->B.ledger);
    p->P = build_presentation(p->base->B, p->generators, {});
    return p;
}

inline const PresentedCase &g2_presented() {
    static const auto p = present(make_case('G', 2, "1,0", true));
    return *p;
}

inline std::vector<LinComb> theta_elements(const std::vector<ThetaGenerator> &gens) {
    std::vector<LinComb> out;
    for (const auto &g : gens) out.push_back(g.element);
    return out;
}

} // namespace walg::testing
