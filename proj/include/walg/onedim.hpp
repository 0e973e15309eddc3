#pragma once

// One-dimensional representations: common zeros of the relations after the
// generators of nonzero t^e-weight are sent to 0.

#include "walg/basisbuilder.hpp"
#include "walg/polysys.hpp"
#include "walg/relations.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace walg {

struct OneDimSystem {
    std::vector<int> I;                 // generator indices of weight zero, in variable order
    std::vector<RelationKey> J;         // (j, k) with j < b and beta_k = -beta_j
    std::vector<Poly> equations;        // one per entry of J, in the variables T_i, i in I
    std::vector<std::string> names;     // "t3", ...

    int nvars() const { return static_cast<int>(I.size()); }
};

struct AlgebraicBranch {
    std::vector<std::optional<Rational>> fixed; // coordinates already determined
    int variable = 0;                           // position in I
    UPoly cofactor;                             // product of the non-linear factors
    std::vector<std::pair<Rational, Rational>> real_intervals;
    std::size_t count = 0; // solutions over C lying above this branch
};

struct SolutionSet {
    enum class Kind { Finite, PositiveDimensional };
    Kind kind = Kind::Finite;
    std::vector<std::vector<Rational>> rational; // coordinates in variable order
    std::vector<AlgebraicBranch> algebraic;
    std::size_t count_over_C = 0;
    std::vector<Poly> groebner;

    bool finite() const { return kind == Kind::Finite; }
};

/// Pairs (j, k) whose relations enter the system.
inline std::vector<RelationKey> onedim_pairs(const GradedBasis &B) {
    std::vector<RelationKey> J;
    for (int j = 0; j < B.b; ++j)
        for (int k = 0; k < B.r; ++k) {
            if (j == k) continue;
            Weight w = B.beta[k];
            for (int t = 0; t < B.te_dim(); ++t) w[t] += B.beta[j][t];
            if (lex_sign(w) == 0) J.push_back({j, k});
        }
    return J;
}

inline std::vector<int> zero_weight_indices(const GradedBasis &B) {
    std::vector<int> I;
    for (int i = 0; i < B.r; ++i)
        if (lex_sign(B.beta[i]) == 0) I.push_back(i);
    std::stable_sort(I.begin(), I.end(), [&](int a, int b) { return B.n[a] < B.n[b]; });
    return I;
}

/// Restriction of a relation to the weight-zero variables.
inline Poly restrict_relation(const WPolynomial &F, const std::vector<int> &I) {
    const int nv = static_cast<int>(I.size());
    std::map<int, int> pos;
    for (int v = 0; v < nv; ++v) pos[I[v]] = v;
    Poly p(nv);
    for (const auto &[w, c] : F.terms) {
        Monomial m(nv, 0);
        bool keep = true;
        for (std::size_t q = 0; q < w.size() && keep; ++q) {
            auto it = pos.find(letter(w, q));
            if (it == pos.end())
                keep = false;
            else
                ++m[it->second];
        }
        if (keep) p.add(m, c);
    }
    return p;
}

inline OneDimSystem build_system(const Presentation &P, const GradedBasis &B) {
    OneDimSystem S;
    S.I = zero_weight_indices(B);
    S.J = onedim_pairs(B);
    for (int i : S.I) S.names.push_back("t" + std::to_string(i + 1));
    for (const auto &[j, k] : S.J) {
        const WPolynomial *F = P.find(j, k);
        if (!F) throw InvariantFailure("onedim", "relation F_" + std::to_string(j + 1) + "," + std::to_string(k + 1) + " was not computed");
        Poly p = restrict_relation(*F, S.I);
        for (int v : p.support()) require(v < S.nvars(), "onedim", "restricted relation uses a foreign variable");
        S.equations.push_back(std::move(p));
    }
    return S;
}

namespace detail {

inline std::size_t count_solutions(const std::vector<Poly> &G, int nvars, const GroebnerBounds &bounds) {
    if (is_unit_ideal(G)) return 0;
    std::vector<Poly> rad = G;
    for (int v = 0; v < nvars; ++v) rad.push_back(from_upoly(squarefree_part(minimal_polynomial(G, nvars, v)), nvars, v));
    return standard_monomials(groebner_basis(rad, bounds), nvars).size();
}

inline void back_substitute(const std::vector<Poly> &G, int nvars, std::vector<std::optional<Rational>> fixed,
                            const GroebnerBounds &bounds, SolutionSet &out) {
    if (is_unit_ideal(G)) return;
    // last free variable in lex order carries the eliminant
    int v = -1;
    for (int w = nvars - 1; w >= 0; --w)
        if (!fixed[w]) {
            v = w;
            break;
        }
    if (v < 0) {
        for (const auto &g : G) require(g.is_zero(), "onedim", "back substitution left a nonzero constant");
        std::vector<Rational> sol;
        for (const auto &c : fixed) sol.push_back(*c);
        out.rational.push_back(sol);
        return;
    }
    UPoly elim;
    for (const auto &g : G) {
        auto sup = g.support();
        if (!g.is_zero() && sup.size() <= 1 && (sup.empty() || *sup.begin() == v)) {
            UPoly u = to_upoly(g, v);
            elim = elim.empty() ? u : upoly_gcd(elim, u);
        }
    }
    require(!elim.empty(), "onedim", "no eliminant for t" + std::to_string(v));
    elim = squarefree_part(elim);
    UPoly rest = elim;
    for (const Rational &root : rational_roots(elim)) {
        rest = divmod(rest, UPoly{-root, Rational(1)}).first;
        std::vector<Poly> sub;
        for (const auto &g : G) sub.push_back(g.substitute(v, root));
        auto next = fixed;
        next[v] = root;
        back_substitute(groebner_basis(sub, bounds), nvars, next, bounds, out);
    }
    if (degree(rest) >= 1) {
        AlgebraicBranch br;
        br.fixed = fixed;
        br.variable = v;
        br.cofactor = upoly_monic(rest);
        br.real_intervals = isolate_real_roots(br.cofactor, Rational(1, 1000));
        std::vector<Poly> with = G;
        with.push_back(from_upoly(br.cofactor, nvars, v));
        for (int w = 0; w < nvars; ++w)
            if (fixed[w]) {
                Poly lin = Poly::variable(nvars, w) - Poly::constant(nvars, *fixed[w]);
                with.push_back(lin);
            }
        auto branch_gb = groebner_basis(with, bounds);
        br.count = count_solutions(branch_gb, nvars, bounds);
        require(br.count > 0, "onedim", "irrational factor of the eliminant has no solutions above it");
        out.algebraic.push_back(std::move(br));
    }
}

} // namespace detail

inline SolutionSet solve_system(const OneDimSystem &S, const GroebnerBounds &bounds = {}) {
    SolutionSet out;
    const int nv = S.nvars();
    if (nv == 0) {
        bool consistent = std::all_of(S.equations.begin(), S.equations.end(), [](const Poly &p) { return p.is_zero(); });
        if (consistent) out.rational.push_back({});
        out.count_over_C = out.rational.size();
        return out;
    }
    out.groebner = groebner_basis(S.equations, bounds);
    if (!is_zero_dimensional(out.groebner, nv)) {
        out.kind = SolutionSet::Kind::PositiveDimensional;
        return out;
    }
    out.count_over_C = detail::count_solutions(out.groebner, nv, bounds);
    detail::back_substitute(out.groebner, nv, std::vector<std::optional<Rational>>(nv), bounds, out);
    std::sort(out.rational.begin(), out.rational.end());
    std::size_t listed = out.rational.size();
    for (const auto &br : out.algebraic) listed += br.count;
    require(listed == out.count_over_C, "onedim", "solution count does not match the radical");
    for (const auto &sol : out.rational)
        for (const auto &eq : S.equations) require(eq.evaluate(sol) == 0, "onedim", "solution fails an equation");
    return out;
}

/// rho(Theta_i) for all i, zero off I.
inline std::vector<Rational> representation_from_solution(const std::vector<Rational> &solution, const OneDimSystem &S,
                                                          const GradedBasis &B) {
    std::vector<Rational> rho(B.r, Rational(0));
    for (int v = 0; v < S.nvars(); ++v) rho[S.I[v]] = solution[v];
    return rho;
}

/// Substitutes rho into a relation.
inline Rational evaluate_relation(const WPolynomial &F, const std::vector<Rational> &rho) {
    Rational s = 0;
    for (const auto &[w, c] : F.terms) {
        Rational t = c;
        for (std::size_t q = 0; q < w.size(); ++q) t *= rho[letter(w, q)];
        s += t;
    }
    return s;
}

inline void verify_representation(const Presentation &P, const std::vector<Rational> &rho) {
    for (const auto &[key, F] : P.relations)
        require(evaluate_relation(F, rho) == 0, "onedim",
                "representation violates F_" + std::to_string(key.first + 1) + "," + std::to_string(key.second + 1));
}

} // namespace walg
