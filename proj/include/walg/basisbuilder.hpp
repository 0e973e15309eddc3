#pragma once

// The ordered basis x_1..x_n adapted to (e, h, f):
//   [0, r)          g^e
//   [r, m)          complement of g^e in p = sum_{j>=0} g(j)
//   [m, m+s)        z_1..z_s, half of a Witt basis of g(-1)
//   [m+s, m+2s)     z*_1..z*_s, the dual half
//   [m+2s, m+2s+s') ker chi on g(-2), then f
//   the rest        g(j), j <= -3
// Indices are 0-based here; reports print them 1-based.
//
// Ordering conventions:
//  * segments run by descending n;
//  * within one n, joint (n, beta) blocks with beta != 0 come first, by beta
//    descending lexicographically, and beta = 0 comes last;
//  * e leads its block; other centralizer vectors come from a nullspace basis
//    with free coordinates set to 1;
//  * z's are the root vectors of g(-1) with lexicographically negative
//    restricted weight.

#include "walg/ledger.hpp"
#include "walg/linalg.hpp"
#include "walg/rootsystem.hpp"
#include "walg/sl2grading.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace walg {

using Weight = std::vector<Rational>;

inline int lex_sign(const Weight &w) {
    for (const auto &c : w) {
        if (c > 0) return 1;
        if (c < 0) return -1;
    }
    return 0;
}

/// x_k = sum coeff [x_i, x_j]
struct NuTerm {
    int i, j;
    Rational coeff;
};

struct BasisOptions {
    /// A reduced generating set of g^e (or of m) is used only when its size is
    /// at most this fraction of the full dimension.
    double max_fraction = 0.5;
};

struct GradedBasis {
    std::vector<Vec> x;           // Chevalley coordinates
    std::vector<int> n;           // ad h eigenvalue
    std::vector<Weight> beta;     // t^e weight
    int r = 0, b = 0, m = 0, s = 0, s_prime = 0;
    int e_index = -1;
    std::vector<Vec> te_basis;    // Chevalley coordinates
    std::vector<int> K;           // generators of the nilpotent subalgebra
    std::vector<int> ge_generators; // a generating set of g^e found by the greedy search
    std::vector<Rational> chi;    // chi(x_i)
    std::vector<std::vector<SparseBracket>> table; // [x_i, x_j] in the x basis
    std::map<int, std::vector<NuTerm>> nu;         // decompositions for b <= k < r
    Matrix to_x;                  // Chevalley coordinates -> x coordinates
    DenominatorLedger ledger;

    int dim() const { return static_cast<int>(x.size()); }
    /// Letters below the cutoff survive in Q_chi; the rest span the nilpotent subalgebra.
    int cutoff() const { return m + s; }
    int kazhdan(int i) const { return n[i] + 2; }
    bool in_nilpotent(int i) const { return i >= cutoff(); }
    int te_dim() const { return static_cast<int>(te_basis.size()); }

    Vec coordinates(const Vec &chev) const {
        Vec out = zero_vec(dim());
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                if (chev[j] != 0 && to_x[i][j] != 0) out[i] += to_x[i][j] * chev[j];
        return out;
    }

    /// x_i written in the Chevalley basis b_1..b_N, e.g. "1/2*b7" or "b3-b5".
    std::string expression(int i) const {
        std::string out;
        for (int j = 0; j < dim(); ++j) {
            const Rational &c = x[i][j];
            if (c == 0) continue;
            std::string mag;
            if (abs(c) != 1) mag = to_string(Rational(abs(c))) + "*";
            if (out.empty())
                out += (c < 0 ? "-" : "") + mag;
            else
                out += (c < 0 ? "-" : "+") + mag;
            out += "b" + std::to_string(j + 1);
        }
        return out.empty() ? "0" : out;
    }
};

namespace detail {

struct BlockKey {
    int n;
    Weight beta;
};

/// Ordering of (n, beta) blocks within a segment.
inline bool block_before(const BlockKey &a, const BlockKey &b) {
    if (a.n != b.n) return a.n > b.n;
    const bool za = lex_sign(a.beta) == 0, zb = lex_sign(b.beta) == 0;
    if (za != zb) return zb;
    return a.beta > b.beta;
}

/// Lie closure of a family, as a span.
inline SpanBasis lie_closure(const LieAlgebraData &L, const std::vector<Vec> &gens) {
    SpanBasis span(L.dim());
    std::vector<Vec> elems;
    for (const auto &g : gens)
        if (span.insert(g)) elems.push_back(g);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Vec c = L.bracket(elems[j], elems[i]);
            if (span.insert(c)) elems.push_back(std::move(c));
        }
    return span;
}

} // namespace detail

inline std::vector<Vec> te_basis_of(const LieAlgebraData &L, const std::vector<int> &gamma) {
    const auto &rs = L.roots;
    const int l = rs.rank;
    Matrix M;
    for (int a : gamma) {
        Vec row = zero_vec(l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) row[i] += rs.roots[a][j] * rs.cartan[j][i];
        M.push_back(row);
    }
    std::vector<Vec> out;
    for (const auto &v : nullspace(M, l)) {
        Vec t = zero_vec(L.dim());
        for (int i = 0; i < l; ++i) t[L.cartan_offset() + i] = v[i];
        out.push_back(t);
    }
    require(static_cast<int>(out.size()) == l - static_cast<int>(gamma.size()), "basisbuilder",
            "dim t^e differs from rank minus |Gamma|");
    return out;
}

/// Restricted weight of root a on the given t^e basis.
inline Weight restricted_weight(const LieAlgebraData &L, const std::vector<Vec> &te, int a) {
    const auto &rs = L.roots;
    Weight w;
    for (const auto &t : te) {
        Rational s = 0;
        for (int i = 0; i < rs.rank; ++i) {
            const Rational &c = t[L.cartan_offset() + i];
            if (c == 0) continue;
            int ai = 0;
            for (int j = 0; j < rs.rank; ++j) ai += rs.roots[a][j] * rs.cartan[j][i];
            s += c * ai;
        }
        w.push_back(s);
    }
    return w;
}

inline GradedBasis build_graded_basis(const LieAlgebraData &L, const Grading &grading, const Sl2Triple &triple,
                                      const BasisOptions &opts = {}) {
    const auto &rs = L.roots;
    const int dim = L.dim();
    GradedBasis B;

    for (long p : bad_primes(rs.type, rs.rank)) B.ledger.add_prime(Integer(p), "bad prime");
    if (!triple.is_zero_orbit()) B.ledger.add_integer(triple.kappa_ef.get_num(), "kappa(e,f) scaling");

    B.te_basis = te_basis_of(L, triple.gamma);
    const int tdim = static_cast<int>(B.te_basis.size());

    auto weight_of = [&](int idx) -> Weight {
        if (L.is_cartan(idx)) return Weight(tdim, Rational(0));
        return restricted_weight(L, B.te_basis, idx);
    };
    auto pairing = [&](const Vec &u, const Vec &v) { return chi(triple, L.bracket(u, v)); };

    std::vector<Vec> xs;
    std::vector<int> ns;
    std::vector<Weight> betas;
    auto push = [&](const Vec &v, int n, const Weight &w) {
        xs.push_back(v);
        ns.push_back(n);
        betas.push_back(w);
    };

    // g^e, blockwise.
    std::vector<std::pair<detail::BlockKey, std::vector<int>>> blocks;
    for (int i = 0; i < dim; ++i) {
        detail::BlockKey key{grading.degree_of_basis[i], weight_of(i)};
        auto it = std::find_if(blocks.begin(), blocks.end(),
                               [&](const auto &b) { return b.first.n == key.n && b.first.beta == key.beta; });
        if (it == blocks.end())
            blocks.push_back({key, {i}});
        else
            it->second.push_back(i);
    }
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const auto &a, const auto &b) { return detail::block_before(a.first, b.first); });

    const bool has_e = !triple.is_zero_orbit();
    for (const auto &[key, members] : blocks) {
        if (key.n < 0) continue;
        Matrix A(dim, zero_vec(members.size()));
        for (std::size_t c = 0; c < members.size(); ++c) {
            Vec img = L.bracket(triple.e, unit_vec(dim, members[c]));
            for (int row = 0; row < dim; ++row) A[row][c] = img[row];
        }
        std::vector<Vec> cands;
        if (has_e && key.n == 2 && lex_sign(key.beta) == 0) cands.push_back(triple.e);
        for (const auto &v : nullspace(A, members.size())) {
            Vec full = zero_vec(dim);
            for (std::size_t c = 0; c < members.size(); ++c) full[members[c]] = v[c];
            cands.push_back(full);
        }
        SpanBasis span(dim);
        std::vector<Vec> kept;
        for (const auto &v : cands)
            if (span.insert(v)) kept.push_back(v);
        if (key.n == 0 && lex_sign(key.beta) == 0) {
            require(kept.size() == B.te_basis.size(), "basisbuilder", "t^e is not a Cartan subalgebra of g^e(0)");
            for (const auto &t : B.te_basis) require(span.contains(t), "basisbuilder", "t^e not in g^e");
        }
        for (const auto &v : kept) {
            if (has_e && v == triple.e) B.e_index = static_cast<int>(xs.size());
            push(v, key.n, key.beta);
        }
    }
    B.r = static_cast<int>(xs.size());
    if (has_e) require(B.e_index >= 0, "basisbuilder", "e missing from the centralizer");

    // Complement of g^e in p.
    {
        SpanBasis span(dim);
        for (const auto &v : xs) span.insert(v);
        std::vector<int> comp;
        for (int i = 0; i < dim; ++i)
            if (grading.degree_of_basis[i] >= 0 && span.insert(unit_vec(dim, i))) comp.push_back(i);
        std::stable_sort(comp.begin(), comp.end(), [&](int a, int b) {
            return grading.degree_of_basis[a] > grading.degree_of_basis[b];
        });
        for (int i : comp) push(unit_vec(dim, i), grading.degree_of_basis[i], weight_of(i));
    }
    B.m = static_cast<int>(xs.size());
    require(B.m == static_cast<int>(std::count_if(grading.degree_of_basis.begin(), grading.degree_of_basis.end(),
                                                  [](int d) { return d >= 0; })),
            "basisbuilder", "p has the wrong dimension");

    // Witt basis of g(-1).
    std::vector<Vec> zs, zstars;
    std::vector<Weight> zw, zsw;
    {
        const auto roots1 = grading.roots_of_degree(-1);
        std::vector<int> neg, zero;
        std::map<Weight, std::vector<int>> by_weight;
        for (int a : roots1) {
            Weight w = weight_of(a);
            by_weight[w].push_back(a);
            const int sg = lex_sign(w);
            if (sg < 0) neg.push_back(a);
            if (sg == 0) zero.push_back(a);
        }
        // pair each lex-negative weight space with its opposite
        std::vector<Weight> seen;
        for (int a : neg) {
            Weight w = weight_of(a);
            if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
            seen.push_back(w);
            const auto &zspace = by_weight[w];
            Weight mw = w;
            for (auto &c : mw) c = -c;
            auto opp = by_weight.find(mw);
            require(opp != by_weight.end() && opp->second.size() == zspace.size(), "basisbuilder",
                    "g(-1) weight spaces do not pair up");
            const auto &yspace = opp->second;
            const std::size_t k = zspace.size();
            Matrix G(k, zero_vec(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) G[i][j] = pairing(unit_vec(dim, zspace[i]), unit_vec(dim, yspace[j]));
            auto Ginv = inverse(G);
            require(Ginv.has_value(), "basisbuilder", "degenerate pairing on g(-1)");
            for (std::size_t j = 0; j < k; ++j) {
                Vec zs_j = zero_vec(dim);
                for (std::size_t l = 0; l < k; ++l) zs_j[yspace[l]] = (*Ginv)[l][j];
                zs.push_back(unit_vec(dim, zspace[j]));
                zw.push_back(w);
                zstars.push_back(zs_j);
                zsw.push_back(mw);
            }
        }
        // symplectic Gram-Schmidt on the weight-zero part
        std::vector<Vec> rest;
        for (int a : zero) rest.push_back(unit_vec(dim, a));
        while (!rest.empty()) {
            Vec u = rest.front();
            std::size_t pick = 0;
            Rational pv = 0;
            for (std::size_t j = 1; j < rest.size(); ++j) {
                pv = pairing(u, rest[j]);
                if (pv != 0) {
                    pick = j;
                    break;
                }
            }
            require(pick != 0, "basisbuilder", "degenerate pairing on g(-1)");
            Vec v = scaled(rest[pick], 1 / pv);
            std::vector<Vec> next;
            for (std::size_t j = 1; j < rest.size(); ++j) {
                if (j == pick) continue;
                Vec w = rest[j];
                Rational a = pairing(w, v), c = pairing(w, u);
                axpy(w, -a, u);
                axpy(w, c, v);
                next.push_back(std::move(w));
            }
            zs.push_back(u);
            zw.push_back(Weight(tdim, Rational(0)));
            zstars.push_back(v);
            zsw.push_back(Weight(tdim, Rational(0)));
            rest = std::move(next);
        }
        require(zs.size() * 2 == roots1.size(), "basisbuilder", "Witt basis has the wrong size");
    }
    B.s = static_cast<int>(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) push(zs[i], -1, zw[i]);
    for (std::size_t i = 0; i < zstars.size(); ++i) push(zstars[i], -1, zsw[i]);

    // g(-2): ker chi, then f.
    {
        const auto roots2 = grading.roots_of_degree(2);
        const auto &gamma = triple.gamma;
        for (int a : roots2)
            if (std::find(gamma.begin(), gamma.end(), a) == gamma.end()) {
                const int na = rs.negative_of(a);
                push(unit_vec(dim, na), -2, weight_of(na));
            }
        if (!gamma.empty()) {
            const int g1 = rs.negative_of(gamma[0]);
            const Rational c1 = triple.chi_values[g1];
            require(c1 != 0, "basisbuilder", "chi vanishes on e_{-gamma}");
            for (std::size_t j = 1; j < gamma.size(); ++j) {
                const int gj = rs.negative_of(gamma[j]);
                Vec v = unit_vec(dim, gj);
                v[g1] = -triple.chi_values[gj] / c1;
                push(v, -2, Weight(tdim, Rational(0)));
            }
            push(triple.f, -2, Weight(tdim, Rational(0)));
        }
        B.s_prime = static_cast<int>(roots2.size());
    }

    // g(j), j <= -3.
    {
        std::vector<int> rest;
        for (int a = 0; a < rs.num_roots(); ++a)
            if (grading.degree_of_root[a] <= -3) rest.push_back(a);
        std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
            return grading.degree_of_root[a] > grading.degree_of_root[b];
        });
        for (int a : rest) push(unit_vec(dim, a), grading.degree_of_root[a], weight_of(a));
    }
    require(static_cast<int>(xs.size()) == dim, "basisbuilder", "assembled basis has the wrong size");

    // Generating set of g^e. Candidates by ascending n, e first.
    std::vector<int> order(B.r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ns[a] < ns[b]; });
    if (B.e_index >= 0) {
        order.erase(std::find(order.begin(), order.end(), B.e_index));
        order.insert(order.begin(), B.e_index);
    }
    {
        std::vector<Vec> gens;
        std::vector<int> picked;
        SpanBasis closure(dim);
        for (int i : order) {
            if (static_cast<int>(closure.size()) == B.r) break;
            if (closure.contains(xs[i])) continue;
            gens.push_back(xs[i]);
            picked.push_back(i);
            closure = detail::lie_closure(L, gens);
        }
        require(static_cast<int>(closure.size()) == B.r, "basisbuilder", "g^e is not closed under brackets");
        B.ge_generators = picked;
    }
    std::vector<int> perm(B.r);
    std::iota(perm.begin(), perm.end(), 0);
    B.b = B.r;
    if (B.ge_generators.size() <= opts.max_fraction * B.r) {
        // Place the remaining centralizer vectors so each is a combination of
        // brackets of earlier ones.
        std::vector<int> placed = B.ge_generators;
        std::vector<int> remaining;
        for (int i : order)
            if (std::find(placed.begin(), placed.end(), i) == placed.end()) remaining.push_back(i);
        std::map<int, std::vector<NuTerm>> nu_old;
        bool ok = true;
        while (!remaining.empty() && ok) {
            std::vector<Vec> fam;
            std::vector<std::pair<int, int>> pairs;
            for (std::size_t a = 0; a < placed.size(); ++a)
                for (std::size_t c = a + 1; c < placed.size(); ++c) {
                    Vec br = L.bracket(xs[placed[a]], xs[placed[c]]);
                    if (is_zero(br)) continue;
                    fam.push_back(std::move(br));
                    pairs.emplace_back(placed[a], placed[c]);
                }
            CoordinateSolver solver(dim, fam);
            ok = false;
            for (std::size_t q = 0; q < remaining.size(); ++q) {
                auto coeffs = solver.coordinates(xs[remaining[q]]);
                if (!coeffs) continue;
                std::vector<NuTerm> terms;
                for (std::size_t t = 0; t < fam.size(); ++t)
                    if ((*coeffs)[t] != 0) terms.push_back({pairs[t].first, pairs[t].second, (*coeffs)[t]});
                nu_old[remaining[q]] = terms;
                placed.push_back(remaining[q]);
                remaining.erase(remaining.begin() + static_cast<long>(q));
                ok = true;
                break;
            }
        }
        if (ok) {
            perm = placed;
            B.b = static_cast<int>(B.ge_generators.size());
            std::vector<int> where(B.r);
            for (int k = 0; k < B.r; ++k) where[perm[k]] = k;
            for (const auto &[old, terms] : nu_old) {
                std::vector<NuTerm> renamed;
                for (const auto &t : terms) renamed.push_back({where[t.i], where[t.j], t.coeff});
                B.nu[where[old]] = renamed;
            }
            for (auto &g : B.ge_generators) g = where[g];
            if (B.e_index >= 0) B.e_index = where[B.e_index];
        }
    }
    for (int k = 0; k < B.r; ++k) {
        B.x.push_back(xs[perm[k]]);
        B.n.push_back(ns[perm[k]]);
        B.beta.push_back(betas[perm[k]]);
    }
    for (int k = B.r; k < dim; ++k) {
        B.x.push_back(xs[k]);
        B.n.push_back(ns[k]);
        B.beta.push_back(betas[k]);
    }
    if (B.e_index >= 0) require(B.e_index < B.b, "basisbuilder", "e lies outside the generating prefix");

    // Transition to x coordinates and structure constants.
    Matrix T(dim, zero_vec(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) T[j][i] = B.x[i][j];
    auto Tinv = inverse(T);
    require(Tinv.has_value(), "basisbuilder", "x_1..x_n is not a basis");
    B.to_x = *Tinv;
    for (const auto &v : B.x) B.ledger.add_denominators(v, "basis vectors");
    for (const auto &row : B.to_x) B.ledger.add_denominators(row, "basis transition");
    const Rational det = determinant(T);
    B.ledger.add_integer(det.get_num(), "basis transition determinant");
    B.ledger.add_integer(det.get_den(), "basis transition determinant");

    B.table.assign(dim, std::vector<SparseBracket>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (i == j) continue;
            Vec c = B.coordinates(L.bracket(B.x[i], B.x[j]));
            for (int k = 0; k < dim; ++k)
                if (c[k] != 0) B.table[i][j].push_back({k, c[k]});
        }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (const auto &t : B.table[i][j]) B.ledger.add_denominator(t.coeff, "structure constants in the x basis");

    for (int i = 0; i < dim; ++i) B.chi.push_back(chi(triple, B.x[i]));

    // Generators of the nilpotent subalgebra.
    {
        const int lo = B.cutoff();
        SpanBasis derived(dim);
        for (int i = lo; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) derived.insert(L.bracket(B.x[i], B.x[j]));
        std::vector<int> kmin;
        for (int i = lo; i < dim; ++i)
            if (derived.insert(B.x[i])) kmin.push_back(i);
        std::vector<Vec> gens;
        for (int i : kmin) gens.push_back(B.x[i]);
        require(static_cast<int>(detail::lie_closure(L, gens).size()) == dim - lo, "basisbuilder",
                "complement of [m,m] does not generate m");
        if (kmin.size() <= opts.max_fraction * (dim - lo)) {
            B.K = kmin;
        } else {
            for (int i = lo; i < dim; ++i) B.K.push_back(i);
        }
    }
    return B;
}

/// Checks the structural invariants of an assembled basis. Throws on failure.
inline void verify_graded_basis(const LieAlgebraData &L, const Sl2Triple &triple, const GradedBasis &B) {
    const int dim = B.dim();
    const char *mod = "basisbuilder";
    for (int i = 0; i < dim; ++i) {
        require(L.bracket(triple.h, B.x[i]) == scaled(B.x[i], B.n[i]), mod, "x_i is not an ad h eigenvector");
        for (int t = 0; t < B.te_dim(); ++t)
            require(L.bracket(B.te_basis[t], B.x[i]) == scaled(B.x[i], B.beta[i][t]), mod,
                    "x_i is not a t^e weight vector");
    }
    for (int i = 0; i < B.r; ++i) require(is_zero(L.bracket(triple.e, B.x[i])), mod, "x_i outside g^e");
    for (int i = 0; i < B.m; ++i) require(B.n[i] >= 0, mod, "p segment has negative degree");
    for (int i = B.m; i < dim; ++i) require(B.n[i] < 0, mod, "nilpotent segment has nonnegative degree");
    auto pairing = [&](int i, int j) { return chi(triple, L.bracket(B.x[i], B.x[j])); };
    for (int i = 0; i < B.s; ++i)
        for (int j = 0; j < B.s; ++j) {
            require(pairing(B.m + i, B.m + B.s + j) == (i == j ? 1 : 0), mod, "Witt basis not dual");
            require(pairing(B.m + i, B.m + j) == 0, mod, "Witt basis not isotropic");
            require(pairing(B.m + B.s + i, B.m + B.s + j) == 0, mod, "Witt basis not isotropic");
        }
    const int g2 = B.m + 2 * B.s;
    for (int i = g2; i < g2 + B.s_prime; ++i) {
        require(B.n[i] == -2, mod, "g(-2) segment misplaced");
        require(B.chi[i] == (i == g2 + B.s_prime - 1 ? 1 : 0), mod, "chi on g(-2) segment");
    }
    for (int i = 0; i < dim; ++i)
        if (B.n[i] != -2) require(B.chi[i] == 0, mod, "chi nonzero off g(-2)");
    for (std::size_t a = 0; a < B.K.size(); ++a)
        for (std::size_t c = 0; c < B.K.size(); ++c)
            require(chi(triple, L.bracket(B.x[B.K[a]], B.x[B.K[c]])) == 0, mod, "chi is not a character of m");
    // closure of the prefix
    std::vector<Vec> gens(B.x.begin(), B.x.begin() + B.b);
    require(static_cast<int>(detail::lie_closure(L, gens).size()) == B.r, mod, "prefix does not generate g^e");
    for (const auto &[k, terms] : B.nu) {
        Vec sum = zero_vec(L.dim());
        for (const auto &t : terms) {
            require(t.i < k && t.j < k, mod, "nu decomposition uses later vectors");
            axpy(sum, t.coeff, L.bracket(B.x[t.i], B.x[t.j]));
        }
        require(sum == B.x[k], mod, "nu decomposition is wrong");
    }
}

} // namespace walg
