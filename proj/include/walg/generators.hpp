#pragma once

// Generators Theta_1..Theta_r of U(g,e): Theta_i = x_i + sum lambda_a x^a + I_chi,
// with the lambda_a fixed by m-invariance.

#include "walg/basisbuilder.hpp"
#include "walg/linalg.hpp"
#include "walg/pbw.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace walg {

struct ThetaGenerator {
    int index = 0;
    std::vector<std::pair<Word, Rational>> corrections; // admissible monomial -> lambda
    LinComb element;                                     // x_i + sum lambda_a x^a in Q_chi
    Weight beta;
    int kazhdan = 0;
    std::string method; // "linear system" or "commutators"
    std::size_t candidates = 0;
};

inline Weight word_weight(const GradedBasis &B, const Word &w) {
    Weight s(B.te_dim(), Rational(0));
    for (std::size_t p = 0; p < w.size(); ++p)
        for (int t = 0; t < B.te_dim(); ++t) s[t] += B.beta[letter(w, p)][t];
    return s;
}

/// A monomial may carry a correction coefficient for Theta_i only when it is
/// not supported on g^e alone and is not a single letter of full degree.
inline bool admissible(const GradedBasis &B, int i, const Word &w) {
    if (w.empty()) return false;
    if (letter(w, w.size() - 1) >= B.cutoff()) return false;
    const int deg = kazhdan_degree(w, B.n);
    if (deg > B.kazhdan(i)) return false;
    if (word_weight(B, w) != B.beta[i]) return false;
    bool outside = false;
    for (std::size_t p = 0; p < w.size(); ++p)
        if (letter(w, p) >= B.r) outside = true;
    if (!outside) return false;
    if (deg == B.kazhdan(i) && w.size() == 1) return false;
    return true;
}

/// Admissible monomials for Theta_i in lexicographic word order. Stops early
/// once more than `limit` have been found.
inline std::vector<Word> candidate_monomials(const GradedBasis &B, int i, std::size_t limit = SIZE_MAX) {
    std::vector<Word> out;
    const int top = B.kazhdan(i);
    const int cut = B.cutoff();
    Word cur;
    // preorder DFS over nondecreasing words gives lexicographic order
    auto dfs = [&](auto &&self, int from, int deg) -> void {
        for (int l = from; l < cut && out.size() <= limit; ++l) {
            const int d = deg + B.kazhdan(l);
            if (d > top) continue;
            cur.push_back(static_cast<char>(static_cast<unsigned char>(l)));
            if (admissible(B, i, cur)) out.push_back(cur);
            self(self, l, d);
            cur.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return out;
}

namespace detail {

inline void collect_rows(const LinComb &base, const std::vector<LinComb> &images, std::vector<Word> &words,
                         std::map<Word, std::pair<SparseSystem::Row, Rational>> &rows) {
    for (const auto &[w, c] : base) {
        auto &r = rows[w];
        r.second -= c;
    }
    for (std::size_t a = 0; a < images.size(); ++a)
        for (const auto &[w, c] : images[a]) rows[w].first[a] += c;
    for (const auto &[w, r] : rows) words.push_back(w);
}

} // namespace detail

/// Throws unless ad(x_k) u = 0 in Q_chi for every x_k in the nilpotent subalgebra.
inline void verify_m_invariant(const GradedBasis &B, PbwEngine &engine, const LinComb &u, int i) {
    for (int k = B.cutoff(); k < B.dim(); ++k)
        require(engine.ad_nilpotent(k, u).empty(), "generators",
                "Theta_" + std::to_string(i + 1) + " is not invariant under x_" + std::to_string(k + 1));
}

inline ThetaGenerator make_theta(const GradedBasis &B, int i, LinComb element, std::string method,
                                 std::size_t candidates) {
    ThetaGenerator t;
    t.index = i;
    t.beta = B.beta[i];
    t.kazhdan = B.kazhdan(i);
    t.method = std::move(method);
    t.candidates = candidates;
    for (const auto &[w, c] : sorted_terms(element))
        if (w != make_word({i})) t.corrections.emplace_back(w, c);
    t.element = std::move(element);
    return t;
}

/// Theta_i from the linear system (x_k - chi(x_k)) Theta_i = 0, k in K.
inline ThetaGenerator solve_theta(const GradedBasis &B, PbwEngine &engine, int i, const std::vector<Word> &cands,
                                  DenominatorLedger *ledger = nullptr) {
    const std::size_t nu = cands.size();
    SparseSystem sys(nu);
    std::vector<std::vector<std::pair<SparseSystem::Row, Rational>>> deferred;
    const LinComb xi = single(i);
    bool determined = nu == 0;
    for (int k : B.K) {
        LinComb base = engine.ad_nilpotent(k, xi);
        std::vector<LinComb> images;
        images.reserve(nu);
        for (const auto &w : cands) {
            LinComb q;
            add_term(q, w, 1);
            images.push_back(engine.ad_nilpotent(k, q));
        }
        std::map<Word, std::pair<SparseSystem::Row, Rational>> rows;
        std::vector<Word> words;
        detail::collect_rows(base, images, words, rows);
        std::vector<std::pair<SparseSystem::Row, Rational>> eqs;
        for (auto &[w, r] : rows) eqs.push_back(std::move(r));
        if (determined) {
            deferred.push_back(std::move(eqs));
            continue;
        }
        for (auto &[row, rhs] : eqs) {
            if (determined) {
                require(sys.implied(row, rhs), "generators", "Theta equations are inconsistent");
                continue;
            }
            sys.add_equation(row, rhs);
            require(!sys.inconsistent(), "generators",
                    "no m-invariant element with leading term x_" + std::to_string(i + 1));
            if (sys.rank() == nu) determined = true;
        }
    }
    require(determined, "generators", "correction coefficients of Theta_" + std::to_string(i + 1) + " are not unique");
    for (const auto &eqs : deferred)
        for (const auto &[row, rhs] : eqs)
            require(sys.implied(row, rhs), "generators", "Theta equations are inconsistent");
    Vec lambda = sys.particular_solution();
    LinComb element = xi;
    for (std::size_t a = 0; a < nu; ++a) add_term(element, cands[a], lambda[a]);
    verify_m_invariant(B, engine, element, i);
    if (ledger) ledger->add_denominators(lambda, "Theta coefficients");
    return make_theta(B, i, std::move(element), "linear system", nu);
}

/// Theta^a + I_chi for a word a over g^e letters.
class ThetaProducts {
public:
    ThetaProducts(PbwEngine &engine, const std::vector<LinComb> &thetas) : engine_(engine), thetas_(thetas) {}

    const LinComb &get(const Word &a) {
        auto it = cache_.find(a);
        if (it != cache_.end()) return it->second;
        LinComb val;
        if (a.empty())
            val = constant(1);
        else {
            const int k = letter(a, 0);
            require(k < static_cast<int>(thetas_.size()) && !thetas_[k].empty(), "relations",
                    "Theta_" + std::to_string(k + 1) + " is not available");
            val = engine_.multiply(thetas_[k], get(a.substr(1)));
        }
        return cache_.emplace(a, std::move(val)).first->second;
    }

    std::size_t size() const { return cache_.size(); }

private:
    PbwEngine &engine_;
    const std::vector<LinComb> &thetas_;
    std::unordered_map<Word, LinComb> cache_;
};

/// Theta_i for b <= i < r from brackets of earlier generators, then
/// subtraction of Theta-monomials until only admissible corrections remain.
/// Needs every Theta_j referenced by the nu decomposition and by the
/// subtraction; returns nullopt if one is missing.
inline std::optional<ThetaGenerator> theta_via_commutators(const GradedBasis &B, PbwEngine &engine,
                                                           const std::vector<LinComb> &thetas, int i) {
    if (i < B.b) throw InvalidInput("commutator construction applies only beyond the generating prefix");
    auto nu = B.nu.find(i);
    require(nu != B.nu.end(), "generators", "missing bracket decomposition for x_" + std::to_string(i + 1));
    auto have = [&](int j) { return j < static_cast<int>(thetas.size()) && !thetas[j].empty(); };
    LinComb u;
    for (const auto &t : nu->second) {
        if (!have(t.i) || !have(t.j)) return std::nullopt;
        add_scaled(u, engine.commutator(thetas[t.i], thetas[t.j]), t.coeff);
    }
    ThetaProducts prods(engine, thetas);
    const Word lead = make_word({i});
    for (std::size_t guard = 0;; ++guard) {
        require(guard < 100000, "generators", "subtraction loop does not terminate");
        // offending: supported on g^e only, other than the leading letter
        std::optional<std::pair<Word, Rational>> worst;
        int worst_deg = kMinusInfinity;
        for (const auto &[w, c] : u) {
            if (w == lead) continue;
            bool inside = true;
            for (std::size_t p = 0; p < w.size(); ++p)
                if (letter(w, p) >= B.r) inside = false;
            if (!inside) continue;
            const int d = kazhdan_degree(w, B.n);
            if (!worst || d > worst_deg || (d == worst_deg && w > worst->first)) {
                worst = std::make_pair(w, c);
                worst_deg = d;
            }
        }
        if (!worst) break;
        for (std::size_t p = 0; p < worst->first.size(); ++p)
            if (!have(letter(worst->first, p))) return std::nullopt;
        add_scaled(u, prods.get(worst->first), -worst->second);
    }
    auto it = u.find(lead);
    require(it != u.end() && it->second != 0, "generators", "bracket decomposition loses the leading term");
    const Rational c = it->second;
    u = scaled(u, 1 / c);
    for (const auto &[w, v] : u)
        if (w != lead)
            require(admissible(B, i, w), "generators", "commutator construction left an inadmissible monomial");
    verify_m_invariant(B, engine, u, i);
    return make_theta(B, i, std::move(u), "commutators", 0);
}

struct GeneratorOptions {
    std::size_t max_candidates = 5000;
    /// Use the commutator construction for every i >= b where possible.
    bool prefer_commutators = false;
};

inline std::vector<ThetaGenerator> compute_generators(const GradedBasis &B, PbwEngine &engine,
                                                      const GeneratorOptions &opts, DenominatorLedger &ledger) {
    std::vector<ThetaGenerator> out(B.r);
    std::vector<LinComb> thetas(B.r);
    std::vector<int> todo;
    for (int i = 0; i < B.r; ++i) todo.push_back(i);
    // large-degree generators beyond the prefix may wait for the ones they depend on
    std::vector<int> pending;
    auto solve_direct = [&](int i, const std::vector<Word> &cands) {
        out[i] = solve_theta(B, engine, i, cands, &ledger);
        thetas[i] = out[i].element;
    };
    for (int i : todo) {
        if (i < B.b) {
            solve_direct(i, candidate_monomials(B, i));
            continue;
        }
        auto cands = candidate_monomials(B, i, opts.max_candidates);
        if (cands.size() <= opts.max_candidates && !opts.prefer_commutators) {
            solve_direct(i, cands);
            continue;
        }
        pending.push_back(i);
    }
    // commutator path, in index order, retried while progress is made
    bool progress = true;
    while (!pending.empty() && progress) {
        progress = false;
        for (auto it = pending.begin(); it != pending.end();) {
            auto th = theta_via_commutators(B, engine, thetas, *it);
            if (th) {
                for (const auto &[w, c] : th->corrections) ledger.add_denominator(c, "Theta coefficients");
                thetas[*it] = th->element;
                out[*it] = std::move(*th);
                it = pending.erase(it);
                progress = true;
            } else {
                ++it;
            }
        }
    }
    for (int i : pending) solve_direct(i, candidate_monomials(B, i));
    return out;
}

} // namespace walg
