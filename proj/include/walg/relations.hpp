#pragma once

// Relations [Theta_i, Theta_j] = F_ij(Theta_1, ..., Theta_r) by repeated
// subtraction of Theta-monomials of top Kazhdan degree.

#include "walg/generators.hpp"
#include "walg/pbw.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace walg {

/// Polynomial in T_1..T_r; words are over generator indices.
struct WPolynomial {
    LinComb terms;
    int kazhdan_bound = 0;

    bool empty() const { return terms.empty(); }
};

using RelationKey = std::pair<int, int>;

struct Presentation {
    std::vector<ThetaGenerator> generators;
    std::map<RelationKey, WPolynomial> relations; // computed pairs, both orders
    int b = 0, r = 0;
    DenominatorLedger ledger;

    const WPolynomial *find(int i, int j) const {
        auto it = relations.find({i, j});
        return it == relations.end() ? nullptr : &it->second;
    }
};

/// Substitutes Theta's into a polynomial, evaluated in Q_chi.
inline LinComb evaluate(const WPolynomial &F, ThetaProducts &prods) {
    LinComb out;
    for (const auto &[w, c] : F.terms) add_scaled(out, prods.get(w), c);
    return out;
}

inline WPolynomial commutator_to_wpoly(const GradedBasis &B, PbwEngine &engine, ThetaProducts &prods,
                                       const std::vector<LinComb> &thetas, int i, int j) {
    WPolynomial F;
    F.kazhdan_bound = B.n[i] + B.n[j] + 2;
    if (i == j) return F;
    LinComb c = engine.commutator(thetas[i], thetas[j]);
    int prev = kMinusInfinity;
    bool first = true;
    while (!c.empty()) {
        const int top = kazhdan_degree(c, B.n);
        if (!first)
            require(top < prev, "relations",
                    "Kazhdan degree did not drop for [Theta_" + std::to_string(i + 1) + ",Theta_" + std::to_string(j + 1) + "]");
        first = false;
        prev = top;
        std::vector<std::pair<Word, Rational>> lead;
        for (const auto &[w, v] : c) {
            if (kazhdan_degree(w, B.n) != top) continue;
            bool inside = true;
            for (std::size_t p = 0; p < w.size(); ++p)
                if (letter(w, p) >= B.r) inside = false;
            if (inside) lead.emplace_back(w, v);
        }
        require(!lead.empty(), "relations",
                "no top-degree monomial in g^e letters for [Theta_" + std::to_string(i + 1) + ",Theta_" +
                    std::to_string(j + 1) + "]");
        for (const auto &[w, v] : lead) {
            add_term(F.terms, w, v);
            add_scaled(c, prods.get(w), -v);
        }
    }
    for (const auto &[w, v] : F.terms)
        require(kazhdan_degree(w, B.n) <= F.kazhdan_bound, "relations", "Kazhdan bound violated");
    return F;
}

struct RelationOptions {
    unsigned threads = 1;
    /// Restrict to these pairs (i, j); empty means all i < b, j < r.
    std::vector<RelationKey> only;
};

inline std::vector<RelationKey> relation_pairs(const GradedBasis &B) {
    std::vector<RelationKey> out;
    for (int i = 0; i < B.b; ++i)
        for (int j = 0; j < B.r; ++j)
            if (i != j && !(j < B.b && j < i)) out.push_back({i, j});
    return out;
}

inline Presentation build_presentation(const GradedBasis &B, std::vector<ThetaGenerator> generators,
                                       const RelationOptions &opts = {}) {
    Presentation P;
    P.b = B.b;
    P.r = B.r;
    P.ledger = B.ledger;
    std::vector<LinComb> thetas;
    for (const auto &g : generators) thetas.push_back(g.element);
    P.generators = std::move(generators);

    std::vector<RelationKey> pairs;
    if (opts.only.empty()) {
        pairs = relation_pairs(B);
    } else {
        for (auto [i, j] : opts.only) {
            if (i == j) continue;
            RelationKey k = (j < B.b && j < i) ? RelationKey{j, i} : RelationKey{i, j};
            if (std::find(pairs.begin(), pairs.end(), k) == pairs.end()) pairs.push_back(k);
        }
        std::sort(pairs.begin(), pairs.end());
    }

    std::vector<WPolynomial> results(pairs.size());
    const unsigned width = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(pairs.size())));
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr err;
    auto worker = [&] {
        try {
            PbwEngine engine = PbwEngine::quotient(B);
            ThetaProducts prods(engine, thetas);
            for (std::size_t q = next++; q < pairs.size(); q = next++)
                results[q] = commutator_to_wpoly(B, engine, prods, thetas, pairs[q].first, pairs[q].second);
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!err) err = std::current_exception();
            next = pairs.size();
        }
    };
    if (width == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
        for (auto &th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);

    for (std::size_t q = 0; q < pairs.size(); ++q) {
        const auto [i, j] = pairs[q];
        for (const auto &[w, c] : results[q].terms) P.ledger.add_denominator(c, "relation coefficients");
        WPolynomial neg;
        neg.kazhdan_bound = results[q].kazhdan_bound;
        neg.terms = scaled(results[q].terms, -1);
        P.relations[{i, j}] = std::move(results[q]);
        P.relations[{j, i}] = std::move(neg);
    }
    return P;
}

/// "T3T4T5"-style display with coefficients, highest Kazhdan degree first.
inline std::string format_wpoly(const WPolynomial &F, const GradedBasis &B, const std::string &var = "T") {
    if (F.terms.empty()) return "0";
    auto terms = sorted_terms(F.terms);
    std::stable_sort(terms.begin(), terms.end(), [&](const auto &a, const auto &b) {
        return kazhdan_degree(a.first, B.n) > kazhdan_degree(b.first, B.n);
    });
    std::string out;
    for (const auto &[w, c] : terms) {
        const bool unit = abs(c) == 1 && !w.empty();
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (!unit) out += to_string(Rational(abs(c)));
        if (!w.empty()) out += (unit ? "" : "*") + word_name(w, var);
    }
    return out;
}

} // namespace walg
