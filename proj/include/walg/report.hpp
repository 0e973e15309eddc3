#pragma once

// report.json and report.txt for a pipeline run.

#include "walg/pipeline.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace walg {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational &q) {
    return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline Json rationals_json(const std::vector<Rational> &v) {
    Json a = Json::array();
    for (const auto &q : v) a.push_back(rational_json(q));
    return a;
}

inline std::string segment_name(const GradedBasis &B, int i) {
    if (i < B.b) return "generating";
    if (i < B.r) return "centralizer";
    if (i < B.m) return "complement";
    if (i < B.m + B.s) return "z";
    if (i < B.m + 2 * B.s) return "z*";
    if (i < B.m + 2 * B.s + B.s_prime) return "g(-2)";
    return "g(<=-3)";
}

/// Sparse exponent list [[k, a_k], ...] with 1-based k.
inline Json exponents_json(const Word &w) {
    Json a = Json::array();
    auto letters = word_letters(w);
    for (std::size_t p = 0; p < letters.size();) {
        std::size_t q = p;
        while (q < letters.size() && letters[q] == letters[p]) ++q;
        a.push_back(Json::array({letters[p] + 1, static_cast<int>(q - p)}));
        p = q;
    }
    return a;
}

inline Json lincomb_json(const LinComb &x) {
    Json a = Json::array();
    for (const auto &[w, c] : sorted_terms(x)) a.push_back(Json{{"exponents", exponents_json(w)}, {"coefficient", rational_json(c)}});
    return a;
}

inline Json certificate_json(const DenominatorLedger &ledger) {
    Json primes = Json::array();
    for (const auto &[p, steps] : ledger.provenance())
        primes.push_back(Json{{"prime", p.get_str()}, {"exponent", 1}, {"steps", steps}});
    return Json{{"d", ledger.d().get_str()}, {"primes", primes}};
}

inline Json solutions_json(const OneDimSystem &S, const SolutionSet &sol) {
    Json j;
    Json I = Json::array(), J = Json::array(), eqs = Json::array(), gb = Json::array();
    for (int i : S.I) I.push_back(i + 1);
    for (const auto &[a, b] : S.J) J.push_back(Json::array({a + 1, b + 1}));
    for (const auto &e : S.equations)
        if (!e.is_zero()) eqs.push_back(e.str(S.names));
    for (const auto &g : sol.groebner) gb.push_back(g.str(S.names));
    j["I"] = I;
    j["J"] = J;
    j["equations"] = eqs;
    j["groebner_basis"] = gb;
    j["classification"] = sol.finite() ? "finite" : "positive-dimensional";
    if (sol.finite()) j["count"] = sol.count_over_C;
    Json list = Json::array();
    for (const auto &s : sol.rational) {
        Json one;
        for (int v = 0; v < S.nvars(); ++v) one[std::to_string(S.I[v] + 1)] = rational_json(s[v]);
        list.push_back(one);
    }
    for (const auto &br : sol.algebraic) {
        Json one;
        for (int v = 0; v < S.nvars(); ++v) {
            const std::string key = std::to_string(S.I[v] + 1);
            if (v == br.variable) {
                Json iv = Json::array();
                for (const auto &[a, b] : br.real_intervals) iv.push_back(Json::array({rational_json(a), rational_json(b)}));
                one[key] = Json{{"minpoly", upoly_str(br.cofactor, S.names[v])},
                                {"coefficients", rationals_json(br.cofactor)},
                                {"real_root_intervals", iv}};
            } else if (br.fixed[v]) {
                one[key] = rational_json(*br.fixed[v]);
            } else {
                one[key] = "determined by the groebner basis";
            }
        }
        one["solutions_over_C"] = br.count;
        list.push_back(one);
    }
    j["solutions"] = list;
    return j;
}

inline Json report_json(const RunResult &R) {
    const auto &B = R.basis;
    const auto &L = R.lie;
    Json j;
    j["schema"] = 1;
    j["input"] = Json{{"type", std::string(1, R.config.type)},
                      {"rank", R.config.rank},
                      {"labels", R.labels.d},
                      {"orbit", R.orbit_name},
                      {"mode", mode_name(R.config.mode)},
                      {"gap_signs", R.config.gap_signs}};

    Json sc = Json::array();
    for (int a = 0; a < L.dim(); ++a)
        for (int b = a + 1; b < L.dim(); ++b) {
            if (L.table[a][b].empty()) continue;
            Json terms = Json::array();
            for (const auto &t : L.table[a][b]) terms.push_back(Json{{"k", t.index + 1}, {"c", rational_json(t.coeff)}});
            sc.push_back(Json{{"i", a + 1}, {"j", b + 1}, {"terms", terms}});
        }
    j["lie_algebra"] = Json{{"dim", L.dim()}, {"basis", L.labels}, {"structure_constants", sc}};

    j["triple"] = Json{{"e", rationals_json(R.triple.e)},
                       {"h", rationals_json(R.triple.h)},
                       {"f", rationals_json(R.triple.f)},
                       {"kappa_ef", rational_json(R.triple.kappa_ef)}};

    Json rows = Json::array();
    for (int i = 0; i < B.dim(); ++i)
        rows.push_back(Json{{"index", i + 1},
                            {"expression", B.expression(i)},
                            {"n", B.n[i]},
                            {"beta", rationals_json(B.beta[i])},
                            {"segment", segment_name(B, i)},
                            {"chi", rational_json(B.chi[i])}});
    Json K = Json::array();
    for (int k : B.K) K.push_back(k + 1);
    j["basis"] = Json{{"dim", B.dim()}, {"r", B.r},         {"b", B.b},     {"m", B.m},   {"s", B.s},
                      {"s_prime", B.s_prime}, {"te_dim", B.te_dim()}, {"K", K}, {"rows", rows}};

    Json gens = Json::array();
    for (const auto &g : R.generators)
        gens.push_back(Json{{"index", g.index + 1},
                            {"kazhdan_degree", g.kazhdan},
                            {"method", g.method},
                            {"terms", lincomb_json(g.element)}});
    j["generators"] = gens;

    if (R.presentation) {
        Json rels = Json::array();
        std::size_t computed = 0;
        for (const auto &[key, F] : R.presentation->relations) {
            if (key.first >= key.second) continue;
            ++computed;
            if (F.empty()) continue;
            rels.push_back(Json{{"i", key.first + 1},
                                {"j", key.second + 1},
                                {"kazhdan_bound", F.kazhdan_bound},
                                {"monomials", lincomb_json(F.terms)}});
        }
        j["relations"] = Json{{"computed_pairs", computed}, {"nonzero", rels}};
    }
    if (R.system && R.solutions) j["one_dimensional"] = solutions_json(*R.system, *R.solutions);
    const DenominatorLedger &ledger = R.presentation ? R.presentation->ledger : B.ledger;
    j["denominator"] = certificate_json(ledger);
    return j;
}

inline std::string report_text(const RunResult &R) {
    const auto &B = R.basis;
    std::ostringstream o;
    o << "g = " << R.config.type << R.config.rank << ", labels ";
    for (std::size_t i = 0; i < R.labels.d.size(); ++i) o << (i ? "," : "") << R.labels.d[i];
    if (!R.orbit_name.empty()) o << " (" << R.orbit_name << ")";
    o << "\nkappa(e,f) = " << to_string(R.triple.kappa_ef) << "\n";
    o << "r = " << B.r << ", b = " << B.b << ", m = " << B.m << ", s = " << B.s << ", s' = " << B.s_prime
      << ", n = " << B.dim() << "\n\nBasis\n";
    for (int i = 0; i < B.dim(); ++i) {
        o << "  x" << i + 1 << " = " << B.expression(i) << "   n = " << B.n[i] << "   beta = (";
        for (int t = 0; t < B.te_dim(); ++t) o << (t ? "," : "") << to_string(B.beta[i][t]);
        o << ")   " << segment_name(B, i) << "\n";
    }
    o << "\nGenerators\n";
    for (const auto &g : R.generators) o << "  Theta" << g.index + 1 << " = " << format_lincomb(g.element) << "\n";
    if (R.presentation) {
        o << "\nRelations\n";
        for (const auto &[key, F] : R.presentation->relations)
            if (key.first < key.second && !F.empty())
                o << "  [T" << key.first + 1 << ",T" << key.second + 1 << "] = " << format_wpoly(F, B) << "\n";
    }
    if (R.system && R.solutions) {
        const auto &S = *R.system;
        const auto &sol = *R.solutions;
        o << "\nOne-dimensional representations\n  I = {";
        for (std::size_t v = 0; v < S.I.size(); ++v) o << (v ? "," : "") << S.I[v] + 1;
        o << "}\n";
        for (const auto &g : sol.groebner) o << "  " << g.str(S.names) << " = 0\n";
        if (!sol.finite()) {
            o << "  positive-dimensional solution set\n";
        } else {
            o << "  " << sol.count_over_C << " solution(s)\n";
            for (const auto &s : sol.rational) {
                o << "   ";
                for (int v = 0; v < S.nvars(); ++v) o << " " << S.names[v] << " = " << to_string(s[v]);
                o << "\n";
            }
            for (const auto &br : sol.algebraic)
                o << "    " << br.count << " solution(s) with " << upoly_str(br.cofactor, S.names[br.variable]) << " = 0\n";
        }
    }
    const DenominatorLedger &ledger = R.presentation ? R.presentation->ledger : B.ledger;
    o << "\nd = " << ledger.d().get_str() << "\n";
    for (const auto &[p, steps] : ledger.provenance()) {
        o << "  " << p.get_str() << ":";
        for (std::size_t k = 0; k < steps.size(); ++k) o << (k ? ", " : " ") << steps[k];
        o << "\n";
    }
    return o.str();
}

} // namespace walg
