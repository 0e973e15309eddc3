#pragma once

// Dynkin grading from a weighted diagram, the sl2-triple (e, h, f) and the
// character chi = (e, .) with the Killing form rescaled so that (e, f) = 1.

#include "walg/linalg.hpp"
#include "walg/rootsystem.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace walg {

struct DynkinLabels {
    std::vector<int> d;
};

inline DynkinLabels parse_labels(const std::string &text) {
    DynkinLabels out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw InvalidInput("bad label '" + tok + "'");
            out.d.push_back(v);
        } catch (const std::logic_error &) {
            throw InvalidInput("bad label '" + tok + "'");
        }
    }
    return out;
}

struct Grading {
    std::vector<int> labels;
    std::vector<int> degree_of_root;
    std::vector<int> degree_of_basis;       // per Chevalley basis index
    std::map<int, std::vector<int>> pieces; // j -> basis indices spanning g(j)

    std::vector<int> roots_of_degree(int j) const {
        std::vector<int> out;
        for (int a = 0; a < static_cast<int>(degree_of_root.size()); ++a)
            if (degree_of_root[a] == j) out.push_back(a);
        return out;
    }
    int dim(int j) const {
        auto it = pieces.find(j);
        return it == pieces.end() ? 0 : static_cast<int>(it->second.size());
    }
};

inline Grading grading_from_labels(const LieAlgebraData &L, const DynkinLabels &labels) {
    const auto &rs = L.roots;
    if (static_cast<int>(labels.d.size()) != rs.rank)
        throw InvalidInput("expected " + std::to_string(rs.rank) + " labels, got " + std::to_string(labels.d.size()));
    for (int v : labels.d)
        if (v < 0 || v > 2) throw InvalidInput("labels must lie in {0,1,2}");
    Grading g;
    g.labels = labels.d;
    for (int a = 0; a < rs.num_roots(); ++a) {
        int deg = 0;
        for (int i = 0; i < rs.rank; ++i) deg += rs.roots[a][i] * labels.d[i];
        g.degree_of_root.push_back(deg);
        g.degree_of_basis.push_back(deg);
        g.pieces[deg].push_back(a);
    }
    for (int i = 0; i < rs.rank; ++i) {
        g.degree_of_basis.push_back(0);
        g.pieces[0].push_back(rs.num_roots() + i);
    }
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j)
            for (const auto &t : L.table[i][j])
                require(g.degree_of_basis[t.index] == g.degree_of_basis[i] + g.degree_of_basis[j], "sl2grading",
                        "bracket does not respect the grading");
    return g;
}

struct Sl2Triple {
    Vec e, h, f;
    std::vector<int> gamma;
    Rational kappa_ef;
    Rational form_scale; // 1 / kappa(e, f), zero when e = 0
    Vec chi_values;      // chi on each Chevalley basis vector

    bool is_zero_orbit() const { return gamma.empty(); }
};

/// h = sum c_i h_i with alpha_j(h) = d_j.
inline Vec find_h(const LieAlgebraData &L, const DynkinLabels &labels) {
    const auto &rs = L.roots;
    const int l = rs.rank;
    if (static_cast<int>(labels.d.size()) != l) throw InvalidInput("label count does not match rank");
    Matrix a(l, zero_vec(l));
    Vec rhs(l);
    for (int j = 0; j < l; ++j) {
        for (int i = 0; i < l; ++i) a[j][i] = rs.cartan[j][i];
        rhs[j] = labels.d[j];
    }
    auto sol = solve(a, rhs, l);
    require(sol && sol->nullity == 0, "sl2grading", "Cartan matrix is singular");
    Vec h = zero_vec(L.dim());
    for (int i = 0; i < l; ++i) {
        const Rational &c = sol->particular[i];
        if (!is_integer(c) || c < 0) throw InvalidInput("labels are not a weighted Dynkin diagram (h has coefficient " + to_string(c) + ")");
        h[L.cartan_offset() + i] = c;
    }
    return h;
}

/// f in g(-2) with [e, f] = h, or nullopt when none exists.
inline std::optional<Vec> find_f(const LieAlgebraData &L, const Grading &grading, const Vec &e, const Vec &h) {
    const auto &rs = L.roots;
    const int n = L.dim();
    if (is_zero(e)) {
        if (!is_zero(h)) return std::nullopt;
        return zero_vec(n);
    }
    std::vector<int> cols;
    for (int a : grading.roots_of_degree(2)) cols.push_back(rs.negative_of(a));
    Matrix A(n, zero_vec(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Vec img = L.bracket(e, unit_vec(n, cols[c]));
        for (int r = 0; r < n; ++r) A[r][c] = img[r];
    }
    auto sol = solve(A, h, cols.size());
    if (!sol) return std::nullopt;
    require(sol->nullity == 0, "sl2grading", "f is not unique");
    Vec f = zero_vec(n);
    for (std::size_t c = 0; c < cols.size(); ++c) f[cols[c]] = sol->particular[c];
    return f;
}

namespace detail {

inline bool independent_roots(const RootSystem &rs, const std::vector<int> &subset) {
    Matrix m;
    for (int a : subset) {
        Vec row;
        for (int c : rs.roots[a]) row.push_back(c);
        m.push_back(row);
    }
    return rank(m) == subset.size();
}

/// Visits k-subsets of [0, n) in lexicographic order until fn returns true.
template <class Fn> bool for_each_subset(int n, int k, Fn &&fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return false;
    while (true) {
        if (fn(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

struct ESearchResult {
    Vec e;
    std::vector<int> gamma;
    Vec f;
};

/// Smallest Gamma in Phi(2), lexicographic within each size, such that
/// e = sum_{gamma} e_gamma admits f.
inline ESearchResult find_e(const LieAlgebraData &L, const Grading &grading, const Vec &h) {
    const auto &rs = L.roots;
    const int n = L.dim();
    const auto phi2 = grading.roots_of_degree(2);
    std::optional<ESearchResult> found;
    for (int k = 0; k <= std::min<int>(rs.rank, phi2.size()) && !found; ++k) {
        detail::for_each_subset(static_cast<int>(phi2.size()), k, [&](const std::vector<int> &idx) {
            std::vector<int> gamma;
            for (int i : idx) gamma.push_back(phi2[i]);
            if (!detail::independent_roots(rs, gamma)) return false;
            Vec e = zero_vec(n);
            for (int a : gamma) e[a] = 1;
            require(L.bracket(h, e) == scaled(e, 2), "sl2grading", "[h,e] != 2e");
            auto f = find_f(L, grading, e, h);
            if (!f) return false;
            found = ESearchResult{e, gamma, *f};
            return true;
        });
    }
    if (!found) throw InvalidInput("labels are not a weighted Dynkin diagram (no e in g(2) admits f)");
    return *found;
}

inline Sl2Triple build_triple(const LieAlgebraData &L, const Grading &grading, const DynkinLabels &labels) {
    Sl2Triple t;
    t.h = find_h(L, labels);
    auto res = find_e(L, grading, t.h);
    t.e = res.e;
    t.gamma = res.gamma;
    t.f = res.f;
    require(L.bracket(t.h, t.e) == scaled(t.e, 2), "sl2grading", "[h,e] != 2e");
    require(L.bracket(t.h, t.f) == scaled(t.f, -2), "sl2grading", "[h,f] != -2f");
    require(L.bracket(t.e, t.f) == t.h, "sl2grading", "[e,f] != h");
    t.kappa_ef = L.killing_form(t.e, t.f);
    t.chi_values = zero_vec(L.dim());
    if (!t.is_zero_orbit()) {
        require(t.kappa_ef != 0, "sl2grading", "kappa(e,f) vanishes");
        t.form_scale = 1 / t.kappa_ef;
        for (int i = 0; i < L.dim(); ++i) t.chi_values[i] = L.killing_form(unit_vec(L.dim(), i), t.e) * t.form_scale;
    }
    return t;
}

/// chi(x) = kappa(x, e) / kappa(e, f).
inline Rational chi(const Sl2Triple &t, const Vec &x) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) s += x[i] * t.chi_values[i];
    return s;
}

} // namespace walg
