#pragma once

// Commutative polynomials over Q, lexicographic Groebner bases, and the
// univariate tools used to read off solutions (squarefree parts, Sturm
// sequences, rational roots).

#include "walg/linalg.hpp"
#include "walg/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace walg {

using Monomial = std::vector<int>;

/// Lex order with variable 0 the largest; map iteration starts at the leading term.
struct LexGreater {
    bool operator()(const Monomial &a, const Monomial &b) const { return a > b; }
};

class Poly {
public:
    using Terms = std::map<Monomial, Rational, LexGreater>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rational &c) {
        Poly p(nvars);
        p.add(Monomial(nvars, 0), c);
        return p;
    }
    static Poly variable(int nvars, int v) {
        Poly p(nvars);
        Monomial m(nvars, 0);
        m[v] = 1;
        p.add(m, 1);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add(const Monomial &m, const Rational &c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (fresh) return;
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    const Monomial &lm() const { return terms_.begin()->first; }
    const Rational &lc() const { return terms_.begin()->second; }

    int total_degree() const {
        int d = 0;
        for (const auto &[m, c] : terms_) {
            int s = 0;
            for (int e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    bool is_constant() const { return terms_.size() == 1 && total_degree() == 0; }

    Poly operator+(const Poly &o) const {
        Poly r = *this;
        for (const auto &[m, c] : o.terms_) r.add(m, c);
        return r;
    }
    Poly operator-(const Poly &o) const {
        Poly r = *this;
        for (const auto &[m, c] : o.terms_) r.add(m, -c);
        return r;
    }
    Poly operator*(const Poly &o) const {
        Poly r(nvars_);
        for (const auto &[m1, c1] : terms_)
            for (const auto &[m2, c2] : o.terms_) {
                Monomial m(nvars_);
                for (int v = 0; v < nvars_; ++v) m[v] = m1[v] + m2[v];
                r.add(m, c1 * c2);
            }
        return r;
    }
    Poly scaled(const Rational &c) const {
        Poly r(nvars_);
        for (const auto &[m, v] : terms_) r.add(m, v * c);
        return r;
    }
    /// c * x^shift * this
    Poly shifted(const Monomial &shift, const Rational &c) const {
        Poly r(nvars_);
        for (const auto &[m, v] : terms_) {
            Monomial n(nvars_);
            for (int k = 0; k < nvars_; ++k) n[k] = m[k] + shift[k];
            r.terms_.emplace(std::move(n), v * c);
        }
        return r;
    }
    Poly monic() const { return is_zero() ? *this : scaled(1 / lc()); }

    /// Substitutes x_v = value.
    Poly substitute(int v, const Rational &value) const {
        Poly r(nvars_);
        for (const auto &[m, c] : terms_) {
            Monomial n = m;
            Rational f = c;
            for (int k = 0; k < m[v]; ++k) f *= value;
            n[v] = 0;
            r.add(n, f);
        }
        return r;
    }

    Rational evaluate(const std::vector<Rational> &point) const {
        Rational s = 0;
        for (const auto &[m, c] : terms_) {
            Rational t = c;
            for (int v = 0; v < nvars_; ++v)
                for (int k = 0; k < m[v]; ++k) t *= point[v];
            s += t;
        }
        return s;
    }

    /// Variables actually occurring.
    std::set<int> support() const {
        std::set<int> out;
        for (const auto &[m, c] : terms_)
            for (int v = 0; v < nvars_; ++v)
                if (m[v]) out.insert(v);
        return out;
    }

    bool operator==(const Poly &o) const { return terms_ == o.terms_; }

    std::string str(const std::vector<std::string> &names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto &[m, c] : terms_) {
            bool unit = abs(c) == 1;
            bool constant_term = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            if (!unit || constant_term) out += to_string(Rational(abs(c)));
            bool first = unit;
            for (int v = 0; v < nvars_; ++v) {
                if (!m[v]) continue;
                if (!first) out += "*";
                first = false;
                out += names[v];
                if (m[v] > 1) out += "^" + std::to_string(m[v]);
            }
        }
        return out;
    }

private:
    int nvars_ = 0;
    Terms terms_;
};

inline bool divides(const Monomial &a, const Monomial &b) {
    for (std::size_t v = 0; v < a.size(); ++v)
        if (a[v] > b[v]) return false;
    return true;
}

inline Monomial monomial_lcm(const Monomial &a, const Monomial &b) {
    Monomial m(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) m[v] = std::max(a[v], b[v]);
    return m;
}

inline Monomial monomial_div(const Monomial &a, const Monomial &b) {
    Monomial m(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) m[v] = a[v] - b[v];
    return m;
}

struct GroebnerBounds {
    int max_degree = 64;
    std::size_t max_terms = 20000;
    std::size_t max_basis = 2000;
};

/// Fully reduced normal form of f modulo G.
inline Poly normal_form(Poly f, const std::vector<Poly> &G) {
    Poly r(f.nvars());
    while (!f.is_zero()) {
        const Monomial m = f.lm();
        const Rational c = f.lc();
        const Poly *div = nullptr;
        for (const auto &g : G)
            if (!g.is_zero() && divides(g.lm(), m)) {
                div = &g;
                break;
            }
        if (div) {
            f = f - div->shifted(monomial_div(m, div->lm()), c / div->lc());
        } else {
            r.add(m, c);
            Poly rest(f.nvars());
            for (auto it = std::next(f.terms().begin()); it != f.terms().end(); ++it) rest.add(it->first, it->second);
            f = std::move(rest);
        }
    }
    return r;
}

/// Reduced lexicographic Groebner basis (monic, sorted by leading monomial,
/// smallest first). Throws Undecided when a bound is exceeded.
inline std::vector<Poly> groebner_basis(const std::vector<Poly> &input, const GroebnerBounds &bounds = {}) {
    std::vector<Poly> G;
    for (const auto &p : input)
        if (!p.is_zero()) G.push_back(p.monic());
    if (G.empty()) return G;
    auto check = [&](const Poly &p) {
        if (p.total_degree() > bounds.max_degree) throw Undecided("Groebner basis exceeds the degree bound");
        if (p.size() > bounds.max_terms) throw Undecided("Groebner basis exceeds the term bound");
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) pairs.emplace_back(j, i);
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const Monomial &a = G[i].lm(), &b = G[j].lm();
        bool coprime = true;
        for (std::size_t v = 0; v < a.size(); ++v)
            if (a[v] && b[v]) coprime = false;
        if (coprime) continue;
        const Monomial l = monomial_lcm(a, b);
        Poly s = G[i].shifted(monomial_div(l, a), 1 / G[i].lc()) - G[j].shifted(monomial_div(l, b), 1 / G[j].lc());
        Poly r = normal_form(s, G);
        if (r.is_zero()) continue;
        check(r);
        G.push_back(r.monic());
        if (G.size() > bounds.max_basis) throw Undecided("Groebner basis exceeds the size bound");
        if (G.back().is_constant()) return {Poly::constant(G.back().nvars(), 1)};
        for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
    }
    // minimize
    std::vector<Poly> min;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(G[j].lm(), G[i].lm()) && (G[j].lm() != G[i].lm() || j < i)) redundant = true;
        }
        if (!redundant) min.push_back(G[i]);
    }
    // interreduce
    std::vector<Poly> red;
    for (std::size_t i = 0; i < min.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < min.size(); ++j)
            if (j != i) others.push_back(min[j]);
        red.push_back(normal_form(min[i], others).monic());
    }
    std::sort(red.begin(), red.end(), [](const Poly &a, const Poly &b) { return a.lm() < b.lm(); });
    return red;
}

inline bool is_unit_ideal(const std::vector<Poly> &G) { return G.size() == 1 && G[0].is_constant(); }

/// Zero-dimensional iff every variable has a pure power among the leading monomials.
inline bool is_zero_dimensional(const std::vector<Poly> &G, int nvars) {
    if (is_unit_ideal(G)) return true;
    for (int v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto &g : G) {
            const auto &m = g.lm();
            bool pure = m[v] > 0;
            for (int w = 0; w < nvars && pure; ++w)
                if (w != v && m[w]) pure = false;
            if (pure) found = true;
        }
        if (!found) return false;
    }
    return true;
}

/// Monomials outside the leading-term ideal (finite for zero-dimensional G).
inline std::vector<Monomial> standard_monomials(const std::vector<Poly> &G, int nvars, std::size_t limit = 100000) {
    std::vector<Monomial> out;
    if (is_unit_ideal(G)) return out;
    std::set<Monomial> seen;
    std::vector<Monomial> queue{Monomial(nvars, 0)};
    seen.insert(queue[0]);
    while (!queue.empty()) {
        Monomial m = queue.back();
        queue.pop_back();
        bool reducible = false;
        for (const auto &g : G)
            if (divides(g.lm(), m)) reducible = true;
        if (reducible) continue;
        out.push_back(m);
        if (out.size() > limit) throw Undecided("too many standard monomials");
        for (int v = 0; v < nvars; ++v) {
            Monomial n = m;
            ++n[v];
            if (seen.insert(n).second) queue.push_back(n);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Univariate polynomials: coefficient vectors, index = degree.

using UPoly = std::vector<Rational>;

inline void trim(UPoly &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const UPoly &p) { return static_cast<int>(p.size()) - 1; }

inline UPoly upoly_monic(UPoly p) {
    trim(p);
    if (p.empty()) return p;
    Rational l = p.back();
    for (auto &c : p) c /= l;
    return p;
}

inline UPoly derivative(const UPoly &p) {
    UPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    trim(d);
    return d;
}

/// Quotient and remainder.
inline std::pair<UPoly, UPoly> divmod(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    require(!b.empty(), "onedim", "division by zero polynomial");
    if (a.size() < b.size()) return {UPoly{}, a};
    UPoly q(a.size() - b.size() + 1, Rational(0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        Rational c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= c * b[k];
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline UPoly upoly_gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(a);
}

inline UPoly squarefree_part(const UPoly &p) {
    UPoly q = upoly_monic(p);
    if (degree(q) <= 0) return q;
    UPoly g = upoly_gcd(q, derivative(q));
    return upoly_monic(divmod(q, g).first);
}

inline Rational upoly_eval(const UPoly &p, const Rational &x) {
    Rational s = 0;
    for (std::size_t k = p.size(); k-- > 0;) s = s * x + p[k];
    return s;
}

inline std::vector<UPoly> sturm_sequence(const UPoly &p) {
    std::vector<UPoly> seq{p, derivative(p)};
    trim(seq[0]);
    while (!seq.back().empty()) {
        UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        for (auto &c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(r);
    }
    if (seq.back().empty()) seq.pop_back();
    return seq;
}

inline int sign_changes(const std::vector<UPoly> &seq, const Rational &x) {
    int changes = 0, prev = 0;
    for (const auto &p : seq) {
        int s = sgn(upoly_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

/// Number of distinct real roots in (a, b].
inline int count_real_roots(const std::vector<UPoly> &seq, const Rational &a, const Rational &b) {
    return sign_changes(seq, a) - sign_changes(seq, b);
}

inline Rational cauchy_bound(const UPoly &p) {
    Rational m = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) m = std::max(m, Rational(abs(p[k] / p.back())));
    return m + 1;
}

/// Disjoint intervals (a, b], each holding exactly one real root of squarefree p,
/// of width at most `width`.
inline std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly &p, const Rational &width) {
    std::vector<std::pair<Rational, Rational>> out;
    if (degree(p) < 1) return out;
    auto seq = sturm_sequence(p);
    const Rational B = cauchy_bound(p);
    std::vector<std::pair<Rational, Rational>> stack{{-B, B}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        const int k = count_real_roots(seq, a, b);
        if (k == 0) continue;
        if (k == 1 && b - a <= width) {
            out.emplace_back(a, b);
            continue;
        }
        Rational mid = (a + b) / 2;
        stack.push_back({mid, b});
        stack.push_back({a, mid});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The rational with the smallest denominator in the closed interval [a, b],
/// by the continued-fraction recursion.
inline Rational simplest_rational(const Rational &a, const Rational &b) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    if (Rational(fl) == a) return a;
    if (Rational(fl + 1) <= b) return Rational(fl + 1);
    return Rational(fl) + 1 / simplest_rational(1 / (b - fl), 1 / (a - fl));
}

/// Rational roots of p, each exactly verified.
inline std::vector<Rational> rational_roots(const UPoly &p_in) {
    UPoly p = squarefree_part(p_in);
    std::vector<Rational> out;
    if (degree(p) < 1) return out;
    // clear denominators to get the leading coefficient of a primitive integer polynomial
    Integer l = 1;
    for (const auto &c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> ints;
    for (const auto &c : p) ints.push_back(Rational(c * l).get_num());
    Integer g = 0;
    for (const auto &c : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    Integer lc = abs(ints.back() / g);
    const Rational width = Rational(1) / Rational(lc * lc * 2);
    for (const auto &[a, b] : isolate_real_roots(p, width)) {
        if (upoly_eval(p, b) == 0) {
            out.push_back(b);
            continue;
        }
        // a rational root has denominator dividing lc, and two such numbers are
        // further apart than the interval is wide
        Rational cand = simplest_rational(a, b);
        if (upoly_eval(p, cand) == 0) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::string upoly_str(const UPoly &p, const std::string &var) {
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        const Rational &c = p[k];
        if (c == 0) continue;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (abs(c) != 1 || k == 0) out += to_string(Rational(abs(c)));
        if (k > 0) out += (abs(c) != 1 ? "*" : "") + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return out.empty() ? "0" : out;
}

/// Univariate polynomial in variable v from a Poly supported on v alone.
inline UPoly to_upoly(const Poly &p, int v) {
    UPoly out;
    for (const auto &[m, c] : p.terms()) {
        if (static_cast<int>(out.size()) <= m[v]) out.resize(m[v] + 1, Rational(0));
        out[m[v]] += c;
    }
    trim(out);
    return out;
}

inline Poly from_upoly(const UPoly &u, int nvars, int v) {
    Poly p(nvars);
    for (std::size_t k = 0; k < u.size(); ++k) {
        Monomial m(nvars, 0);
        m[v] = static_cast<int>(k);
        p.add(m, u[k]);
    }
    return p;
}

/// Minimal polynomial of x_v modulo a zero-dimensional Groebner basis.
inline UPoly minimal_polynomial(const std::vector<Poly> &G, int nvars, int v) {
    const auto basis = standard_monomials(G, nvars);
    std::map<Monomial, std::size_t> pos;
    for (std::size_t k = 0; k < basis.size(); ++k) pos[basis[k]] = k;
    auto coords = [&](const Poly &p) {
        Vec c = zero_vec(basis.size());
        for (const auto &[m, val] : p.terms()) c[pos.at(m)] = val;
        return c;
    };
    std::vector<Vec> powers;
    Poly cur = Poly::constant(nvars, 1);
    const Poly x = Poly::variable(nvars, v);
    for (std::size_t k = 0; k <= basis.size(); ++k) {
        powers.push_back(coords(normal_form(cur, G)));
        CoordinateSolver solver(basis.size(), std::vector<Vec>(powers.begin(), powers.end() - 1));
        if (auto c = solver.coordinates(powers.back())) {
            UPoly mp(k + 1, Rational(0));
            for (std::size_t j = 0; j < k; ++j) mp[j] = -(*c)[j];
            mp[k] = 1;
            return mp;
        }
        cur = cur * x;
    }
    throw InvariantFailure("onedim", "minimal polynomial not found");
}

} // namespace walg
