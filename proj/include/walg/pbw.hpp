#pragma once

// PBW normal forms in U(g) and in Q_chi = U(g)/I_chi for an ordered basis
// x_0..x_{n-1} with structure constants [x_i, x_j] = sum c_ij^k x_k.
//
// A monomial x^a is stored as the word of its letters in nondecreasing order.
// In Q_chi mode, letters at or above the cutoff lie in the nilpotent
// subalgebra and are replaced by their chi values once moved to the right.

#include "walg/basisbuilder.hpp"
#include "walg/rational.hpp"
#include "walg/rootsystem.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

namespace walg {

using Word = std::string; // letters stored as unsigned char

inline int letter(const Word &w, std::size_t p) { return static_cast<unsigned char>(w[p]); }

inline Word make_word(std::vector<int> letters) {
    std::sort(letters.begin(), letters.end());
    Word w;
    for (int l : letters) w.push_back(static_cast<char>(static_cast<unsigned char>(l)));
    return w;
}

inline std::vector<int> word_letters(const Word &w) {
    std::vector<int> out;
    for (std::size_t p = 0; p < w.size(); ++p) out.push_back(letter(w, p));
    return out;
}

/// Exponent vector of length n.
inline std::vector<int> exponents(const Word &w, int n) {
    std::vector<int> a(n, 0);
    for (std::size_t p = 0; p < w.size(); ++p) ++a[letter(w, p)];
    return a;
}

using LinComb = std::unordered_map<Word, Rational>;

inline void add_term(LinComb &acc, const Word &w, const Rational &c) {
    if (c == 0) return;
    auto [it, fresh] = acc.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) acc.erase(it);
}

inline void add_scaled(LinComb &acc, const LinComb &x, const Rational &c) {
    if (c == 0) return;
    for (const auto &[w, v] : x) add_term(acc, w, c * v);
}

inline LinComb scaled(const LinComb &x, const Rational &c) {
    LinComb out;
    add_scaled(out, x, c);
    return out;
}

inline LinComb difference(const LinComb &a, const LinComb &b) {
    LinComb out = a;
    add_scaled(out, b, -1);
    return out;
}

inline LinComb constant(const Rational &c) {
    LinComb out;
    add_term(out, Word(), c);
    return out;
}

inline LinComb single(int k) {
    LinComb out;
    add_term(out, make_word({k}), 1);
    return out;
}

/// Terms sorted by word, for deterministic output.
inline std::vector<std::pair<Word, Rational>> sorted_terms(const LinComb &x) {
    std::vector<std::pair<Word, Rational>> out(x.begin(), x.end());
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
}

/// Kazhdan degree sum (n_i + 2) of a word.
inline int kazhdan_degree(const Word &w, const std::vector<int> &n) {
    int d = 0;
    for (std::size_t p = 0; p < w.size(); ++p) d += n[letter(w, p)] + 2;
    return d;
}

constexpr int kMinusInfinity = std::numeric_limits<int>::min();

inline int kazhdan_degree(const LinComb &x, const std::vector<int> &n) {
    int d = kMinusInfinity;
    for (const auto &[w, c] : x) d = std::max(d, kazhdan_degree(w, n));
    return d;
}

class PbwEngine {
public:
    /// Full enveloping algebra: every letter survives.
    static PbwEngine universal(const std::vector<std::vector<SparseBracket>> &table) {
        const int n = static_cast<int>(table.size());
        return PbwEngine(table, n, std::vector<Rational>(n, Rational(0)));
    }

    /// Q_chi for a graded basis.
    static PbwEngine quotient(const GradedBasis &B) { return PbwEngine(B.table, B.cutoff(), B.chi); }

    PbwEngine(const std::vector<std::vector<SparseBracket>> &table, int cutoff, std::vector<Rational> chi)
        : table_(&table), cutoff_(cutoff), chi_(std::move(chi)) {
        if (table.size() > 255) throw InvalidInput("basis too large for word encoding");
    }

    int cutoff() const { return cutoff_; }
    int dim() const { return static_cast<int>(table_->size()); }
    std::size_t cache_size() const { return memo_.size(); }
    void clear_cache() { memo_.clear(); }

    /// x_k * w in normal form.
    const LinComb &act(int k, const Word &w) {
        Word key;
        key.reserve(w.size() + 1);
        key.push_back(static_cast<char>(static_cast<unsigned char>(k)));
        key += w;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        LinComb out;
        if (w.empty()) {
            if (k < cutoff_)
                add_term(out, key, 1);
            else
                add_term(out, Word(), chi_[k]);
        } else if (k <= letter(w, 0)) {
            add_term(out, key, 1);
        } else {
            const int w0 = letter(w, 0);
            const Word rest = w.substr(1);
            // x_k x_{w0} rest = x_{w0} (x_k rest) + [x_k, x_{w0}] rest
            const LinComb inner = act(k, rest);
            for (const auto &[t, c] : inner) add_scaled(out, act(w0, t), c);
            for (const auto &term : (*table_)[k][w0]) add_scaled(out, act(term.index, rest), term.coeff);
        }
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    LinComb act(int k, const LinComb &u) {
        LinComb out;
        for (const auto &[w, c] : u) add_scaled(out, act(k, w), c);
        return out;
    }

    /// Word (read as an ordered product, not necessarily sorted) times v.
    LinComb apply_word(const Word &u, const LinComb &v) {
        LinComb cur = v;
        for (std::size_t p = u.size(); p-- > 0;) cur = act(letter(u, p), cur);
        return cur;
    }

    /// u * v; in quotient mode v is a coset representative.
    LinComb multiply(const LinComb &u, const LinComb &v) {
        LinComb out;
        for (const auto &[w, c] : u) add_scaled(out, apply_word(w, v), c);
        return out;
    }

    /// Image of a U(g) element in Q_chi (or its normal form in U(g)).
    LinComb reduce(const LinComb &u) { return multiply(u, constant(1)); }

    /// [x_k, q] in Q_chi for x_k in the nilpotent subalgebra: (x_k - chi_k) q.
    LinComb ad_nilpotent(int k, const LinComb &q) {
        if (k < cutoff_) throw InvalidInput("ad_in_quotient needs a letter of the nilpotent subalgebra");
        LinComb out = act(k, q);
        add_scaled(out, q, -chi_[k]);
        return out;
    }

    /// Commutator u v - v u of two elements whose words only use surviving letters.
    LinComb commutator(const LinComb &u, const LinComb &v) {
        LinComb out = multiply(u, v);
        add_scaled(out, multiply(v, u), -1);
        return out;
    }

private:
    const std::vector<std::vector<SparseBracket>> *table_;
    int cutoff_;
    std::vector<Rational> chi_;
    std::unordered_map<Word, LinComb> memo_;
};

/// "x3x10^2"-style display of a word over 1-based names.
inline std::string word_name(const Word &w, const std::string &var = "x") {
    std::string out;
    std::size_t p = 0;
    while (p < w.size()) {
        std::size_t q = p;
        while (q < w.size() && w[q] == w[p]) ++q;
        out += var + std::to_string(letter(w, p) + 1);
        if (q - p > 1) out += "^" + std::to_string(q - p);
        p = q;
    }
    return out;
}

inline std::string format_lincomb(const LinComb &x, const std::string &var = "x") {
    if (x.empty()) return "0";
    std::string out;
    for (const auto &[w, c] : sorted_terms(x)) {
        std::string mag = to_string(Rational(abs(c)));
        const bool unit = abs(c) == 1 && !w.empty();
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (!unit) out += mag;
        if (!w.empty()) out += (unit ? "" : "*") + word_name(w, var);
    }
    return out;
}

} // namespace walg
