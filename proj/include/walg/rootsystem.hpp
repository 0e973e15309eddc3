#pragma once

// Root systems of simple Lie algebras and Chevalley-basis structure constants.
//
// Basis layout of a Chevalley basis with N positive roots and rank l:
//   [0, N)        e_alpha for the positive roots, in root order
//   [N, 2N)       e_{-alpha}, same order
//   [2N, 2N + l)  h_i = h_{alpha_i}
// Root order: ascending height, ties broken by the coefficient vector in
// descending lexicographic order (so simple roots come first, in Bourbaki
// numbering).
//
// Signs: N_{alpha,beta} = +(p+1) on every extraspecial pair; everything else
// follows from the Chevalley relations.

#include "walg/linalg.hpp"
#include "walg/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace walg {

using Root = std::vector<int>;

struct RootSystem {
    char type = 'A';
    int rank = 0;
    std::vector<std::vector<int>> gram;   // (alpha_i, alpha_j)
    std::vector<std::vector<int>> cartan; // <alpha_i, alpha_j^vee>
    std::vector<Root> roots;              // positive roots then their negatives
    std::map<Root, int> index;

    int num_positive() const { return static_cast<int>(roots.size()) / 2; }
    int num_roots() const { return static_cast<int>(roots.size()); }
    bool is_positive(int a) const { return a < num_positive(); }
    int negative_of(int a) const { return a < num_positive() ? a + num_positive() : a - num_positive(); }

    std::optional<int> find(const Root &r) const {
        auto it = index.find(r);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }

    int inner(const Root &a, const Root &b) const {
        int s = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) s += a[i] * gram[i][j] * b[j];
        return s;
    }
    int length2(int a) const { return inner(roots[a], roots[a]); }

    /// <a, b^vee> = 2(a,b)/(b,b)
    int pairing(const Root &a, const Root &b) const { return 2 * inner(a, b) / inner(b, b); }

    int height(int a) const { return std::accumulate(roots[a].begin(), roots[a].end(), 0); }

    /// Coordinates of the coroot of roots[a] against the simple coroots.
    std::vector<int> coroot(int a) const {
        std::vector<int> c(rank);
        const int l2 = length2(a);
        for (int i = 0; i < rank; ++i) c[i] = roots[a][i] * gram[i][i] / l2;
        return c;
    }

    std::string root_label(int a) const {
        std::string s = "(";
        for (int i = 0; i < rank; ++i) s += (i ? "," : "") + std::to_string(roots[a][i]);
        return s + ")";
    }
};

inline Root add_roots(const Root &a, const Root &b) {
    Root c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}
inline Root negate_root(Root a) {
    for (auto &x : a) x = -x;
    return a;
}

namespace detail {

inline std::vector<std::vector<int>> simple_gram(char type, int rank) {
    const auto bad = [&] {
        return InvalidInput(std::string("invalid simple type ") + type + std::to_string(rank));
    };
    std::vector<std::vector<int>> g(rank, std::vector<int>(rank, 0));
    auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
    switch (type) {
    case 'A':
        if (rank < 1 || rank > 8) throw bad();
        for (int i = 0; i < rank; ++i) g[i][i] = 2;
        for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -1);
        break;
    case 'B':
        if (rank < 2 || rank > 8) throw bad();
        for (int i = 0; i < rank; ++i) g[i][i] = i + 1 < rank ? 4 : 2;
        for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -2);
        break;
    case 'C':
        if (rank < 2 || rank > 8) throw bad();
        for (int i = 0; i < rank; ++i) g[i][i] = i + 1 < rank ? 2 : 4;
        for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1);
        link(rank - 2, rank - 1, -2);
        break;
    case 'D':
        if (rank < 4 || rank > 8) throw bad();
        for (int i = 0; i < rank; ++i) g[i][i] = 2;
        for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1);
        link(rank - 3, rank - 1, -1);
        break;
    case 'E':
        if (rank < 6 || rank > 8) throw bad();
        for (int i = 0; i < rank; ++i) g[i][i] = 2;
        link(0, 2, -1);
        link(1, 3, -1);
        for (int i = 2; i + 1 < rank; ++i) link(i, i + 1, -1);
        break;
    case 'F':
        if (rank != 4) throw bad();
        g[0][0] = g[1][1] = 4;
        g[2][2] = g[3][3] = 2;
        link(0, 1, -2);
        link(1, 2, -2);
        link(2, 3, -1);
        break;
    case 'G':
        if (rank != 2) throw bad();
        g[0][0] = 2;
        g[1][1] = 6;
        link(0, 1, -3);
        break;
    default:
        throw bad();
    }
    return g;
}

} // namespace detail

inline std::size_t classical_root_count(char type, int rank) {
    const long l = rank;
    switch (type) {
    case 'A': return static_cast<std::size_t>(l * (l + 1));
    case 'B':
    case 'C': return static_cast<std::size_t>(2 * l * l);
    case 'D': return static_cast<std::size_t>(2 * l * (l - 1));
    case 'E': return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
    }
    return 0;
}

inline RootSystem build_root_system(char type, int rank) {
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    rs.gram = detail::simple_gram(type, rank);
    rs.cartan.assign(rank, std::vector<int>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) rs.cartan[i][j] = 2 * rs.gram[i][j] / rs.gram[j][j];

    // Closure under simple reflections strings, level by level.
    std::vector<std::vector<Root>> levels(1);
    std::map<Root, bool> seen;
    for (int i = 0; i < rank; ++i) {
        Root r(rank, 0);
        r[i] = 1;
        levels[0].push_back(r);
        seen[r] = true;
    }
    for (std::size_t h = 0; h < levels.size(); ++h) {
        std::vector<Root> next;
        for (const auto &a : levels[h]) {
            for (int i = 0; i < rank; ++i) {
                int p = 0;
                Root down = a;
                while (true) {
                    down[i] -= 1;
                    if (!seen.count(down)) break;
                    ++p;
                }
                int pair = 0;
                for (int j = 0; j < rank; ++j) pair += a[j] * rs.cartan[j][i];
                const int q = p - pair;
                if (q > 0) {
                    Root up = a;
                    up[i] += 1;
                    if (!seen.count(up)) {
                        seen[up] = true;
                        next.push_back(up);
                    }
                }
            }
        }
        if (next.empty()) break;
        levels.push_back(std::move(next));
    }
    std::vector<Root> pos;
    for (auto &lvl : levels) {
        std::sort(lvl.begin(), lvl.end(), std::greater<>());
        pos.insert(pos.end(), lvl.begin(), lvl.end());
    }
    rs.roots = pos;
    for (const auto &a : pos) rs.roots.push_back(negate_root(a));
    for (int a = 0; a < rs.num_roots(); ++a) rs.index[rs.roots[a]] = a;
    if (static_cast<std::size_t>(rs.num_roots()) != classical_root_count(type, rank))
        throw InvariantFailure("rootsystem", "root count mismatch for " + std::string(1, type) + std::to_string(rank));
    return rs;
}

inline RootSystem build_root_system(const std::string &type, int rank) {
    if (type.size() != 1) throw InvalidInput("invalid simple type " + type);
    return build_root_system(static_cast<char>(std::toupper(static_cast<unsigned char>(type[0]))), rank);
}

struct StructureTerm {
    int index;
    Rational coeff;
};
using SparseBracket = std::vector<StructureTerm>;

/// A Lie algebra given by structure constants on an ordered basis.
struct LieAlgebraData {
    RootSystem roots;
    std::vector<std::string> labels;
    std::vector<std::vector<SparseBracket>> table; // table[i][j] = [b_i, b_j]
    Matrix killing;

    int dim() const { return static_cast<int>(labels.size()); }
    int cartan_offset() const { return roots.num_roots(); }
    bool is_cartan(int i) const { return i >= cartan_offset(); }

    Vec bracket(const Vec &x, const Vec &y) const {
        Vec out = zero_vec(dim());
        for (int i = 0; i < dim(); ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim(); ++j) {
                if (y[j] == 0) continue;
                Rational c = x[i] * y[j];
                for (const auto &t : table[i][j]) out[t.index] += c * t.coeff;
            }
        }
        return out;
    }

    Rational killing_form(const Vec &x, const Vec &y) const {
        Rational s = 0;
        for (int i = 0; i < dim(); ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim(); ++j)
                if (y[j] != 0) s += x[i] * killing[i][j] * y[j];
        }
        return s;
    }

    /// Degree-zero part of a Chevalley vector's support: root of a basis index,
    /// or nullopt for Cartan elements.
    std::optional<int> root_of(int i) const {
        if (is_cartan(i)) return std::nullopt;
        return i;
    }
};

/// Largest p with beta - p*alpha a root.
inline int string_down(const RootSystem &rs, const Root &alpha, const Root &beta) {
    int p = 0;
    Root cur = beta;
    while (true) {
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= alpha[i];
        if (!rs.find(cur)) return p;
        ++p;
    }
}

namespace detail {

class ChevalleySigns {
public:
    explicit ChevalleySigns(const RootSystem &rs) : rs_(rs) {
        const int np = rs.num_positive();
        // Process positive roots by height so that every referenced pair is known.
        for (int xi = 0; xi < np; ++xi) {
            std::vector<std::pair<int, int>> special;
            for (int a = 0; a < xi; ++a) {
                Root rest = rs.roots[xi];
                for (int i = 0; i < rs.rank; ++i) rest[i] -= rs.roots[a][i];
                auto b = rs.find(rest);
                if (b && rs.is_positive(*b) && a < *b) special.emplace_back(a, *b);
            }
            if (special.empty()) continue;
            const auto [g, d] = special.front();
            const int ngd = string_down(rs, rs.roots[g], rs.roots[d]) + 1;
            pos_[{g, d}] = ngd;
            pos_[{d, g}] = -ngd;
            const Rational xi2 = rs.length2(xi);
            for (std::size_t k = 1; k < special.size(); ++k) {
                const auto [a, b] = special[k];
                const int mg = rs.negative_of(g), md = rs.negative_of(d);
                Rational acc = 0;
                if (auto bg = sum(b, mg)) acc += Rational(n(b, mg) * n(a, md), rs.length2(*bg));
                if (auto ag = sum(a, mg)) acc += Rational(n(mg, a) * n(b, md), rs.length2(*ag));
                Rational val = xi2 * acc / ngd;
                val.canonicalize();
                if (!is_integer(val))
                    throw InvariantFailure("rootsystem", "non-integral structure constant");
                const int v = static_cast<int>(val.get_num().get_si());
                pos_[{a, b}] = v;
                pos_[{b, a}] = -v;
            }
        }
    }

    std::optional<int> sum(int a, int b) const { return rs_.find(add_roots(rs_.roots[a], rs_.roots[b])); }

    /// N_{a,b} for arbitrary roots with a+b a root.
    int n(int a, int b) const {
        const bool pa = rs_.is_positive(a), pb = rs_.is_positive(b);
        if (pa && pb) return pos_.at({a, b});
        if (!pa && !pb) return -n(rs_.negative_of(a), rs_.negative_of(b));
        if (!pa) return -n(b, a);
        const int z = *sum(a, b);
        if (rs_.is_positive(z)) {
            // N_{a,b} = -|z|^2/|a|^2 N_{-b,z}
            return exact(-rs_.length2(z) * n(rs_.negative_of(b), z), rs_.length2(a));
        }
        // N_{a,b} = |z|^2/|b|^2 N_{-z,a}
        return exact(rs_.length2(z) * n(rs_.negative_of(z), a), rs_.length2(b));
    }

private:
    static int exact(int num, int den) {
        if (num % den != 0) throw InvariantFailure("rootsystem", "non-integral structure constant");
        return num / den;
    }
    const RootSystem &rs_;
    std::map<std::pair<int, int>, int> pos_;
};

inline Matrix killing_matrix(const std::vector<std::vector<SparseBracket>> &table, int dim) {
    // kappa(b_i, b_j) = sum_k coefficient of b_k in [b_i, [b_j, b_k]]
    Matrix kappa(dim, zero_vec(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            Rational s = 0;
            for (int k = 0; k < dim; ++k)
                for (const auto &t : table[j][k])
                    for (const auto &u : table[i][t.index])
                        if (u.index == k) s += t.coeff * u.coeff;
            kappa[i][j] = kappa[j][i] = s;
        }
    return kappa;
}

} // namespace detail

inline LieAlgebraData chevalley_constants(const RootSystem &rs) {
    LieAlgebraData L;
    L.roots = rs;
    const int nr = rs.num_roots(), np = rs.num_positive(), l = rs.rank;
    const int dim = nr + l;
    for (int a = 0; a < nr; ++a) L.labels.push_back("e" + rs.root_label(a));
    for (int i = 0; i < l; ++i) L.labels.push_back("h" + std::to_string(i + 1));
    L.table.assign(dim, std::vector<SparseBracket>(dim));
    detail::ChevalleySigns signs(rs);
    std::vector<Root> simple(l, Root(l, 0));
    for (int i = 0; i < l; ++i) simple[i][i] = 1;

    for (int a = 0; a < nr; ++a) {
        for (int b = 0; b < nr; ++b) {
            if (b == rs.negative_of(a)) {
                // [e_a, e_{-a}] = h_a; for negative a this is -h_{-a}
                const int pos = rs.is_positive(a) ? a : b;
                const int sgn = rs.is_positive(a) ? 1 : -1;
                auto cr = rs.coroot(pos);
                for (int i = 0; i < l; ++i)
                    if (cr[i] != 0) L.table[a][b].push_back({nr + i, Rational(sgn * cr[i])});
                continue;
            }
            if (auto c = signs.sum(a, b)) L.table[a][b].push_back({*c, Rational(signs.n(a, b))});
        }
        for (int i = 0; i < l; ++i) {
            const int v = rs.pairing(rs.roots[a], simple[i]);
            if (v == 0) continue;
            L.table[nr + i][a].push_back({a, Rational(v)});
            L.table[a][nr + i].push_back({a, Rational(-v)});
        }
    }
    (void)np;
    L.killing = detail::killing_matrix(L.table, dim);
    return L;
}

/// Rescales basis vector i by s_i (nonzero). Structure constants transform as
/// c'^k_{ij} = s_i s_j / s_k c^k_{ij}. Used to pass between sign conventions.
inline LieAlgebraData rescale_basis(const LieAlgebraData &L, const std::vector<Rational> &s) {
    LieAlgebraData out = L;
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j)
            for (auto &t : out.table[i][j]) t.coeff = t.coeff * s[i] * s[j] / s[t.index];
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j) out.killing[i][j] = L.killing[i][j] * s[i] * s[j];
    return out;
}

/// Flips e_alpha and e_{-alpha} together for every positive root with
/// sign[alpha] = -1. Preserves [e_alpha, e_{-alpha}] = h_alpha.
inline LieAlgebraData flip_root_signs(const LieAlgebraData &L, const std::vector<int> &positive_signs) {
    std::vector<Rational> s(L.dim(), Rational(1));
    const int np = L.roots.num_positive();
    for (int a = 0; a < np; ++a) {
        s[a] = positive_signs.at(a);
        s[a + np] = positive_signs.at(a);
    }
    return rescale_basis(L, s);
}

inline Rational killing_form(const LieAlgebraData &L, const Vec &x, const Vec &y) { return L.killing_form(x, y); }

} // namespace walg
