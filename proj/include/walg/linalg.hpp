#pragma once

#include "walg/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace walg {

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;

inline bool is_zero(const Vec &v) {
    for (const auto &c : v)
        if (c != 0) return false;
    return true;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v = zero_vec(n);
    v[i] = 1;
    return v;
}

inline void axpy(Vec &y, const Rational &a, const Vec &x) {
    if (a == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) y[i] += a * x[i];
}

inline Vec scaled(Vec v, const Rational &a) {
    for (auto &c : v) c *= a;
    return v;
}

/// In-place reduced row echelon form. Returns pivot columns in row order.
inline std::vector<std::size_t> rref(Matrix &a, std::size_t ncols_to_pivot = SIZE_MAX) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t ncols = std::min(a[0].size(), ncols_to_pivot);
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t sel = row;
        while (sel < a.size() && a[sel][col] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[row], a[sel]);
        Rational inv = 1 / a[row][col];
        for (auto &c : a[row]) c *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t c = col; c < a[r].size(); ++c)
                if (a[row][c] != 0) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(Matrix a) { return rref(a).size(); }

/// Basis of {v : A v = 0}; each vector has a single free coordinate equal to 1.
inline std::vector<Vec> nullspace(Matrix a, std::size_t ncols) {
    std::vector<Vec> out;
    if (a.empty()) {
        for (std::size_t i = 0; i < ncols; ++i) out.push_back(unit_vec(ncols, i));
        return out;
    }
    auto piv = rref(a);
    std::vector<int> pivot_row(ncols, -1);
    for (std::size_t r = 0; r < piv.size(); ++r) pivot_row[piv[r]] = static_cast<int>(r);
    for (std::size_t free = 0; free < ncols; ++free) {
        if (pivot_row[free] >= 0) continue;
        Vec v = zero_vec(ncols);
        v[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][free];
        out.push_back(std::move(v));
    }
    return out;
}

struct LinearSolution {
    Vec particular;
    std::size_t nullity = 0;
};

/// Solves A x = b. Empty optional when inconsistent.
inline std::optional<LinearSolution> solve(const Matrix &a, const Vec &b, std::size_t ncols) {
    Matrix aug;
    aug.reserve(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        Vec row = a[r];
        row.push_back(b[r]);
        aug.push_back(std::move(row));
    }
    if (aug.empty()) return LinearSolution{zero_vec(ncols), ncols};
    auto piv = rref(aug, ncols);
    for (std::size_t r = piv.size(); r < aug.size(); ++r)
        if (aug[r][ncols] != 0) return std::nullopt;
    LinearSolution sol{zero_vec(ncols), ncols - piv.size()};
    for (std::size_t r = 0; r < piv.size(); ++r) sol.particular[piv[r]] = aug[r][ncols];
    return sol;
}

inline std::optional<Matrix> inverse(const Matrix &a) {
    const std::size_t n = a.size();
    Matrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i] = a[i];
        aug[i].resize(2 * n, Rational(0));
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug, n);
    if (piv.size() != n) return std::nullopt;
    Matrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = Vec(aug[i].begin() + n, aug[i].end());
    return inv;
}

inline Rational determinant(Matrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(a[sel], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

/// Incrementally maintained echelon basis of a subspace of Q^n, used for span
/// membership and coordinate extraction.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return rows_.size(); }

    /// Reduces v against the current basis; returns the remainder.
    Vec reduce(Vec v) const {
        for (const auto &[col, row] : rows_) {
            if (v[col] == 0) continue;
            Rational f = v[col];
            axpy(v, -f, row.vec);
        }
        return v;
    }

    bool contains(const Vec &v) const { return is_zero(reduce(v)); }

    /// Adds v if independent. Returns true when the span grew.
    bool insert(const Vec &v) {
        Vec rem = reduce(v);
        std::size_t col = 0;
        while (col < dim_ && rem[col] == 0) ++col;
        if (col == dim_) return false;
        Rational inv = 1 / rem[col];
        for (auto &c : rem) c *= inv;
        for (auto &[c, row] : rows_) {
            if (row.vec[col] != 0) axpy(row.vec, -Rational(row.vec[col]), rem);
        }
        rows_.emplace(col, Row{std::move(rem)});
        return true;
    }

private:
    struct Row {
        Vec vec;
    };
    std::size_t dim_;
    std::map<std::size_t, Row> rows_;
};

/// Expresses vectors in a fixed (possibly non-spanning) family by tracking the
/// combination that produced each echelon row.
class CoordinateSolver {
public:
    CoordinateSolver(std::size_t dim, const std::vector<Vec> &family) : dim_(dim), k_(family.size()) {
        for (std::size_t i = 0; i < family.size(); ++i) add(family[i], unit_vec(k_, i));
    }

    /// Coefficients c with sum c_i family_i = v, or nullopt if v is outside the span.
    std::optional<Vec> coordinates(Vec v) const {
        Vec coeff = zero_vec(k_);
        for (const auto &[col, row] : rows_) {
            if (v[col] == 0) continue;
            Rational f = v[col];
            axpy(v, -f, row.first);
            axpy(coeff, f, row.second);
        }
        if (!is_zero(v)) return std::nullopt;
        return coeff;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    void add(Vec v, Vec combo) {
        for (const auto &[col, row] : rows_) {
            if (v[col] == 0) continue;
            Rational f = v[col];
            axpy(v, -f, row.first);
            axpy(combo, -f, row.second);
        }
        std::size_t col = 0;
        while (col < dim_ && v[col] == 0) ++col;
        if (col == dim_) return;
        Rational inv = 1 / v[col];
        for (auto &c : v) c *= inv;
        for (auto &c : combo) c *= inv;
        rows_.emplace(col, std::make_pair(std::move(v), std::move(combo)));
    }

    std::size_t dim_, k_;
    std::map<std::size_t, std::pair<Vec, Vec>> rows_;
};

/// Sparse row-echelon system over Q for many unknowns with lazily appended
/// equations. Column `unknowns` holds the right-hand side.
class SparseSystem {
public:
    using Row = std::map<std::size_t, Rational>;

    explicit SparseSystem(std::size_t unknowns) : n_(unknowns) {}

    std::size_t unknowns() const { return n_; }
    std::size_t rank() const { return pivots_.size(); }
    bool inconsistent() const { return inconsistent_; }

    /// Adds sum_j row[j] x_j = rhs. Returns true if the rank increased.
    bool add_equation(Row row, const Rational &rhs) {
        if (rhs != 0) row[n_] = rhs;
        reduce(row);
        if (row.empty()) return false;
        auto lead = row.begin();
        if (lead->first == n_) {
            inconsistent_ = true;
            return false;
        }
        Rational inv = 1 / lead->second;
        for (auto &[c, v] : row) v *= inv;
        pivots_.emplace(lead->first, std::move(row));
        return true;
    }

    /// Residual of an equation against the current echelon form; zero means
    /// the equation is implied.
    bool implied(Row row, const Rational &rhs) const {
        if (rhs != 0) row[n_] = rhs;
        reduce(row);
        return row.empty();
    }

    /// Back substitution with free unknowns set to zero.
    Vec particular_solution() const {
        Vec x = zero_vec(n_);
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const auto &row = it->second;
            Rational val = 0;
            for (const auto &[c, v] : row) {
                if (c == it->first) continue;
                if (c == n_)
                    val += v;
                else
                    val -= v * x[c];
            }
            x[it->first] = val;
        }
        return x;
    }

private:
    void reduce(Row &row) const {
        // Pivot rows only have entries at or after their pivot column, so a
        // single left-to-right sweep eliminates every pivot column.
        auto it = row.begin();
        while (it != row.end()) {
            if (it->second == 0) {
                it = row.erase(it);
                continue;
            }
            auto p = it->first == n_ ? pivots_.end() : pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            Rational f = it->second;
            for (const auto &[c, v] : p->second) row[c] -= f * v;
            it = row.erase(it);
        }
    }

    std::size_t n_;
    std::map<std::size_t, Row> pivots_;
    bool inconsistent_ = false;
};

} // namespace walg
