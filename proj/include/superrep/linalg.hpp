#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superrep/matrix.hpp"

namespace superrep {

struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivots;  // pivot column per pivot row, strictly increasing
};

// Reduced row echelon form by exact Gauss-Jordan. Deterministic: pivots are
// the first nonzero entry in column order.
inline RrefResult rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
        Rational inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

// Basis of the null space {v : m v = 0}, as columns. Canonical RREF-derived
// basis: free variables set to 1 in column order.
inline Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(m.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t f = free_cols[j];
        k(f, j) = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) k(r.pivots[i], j) = -r.mat(i, f);
    }
    return k;
}

struct AffineSolution {
    Matrix particular;  // n x 1
    Matrix kernel;      // n x nullity
};

// Solves A x = b. Absence of a solution is a value, not an error. The
// particular solution is the canonical one with all free variables zero.
inline std::optional<AffineSolution> solve_affine(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || b.cols() != 1) throw error("solve_affine: shape mismatch");
    RrefResult r = rref(Matrix::hcat(a, b));
    for (std::size_t c : r.pivots)
        if (c == a.cols()) return std::nullopt;  // pivot in the rhs column
    Matrix x(a.cols(), 1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x(r.pivots[i], 0) = r.mat(i, a.cols());
    return AffineSolution{std::move(x), kernel_basis(a)};
}

// Solves A X = B column by column (canonical particular solutions).
inline std::optional<Matrix> solve_multi(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw error("solve_multi: shape mismatch");
    RrefResult r = rref(Matrix::hcat(a, b));
    std::vector<std::size_t> where(a.cols(), SIZE_MAX);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] >= a.cols()) return std::nullopt;
        where[r.pivots[i]] = i;
    }
    // Rows of the rhs block below the pivot rows must vanish.
    for (std::size_t i = r.pivots.size(); i < r.mat.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!r.mat(i, a.cols() + j).is_zero()) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (where[c] != SIZE_MAX)
            for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = r.mat(where[c], a.cols() + j);
    return x;
}

// Incrementally maintained reduced row space; the workhorse behind span
// membership, image flags and greedy chain extraction. Rows are kept fully
// reduced (RREF of everything inserted so far), so `basis()` is canonical.
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t ambient_dim) : n_(ambient_dim) {}

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return rows_.size(); }

    // Reduces v against the span; returns the residual (zero iff contained).
    std::vector<Rational> reduce(std::vector<Rational> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& c = v[pivot_[i]];
            if (c.is_zero()) continue;
            Rational f = c;
            for (std::size_t j = 0; j < n_; ++j) v[j] -= f * rows_[i][j];
        }
        return v;
    }

    bool contains(const std::vector<Rational>& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (!x.is_zero()) return false;
        return true;
    }
    bool contains_cols(const Matrix& m) const {
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!contains(m.col(j))) return false;
        return true;
    }

    // Inserts v; returns true if the span grew.
    bool insert(std::vector<Rational> v) {
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < n_ && v[p].is_zero()) ++p;
        if (p == n_) return false;
        Rational inv = v[p].inverse();
        for (auto& x : v) x *= inv;
        // Back-substitute into existing rows to stay in RREF.
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rational f = rows_[i][p];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) rows_[i][j] -= f * v[j];
        }
        std::size_t pos = 0;
        while (pos < pivot_.size() && pivot_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivot_.insert(pivot_.begin() + pos, p);
        return true;
    }

    void insert_cols(const Matrix& m) {
        for (std::size_t j = 0; j < m.cols(); ++j) insert(m.col(j));
    }

    const std::vector<std::size_t>& pivots() const { return pivot_; }

    // Canonical basis of the span, rows returned as columns in pivot order.
    Matrix basis() const {
        Matrix b(n_, rows_.size());
        for (std::size_t j = 0; j < rows_.size(); ++j)
            for (std::size_t i = 0; i < n_; ++i) b(i, j) = rows_[j][i];
        return b;
    }

private:
    std::size_t n_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivot_;  // sorted ascending, parallel to rows_
};

// Canonical basis of the column span of m.
inline Matrix span_basis(const Matrix& m) {
    EchelonSpan s(m.rows());
    s.insert_cols(m);
    return s.basis();
}

inline bool same_span(const Matrix& a, const Matrix& b) {
    EchelonSpan sa(a.rows()), sb(b.rows());
    sa.insert_cols(a);
    sb.insert_cols(b);
    return sa.dim() == sb.dim() && sa.contains_cols(b);
}

}  // namespace superrep
