#pragma once

#include <optional>
#include <utility>

#include "f1/arith.hpp"

namespace f1 {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
        IntMatrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw ValidationError("from_columns: column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw ValidationError("from_rows: row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector column(std::size_t j) const {
        IntVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    IntVector row(std::size_t i) const {
        return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntVector operator*(const IntVector& v) const {
        if (v.size() != cols_) throw ValidationError("matrix-vector product: dimension mismatch");
        IntVector r(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw ValidationError("matrix product: dimension mismatch");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if ((*this)(i, k) == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
            }
        return r;
    }

    bool operator==(const IntMatrix&) const = default;

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[dst] += c * row[src]
    void add_row(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// Result of a Smith normal form computation: left * A * right = diagonal.
struct SmithForm {
    IntMatrix diagonal;
    IntMatrix left;   // unimodular, rows x rows
    IntMatrix right;  // unimodular, cols x cols
    std::size_t rank = 0;

    /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
    std::vector<Int> invariants() const {
        std::vector<Int> d;
        for (std::size_t i = 0; i < rank; ++i) d.push_back(diagonal(i, i));
        return d;
    }
};

namespace detail {

// Eliminates the pivot row and column at (t, t), keeping P and Q in step.
inline bool clear_pivot_line(IntMatrix& D, IntMatrix& P, IntMatrix& Q, std::size_t t) {
    bool changed = false;
    for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (D(i, t) == 0) continue;
        Int qt = floor_div(D(i, t), D(t, t));
        D.add_row(i, t, -qt);
        P.add_row(i, t, -qt);
        if (D(i, t) != 0) {
            D.swap_rows(i, t);
            P.swap_rows(i, t);
            changed = true;
        }
    }
    for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (D(t, j) == 0) continue;
        Int qt = floor_div(D(t, j), D(t, t));
        D.add_col(j, t, -qt);
        Q.add_col(j, t, -qt);
        if (D(t, j) != 0) {
            D.swap_cols(j, t);
            Q.swap_cols(j, t);
            changed = true;
        }
    }
    return changed;
}

}  // namespace detail

/// Smith normal form with unimodular transforms.
inline SmithForm smith_normal_form(const IntMatrix& A) {
    IntMatrix D = A;
    IntMatrix P = IntMatrix::identity(A.rows());
    IntMatrix Q = IntMatrix::identity(A.cols());
    const std::size_t m = A.rows(), n = A.cols();
    std::size_t t = 0;
    while (t < m && t < n) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (D(i, j) != 0 && (!best || abs(D(i, j)) < abs(D(best->first, best->second)))) best = {{i, j}};
        if (!best) break;
        D.swap_rows(t, best->first);
        P.swap_rows(t, best->first);
        D.swap_cols(t, best->second);
        Q.swap_cols(t, best->second);

        for (;;) {
            while (detail::clear_pivot_line(D, P, Q, t)) {
            }
            // Divisibility: every trailing entry must be a multiple of the pivot.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < m && !bad_row; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            D.add_row(t, *bad_row, 1);
            P.add_row(t, *bad_row, 1);
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            P.negate_row(t);
        }
        ++t;
    }
    return SmithForm{std::move(D), std::move(P), std::move(Q), t};
}

/// Rank over Q.
inline std::size_t rank(const IntMatrix& A) { return smith_normal_form(A).rank; }

inline std::size_t rank_of(const std::vector<IntVector>& vectors, std::size_t dim) {
    if (vectors.empty()) return 0;
    return rank(IntMatrix::from_rows(vectors, dim));
}

/// Basis of the integer kernel {x in Z^cols : A x = 0}; the basis spans a saturated sublattice.
inline std::vector<IntVector> integer_kernel(const IntMatrix& A) {
    SmithForm s = smith_normal_form(A);
    std::vector<IntVector> basis;
    for (std::size_t j = s.rank; j < A.cols(); ++j) basis.push_back(s.right.column(j));
    return basis;
}

/// An integer solution of A x = b, if one exists.
inline std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b) {
    if (b.size() != A.rows()) throw ValidationError("solve_integer: dimension mismatch");
    SmithForm s = smith_normal_form(A);
    IntVector y = s.left * b;
    IntVector z(A.cols(), Int(0));
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (i < s.rank) {
            if (y[i] % s.diagonal(i, i) != 0) return std::nullopt;
            z[i] = y[i] / s.diagonal(i, i);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return s.right * z;
}

// ---------------------------------------------------------------------------
// Rational elimination

/// Reduced row echelon form over Q; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<RationalVector>& M, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
        std::size_t p = r;
        while (p < M.size() && M[p][c] == 0) ++p;
        if (p == M.size()) continue;
        std::swap(M[p], M[r]);
        Rational inv = Rational(1) / M[r][c];
        for (auto& x : M[r]) x *= inv;
        for (std::size_t i = 0; i < M.size(); ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rational f = M[i][c];
            for (std::size_t j = 0; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of {x : <row, x> = 0 for every row}, as primitive integer vectors.
inline std::vector<IntVector> rational_kernel(const std::vector<IntVector>& rows, std::size_t dim) {
    std::vector<RationalVector> M;
    for (const auto& r : rows) M.push_back(to_rational(r));
    auto pivots = rref(M, dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(dim, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -M[i][f];
        basis.push_back(primitive(v));
    }
    return basis;
}

/// Some rational solution of A x = b, if any.
inline std::optional<RationalVector> solve_rational(const IntMatrix& A, const RationalVector& b) {
    std::vector<RationalVector> M(A.rows(), RationalVector(A.cols() + 1));
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) M[i][j] = A(i, j);
        M[i][A.cols()] = b[i];
    }
    auto pivots = rref(M, A.cols() + 1);
    RationalVector x(A.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == A.cols()) return std::nullopt;
        x[pivots[i]] = M[i][A.cols()];
    }
    return x;
}

/// Inverse of a unimodular matrix; throws when the matrix is not invertible over Z.
inline IntMatrix unimodular_inverse(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw ValidationError("unimodular_inverse: matrix is not square");
    const std::size_t n = A.rows();
    std::vector<RationalVector> M(n, RationalVector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = A(i, j);
        M[i][n + i] = 1;
    }
    auto pivots = rref(M, 2 * n);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw ValidationError("unimodular_inverse: singular matrix");
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_integer(M[i][n + j])) throw ValidationError("unimodular_inverse: matrix is not unimodular");
            inv(i, j) = boost::multiprecision::numerator(M[i][n + j]);
        }
    return inv;
}

/// Lattice basis of the image A Z^cols, as columns of a rows x rank matrix.
inline IntMatrix image_basis(const IntMatrix& A) {
    SmithForm s = smith_normal_form(A);
    // A = left^{-1} D right^{-1}, so the image is spanned by d_i * (column i of left^{-1}).
    IntMatrix linv = unimodular_inverse(s.left);
    IntMatrix B(A.rows(), s.rank);
    for (std::size_t j = 0; j < s.rank; ++j)
        for (std::size_t i = 0; i < A.rows(); ++i) B(i, j) = linv(i, j) * s.diagonal(j, j);
    return B;
}

}  // namespace f1
