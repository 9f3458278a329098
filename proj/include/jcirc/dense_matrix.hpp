#ifndef JCIRC_DENSE_MATRIX_HPP
#define JCIRC_DENSE_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "jcirc/rational.hpp"

namespace jcirc {

struct DimensionMismatchError : std::invalid_argument {
    DimensionMismatchError(std::size_t ar, std::size_t ac, std::size_t br, std::size_t bc)
        : std::invalid_argument("dimension mismatch: " + std::to_string(ar) + "x" +
                                std::to_string(ac) + " vs " + std::to_string(br) + "x" +
                                std::to_string(bc)),
          a_rows(ar), a_cols(ac), b_rows(br), b_cols(bc) {}
    std::size_t a_rows, a_cols, b_rows, b_cols;
};

struct SingularMatrixError : std::domain_error {
    explicit SingularMatrixError(Rational det)
        : std::domain_error("singular matrix: determinant = " + det.to_string()),
          determinant(std::move(det)) {}
    Rational determinant;
};

/// Exact rational matrix, row-major, immutable after construction. All
/// operations return fresh values.
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows_ == 0 || cols_ == 0)
            throw std::invalid_argument("DenseMatrix: rows and cols must be >= 1");
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("DenseMatrix: entry count " +
                                        std::to_string(entries_.size()) + " != " +
                                        std::to_string(rows_ * cols_));
    }

    static DenseMatrix build(std::size_t rows, std::size_t cols,
                             const std::function<Rational(std::size_t, std::size_t)>& fn) {
        std::vector<Rational> e;
        e.reserve(rows * cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) e.push_back(fn(r, c));
        return DenseMatrix(rows, cols, std::move(e));
    }

    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
        std::vector<Rational> e;
        std::size_t cols = rows.begin()->size();
        for (const auto& row : rows) {
            if (row.size() != cols)
                throw std::invalid_argument("DenseMatrix: ragged initializer");
            e.insert(e.end(), row.begin(), row.end());
        }
        return DenseMatrix(rows.size(), cols, std::move(e));
    }

    static DenseMatrix identity(std::size_t n) {
        return build(n, n, [](std::size_t r, std::size_t c) { return Rational(r == c ? 1 : 0); });
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    const std::vector<Rational>& entries() const { return entries_; }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// Exact product; throws DimensionMismatchError when a.cols != b.rows.
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);

/// Exact determinant. Denominators are cleared row by row, the integer
/// matrix goes through fraction-free (Bareiss) elimination, and the result
/// is rescaled; intermediate values stay integral.
Rational det_bareiss(const DenseMatrix& m);

/// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting
/// (no magnitude heuristics are needed over the rationals). Throws
/// SingularMatrixError carrying the zero determinant.
DenseMatrix invert_exact(const DenseMatrix& m);

DenseMatrix block_diag(const DenseMatrix& a, const DenseMatrix& b);

bool is_identity(const DenseMatrix& m);
bool is_upper_triangular(const DenseMatrix& m);

/// True when every row is the cyclic right shift of the row above.
bool is_circulant(const DenseMatrix& m);

}  // namespace jcirc

#endif
