#include "jcirc/dense_matrix.hpp"

#include <utility>

namespace jcirc {

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatchError(a.rows(), a.cols(), b.rows(), b.cols());
    std::vector<Rational> out;
    out.reserve(a.rows() * b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Rational acc(0);
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(r, k) * b(k, c);
            out.push_back(std::move(acc));
        }
    }
    return DenseMatrix(a.rows(), b.cols(), std::move(out));
}

namespace {

void require_square(const DenseMatrix& m, const char* op) {
    if (!m.square())
        throw std::invalid_argument(std::string(op) + ": matrix is " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                    ", square input required");
}

}  // namespace

Rational det_bareiss(const DenseMatrix& m) {
    require_square(m, "det_bareiss");
    const std::size_t n = m.rows();

    // Clear denominators per row; det(m) = det(integer matrix) / prod(row lcms).
    std::vector<Integer> a(n * n);
    Integer scale(1);
    for (std::size_t r = 0; r < n; ++r) {
        Integer row_lcm(1);
        for (std::size_t c = 0; c < n; ++c)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).den().get_mpz_t());
        for (std::size_t c = 0; c < n; ++c)
            a[r * n + c] = m(r, c).num() * (row_lcm / m(r, c).den());
        scale *= row_lcm;
    }

    int sign = 1;
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
            if (swap_row == n) return Rational(0);
            for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[swap_row * n + c]);
            sign = -sign;
        }
        const Integer pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
                // Exact by the Sylvester identity behind Bareiss elimination.
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    return Rational(sign * a[n * n - 1], scale);
}

DenseMatrix invert_exact(const DenseMatrix& m) {
    require_square(m, "invert_exact");
    const std::size_t n = m.rows();

    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = m(r, c);
        aug[r][n + r] = Rational(1);
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug[piv][col].is_zero()) ++piv;
        if (piv == n) throw SingularMatrixError(Rational(0));
        if (piv != col) std::swap(aug[piv], aug[col]);

        const Rational inv_pivot = Rational(1) / aug[col][col];
        for (std::size_t c = col; c < 2 * n; ++c) aug[col][c] *= inv_pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug[r][col].is_zero()) continue;
            const Rational f = aug[r][col];
            for (std::size_t c = col; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
        }
    }

    std::vector<Rational> out;
    out.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.push_back(aug[r][n + c]);
    return DenseMatrix(n, n, std::move(out));
}

DenseMatrix block_diag(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t rows = a.rows() + b.rows(), cols = a.cols() + b.cols();
    return DenseMatrix::build(rows, cols, [&](std::size_t r, std::size_t c) {
        if (r < a.rows() && c < a.cols()) return a(r, c);
        if (r >= a.rows() && c >= a.cols()) return b(r - a.rows(), c - a.cols());
        return Rational(0);
    });
}

bool is_identity(const DenseMatrix& m) {
    if (!m.square()) return false;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != Rational(r == c ? 1 : 0)) return false;
    return true;
}

bool is_upper_triangular(const DenseMatrix& m) {
    if (!m.square()) return false;
    for (std::size_t r = 1; r < m.rows(); ++r)
        for (std::size_t c = 0; c < r; ++c)
            if (!m(r, c).is_zero()) return false;
    return true;
}

bool is_circulant(const DenseMatrix& m) {
    if (!m.square()) return false;
    const std::size_t n = m.rows();
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (m(r, c) != m(r - 1, (c + n - 1) % n)) return false;
    return true;
}

}  // namespace jcirc
