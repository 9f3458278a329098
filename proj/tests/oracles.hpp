#ifndef JCIRC_TESTS_ORACLES_HPP
#define JCIRC_TESTS_ORACLES_HPP

// Test-only oracles, deliberately independent of the library's elimination
// paths: determinants by cofactor expansion, inverses by adjugate/det.

#include <random>
#include <vector>

#include "jcirc/circulant.hpp"
#include "jcirc/dense_matrix.hpp"

namespace jcirc::testing {

inline Rational cofactor_det(const DenseMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Rational acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Rational> minor;
        minor.reserve((n - 1) * (n - 1));
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) minor.push_back(m(r, cc));
        const Rational term = m(0, c) * cofactor_det(DenseMatrix(n - 1, n - 1, std::move(minor)));
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

inline DenseMatrix adjugate_inverse(const DenseMatrix& m) {
    const std::size_t n = m.rows();
    const Rational det = cofactor_det(m);
    return DenseMatrix::build(n, n, [&](std::size_t r, std::size_t c) {
        // adj(m)_{rc} = (-1)^{r+c} det(minor of m with row c, column r removed)
        std::vector<Rational> minor;
        minor.reserve((n - 1) * (n - 1));
        for (std::size_t rr = 0; rr < n; ++rr) {
            if (rr == c) continue;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != r) minor.push_back(m(rr, cc));
        }
        const Rational cof = (n == 1) ? Rational(1)
                                      : cofactor_det(DenseMatrix(n - 1, n - 1, std::move(minor)));
        return (((r + c) % 2 == 0) ? cof : -cof) / det;
    });
}

inline DenseMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                     int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return DenseMatrix::build(rows, cols,
                              [&](std::size_t, std::size_t) { return Rational(dist(rng)); });
}

inline DenseMatrix random_rational_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 9);
    return DenseMatrix::build(rows, cols, [&](std::size_t, std::size_t) {
        return Rational(Integer(num(rng)), Integer(den(rng)));
    });
}

inline CirculantMatrix random_int_circulant(std::mt19937& rng, std::size_t n, int bound = 20) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<Rational> row;
    row.reserve(n);
    for (std::size_t i = 0; i < n; ++i) row.emplace_back(dist(rng));
    return CirculantMatrix(std::move(row));
}

}  // namespace jcirc::testing

#endif
