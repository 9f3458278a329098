#include "jcirc/circulant.hpp"

#include <cmath>
#include <numbers>

namespace jcirc {

std::complex<double> unit_root_power(std::size_t n, long long p) {
    const long long r = ((p % static_cast<long long>(n)) + static_cast<long long>(n)) %
                        static_cast<long long>(n);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    return std::polar(1.0, angle);
}

CirculantMatrix circulant_identity(std::size_t n) {
    std::vector<Rational> row(n, Rational(0));
    row[0] = Rational(1);
    return CirculantMatrix(std::move(row));
}

DenseMatrix to_dense(const CirculantMatrix& c) {
    const std::size_t n = c.order();
    return DenseMatrix::build(n, n,
                              [&](std::size_t r, std::size_t s) { return c.entry(r, s); });
}

EigenSystem eigenvalues_dft(const CirculantMatrix& c) {
    const std::size_t n = c.order();
    Rational row_sum(0);
    for (const Rational& v : c.first_row()) row_sum += v;

    std::vector<std::complex<double>> lambdas(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k)
            acc += c.first_row()[k].to_double() *
                   unit_root_power(n, static_cast<long long>(j) * static_cast<long long>(k));
        lambdas[j] = acc;
    }
    lambdas[0] = {row_sum.to_double(), 0.0};  // exact angle 0 column
    return EigenSystem{n, unit_root_power(n, 1), std::move(lambdas), std::move(row_sum)};
}

std::complex<double> det_via_eigenvalues(const CirculantMatrix& c) {
    std::complex<double> prod(1.0, 0.0);
    for (const auto& lambda : eigenvalues_dft(c).lambdas) prod *= lambda;
    return prod;
}

std::vector<std::complex<double>> inverse_via_eigenvalues(const CirculantMatrix& c,
                                                          double singular_tol) {
    const std::size_t n = c.order();
    const EigenSystem eig = eigenvalues_dft(c);
    for (std::size_t k = 0; k < n; ++k) {
        const double mag = std::abs(eig.lambdas[k]);
        if (mag <= singular_tol) throw SingularEigenvalueError(k, mag);
    }
    std::vector<std::complex<double>> row(n);
    for (std::size_t m = 0; m < n; ++m) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k)
            acc += (1.0 / eig.lambdas[k]) *
                   unit_root_power(n, -static_cast<long long>(k) * static_cast<long long>(m));
        row[m] = acc / static_cast<double>(n);
    }
    return row;
}

CirculantMatrix cyclic_convolve(const CirculantMatrix& a, const CirculantMatrix& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("cyclic_convolve: order mismatch " +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
    const std::size_t n = a.order();
    std::vector<Rational> row(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            row[(i + j) % n] += a.first_row()[i] * b.first_row()[j];
    return CirculantMatrix(std::move(row));
}

}  // namespace jcirc
