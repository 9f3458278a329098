#ifndef JCIRC_CIRCULANT_HPP
#define JCIRC_CIRCULANT_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "jcirc/dense_matrix.hpp"
#include "jcirc/rational.hpp"

namespace jcirc {

/// circ(c0, c1, ..., c_{n-1}): the square matrix whose row r is the first
/// row cyclically right-shifted r times, i.e. entry(r, c) = c_{(c-r) mod n}.
class CirculantMatrix {
public:
    explicit CirculantMatrix(std::vector<Rational> first_row) : first_row_(std::move(first_row)) {
        if (first_row_.empty())
            throw std::invalid_argument("CirculantMatrix: order must be >= 1");
    }

    std::size_t order() const { return first_row_.size(); }
    const std::vector<Rational>& first_row() const { return first_row_; }

    const Rational& entry(std::size_t r, std::size_t c) const {
        const std::size_t n = order();
        return first_row_[(c + n - r % n) % n];
    }

    friend bool operator==(const CirculantMatrix& a, const CirculantMatrix& b) {
        return a.first_row_ == b.first_row_;
    }

private:
    std::vector<Rational> first_row_;
};

CirculantMatrix circulant_identity(std::size_t n);

DenseMatrix to_dense(const CirculantMatrix& c);

/// w^p for the principal n-th root of unity w = exp(2 pi i / n). The
/// exponent is reduced mod n before the trig call, so arbitrarily large
/// powers keep full accuracy.
std::complex<double> unit_root_power(std::size_t n, long long p);

/// Spectrum of a circulant in the discrete Fourier basis. lambdas[j] is the
/// eigenvalue attached to the eigenvector (1, w^j, w^{2j}, ..., w^{(n-1)j})
/// with w = exp(2 pi i / n); lambda0_exact is the exact first-row sum,
/// which lambdas[0] approximates.
struct EigenSystem {
    std::size_t n;
    std::complex<double> omega;
    std::vector<std::complex<double>> lambdas;
    Rational lambda0_exact;
};

/// Direct O(n^2) summation lambda_j = sum_k c_k w^{jk}; no FFT, the orders
/// here are desk-scale and the direct sum keeps every term auditable.
EigenSystem eigenvalues_dft(const CirculantMatrix& c);

/// Product of the DFT eigenvalues. Real inputs give a real determinant up
/// to roundoff; callers check |Im| <= 1e-6 * max(1, |Re|).
std::complex<double> det_via_eigenvalues(const CirculantMatrix& c);

struct SingularEigenvalueError : std::domain_error {
    SingularEigenvalueError(std::size_t k_, double magnitude_)
        : std::domain_error("circulant numerically singular: |lambda_" + std::to_string(k_) +
                            "| = " + std::to_string(magnitude_)),
          k(k_), magnitude(magnitude_) {}
    std::size_t k;
    double magnitude;
};

/// First row of the approximate inverse, a_m = (1/n) sum_k lambda_k^{-1} w^{-km}.
/// Throws SingularEigenvalueError when some |lambda_k| <= singular_tol.
std::vector<std::complex<double>> inverse_via_eigenvalues(const CirculantMatrix& c,
                                                          double singular_tol = 1e-12);

/// Exact circulant product: the first row of a*b is the cyclic convolution
/// of the two first rows. Orders must match.
CirculantMatrix cyclic_convolve(const CirculantMatrix& a, const CirculantMatrix& b);

}  // namespace jcirc

#endif
