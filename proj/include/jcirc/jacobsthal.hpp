#ifndef JCIRC_JACOBSTHAL_HPP
#define JCIRC_JACOBSTHAL_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "jcirc/circulant.hpp"
#include "jcirc/dense_matrix.hpp"
#include "jcirc/sequences.hpp"

namespace jcirc {

/// Left/right transforms of the triangularizing decompositions. P, Q, R
/// belong to the Jacobsthal circulant, K, M, Z to the Jacobsthal-Lucas one.
enum class TransformId { P, Q, K, M, R, Z };

std::string_view transform_name(TransformId id);
TransformId transform_from_name(std::string_view name);

/// The scalars the decompositions pivot on. Only the fields of the
/// matching kind are populated. Denominators involve only powers of
/// (1 - J_{n+1}) resp. (2 - j_n), nonzero for every n >= 3.
struct ScalarSet {
    SequenceKind kind;
    std::size_t n;
    std::optional<Rational> f, g;         // Jacobsthal
    std::optional<Rational> y, y_prime;   // Jacobsthal-Lucas
};

/// circ(J_1, ..., J_n) or circ(j_0, ..., j_{n-1}); note the index offset
/// differs between the two kinds. Requires n >= 3.
CirculantMatrix build_sequence_circulant(SequenceKind kind, std::size_t n);

/// Closed-form determinant:
///   (1-J_{n+1})^{n-2} (1-J_n) + 2 sum_{k=1}^{n-2} J_k (1-J_{n+1})^{k-1} (2J_n)^{n-k-1}
///   (2-j_n)^{n-2} (4-j_{n-1}) + sum_{k=2}^{n-1} (2j_k - j_{k-1}) (2-j_n)^{k-2} (1+2j_{n-1})^{n-k}
/// Evaluated in exact rational arithmetic; the result is asserted integral.
Integer det_closed(SequenceKind kind, std::size_t n);

ScalarSet scalars(SequenceKind kind, std::size_t n);

/// The transform matrices, reproduced entry by entry: the -1/-2 band of
/// P and K (with K's extra -1/2), the geometric second column of Q and M
/// with their -1 anti-diagonal, and the two correction rows of R and Z.
/// Requires n > 3.
DenseMatrix build_transform(TransformId id, std::size_t n);

/// P 𝕁 Q (resp. K 𝕛 M): exact triple product. Upper-triangularity and the
/// diagonal are checked by verify_all and the tests, not asserted here.
DenseMatrix triangularize(SequenceKind kind, std::size_t n);

/// The diagonal the triangularized product must carry:
/// (1, g_n, 2J_n, ..., 2J_n) resp. (2, y_n, 1+2j_{n-1}, ..., 1+2j_{n-1}).
std::vector<Rational> triangular_diagonal(SequenceKind kind, std::size_t n);

/// Case value of det P / det Q / det K / det M: +-1 resp. +-ratio^{n-2},
/// positive exactly when n = 1 or 2 (mod 4).
Rational transform_det_sign(TransformId id, std::size_t n);

/// The (n-2)x(n-2) upper-bidiagonal block: diagonal 2J_n, superdiagonal
/// J_{n+1}-1 (resp. 1+2j_{n-1} and j_n-2). Requires n >= 4.
DenseMatrix bidiag_band(SequenceKind kind, std::size_t n);

/// Closed-form inverse of the bidiagonal block:
/// (1-J_{n+1})^{j-i} / (2J_n)^{j-i+1} above the diagonal, 0 below.
DenseMatrix bidiag_inverse_closed(SequenceKind kind, std::size_t n);

struct ClosedInverse {
    CirculantMatrix matrix;
    /// True when every entry was checked against invert_exact of the dense
    /// form (always done for n <= oracle order limit).
    bool oracle_validated;
};

/// Inverse circulant assembled from the closed-form entries
/// (m_1..m_n resp. h_0..h_{n-1}). Empty sums at n = 3, 4 evaluate to 0 and
/// absent general index ranges are skipped. Requires n >= 3.
ClosedInverse inverse_closed(SequenceKind kind, std::size_t n,
                             std::size_t oracle_order_limit = 12);

struct DirectSumFactorization {
    DenseMatrix quadruple_product;     // P 𝕁 Q R   (resp. K 𝕛 M Z)
    DenseMatrix expected_direct_sum;   // diag(1, g_n) ⊕ A  (resp. diag(2, y_n) ⊕ S)
    DenseMatrix reconstructed_inverse; // (QR)(G^-1 ⊕ A^-1)P  (resp. (MZ)(G^-1 ⊕ S^-1)K)
};

/// Requires n > 3.
DirectSumFactorization direct_sum_factorization(SequenceKind kind, std::size_t n);

/// Inverse of P (id = P, n >= 3) or K (id = K, n > 3) built from its
/// Hankel description alone, no elimination: row 0 is e_1; the block below
/// is constant along anti-diagonals with first row (J_n, ..., J_1)
/// (for K: a leading column j_{n-i}/2 next to a (J_{n-1}, ..., J_1) block).
DenseMatrix hankel_inverse(TransformId id, std::size_t n);

struct DegenerateEigenvalueError : std::domain_error {
    DegenerateEigenvalueError(std::size_t k_, double denominator_magnitude_)
        : std::domain_error("closed-form eigenvalue undefined at k = " + std::to_string(k_) +
                            ": |1 - w^k - 2w^2k| = " + std::to_string(denominator_magnitude_)),
          k(k_), denominator_magnitude(denominator_magnitude_) {}
    std::size_t k;
    double denominator_magnitude;
};

/// Closed-form eigenvalue of the sequence circulant at w^k, 1 <= k <= n-1,
/// n >= 5:
///    ((1-J_{n+1}) - 2J_n w^k) / (1 - w^k - 2w^2k)
///    ((2-j_n) - (1+2j_{n-1}) w^k) / (1 - w^k - 2w^2k)
/// The denominator factors as -(2u-1)(u+1), so it vanishes on the unit
/// circle only at w^k = -1 (k = n/2, even n); that index throws
/// DegenerateEigenvalueError and the eigenvalue there is the exact
/// alternating row sum (see eigenvalue_real_exact).
std::complex<double> eigenvalue_closed(SequenceKind kind, std::size_t n, std::size_t k);

/// Exact eigenvalue at the real points of the spectrum: k = 0 (first-row
/// sum) and, for even n, k = n/2 (alternating first-row sum).
Rational eigenvalue_real_exact(SequenceKind kind, std::size_t n, std::size_t k);

/// Exact value of the closed-form numerator at u = -1:
/// 1 - J_{n+1} + 2J_n = 1 - (-1)^n, resp. 3 + 2j_{n-1} - j_n = 3 - 3(-1)^n.
/// Nonzero exactly for odd n.
Integer eigen_numerator_at_minus_one(SequenceKind kind, std::size_t n);

namespace detail {

/// P-shaped band matrix for any n >= 3; half_first_entry selects K's -1/2.
DenseMatrix banded_left_transform(std::size_t n, bool half_first_entry);

/// Q/M-shaped matrix for any n >= 3 and geometric ratio.
DenseMatrix geometric_right_transform(std::size_t n, const Rational& ratio);

/// Closed-form inverse first row without the oracle pass (used by bench).
std::vector<Rational> inverse_closed_entries(SequenceKind kind, std::size_t n);

/// m_i (5 <= i <= n) via the equivalent (2^{n+1}-2)(1+(-1)^{n-1}) head
/// factor; agrees exactly with the frozen (2^{n+2}-4)-for-odd-n form.
Rational jacobsthal_general_entry_proof_form(std::size_t n, std::size_t i);

/// h_i (4 <= i <= n-1) with the trailing power (1+2j_{n-1})^{n-i+2} instead
/// of the correct ^{n-i}; both placements of the -9((-2)^n+1) term are
/// kept. Off the true inverse by exactly (1+2j_{n-1})^2 — retained so the
/// discrepancy stays pinned by tests instead of silently trusted.
Rational lucas_general_entry_uncorrected(std::size_t n, std::size_t i, bool nine_inside);

/// Generating value sum_{r=1}^n j_r w^{k(r-1)}: the closed form for the
/// index-shifted first row (j_1, ..., j_n), not for circ(j_0, ..., j_{n-1}).
std::complex<double> shifted_lucas_generating_value(std::size_t n, std::size_t k);

/// Its numerator at u = -1: 1 - j_{n+1} - 2(2-j_n) = 3((-1)^n - 1).
Integer shifted_lucas_numerator_at_minus_one(std::size_t n);

}  // namespace detail

}  // namespace jcirc

#endif
