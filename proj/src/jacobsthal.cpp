#include "jcirc/jacobsthal.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace jcirc {

namespace {

void require_order(std::size_t n, std::size_t min, const char* op) {
    if (n < min)
        throw std::invalid_argument(std::string(op) + ": n >= " + std::to_string(min) +
                                    " required, got " + std::to_string(n));
}

// Per-order context: the sequence prefix plus the scalars every closed form
// reuses. J runs 0..n+2, j runs 0..n+1.
struct JacobsthalContext {
    std::vector<Integer> J;
    Rational x;  // 2 J_n / (1 - J_{n+1})
    Rational f, g;
};

struct LucasContext {
    std::vector<Integer> j;
    Rational w;  // (1 + 2 j_{n-1}) / (2 - j_n)
    Rational y, yp;
};

JacobsthalContext jacobsthal_context(std::size_t n) {
    JacobsthalContext ctx;
    ctx.J = term_prefix(SequenceKind::Jacobsthal, n + 3);
    const auto& J = ctx.J;
    ctx.x = Rational(2 * J[n], 1 - J[n + 1]);
    Rational g = Rational(1 - J[n]);
    for (std::size_t k = 1; k + 1 < n; ++k)
        g += Rational(2 * J[n - k - 1]) * rational_pow(ctx.x, k);
    ctx.g = g;
    Rational f(0);
    for (std::size_t k = 1; k < n; ++k)
        f += Rational(J[k + 1]) * rational_pow(ctx.x, n - k - 1);
    ctx.f = f;
    return ctx;
}

LucasContext lucas_context(std::size_t n) {
    LucasContext ctx;
    ctx.j = term_prefix(SequenceKind::JacobsthalLucas, n + 2);
    const auto& j = ctx.j;
    ctx.w = Rational(1 + 2 * j[n - 1], 2 - j[n]);
    Rational y = Rational(4 - j[n - 1]);
    for (std::size_t k = 2; k < n; ++k)
        y += Rational(2 * j[k] - j[k - 1]) * rational_pow(ctx.w, n - k);
    ctx.y = y / Rational(2);
    Rational yp(0);
    for (std::size_t k = 1; k < n; ++k)
        yp += Rational(j[k]) * rational_pow(ctx.w, n - k - 1);
    ctx.yp = yp;
    return ctx;
}

DenseMatrix r_correction(std::size_t n, const JacobsthalContext& ctx) {
    const auto& J = ctx.J;
    const Rational fg = ctx.f / ctx.g;
    return DenseMatrix::build(n, n, [&](std::size_t r, std::size_t c) -> Rational {
        if (r == 0 && c == 1) return -ctx.f;
        if (r == 0 && c == 2) return fg * Rational(J[n] - 1) + Rational(J[n]);
        if (r == 0 && c >= 3) return Rational(J[n - c + 2]) - Rational(2) * fg * Rational(J[n - c + 1]);
        if (r == 1 && c == 2) return Rational(1 - J[n]) / ctx.g;
        if (r == 1 && c >= 3) return Rational(2 * J[n - c + 1]) / ctx.g;
        return Rational(r == c ? 1 : 0);
    });
}

DenseMatrix z_correction(std::size_t n, const LucasContext& ctx) {
    const auto& j = ctx.j;
    const Rational q = ctx.yp / (Rational(4) * ctx.y);
    const Rational two_y = Rational(2) * ctx.y;
    return DenseMatrix::build(n, n, [&](std::size_t r, std::size_t c) -> Rational {
        if (r == 0 && c == 1) return -ctx.yp / Rational(2);
        if (r == 0 && c == 2)
            return q * Rational(j[n - 1] - 2 * j[0]) + Rational(j[n - 1], 2);
        if (r == 0 && c >= 3)
            return q * Rational(j[n - c + 1] - 2 * j[n - c + 2]) + Rational(j[n - c + 1], 2);
        if (r == 1 && c == 2) return Rational(2 * j[0] - j[n - 1]) / two_y;
        if (r == 1 && c >= 3) return Rational(2 * j[n - c + 2] - j[n - c + 1]) / two_y;
        return Rational(r == c ? 1 : 0);
    });
}

// m_1 .. m_n of the inverse Jacobsthal circulant.
std::vector<Rational> jacobsthal_inverse_entries(std::size_t n) {
    const JacobsthalContext ctx = jacobsthal_context(n);
    const auto& J = ctx.J;
    const Rational g = ctx.g;
    const Integer u = 1 - J[n + 1];
    const Integer t = 2 * J[n];
    const Rational c = Rational(1 - J[n]) - g;

    std::vector<Rational> m;
    m.reserve(n);
    m.push_back((Rational(J[n + 1] - 1) + Rational(1 - 2 * J[n - 1]) * g) /
                (Rational(2) * g * Rational(J[n] * J[n])));
    m.push_back((g - Rational(1)) / (Rational(J[n]) * g));
    {
        Rational acc = c * Rational(integer_pow(u, n - 3), integer_pow(t, n - 2));
        for (std::size_t k = 2; k + 1 < n; ++k)
            acc += Rational(2 * J[n - k]) *
                   Rational(integer_pow(u, n - k - 2), integer_pow(t, n - k - 1));
        m.push_back(acc / g);
    }
    if (n >= 4) {
        Rational acc = (c * Rational(J[n + 2] - 1) - Rational(4 * J[n] * J[n - 2])) *
                       Rational(integer_pow(u, n - 4), integer_pow(t, n - 2));
        for (std::size_t k = 1; k + 3 < n; ++k)
            acc += Rational(4 * J[k]) * Rational(integer_pow(u, k - 1), integer_pow(t, k));
        m.push_back(acc / g);
    }
    // General tail: the even-n head factor vanishes, matching the
    // (2^{n+1}-2)(1+(-1)^{n-1}) form of the same expression.
    if (n >= 5) {
        const Rational tail = Rational(-2) * (Rational(J[n - 1]) +
                                              Rational(J[n - 2] * u, J[n]));
        Rational head(0);
        if (n % 2 == 1) {
            Integer f = integer_pow(Integer(2), n + 2) - 4;
            head = c * Rational(f, t * t);
        }
        const Rational brace = head + tail;
        for (std::size_t i = 5; i <= n; ++i)
            m.push_back(Rational(integer_pow(u, n - i), integer_pow(t, n - i + 1)) * brace / g);
    }
    return m;
}

// h_0 .. h_{n-1} of the inverse Jacobsthal-Lucas circulant.
std::vector<Rational> lucas_inverse_entries(std::size_t n) {
    const LucasContext ctx = lucas_context(n);
    const auto& j = ctx.j;
    const Rational y = ctx.y;
    const Rational two_y = Rational(2) * y;
    const Integer v = 2 - j[n];
    const Integer s = 1 + 2 * j[n - 1];
    const Rational d = Rational(4 - j[n - 1]) - two_y;

    std::vector<Rational> h;
    h.reserve(n);
    h.push_back((Rational(9 * j[n] - 18) + Rational(10 - 8 * j[n - 2]) * y) /
                (two_y * Rational(s * s)));
    h.push_back((Rational(4) * y - Rational(9)) / (two_y * Rational(s)));
    {
        Rational acc = d * Rational(integer_pow(v, n - 3), integer_pow(s, n - 2));
        for (std::size_t k = 2; k + 1 < n; ++k)
            acc += Rational(2 * j[k + 1] - j[k]) *
                   Rational(integer_pow(v, k - 2), integer_pow(s, k - 1));
        h.push_back(acc / two_y);
    }
    if (n >= 4) {
        Rational acc = (d * Rational(j[n + 1] - 1) - Rational((2 * j[n - 1] - j[n - 2]) * s)) *
                       Rational(integer_pow(v, n - 4), integer_pow(s, n - 2));
        for (std::size_t k = 1; k + 3 < n; ++k)
            acc += Rational(2 * (2 * j[k + 1] - j[k])) *
                   Rational(integer_pow(v, k - 1), integer_pow(s, k));
        h.push_back(acc / two_y);
    }
    if (n >= 5) {
        Integer minus_two_n;
        mpz_ui_pow_ui(minus_two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
        if (n % 2 == 1) minus_two_n = -minus_two_n;  // (-2)^n
        const Rational num = d * Rational(j[n + 1] + 8 * j[n] - 2 * j[n - 1] -
                                          9 * (minus_two_n + 1));
        // The closing power on (1+2 j_{n-1}) is n-i, not the n-i+2 variant;
        // that variant misses the exact inverse by (1+2 j_{n-1})^2 for every
        // n >= 5 (see detail::lucas_general_entry_uncorrected and its tests).
        const Rational brace = num / Rational(s * s) - Rational(2 * j[n] - j[n - 1]) -
                               Rational((4 * j[n - 1] - 2 * j[n - 2]) * v, s);
        for (std::size_t i = 4; i < n; ++i)
            h.push_back(Rational(integer_pow(v, n - i - 1), integer_pow(s, n - i)) * brace /
                        two_y);
    }
    return h;
}

}  // namespace

std::string_view transform_name(TransformId id) {
    switch (id) {
        case TransformId::P: return "P";
        case TransformId::Q: return "Q";
        case TransformId::K: return "K";
        case TransformId::M: return "M";
        case TransformId::R: return "R";
        case TransformId::Z: return "Z";
    }
    throw std::logic_error("transform_name: bad id");
}

TransformId transform_from_name(std::string_view name) {
    if (name == "P") return TransformId::P;
    if (name == "Q") return TransformId::Q;
    if (name == "K") return TransformId::K;
    if (name == "M") return TransformId::M;
    if (name == "R") return TransformId::R;
    if (name == "Z") return TransformId::Z;
    throw std::invalid_argument("unknown transform: " + std::string(name));
}

CirculantMatrix build_sequence_circulant(SequenceKind kind, std::size_t n) {
    require_order(n, 3, "build_sequence_circulant");
    const bool jac = kind == SequenceKind::Jacobsthal;
    const std::vector<Integer> pre = term_prefix(kind, n + 1);
    std::vector<Rational> row;
    row.reserve(n);
    for (std::size_t i = 0; i < n; ++i) row.emplace_back(pre[jac ? i + 1 : i]);
    return CirculantMatrix(std::move(row));
}

Integer det_closed(SequenceKind kind, std::size_t n) {
    require_order(n, 3, "det_closed");
    Rational acc(0);
    if (kind == SequenceKind::Jacobsthal) {
        const std::vector<Integer> J = term_prefix(kind, n + 2);
        const Rational base(1 - J[n + 1]);
        const Rational twoJ(2 * J[n]);
        acc = rational_pow(base, n - 2) * Rational(1 - J[n]);
        for (std::size_t k = 1; k + 1 < n; ++k)
            acc += Rational(2 * J[k]) * rational_pow(base, k - 1) * rational_pow(twoJ, n - k - 1);
    } else {
        const std::vector<Integer> j = term_prefix(kind, n + 1);
        const Rational base(2 - j[n]);
        const Rational alt(1 + 2 * j[n - 1]);
        acc = rational_pow(base, n - 2) * Rational(4 - j[n - 1]);
        for (std::size_t k = 2; k < n; ++k)
            acc += Rational(2 * j[k] - j[k - 1]) * rational_pow(base, k - 2) *
                   rational_pow(alt, n - k);
    }
    if (!acc.is_integer())
        throw std::logic_error("det_closed: non-integer value " + acc.to_string() +
                               " at n = " + std::to_string(n));
    return acc.to_integer();
}

ScalarSet scalars(SequenceKind kind, std::size_t n) {
    require_order(n, 3, "scalars");
    ScalarSet out{kind, n, {}, {}, {}, {}};
    if (kind == SequenceKind::Jacobsthal) {
        const JacobsthalContext ctx = jacobsthal_context(n);
        out.f = ctx.f;
        out.g = ctx.g;
    } else {
        const LucasContext ctx = lucas_context(n);
        out.y = ctx.y;
        out.y_prime = ctx.yp;
    }
    return out;
}

namespace detail {

DenseMatrix banded_left_transform(std::size_t n, bool half_first_entry) {
    require_order(n, 3, "banded_left_transform");
    std::vector<Rational> e(n * n, Rational(0));
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return e[r * n + c]; };
    at(0, 0) = Rational(1);
    at(1, 0) = half_first_entry ? Rational(Integer(-1), Integer(2)) : Rational(-1);
    at(1, n - 1) = Rational(1);
    at(2, 0) = Rational(-2);
    at(2, n - 2) = Rational(1);
    at(2, n - 1) = Rational(-1);
    for (std::size_t r = 3; r < n; ++r) {
        at(r, n - r) = Rational(1);
        at(r, n - r + 1) = Rational(-1);
        at(r, n - r + 2) = Rational(-2);
    }
    return DenseMatrix(n, n, std::move(e));
}

DenseMatrix geometric_right_transform(std::size_t n, const Rational& ratio) {
    require_order(n, 3, "geometric_right_transform");
    std::vector<Rational> e(n * n, Rational(0));
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return e[r * n + c]; };
    at(0, 0) = Rational(1);
    for (std::size_t r = 1; r < n; ++r) at(r, 1) = rational_pow(ratio, n - 1 - r);
    // -1 band from (2, n-1) down to (n-1, 2).
    for (std::size_t r = 2; r < n; ++r) at(r, n + 1 - r) = Rational(-1);
    return DenseMatrix(n, n, std::move(e));
}

std::vector<Rational> inverse_closed_entries(SequenceKind kind, std::size_t n) {
    require_order(n, 3, "inverse_closed");
    return kind == SequenceKind::Jacobsthal ? jacobsthal_inverse_entries(n)
                                            : lucas_inverse_entries(n);
}

Rational jacobsthal_general_entry_proof_form(std::size_t n, std::size_t i) {
    require_order(n, 5, "jacobsthal_general_entry_proof_form");
    if (i < 5 || i > n) throw std::invalid_argument("index i must lie in [5, n]");
    const JacobsthalContext ctx = jacobsthal_context(n);
    const auto& J = ctx.J;
    const Integer u = 1 - J[n + 1];
    const Integer t = 2 * J[n];
    const Rational c = Rational(1 - J[n]) - ctx.g;
    Integer head_factor = integer_pow(Integer(2), n + 1) - 2;
    head_factor *= (n % 2 == 1) ? 2 : 0;  // 1 + (-1)^{n-1}
    const Rational brace = c * Rational(head_factor, t * t) -
                           Rational(2) * (Rational(J[n - 1]) + Rational(J[n - 2] * u, J[n]));
    return Rational(integer_pow(u, n - i), integer_pow(t, n - i + 1)) * brace / ctx.g;
}

Rational lucas_general_entry_uncorrected(std::size_t n, std::size_t i, bool nine_inside) {
    require_order(n, 5, "lucas_general_entry_uncorrected");
    if (i < 4 || i + 1 > n) throw std::invalid_argument("index i must lie in [4, n-1]");
    const LucasContext ctx = lucas_context(n);
    const auto& j = ctx.j;
    const Integer v = 2 - j[n];
    const Integer s = 1 + 2 * j[n - 1];
    const Rational d = Rational(4 - j[n - 1]) - Rational(2) * ctx.y;
    Integer minus_two_n;
    mpz_ui_pow_ui(minus_two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
    if (n % 2 == 1) minus_two_n = -minus_two_n;
    Rational num = nine_inside
        ? d * Rational(j[n + 1] + 8 * j[n] - 2 * j[n - 1] - 9 * (minus_two_n + 1))
        : d * Rational(j[n + 1] + 8 * j[n] - 2 * j[n - 1]) - Rational(9 * (minus_two_n + 1));
    const Rational brace = num / Rational(s * s) - Rational(2 * j[n] - j[n - 1]) -
                           Rational((4 * j[n - 1] - 2 * j[n - 2]) * v, s);
    return Rational(integer_pow(v, n - i - 1), integer_pow(s, n - i + 2)) * brace /
           (Rational(2) * ctx.y);
}

std::complex<double> shifted_lucas_generating_value(std::size_t n, std::size_t k) {
    require_order(n, 5, "shifted_lucas_generating_value");
    if (k == 0 || k >= n) throw std::invalid_argument("k must lie in [1, n-1]");
    const std::vector<Integer> j = term_prefix(SequenceKind::JacobsthalLucas, n + 2);
    const std::complex<double> wk = unit_root_power(n, static_cast<long long>(k));
    const std::complex<double> den =
        1.0 - wk - 2.0 * unit_root_power(n, 2 * static_cast<long long>(k));
    if (std::abs(den) < 1e-12) throw DegenerateEigenvalueError(k, std::abs(den));
    const std::complex<double> num =
        Rational(1 - j[n + 1]).to_double() + 2.0 * Rational(2 - j[n]).to_double() * wk;
    return num / den;
}

Integer shifted_lucas_numerator_at_minus_one(std::size_t n) {
    require_order(n, 5, "shifted_lucas_numerator_at_minus_one");
    const std::vector<Integer> j = term_prefix(SequenceKind::JacobsthalLucas, n + 2);
    return 1 - j[n + 1] - 2 * (2 - j[n]);
}

}  // namespace detail

DenseMatrix build_transform(TransformId id, std::size_t n) {
    require_order(n, 4, "build_transform");
    switch (id) {
        case TransformId::P: return detail::banded_left_transform(n, false);
        case TransformId::K: return detail::banded_left_transform(n, true);
        case TransformId::Q: return detail::geometric_right_transform(n, jacobsthal_context(n).x);
        case TransformId::M: return detail::geometric_right_transform(n, lucas_context(n).w);
        case TransformId::R: return r_correction(n, jacobsthal_context(n));
        case TransformId::Z: return z_correction(n, lucas_context(n));
    }
    throw std::logic_error("build_transform: bad id");
}

DenseMatrix triangularize(SequenceKind kind, std::size_t n) {
    require_order(n, 4, "triangularize");
    const DenseMatrix circ = to_dense(build_sequence_circulant(kind, n));
    if (kind == SequenceKind::Jacobsthal)
        return mat_mul(mat_mul(build_transform(TransformId::P, n), circ),
                       build_transform(TransformId::Q, n));
    return mat_mul(mat_mul(build_transform(TransformId::K, n), circ),
                   build_transform(TransformId::M, n));
}

std::vector<Rational> triangular_diagonal(SequenceKind kind, std::size_t n) {
    require_order(n, 4, "triangular_diagonal");
    std::vector<Rational> diag;
    diag.reserve(n);
    if (kind == SequenceKind::Jacobsthal) {
        const JacobsthalContext ctx = jacobsthal_context(n);
        diag.emplace_back(1);
        diag.push_back(ctx.g);
        diag.insert(diag.end(), n - 2, Rational(2 * ctx.J[n]));
    } else {
        const LucasContext ctx = lucas_context(n);
        diag.emplace_back(2);
        diag.push_back(ctx.y);
        diag.insert(diag.end(), n - 2, Rational(1 + 2 * ctx.j[n - 1]));
    }
    return diag;
}

Rational transform_det_sign(TransformId id, std::size_t n) {
    require_order(n, 4, "transform_det_sign");
    const int sign = (n % 4 == 1 || n % 4 == 2) ? 1 : -1;
    switch (id) {
        case TransformId::P:
        case TransformId::K: return Rational(sign);
        case TransformId::Q: return Rational(sign) * rational_pow(jacobsthal_context(n).x, n - 2);
        case TransformId::M: return Rational(sign) * rational_pow(lucas_context(n).w, n - 2);
        default:
            throw std::invalid_argument("transform_det_sign: case table covers P, Q, K, M only");
    }
}

DenseMatrix bidiag_band(SequenceKind kind, std::size_t n) {
    require_order(n, 4, "bidiag_band");
    Integer diag, super;
    if (kind == SequenceKind::Jacobsthal) {
        const std::vector<Integer> J = term_prefix(kind, n + 2);
        diag = 2 * J[n];
        super = J[n + 1] - 1;
    } else {
        const std::vector<Integer> j = term_prefix(kind, n + 1);
        diag = 1 + 2 * j[n - 1];
        super = j[n] - 2;
    }
    const std::size_t size = n - 2;
    return DenseMatrix::build(size, size, [&](std::size_t r, std::size_t c) -> Rational {
        if (r == c) return Rational(diag);
        if (c == r + 1) return Rational(super);
        return Rational(0);
    });
}

DenseMatrix bidiag_inverse_closed(SequenceKind kind, std::size_t n) {
    require_order(n, 4, "bidiag_inverse_closed");
    Integer neg_super, diag;
    if (kind == SequenceKind::Jacobsthal) {
        const std::vector<Integer> J = term_prefix(kind, n + 2);
        neg_super = 1 - J[n + 1];
        diag = 2 * J[n];
    } else {
        const std::vector<Integer> j = term_prefix(kind, n + 1);
        neg_super = 2 - j[n];
        diag = 1 + 2 * j[n - 1];
    }
    const std::size_t size = n - 2;
    return DenseMatrix::build(size, size, [&](std::size_t r, std::size_t c) -> Rational {
        if (c < r) return Rational(0);
        return Rational(integer_pow(neg_super, c - r), integer_pow(diag, c - r + 1));
    });
}

ClosedInverse inverse_closed(SequenceKind kind, std::size_t n, std::size_t oracle_order_limit) {
    CirculantMatrix inv(detail::inverse_closed_entries(kind, n));
    bool validated = false;
    if (n <= oracle_order_limit)
        validated = to_dense(inv) == invert_exact(to_dense(build_sequence_circulant(kind, n)));
    return ClosedInverse{std::move(inv), validated};
}

DirectSumFactorization direct_sum_factorization(SequenceKind kind, std::size_t n) {
    require_order(n, 4, "direct_sum_factorization");
    const bool jac = kind == SequenceKind::Jacobsthal;
    const DenseMatrix left = build_transform(jac ? TransformId::P : TransformId::K, n);
    const DenseMatrix right = build_transform(jac ? TransformId::Q : TransformId::M, n);
    const DenseMatrix correction = build_transform(jac ? TransformId::R : TransformId::Z, n);
    const DenseMatrix circ = to_dense(build_sequence_circulant(kind, n));

    const DenseMatrix quadruple = mat_mul(mat_mul(mat_mul(left, circ), right), correction);

    Rational head0, head1;
    if (jac) {
        const JacobsthalContext ctx = jacobsthal_context(n);
        head0 = Rational(1);
        head1 = ctx.g;
    } else {
        const LucasContext ctx = lucas_context(n);
        head0 = Rational(2);
        head1 = ctx.y;
    }
    const DenseMatrix head = DenseMatrix::from_rows({{head0, Rational(0)},
                                                     {Rational(0), head1}});
    const DenseMatrix expected = block_diag(head, bidiag_band(kind, n));

    const DenseMatrix head_inv = DenseMatrix::from_rows(
        {{Rational(1) / head0, Rational(0)}, {Rational(0), Rational(1) / head1}});
    const DenseMatrix inv_sum = block_diag(head_inv, bidiag_inverse_closed(kind, n));
    const DenseMatrix reconstructed =
        mat_mul(mat_mul(mat_mul(right, correction), inv_sum), left);

    return DirectSumFactorization{quadruple, expected, reconstructed};
}

DenseMatrix hankel_inverse(TransformId id, std::size_t n) {
    if (id == TransformId::P) {
        require_order(n, 3, "hankel_inverse(P)");
        const std::vector<Integer> J = term_prefix(SequenceKind::Jacobsthal, n + 1);
        // Row 0 is e_1; row i of the Hankel block starts at J_{n-i+1} and
        // slides left one step per row, zero-filled past J_1.
        return DenseMatrix::build(n, n, [&](std::size_t r, std::size_t c) -> Rational {
            if (r == 0) return Rational(c == 0 ? 1 : 0);
            const long long idx = static_cast<long long>(n) - static_cast<long long>(r) + 1 -
                                  static_cast<long long>(c);
            return (idx >= 1 && idx <= static_cast<long long>(n)) ? Rational(J[idx]) : Rational(0);
        });
    }
    if (id == TransformId::K) {
        require_order(n, 4, "hankel_inverse(K)");
        const std::vector<Integer> J = term_prefix(SequenceKind::Jacobsthal, n);
        const std::vector<Integer> j = term_prefix(SequenceKind::JacobsthalLucas, n);
        return DenseMatrix::build(n, n, [&](std::size_t r, std::size_t c) -> Rational {
            if (r == 0) return Rational(c == 0 ? 1 : 0);
            if (c == 0) return Rational(j[n - r], 2);
            const long long idx = static_cast<long long>(n) - static_cast<long long>(r) -
                                  (static_cast<long long>(c) - 1);
            return (idx >= 1 && idx + 1 <= static_cast<long long>(n)) ? Rational(J[idx])
                                                                      : Rational(0);
        });
    }
    throw std::invalid_argument("hankel_inverse: closed forms exist for P and K only");
}

std::complex<double> eigenvalue_closed(SequenceKind kind, std::size_t n, std::size_t k) {
    require_order(n, 5, "eigenvalue_closed");
    if (k == 0 || k >= n)
        throw std::invalid_argument("eigenvalue_closed: k must lie in [1, n-1]");
    const std::complex<double> wk = unit_root_power(n, static_cast<long long>(k));
    const std::complex<double> den =
        1.0 - wk - 2.0 * unit_root_power(n, 2 * static_cast<long long>(k));
    if (std::abs(den) < 1e-12) throw DegenerateEigenvalueError(k, std::abs(den));

    std::complex<double> num;
    if (kind == SequenceKind::Jacobsthal) {
        const std::vector<Integer> J = term_prefix(kind, n + 2);
        num = Rational(1 - J[n + 1]).to_double() - Rational(2 * J[n]).to_double() * wk;
    } else {
        const std::vector<Integer> j = term_prefix(kind, n + 1);
        num = Rational(2 - j[n]).to_double() - Rational(1 + 2 * j[n - 1]).to_double() * wk;
    }
    return num / den;
}

Rational eigenvalue_real_exact(SequenceKind kind, std::size_t n, std::size_t k) {
    require_order(n, 3, "eigenvalue_real_exact");
    const CirculantMatrix c = build_sequence_circulant(kind, n);
    Rational acc(0);
    if (k == 0) {
        for (const Rational& v : c.first_row()) acc += v;
        return acc;
    }
    if (n % 2 == 0 && k == n / 2) {
        for (std::size_t s = 0; s < n; ++s)
            acc += (s % 2 == 0) ? c.first_row()[s] : -c.first_row()[s];
        return acc;
    }
    throw std::invalid_argument("eigenvalue_real_exact: w^k is real only at k = 0 or n/2");
}

Integer eigen_numerator_at_minus_one(SequenceKind kind, std::size_t n) {
    require_order(n, 3, "eigen_numerator_at_minus_one");
    if (kind == SequenceKind::Jacobsthal) {
        const std::vector<Integer> J = term_prefix(kind, n + 2);
        return 1 - J[n + 1] + 2 * J[n];
    }
    const std::vector<Integer> j = term_prefix(kind, n + 1);
    return 3 + 2 * j[n - 1] - j[n];
}

}  // namespace jcirc
