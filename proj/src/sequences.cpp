#include "jcirc/sequences.hpp"

#include <stdexcept>

namespace jcirc {

std::string_view kind_name(SequenceKind kind) {
    return kind == SequenceKind::Jacobsthal ? "jacobsthal" : "jacobsthal-lucas";
}

SequenceKind kind_from_name(std::string_view name) {
    if (name == "jacobsthal") return SequenceKind::Jacobsthal;
    if (name == "jacobsthal-lucas") return SequenceKind::JacobsthalLucas;
    throw std::invalid_argument("unknown sequence kind: " + std::string(name));
}

std::vector<Integer> term_prefix(SequenceKind kind, std::size_t count) {
    std::vector<Integer> out;
    out.reserve(count);
    const bool jac = kind == SequenceKind::Jacobsthal;
    if (count > 0) out.emplace_back(jac ? 0 : 2);
    if (count > 1) out.emplace_back(1);
    for (std::size_t k = 2; k < count; ++k)
        out.push_back(out[k - 1] + 2 * out[k - 2]);
    return out;
}

Integer term(SequenceKind kind, std::size_t k) {
    const bool jac = kind == SequenceKind::Jacobsthal;
    Integer prev(jac ? 0 : 2), cur(1);
    if (k == 0) return prev;
    for (std::size_t i = 1; i < k; ++i) {
        Integer next = cur + 2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Integer term_binet(SequenceKind kind, std::size_t k) {
    Integer two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
    const int sign = (k % 2 == 0) ? 1 : -1;
    if (kind == SequenceKind::JacobsthalLucas) return two_k + sign;

    Integer num = two_k - sign, q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), 3);
    if (r != 0)  // cannot happen; guards against implementation bugs
        throw std::logic_error("term_binet: 2^k - (-1)^k not divisible by 3 at k=" +
                               std::to_string(k));
    return q;
}

}  // namespace jcirc
