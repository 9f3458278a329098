#ifndef JCIRC_SEQUENCES_HPP
#define JCIRC_SEQUENCES_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "jcirc/rational.hpp"

namespace jcirc {

/// The two second-order sequences this library is built around. Both obey
/// a(k) = a(k-1) + 2 a(k-2); they differ only in the seed values.
enum class SequenceKind { Jacobsthal, JacobsthalLucas };

std::string_view kind_name(SequenceKind kind);                  // "jacobsthal" / "jacobsthal-lucas"
SequenceKind kind_from_name(std::string_view name);             // throws std::invalid_argument

/// Shared recurrence data: alpha and beta are the roots of x^2 - x - 2,
/// so alpha + beta = 1, alpha*beta = -2, alpha - beta = 3.
struct RecurrenceConstants {
    static constexpr long alpha = 2;
    static constexpr long beta = -1;
};

/// k-th term by the iterative recurrence from the seeds
/// J(0)=0, J(1)=1 and j(0)=2, j(1)=1.
Integer term(SequenceKind kind, std::size_t k);

/// k-th term by the closed form: (2^k - (-1)^k)/3 for Jacobsthal (the
/// division is asserted exact) and 2^k + (-1)^k for Jacobsthal-Lucas.
Integer term_binet(SequenceKind kind, std::size_t k);

/// Terms 0..count-1 in one pass. The closed-form evaluators repeatedly
/// index a contiguous prefix, so they take one of these instead of
/// calling term() per index.
std::vector<Integer> term_prefix(SequenceKind kind, std::size_t count);

}  // namespace jcirc

#endif
