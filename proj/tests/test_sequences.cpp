#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jcirc/sequences.hpp"

using namespace jcirc;

TEST_CASE("seed values and small terms") {
    CHECK(term(SequenceKind::Jacobsthal, 0) == 0);
    CHECK(term(SequenceKind::Jacobsthal, 1) == 1);
    CHECK(term(SequenceKind::JacobsthalLucas, 0) == 2);
    CHECK(term(SequenceKind::JacobsthalLucas, 1) == 1);
    CHECK(term(SequenceKind::Jacobsthal, 5) == 11);
    CHECK(term(SequenceKind::JacobsthalLucas, 5) == 31);
}

TEST_CASE("closed form: pinned values") {
    CHECK(term_binet(SequenceKind::Jacobsthal, 10) == 341);   // (1024 - 1)/3
    CHECK(term_binet(SequenceKind::Jacobsthal, 1) == 1);      // (2 + 1)/3
    CHECK(term_binet(SequenceKind::JacobsthalLucas, 4) == 17);  // 16 + 1
}

TEST_CASE("recurrence equals closed form for 0 <= k <= 256") {
    for (SequenceKind kind : {SequenceKind::Jacobsthal, SequenceKind::JacobsthalLucas})
        for (std::size_t k = 0; k <= 256; ++k)
            CHECK(term(kind, k) == term_binet(kind, k));
}

TEST_CASE("recurrence a(k) = a(k-1) + 2 a(k-2)") {
    for (SequenceKind kind : {SequenceKind::Jacobsthal, SequenceKind::JacobsthalLucas}) {
        const std::vector<Integer> pre = term_prefix(kind, 130);
        for (std::size_t k = 2; k < pre.size(); ++k)
            CHECK(pre[k] == pre[k - 1] + 2 * pre[k - 2]);
    }
}

TEST_CASE("cross-link j_k = J_{k+1} + 2 J_{k-1} for 1 <= k <= 64") {
    const std::vector<Integer> J = term_prefix(SequenceKind::Jacobsthal, 66);
    const std::vector<Integer> j = term_prefix(SequenceKind::JacobsthalLucas, 65);
    for (std::size_t k = 1; k <= 64; ++k)
        CHECK(j[k] == J[k + 1] + 2 * J[k - 1]);
}

TEST_CASE("prefix matches per-index terms") {
    const std::vector<Integer> pre = term_prefix(SequenceKind::JacobsthalLucas, 40);
    for (std::size_t k = 0; k < 40; ++k)
        CHECK(pre[k] == term(SequenceKind::JacobsthalLucas, k));
    CHECK(term_prefix(SequenceKind::Jacobsthal, 0).empty());
    CHECK(term_prefix(SequenceKind::Jacobsthal, 1).size() == 1);
}

TEST_CASE("recurrence constants are the roots of x^2 - x - 2") {
    constexpr long a = RecurrenceConstants::alpha, b = RecurrenceConstants::beta;
    CHECK(a * a - a - 2 == 0);
    CHECK(b * b - b - 2 == 0);
    CHECK(a + b == 1);
    CHECK(a * b == -2);
    CHECK(a - b == 3);
}

TEST_CASE("kind names round-trip") {
    CHECK(kind_from_name(kind_name(SequenceKind::Jacobsthal)) == SequenceKind::Jacobsthal);
    CHECK(kind_from_name("jacobsthal-lucas") == SequenceKind::JacobsthalLucas);
    CHECK_THROWS_AS(kind_from_name("pell"), std::invalid_argument);
}
