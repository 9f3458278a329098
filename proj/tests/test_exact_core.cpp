#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jcirc/dense_matrix.hpp"
#include "jcirc/json_io.hpp"
#include "oracles.hpp"

using namespace jcirc;
using jcirc::testing::adjugate_inverse;
using jcirc::testing::cofactor_det;
using jcirc::testing::random_int_matrix;
using jcirc::testing::random_rational_matrix;

TEST_CASE("rational normalization: den > 0, gcd 1, eager on construction") {
    const Rational q(Integer(3), Integer(-6));
    CHECK(q.num() == -1);
    CHECK(q.den() == 2);
    CHECK(Rational(Integer(0), Integer(7)) == Rational(0));
    CHECK(Rational(Integer(0), Integer(7)).den() == 1);
    CHECK(Rational(Integer(-4), Integer(-2)) == Rational(2));
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::invalid_argument);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-500, 500);
    for (int i = 0; i < 300; ++i) {
        int d = dist(rng);
        if (d == 0) d = 1;
        const Rational a(Integer(dist(rng)), Integer(d));
        const Rational b(Integer(dist(rng)), Integer(dist(rng) | 1));
        std::vector<Rational> reached{a, b, a + b, a - b, a * b};
        if (!b.is_zero()) reached.push_back(a / b);
        for (const Rational& v : reached) {
            CHECK(v.den() > 0);
            Integer g;
            mpz_gcd(g.get_mpz_t(), v.num().get_mpz_t(), v.den().get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("rational with den 1 round-trips to Integer") {
    CHECK(Rational(7).is_integer());
    CHECK(Rational(7).to_integer() == 7);
    CHECK(Rational(Integer(6), Integer(3)).to_integer() == 2);
    CHECK(!Rational(Integer(1), Integer(2)).is_integer());
    CHECK_THROWS_AS(Rational(Integer(1), Integer(2)).to_integer(), std::domain_error);
    CHECK(Rational(Integer("123456789012345678901234567890")).to_string() ==
          "123456789012345678901234567890");
}

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(Integer(1), Integer(2)) + Rational(Integer(1), Integer(3)) ==
          Rational(Integer(5), Integer(6)));
    CHECK(Rational(Integer(1), Integer(2)) / Rational(Integer(-3), Integer(4)) ==
          Rational(Integer(-2), Integer(3)));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(rational_pow(Rational(Integer(-2), Integer(3)), 3) ==
          Rational(Integer(-8), Integer(27)));
    CHECK(rational_pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("mat_mul: identity, hand product, dimension errors") {
    std::mt19937 rng(11);
    const DenseMatrix x = random_rational_matrix(rng, 3, 3);
    CHECK(mat_mul(DenseMatrix::identity(3), x) == x);
    CHECK(mat_mul(x, DenseMatrix::identity(3)) == x);

    const DenseMatrix a = DenseMatrix::from_rows({{Rational(1), Rational(1)},
                                                  {Rational(0), Rational(1)}});
    const DenseMatrix b = DenseMatrix::from_rows({{Rational(1), Rational(0)},
                                                  {Rational(1), Rational(1)}});
    CHECK(mat_mul(a, b) == DenseMatrix::from_rows({{Rational(2), Rational(1)},
                                                   {Rational(1), Rational(1)}}));

    try {
        mat_mul(a, random_rational_matrix(rng, 3, 2));
        FAIL("expected DimensionMismatchError");
    } catch (const DimensionMismatchError& e) {
        CHECK(e.a_rows == 2);
        CHECK(e.a_cols == 2);
        CHECK(e.b_rows == 3);
        CHECK(e.b_cols == 2);
    }
}

TEST_CASE("P3 * J3 * Q3 reproduces the two-row triangular template") {
    // All three factors written out literally; x = 2*J_3/(1-J_4) = -3/2.
    const Rational x(Integer(-3), Integer(2));
    const DenseMatrix p = DenseMatrix::from_rows({{Rational(1), Rational(0), Rational(0)},
                                                  {Rational(-1), Rational(0), Rational(1)},
                                                  {Rational(-2), Rational(1), Rational(-1)}});
    const DenseMatrix j = DenseMatrix::from_rows({{Rational(1), Rational(1), Rational(3)},
                                                  {Rational(3), Rational(1), Rational(1)},
                                                  {Rational(1), Rational(3), Rational(1)}});
    const DenseMatrix q = DenseMatrix::from_rows({{Rational(1), Rational(0), Rational(0)},
                                                  {Rational(0), x, Rational(0)},
                                                  {Rational(0), Rational(1), Rational(-1)}});
    const DenseMatrix s = mat_mul(mat_mul(p, j), q);
    // S_3: row 0 = (1, f_3, -J_3), row 1 = (0, g_3, J_3-1), diagonal tail 2*J_3.
    CHECK(s == DenseMatrix::from_rows(
                   {{Rational(1), Rational(Integer(3), Integer(2)), Rational(-3)},
                    {Rational(0), Rational(-5), Rational(2)},
                    {Rational(0), Rational(0), Rational(6)}}));
}

TEST_CASE("det_bareiss: pinned values and error paths") {
    const DenseMatrix j3 = DenseMatrix::from_rows({{Rational(1), Rational(1), Rational(3)},
                                                   {Rational(3), Rational(1), Rational(1)},
                                                   {Rational(1), Rational(3), Rational(1)}});
    CHECK(det_bareiss(j3) == Rational(20));
    CHECK(det_bareiss(DenseMatrix::identity(6)) == Rational(1));
    const DenseMatrix l3 = DenseMatrix::from_rows({{Rational(2), Rational(1), Rational(5)},
                                                   {Rational(5), Rational(2), Rational(1)},
                                                   {Rational(1), Rational(5), Rational(2)}});
    CHECK(det_bareiss(l3) == Rational(104));
    CHECK_THROWS_AS(det_bareiss(DenseMatrix(1, 2, {Rational(1), Rational(2)})),
                    std::invalid_argument);
    // zero pivot forces a row swap
    CHECK(det_bareiss(DenseMatrix::from_rows({{Rational(0), Rational(1)},
                                              {Rational(1), Rational(0)}})) == Rational(-1));
    CHECK(det_bareiss(DenseMatrix::from_rows({{Rational(1), Rational(2)},
                                              {Rational(2), Rational(4)}})) == Rational(0));
}

TEST_CASE("det_bareiss agrees with cofactor expansion on random rational matrices") {
    std::mt19937 rng(101);
    for (int i = 0; i < 120; ++i) {
        const DenseMatrix m2 = random_rational_matrix(rng, 2, 2);
        CHECK(det_bareiss(m2) == cofactor_det(m2));
        const DenseMatrix m3 = random_rational_matrix(rng, 3, 3);
        CHECK(det_bareiss(m3) == cofactor_det(m3));
    }
}

TEST_CASE("det is multiplicative on random 4x4 integer matrices") {
    std::mt19937 rng(202);
    for (int i = 0; i < 60; ++i) {
        const DenseMatrix a = random_int_matrix(rng, 4, 4);
        const DenseMatrix b = random_int_matrix(rng, 4, 4);
        CHECK(det_bareiss(mat_mul(a, b)) == det_bareiss(a) * det_bareiss(b));
    }
}

TEST_CASE("invert_exact: pinned inverses, identity law, singular error") {
    const DenseMatrix j3 = DenseMatrix::from_rows({{Rational(1), Rational(1), Rational(3)},
                                                   {Rational(3), Rational(1), Rational(1)},
                                                   {Rational(1), Rational(3), Rational(1)}});
    const Rational d(Integer(1), Integer(20));
    CHECK(invert_exact(j3) ==
          DenseMatrix::from_rows({{d * -2, d * 8, d * -2},
                                  {d * -2, d * -2, d * 8},
                                  {d * 8, d * -2, d * -2}}));
    CHECK(invert_exact(j3) == adjugate_inverse(j3));
    CHECK(invert_exact(DenseMatrix::identity(5)) == DenseMatrix::identity(5));

    const DenseMatrix l3 = DenseMatrix::from_rows({{Rational(2), Rational(1), Rational(5)},
                                                   {Rational(5), Rational(2), Rational(1)},
                                                   {Rational(1), Rational(5), Rational(2)}});
    const Rational a(Integer(-1), Integer(104)), b(Integer(23), Integer(104)),
        c(Integer(-9), Integer(104));
    CHECK(invert_exact(l3) == DenseMatrix::from_rows({{a, b, c}, {c, a, b}, {b, c, a}}));

    try {
        invert_exact(DenseMatrix::from_rows({{Rational(1), Rational(2)},
                                             {Rational(2), Rational(4)}}));
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.determinant == Rational(0));
    }

    std::mt19937 rng(303);
    int checked = 0;
    while (checked < 40) {
        const DenseMatrix m = random_rational_matrix(rng, 4, 4);
        if (det_bareiss(m).is_zero()) continue;
        CHECK(is_identity(mat_mul(m, invert_exact(m))));
        ++checked;
    }
}

TEST_CASE("block_diag assembles the direct sum") {
    const DenseMatrix a = DenseMatrix::from_rows({{Rational(1), Rational(2)},
                                                  {Rational(3), Rational(4)}});
    const DenseMatrix b = DenseMatrix::from_rows({{Rational(5)}});
    const DenseMatrix s = block_diag(a, b);
    CHECK(s.rows() == 3);
    CHECK(s(0, 1) == Rational(2));
    CHECK(s(2, 2) == Rational(5));
    CHECK(s(2, 0) == Rational(0));
    CHECK(s(0, 2) == Rational(0));
}

TEST_CASE("json round trips for the exact types") {
    std::mt19937 rng(404);
    const Integer big = integer_pow(Integer(7), 120);
    CHECK(integer_from_json(to_json(big)) == big);
    CHECK(integer_from_json(to_json(Integer(-3))) == -3);

    for (int i = 0; i < 50; ++i) {
        std::uniform_int_distribution<int> dist(-1000, 1000);
        const Rational q(Integer(dist(rng)), Integer(dist(rng) | 1));
        CHECK(rational_from_json(to_json(q)) == q);
    }

    const DenseMatrix m = random_rational_matrix(rng, 3, 4);
    CHECK(dense_from_json(to_json(m)) == m);

    const CirculantMatrix c = jcirc::testing::random_int_circulant(rng, 6);
    CHECK(circulant_from_json(to_json(c)) == c);
}
