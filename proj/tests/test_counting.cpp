#include <doctest.h>

#include "sqzero/counting.hpp"
#include "sqzero/oracle.hpp"
#include "sqzero/qbinom.hpp"
#include "sqzero/wlaurent.hpp"
#include "support.hpp"

using namespace sqzero;
using sqzero::test::poly;

namespace {

const QPoly q_minus_1 = poly({{1, 1}, {0, -1}});
const QPoly a31 = poly({{2, 2}, {1, -1}, {0, -1}});
const QPoly c3 = poly({{2, 2}, {1, -1}});
const QPoly c4 = poly({{4, 2}, {2, -1}});

} // namespace

TEST_CASE("WLaurent constant term") {
    // (w^-1 + q)(1 + w) has constant term 1 + q.
    const WLaurent a = WLaurent::monomial(1, -1) + WLaurent::monomial(QPoly::q(), 0);
    const WLaurent b = WLaurent::one_plus_w_pow(1);
    CHECK((a * b).constant_term() == poly({{0, 1}, {1, 1}}));
    CHECK(WLaurent::one_plus_w_pow(4).terms().at(2) == QPoly(6));
    CHECK(WLaurent::one_plus_w_pow(4).shifted(-2).constant_term() == QPoly(6));
    CHECK(WLaurent{}.constant_term().is_zero());
    CHECK((WLaurent::monomial(QPoly::q(), 3) + WLaurent::monomial(-QPoly::q(), 3)).is_zero());
    CHECK((WLaurent::monomial(1, 2) * q_pow(-1)).terms().at(2) == q_pow(-1));
}

TEST_CASE("recurrence table") {
    const TriangularTable table = recurrence_table(6);
    CHECK(table.n_max() == 6);
    CHECK(table.entry(1, 0) == QPoly(1));
    CHECK(table.entry(2, 1) == q_minus_1);
    CHECK(table.entry(3, 1) == a31);
    CHECK(table.entry(3, 2).is_zero());
    CHECK(table.entry(3, -1).is_zero());
    for (std::int64_t n = 0; n <= 6; ++n) {
        CHECK(table.entry(n, 0) == QPoly(1));
        CHECK(table.row(n).size() == static_cast<std::size_t>(n / 2 + 1));
        for (const auto& e : table.row(n)) {
            CHECK(e.is_polynomial());
        }
    }
    CHECK(recurrence_table(0).n_max() == 0);
    CHECK_THROWS_AS(recurrence_table(-1), std::invalid_argument);
    CHECK_THROWS_AS(table.row(7), std::invalid_argument);
}

TEST_CASE("a_n") {
    const TriangularTable table = recurrence_table(4);
    CHECK(a_n(table, 1) == QPoly(1));
    CHECK(a_n(table, 2) == QPoly::q());
    CHECK(a_n(table, 3) == c3);
    CHECK(a_n(table, 4) == c4);
}

TEST_CASE("closed form") {
    CHECK(closed_form(1) == QPoly(1));
    CHECK(closed_form(2) == QPoly::q());
    CHECK(closed_form(3) == c3);
    CHECK(closed_form(4) == c4);
    CHECK_THROWS_AS(closed_form(0), std::invalid_argument);
}

TEST_CASE("closed form at q = 2, 3 matches brute force") {
    // Frozen oracle anchors.
    CHECK(count_square_zero(3, 2) == 6);
    CHECK(count_square_zero(4, 2) == 28);
    CHECK(count_square_zero(3, 3) == 15);
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(closed_form(static_cast<std::int64_t>(n)).eval(2) == BigRational(count_square_zero(n, 2)));
    }
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(closed_form(static_cast<std::int64_t>(n)).eval(3) == BigRational(count_square_zero(n, 3)));
    }
}

TEST_CASE("anna") {
    CHECK(anna(0, 0) == QPoly(1));
    CHECK(anna(1, 0) == QPoly(1));
    CHECK(anna(2, 1) == q_minus_1);
    CHECK(anna(3, 1) == a31);
    CHECK_THROWS_AS(anna(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(anna(3, -1), std::invalid_argument);
    const TriangularTable table = recurrence_table(12);
    for (std::int64_t n = 0; n <= 12; ++n) {
        for (std::int64_t r = 0; 2 * r <= n; ++r) {
            CHECK(anna(n, r) == table.entry(n, r));
        }
    }
}

TEST_CASE("residual of the recurrence vanishes") {
    CHECK(sasha_prime_residual(1, 0).is_zero());
    CHECK(sasha_prime_residual(3, 0).is_zero());
    CHECK(sasha_prime_residual(5, 2).is_zero());
    CHECK_THROWS_AS(sasha_prime_residual(2, 1), std::invalid_argument);
    for (std::int64_t n = 0; n <= 10; ++n) {
        for (std::int64_t r = 0; 2 * (r + 1) <= n + 1; ++r) {
            CHECK(sasha_prime_residual(n, r).is_zero());
        }
    }
}

TEST_CASE("sumanna") {
    CHECK(sumanna(1) == QPoly(1));
    CHECK(sumanna(3) == c3);
    CHECK(sumanna(4) == c4);
    CHECK_THROWS_AS(sumanna(0), std::invalid_argument);
    for (std::int64_t n = 1; n <= 12; ++n) {
        CHECK(sumanna(n) == closed_form(n));
    }
}

TEST_CASE("lemma 2 sides") {
    CHECK(lemma2_lhs(0) == QPoly(1));
    CHECK(lemma2_lhs(2).is_zero());
    CHECK(lemma2_lhs(3) == poly({{1, -1}}));
    CHECK(lemma2_rhs(0) == QPoly(1));
    CHECK(lemma2_rhs(2).is_zero());
    CHECK(lemma2_rhs(3) == poly({{1, -1}}));
    CHECK(lemma2_rhs(4) == poly({{2, -1}}));
    CHECK(lemma2_rhs(6) == poly({{5, 1}}));
    CHECK_THROWS_AS(lemma2_lhs(-1), std::invalid_argument);
    for (std::int64_t m = 0; m <= 30; ++m) {
        CHECK(lemma2_lhs(m) == lemma2_rhs(m));
    }
}

TEST_CASE("degree and leading coefficient laws") {
    for (std::int64_t m = 1; m <= 10; ++m) {
        const QPoly even = closed_form(2 * m);
        const QPoly odd = closed_form(2 * m + 1);
        CHECK(*even.degree() == m * m);
        CHECK(*odd.degree() == m * m + m);
        CHECK(even.leading_coefficient() == binomial(2 * m, m) - binomial(2 * m, m - 1));
        CHECK(even.leading_coefficient() == binomial(2 * m, m) / (m + 1));
        CHECK(odd.leading_coefficient() > 0);
        CHECK(even.is_polynomial());
        CHECK(odd.is_polynomial());
    }
}
