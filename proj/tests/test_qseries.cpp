#include <doctest.h>

#include <random>

#include "modunits/qseries.hpp"

using namespace modunits;

namespace {

QSeries from_ints(std::vector<long> v) {
    std::vector<Rational> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i];
    return QSeries(std::move(c));
}

QSeries random_series(std::mt19937& rng, int prec, int max_val = 0) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> val(0, max_val);
    const int v = val(rng);
    std::vector<Rational> c(static_cast<std::size_t>(prec));
    for (int i = v; i < prec; ++i) c[static_cast<std::size_t>(i)] = Rational(num(rng), den(rng));
    return QSeries(std::move(c));
}

} // namespace

TEST_CASE("add") {
    CHECK(add(from_ints({1, 1}), from_ints({1, -1})) == from_ints({2, 0}));
    const QSeries s = from_ints({3, 1, 4});
    CHECK(add(QSeries(3), s) == s);
    CHECK(add(from_ints({0, 1, 3}), from_ints({0, 0, 2})) == from_ints({0, 1, 5}));
}

TEST_CASE("mul") {
    CHECK(mul(from_ints({1, 1}), from_ints({1, -1})) == from_ints({1, 0}));
    const QSeries s = from_ints({3, 1, 4});
    CHECK(mul(QSeries::one(3), s) == s);
    // (sum q^n)^2 = sum (n+1) q^n, against a direct convolution
    const int p = 12;
    QSeries geom = QSeries::one(p);
    {
        std::vector<Rational> c(static_cast<std::size_t>(p), Rational(1));
        geom = QSeries(std::move(c));
    }
    const QSeries square = mul(geom, geom);
    for (int n = 0; n < p; ++n) {
        Rational conv = 0;
        for (int i = 0; i <= n; ++i) conv += geom.coeff(i) * geom.coeff(n - i);
        CHECK(square.coeff(n) == conv);
        CHECK(square.coeff(n) == Rational(n + 1));
    }
}

TEST_CASE("precision follows the min rule") {
    const QSeries a = from_ints({1, 2, 3, 4, 5});
    const QSeries b = from_ints({1, 1});
    CHECK(add(a, b).prec() == 2);
    CHECK(mul(a, b).prec() == 2);
}

TEST_CASE("div") {
    CHECK(div(from_ints({1, 0, -1}), from_ints({1, -1, 0})) == from_ints({1, 1, 0}));
    const QSeries s = from_ints({0, 2, 6});
    CHECK(div(s, s) == QSeries::one(2));
    CHECK(div(from_ints({0, 0, 1, 1}), from_ints({0, 1, 0, 0})) == from_ints({0, 1, 1}));
    CHECK_THROWS_AS(div(from_ints({1, 1}), QSeries(2)), DivisionByZeroSeries);
    CHECK_THROWS_AS(div(from_ints({1, 1}), from_ints({0, 1})), ValuationMismatch);
}

TEST_CASE("pow") {
    CHECK(pow(from_ints({1, 1}), 0) == QSeries::one(2));
    const QSeries inv = pow(from_ints({1, -1, 0, 0, 0}), -1);
    CHECK(inv == from_ints({1, 1, 1, 1, 1}));
    // (1-q)^{-8}: binomial series oracle C(k+7,7)
    const QSeries p8 = pow(from_ints({1, -1, 0, 0, 0, 0}), -8);
    for (int n = 0; n < 6; ++n) CHECK(p8.coeff(n) == Rational(binomial(n + 7, 7)));
    CHECK(p8.coeff(1) == 8);
    CHECK(p8.coeff(2) == 36);
    CHECK_THROWS_AS(pow(from_ints({0, 1}), -1), ValuationMismatch);
}

TEST_CASE("euler_factor") {
    // q * euler_factor(1, 24) begins q - 24q^2 + 252q^3
    const QSeries e24 = euler_factor(1, 24, 4);
    CHECK(shift(e24, 1) == from_ints({0, 1, -24, 252}));
    CHECK(euler_factor(2, 1, 3) == from_ints({1, 0, -1}));
    CHECK(euler_factor(1, -8, 3) == from_ints({1, 8, 44}));
    CHECK(euler_factor(1, -8, 5) == from_ints({1, 8, 44, 192, 726}));
    CHECK_THROWS_AS(euler_factor(0, 1, 3), DomainError);
}

TEST_CASE("euler_factor equals pow of the e=1 expansion") {
    for (std::int64_t m : {1, 2, 3}) {
        for (std::int64_t e : {-8, -1, 2, 16, 24}) {
            CHECK(euler_factor(m, e, 14) == pow(euler_factor(m, 1, 14), e));
        }
    }
}

TEST_CASE("dilate") {
    CHECK(dilate(from_ints({1, 1}), 3) == from_ints({1, 0, 0, 1, 0, 0}));
    const QSeries s = from_ints({2, 3, 4});
    CHECK(dilate(s, 1) == s);
    CHECK(dilate(from_ints({0, 1, -24}), 2) == from_ints({0, 0, 1, 0, -24, 0}));
}

TEST_CASE("valuation") {
    CHECK(from_ints({0, 0, 0, 1, 0, 1}).valuation() == 3);
    CHECK(QSeries::one(4).valuation() == 0);
    CHECK_FALSE(QSeries(10).valuation().has_value());
    CHECK(QSeries(10).is_zero());
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const QSeries a = random_series(rng, 9), b = random_series(rng, 9),
                      c = random_series(rng, 9);
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    }
}

TEST_CASE("mul reproduces div on the overlap") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        QSeries a = random_series(rng, 10, 2);
        const QSeries b = random_series(rng, 10, 3);
        const auto va = a.valuation(), vb = b.valuation();
        if (!va || !vb || *va > *vb) continue;
        const QSeries q = div(b, a);
        const QSeries back = mul(q, truncate(a, q.prec()));
        for (int i = 0; i < back.prec(); ++i) CHECK(back.coeff(i) == b.coeff(i));
    }
}

TEST_CASE("dilation is multiplicative") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const QSeries a = random_series(rng, 7), b = random_series(rng, 7);
        for (std::int64_t n : {2, 3}) {
            CHECK(dilate(mul(a, b), n) == mul(dilate(a, n), dilate(b, n)));
        }
    }
}

TEST_CASE("rendering") {
    CHECK(to_string(from_ints({0, 1, -24, 252})) == "q - 24*q^2 + 252*q^3 + O(q^4)");
    CHECK(to_string(QSeries(10)) == "O(q^10)");
    CHECK(to_string(QSeries::one(2)) == "1 + O(q^2)");
    CHECK(to_string(QSeries({Rational(1, 2), Rational(5, 3)})) == "1/2 + 5/3*q + O(q^2)");
    CHECK(to_string(from_ints({0, -1, 0, 2})) == "-q + 2*q^3 + O(q^4)");
}
