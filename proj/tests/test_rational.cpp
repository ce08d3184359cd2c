#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oscifit/rational.hpp"

using oscifit::BigInt;
using oscifit::Rational;

TEST_CASE("construction reduces to canonical form") {
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    REQUIRE(Rational(2, 4).numerator() == 1);
    REQUIRE(Rational(2, 4).denominator() == 2);

    // Sign lives in the numerator, denominator stays positive.
    REQUIRE(Rational(3, -6).numerator() == -1);
    REQUIRE(Rational(3, -6).denominator() == 2);
    REQUIRE(Rational(-3, -6) == Rational(1, 2));

    REQUIRE(Rational(0, 7).is_zero());
    REQUIRE(Rational(0, 7).denominator() == 1);

    REQUIRE_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    REQUIRE(Rational(1, 12) + Rational(5, 6) == Rational(11, 12));
    REQUIRE(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    REQUIRE(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    REQUIRE(Rational(7, 6) / Rational(13, 12) == Rational(14, 13));
    REQUIRE(-Rational(1, 3) == Rational(-1, 3));
    REQUIRE(Rational(-5, 7).abs() == Rational(5, 7));

    REQUIRE_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("ordering and sign") {
    REQUIRE(Rational(1, 3) < Rational(1, 2));
    REQUIRE(Rational(-1, 2) < Rational(-1, 3));
    REQUIRE(Rational(5, 7).sign() == 1);
    REQUIRE(Rational(-5, 7).sign() == -1);
    REQUIRE(Rational().sign() == 0);
}

TEST_CASE("conversions") {
    REQUIRE(Rational(1, 4).to_double() == 0.25);
    REQUIRE(std::abs(Rational(1, 3).to_double() - 1.0 / 3.0) < 1e-16);
    REQUIRE(Rational(-7, 3).str() == "-7/3");
    REQUIRE(Rational(5).str() == "5");

    // The exact value 17/20160 used by the reference coefficient tables.
    REQUIRE(std::abs(Rational(17, 20160).to_double() - 8.4325396825396825e-4) < 1e-18);
}

TEST_CASE("canonical form is preserved under random arithmetic") {
    std::mt19937 rng(20260816u);
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 40);
    std::uniform_int_distribution<int> op(0, 3);

    auto canonical = [](const Rational& r) {
        if (r.is_zero()) return r.denominator() == 1;
        const BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(r.numerator()),
                                                    r.denominator());
        return g == 1 && r.denominator() > 0;
    };

    for (int trial = 0; trial < 2000; ++trial) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        Rational c;
        switch (op(rng)) {
            case 0: c = a + b; break;
            case 1: c = a - b; break;
            case 2: c = a * b; break;
            default:
                if (b.is_zero()) continue;
                c = a / b;
                break;
        }
        CAPTURE(a.str(), b.str(), c.str());
        REQUIRE(canonical(c));
    }
}

TEST_CASE("field identities on random operands") {
    std::mt19937 rng(77u);
    std::uniform_int_distribution<long long> num(-25, 25);
    std::uniform_int_distribution<long long> den(1, 25);

    for (int trial = 0; trial < 500; ++trial) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        const Rational c(num(rng), den(rng));
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
}
