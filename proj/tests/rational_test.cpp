#include "irt/rational.hpp"

#include <doctest.h>

#include <random>
#include <unordered_set>

using irt::BigInt;
using irt::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -3).den() == 1);
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(21, 14).num() == 3);
    CHECK(Rational(21, 14).den() == 2);
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(3, 4) == Rational(-3, 4));
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 5) > Rational(4, 3));
    CHECK(Rational(2, 6) <= Rational(1, 3));
    CHECK(Rational(2, 6) >= Rational(1, 3));
}

TEST_CASE("hashing coincides with value equality") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-60, 60);
    std::uniform_int_distribution<long long> den(1, 24);
    for (int i = 0; i < 2000; ++i) {
        Rational a(num(rng), den(rng));
        long long k = den(rng);
        Rational b(a.num() * k, a.den() * k);  // same value, unreduced input
        CHECK(a == b);
        CHECK(hash_value(a) == hash_value(b));
    }
    std::unordered_set<Rational> values;
    for (long long n = -20; n <= 20; ++n)
        for (long long d = 1; d <= 12; ++d) values.insert(Rational(n, d));
    // distinct values only: 1/2 == 2/4 etc. collapse
    CHECK(values.count(Rational(1, 2)) == 1);
    CHECK(values.count(Rational(5, 7)) == 1);
    CHECK(values.count(Rational(1, 13)) == 0);
}

TEST_CASE("large values do not overflow") {
    const BigInt huge("123456789012345678901234567890");
    Rational big(huge, BigInt(7));
    Rational sum = big + big;
    CHECK(sum / Rational(2) == big);
    CHECK(big * big == Rational(huge * huge, BigInt(49)));
}

TEST_CASE("string form") {
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(-3, 4).to_string() == "-3/4");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
}
