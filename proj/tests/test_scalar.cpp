#include <doctest.h>

#include "sgk/scalar.hpp"

#include <random>

using sgk::Field;
using sgk::Scalar;

namespace {
const Field Q = Field::rational();
const Field P = Field::prime(2305843009213693951ull); // 2^61 - 1
} // namespace

TEST_CASE("parse and print rationals canonically") {
    CHECK(Scalar::parse(Q, "6/4").to_string() == "3/2");
    CHECK(Scalar::parse(Q, "-1.25").to_string() == "-5/4");
    CHECK(Scalar::parse(Q, "+7").to_string() == "7");
    CHECK(Scalar::parse(Q, ".5").to_string() == "1/2");
    CHECK(Scalar::parse(Q, "0/9").is_zero());
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(Q, "abc"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(Q, ""), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(Q, "1e5"), std::invalid_argument);
}

TEST_CASE("field parsing and validation") {
    CHECK(Field::parse("rational") == Q);
    CHECK(Field::parse("fp:2305843009213693951") == P);
    CHECK_THROWS_AS(Field::parse("fp:15"), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse("fp:7"), std::invalid_argument); // below 2^30
    CHECK_THROWS_AS(Field::parse("real"), std::invalid_argument);
    CHECK(P.to_string() == "fp:2305843009213693951");
}

TEST_CASE("primality against trial division") {
    for (std::uint64_t n = 0; n < 2000; ++n) {
        bool trial = n >= 2;
        for (std::uint64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
        CHECK(sgk::is_prime_u64(n) == trial);
    }
    CHECK(sgk::is_prime_u64(1073741827ull)); // smallest prime above 2^30
    CHECK_FALSE(sgk::is_prime_u64(1073741825ull));
}

TEST_CASE("prime-field arithmetic agrees with reduced rational arithmetic") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int k = 0; k < 500; ++k) {
        long a = static_cast<long>(dist(rng)), b = static_cast<long>(dist(rng)), c = static_cast<long>(dist(rng));
        if (c == 0) c = 1;
        const mpq_class exact = mpq_class(a) * mpq_class(b) + mpq_class(a, 1) / mpq_class(c);
        const Scalar fa = Scalar::from_int(P, a), fb = Scalar::from_int(P, b), fc = Scalar::from_int(P, c);
        CHECK(fa * fb + fa / fc == Scalar::from_rational(P, exact));
        CHECK(fa - fa == Scalar::zero(P));
        if (a != 0) CHECK(fa * fa.inverse() == Scalar::one(P));
    }
}

TEST_CASE("powers, inverses and field mixing") {
    const Scalar two = Scalar::from_int(Q, 2);
    CHECK(two.pow(10).to_string() == "1024");
    CHECK(two.pow(-3).to_string() == "1/8");
    CHECK(two.pow(0) == Scalar::one(Q));
    CHECK(Scalar::from_int(P, 3).pow(-1) * Scalar::from_int(P, 3) == Scalar::one(P));
    CHECK_THROWS_AS(Scalar::zero(Q).inverse(), std::domain_error);
    CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(P), std::invalid_argument);
    CHECK_FALSE(Scalar::one(Q) == Scalar::one(P));
    CHECK_THROWS_AS(Scalar::one(P).rational(), std::logic_error);
    CHECK(Scalar::from_int(P, -1).to_string() == "2305843009213693950");
}
