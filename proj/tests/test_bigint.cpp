#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynahill/bigint.hpp"
#include "dynahill/errors.hpp"

using namespace dynahill;

TEST_CASE("small values behave like uint64") {
    CHECK(BigUint{0}.to_decimal() == "0");
    CHECK(BigUint{42}.to_decimal() == "42");
    CHECK((BigUint{3} + BigUint{4}).to_decimal() == "7");
    CHECK((BigUint{10} - BigUint{3}).to_decimal() == "7");
    CHECK((BigUint{6} * BigUint{7}).to_decimal() == "42");
    CHECK(BigUint{5} == BigUint{5});
    CHECK(BigUint{4} < BigUint{5});
    CHECK(BigUint{6} > BigUint{5});
}

TEST_CASE("carries across limb boundaries") {
    BigUint max64{0xffffffffffffffffULL};
    CHECK((max64 + BigUint{1}).to_decimal() == "18446744073709551616"); // 2^64
    CHECK((max64 + BigUint{1} - BigUint{1}).to_decimal() == "18446744073709551615");
    CHECK((max64 * max64).to_decimal() == "340282366920938463426481119284349108225");
}

TEST_CASE("pow") {
    CHECK(BigUint::pow(BigUint{2}, 0).to_decimal() == "1");
    CHECK(BigUint::pow(BigUint{2}, 10).to_decimal() == "1024");
    CHECK(BigUint::pow(BigUint{10}, 25).to_decimal() == "10000000000000000000000000");
    CHECK(BigUint::pow(BigUint{29}, 9).to_decimal() == "14507145975869");
}

TEST_CASE("subtraction underflow is rejected") {
    CHECK_THROWS_AS(BigUint{3} - BigUint{4}, ContractViolation);
}

TEST_CASE("bit_length and log2") {
    CHECK(BigUint{0}.bit_length() == 0);
    CHECK(BigUint{1}.bit_length() == 1);
    CHECK(BigUint{255}.bit_length() == 8);
    CHECK(BigUint{256}.bit_length() == 9);
    CHECK(BigUint::pow(BigUint{2}, 100).bit_length() == 101);
    CHECK(BigUint::pow(BigUint{2}, 100).log2_approx() == doctest::Approx(100.0));
    CHECK(BigUint{1024}.log2_approx() == doctest::Approx(10.0));
}

TEST_CASE("multiplication agrees with repeated addition on random-ish inputs") {
    BigUint acc{0};
    BigUint base{0x123456789abcdefULL};
    for (int i = 0; i < 37; ++i) acc = acc + base;
    CHECK(acc == base * BigUint{37});
}

TEST_CASE("rational rendering and approximation") {
    Rational r{BigUint{96}, BigUint{125}};
    CHECK(r.to_string() == "96/125");
    CHECK(r.approx() == doctest::Approx(0.768));
}
