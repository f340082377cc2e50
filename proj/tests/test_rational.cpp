#include <stdexcept>

#include "doctest.h"
#include "ordloc/rational.hpp"

using namespace ordloc;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
    CHECK(parse_rational("3") == Rat(3));
    CHECK(parse_rational("-7") == Rat(-7));
    CHECK(parse_rational("+2") == Rat(2));
    CHECK(parse_rational("1/2") == Rat(1, 2));
    CHECK(parse_rational("3/6") == Rat(1, 2));  // canonicalized
    CHECK(parse_rational("-4/6") == Rat(-2, 3));
    CHECK(parse_rational("0.4") == Rat(2, 5));
    CHECK(parse_rational("-0.25") == Rat(-1, 4));
    CHECK(parse_rational(".5") == Rat(1, 2));
    CHECK(parse_rational("5.") == Rat(5));
    CHECK(parse_rational("  2/3  ") == Rat(2, 3));  // surrounding whitespace
    CHECK(parse_rational("0.000001") == Rat(1, 1000000));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("   "), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("--1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1 / 2"), std::invalid_argument);
}

TEST_CASE("rat_to_string round-trips through parse_rational") {
    for (const char* text : {"0", "1", "-3", "1/2", "-22/7", "999999/1000000"}) {
        Rat v = parse_rational(text);
        CHECK(rat_to_string(v) == text);
        CHECK(parse_rational(rat_to_string(v)) == v);
    }
    CHECK(rat_to_string(parse_rational("8/6")) == "4/3");
}

TEST_CASE("rat_to_decimal rounds half away from zero") {
    CHECK(rat_to_decimal(Rat(1, 3)) == "0.333333");
    CHECK(rat_to_decimal(Rat(2, 3)) == "0.666667");
    CHECK(rat_to_decimal(Rat(1, 2), 0) == "1");
    CHECK(rat_to_decimal(Rat(-1, 2), 0) == "-1");
    CHECK(rat_to_decimal(Rat(1, 200000)) == "0.000005");
    CHECK(rat_to_decimal(Rat(-1, 200000)) == "-0.000005");
    CHECK(rat_to_decimal(Rat(0), 2) == "0.00");
    CHECK(rat_to_decimal(Rat(7), 3) == "7.000");
}

TEST_CASE("RatioValue orders finite values below infinity") {
    RatioValue one = RatioValue::finite(Rat(1));
    RatioValue two = RatioValue::finite(Rat(2));
    RatioValue inf = RatioValue::infinity();
    CHECK(one < two);
    CHECK(two < inf);
    CHECK_FALSE(inf < inf);
    CHECK(inf == inf);
    CHECK(one <= RatioValue::finite(Rat(1)));
    CHECK_FALSE(inf <= two);
    CHECK(ratio_to_string(inf) == "inf");
    CHECK(ratio_to_string(RatioValue::finite(Rat(3, 2))) == "3/2");
}
