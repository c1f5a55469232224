#include "doctest.h"
#include "tac/polynomial.hpp"

using namespace tac;

static const std::vector<std::string> XY = {"x", "y"};
static const std::vector<std::string> XYZ = {"x", "y", "z"};

TEST_CASE("prime field arithmetic") {
    PrimeField k(32003);
    CHECK(k.add(32000, 5) == 2);
    CHECK(k.sub(3, 5) == 32001);
    CHECK(k.neg(0) == 0);
    CHECK(k.mul(k.inv(7), 7) == 1);
    CHECK(k.from_int(-1) == 32002);
    CHECK_THROWS_AS(k.inv(0), Error);

    PrimeField f2(2);
    CHECK(f2.add(1, 1) == 0);
    CHECK(f2.inv(1) == 1);
}

TEST_CASE("grevlex order, last variable smallest") {
    // in k[x,y,z]: x > y > z, and x*z > y^2 is FALSE under grevlex
    // (deg equal, reversed-lex compares from z upward)
    Monomial x({1, 0, 0}), y({0, 1, 0}), z({0, 0, 1});
    CHECK(Monomial::compare(x, y) > 0);
    CHECK(Monomial::compare(y, z) > 0);
    Monomial xz({1, 0, 1}), y2({0, 2, 0});
    CHECK(Monomial::compare(y2, xz) > 0);
    Monomial x2({2, 0, 0}), xy({1, 1, 0});
    CHECK(Monomial::compare(x2, xy) > 0);
    CHECK(Monomial::compare(xy, y2) > 0);
    // degree dominates
    CHECK(Monomial::compare(z.mul(z), x) > 0);
}

TEST_CASE("parse and print round trip") {
    PrimeField k(32003);
    auto p = parse_polynomial(k, "3*x^2*y - y + 1", XY);
    CHECK(p.nterms() == 3);
    CHECK(print_polynomial(k, p, XY) == "3*x^2*y - y + 1");

    auto q = parse_polynomial(k, "x^2-y", XY);
    CHECK(print_polynomial(k, q, XY) == "x^2 - y");

    CHECK(print_polynomial(k, parse_polynomial(k, "0", XY), XY) == "0");
    CHECK(print_polynomial(k, parse_polynomial(k, "-x", XY), XY) == "-x");
    CHECK(print_polynomial(k, parse_polynomial(k, "x*x*y", XY), XY) == "x^2*y");
    CHECK(print_polynomial(k, parse_polynomial(k, "2*3", XY), XY) == "6");
    // balanced printing
    CHECK(print_polynomial(k, parse_polynomial(k, "32002*x", XY), XY) == "-x");

    CHECK_THROWS_AS(parse_polynomial(k, "x + w", XY), ParseError);
    CHECK_THROWS_AS(parse_polynomial(k, "x +", XY), ParseError);
    CHECK_THROWS_AS(parse_polynomial(k, "x y", XY), ParseError);
}

TEST_CASE("arithmetic") {
    PrimeField k(32003);
    auto a = parse_polynomial(k, "x + y", XY);
    auto b = parse_polynomial(k, "x - y", XY);
    CHECK(print_polynomial(k, mul(k, a, b), XY) == "x^2 - y^2");
    CHECK(sub(k, a, a).is_zero());
    auto c = parse_polynomial(k, "2*x^2*y", XYZ);
    CHECK(print_polynomial(k, make_monic(k, c), XYZ) == "x^2*y");
    // (x+y)^2 over F_2
    PrimeField f2(2);
    auto s = parse_polynomial(f2, "x + y", XY);
    CHECK(print_polynomial(f2, mul(f2, s, s), XY) == "x^2 + y^2");
}

TEST_CASE("leading data") {
    PrimeField k(32003);
    auto p = parse_polynomial(k, "x*y + y^2 + 5", XY);
    // grevlex with y smallest: x*y > y^2
    CHECK(print_polynomial(k, Polynomial::term(p.leading_coeff(), p.leading_monomial()), XY) ==
          "x*y");
    CHECK(p.degree() == 2);
    CHECK(p.constant_term() == 5);
    CHECK(parse_polynomial(k, "x", XY).constant_term() == 0);
}
