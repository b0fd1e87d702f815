#include <doctest.h>

#include "core/poly.hpp"

#include <stdexcept>
#include <vector>

using namespace altdes;

TEST_CASE("univariate arithmetic") {
    const Poly1 one_plus_t(std::vector<Rat>{Rat(1), Rat(1)});
    const Poly1 sq = one_plus_t * one_plus_t;
    CHECK(sq == Poly1(std::vector<Rat>{Rat(1), Rat(2), Rat(1)}));
    CHECK(sq == one_plus_t.pow(2));
    CHECK(one_plus_t.pow(0) == Poly1(Rat(1)));
    CHECK(sq.degree() == 2);
    CHECK(sq.coeff(1) == 2);
    CHECK(sq.coeff(5) == 0);
    CHECK(sq.eval(Rat(3)) == 16);

    const Poly1 zero;
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.degree().has_value());
    CHECK((sq - sq).is_zero());
    CHECK((sq * zero).is_zero());
    CHECK(-one_plus_t == Poly1(std::vector<Rat>{Rat(-1), Rat(-1)}));
}

TEST_CASE("exact division") {
    const Poly1 one_plus_t(std::vector<Rat>{Rat(1), Rat(1)});
    const Poly1 sq = one_plus_t.pow(2);
    CHECK(sq.divide_exact(one_plus_t) == one_plus_t);
    CHECK(sq.divide_exact(sq) == Poly1(Rat(1)));

    const Poly1 with_remainder(std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    CHECK_THROWS_AS(with_remainder.divide_exact(one_plus_t), std::domain_error);
    CHECK_THROWS_AS(sq.divide_exact(Poly1()), std::domain_error);
}

TEST_CASE("printing") {
    CHECK(Poly1(std::vector<Rat>{Rat(1), Rat(2), Rat(1)}).to_string() ==
          "1 + 2*t + t^2");
    CHECK(Poly1::monomial(3, Rat(-1, 2)).to_string("q") == "-1/2*q^3");
    CHECK(Poly1().to_string() == "0");
}

TEST_CASE("bivariate caps drop and flag") {
    const Poly2 t = Poly2::monomial(1, 2, 1, 0);
    const Poly2 tt = t * t;
    CHECK(tt.is_zero());
    CHECK(tt.truncated());
    CHECK_FALSE(t.truncated());

    Poly2 p(2, 2);
    p.add_term(0, 0, Rat(1));
    p.add_term(3, 0, Rat(5));  // past the t cap
    CHECK(p.truncated());
    CHECK(p.coeff(0, 0) == 1);
}

TEST_CASE("bivariate product by hand") {
    // (1 + t q)(1 - q) inside caps (2, 2)
    Poly2 a = Poly2::constant(2, 2, Rat(1));
    a.add_term(1, 1, Rat(1));
    Poly2 b = Poly2::constant(2, 2, Rat(1));
    b.add_term(0, 1, Rat(-1));
    const Poly2 ab = a * b;
    CHECK(ab.coeff(0, 0) == 1);
    CHECK(ab.coeff(0, 1) == -1);
    CHECK(ab.coeff(1, 1) == 1);
    CHECK(ab.coeff(1, 2) == -1);
    CHECK_FALSE(ab.truncated());
}

TEST_CASE("unshaped zero adopts caps") {
    Poly2 z;
    CHECK(z.unshaped());
    CHECK(z.is_zero());
    const Poly2 p = Poly2::monomial(3, 3, 1, 2, Rat(7));
    const Poly2 sum = z + p;
    CHECK(sum.tcap() == 3);
    CHECK(sum.coeff(1, 2) == 7);
    // equality ignores the caps, so differently shaped zeros agree
    CHECK(Poly2(1, 5) == Poly2(4, 0));
}
