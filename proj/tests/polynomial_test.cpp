#include <doctest.h>

#include "isoq/polynomial.hpp"

using isoq::DoublePoly;
using isoq::Rational;
using isoq::RationalPoly;

TEST_CASE("zero_polynomial_has_degree_minus_one") {
    RationalPoly zero;
    CHECK(zero.degree() == -1);
    RationalPoly trimmed({Rational(0), Rational(0)});
    CHECK(trimmed.degree() == -1);
    CHECK(zero == trimmed);
}

TEST_CASE("trailing_zero_coefficients_are_trimmed") {
    RationalPoly p({Rational(3), Rational(1), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == Rational(3));
    CHECK(p.coeff(1) == Rational(1));
    CHECK(p.coeff(7) == Rational(0));
}

TEST_CASE("arithmetic_matches_hand_expansion") {
    RationalPoly xp1({Rational(1), Rational(1)});
    RationalPoly xm1({Rational(-1), Rational(1)});
    RationalPoly prod = xp1 * xm1;
    CHECK(prod == RationalPoly({Rational(-1), Rational(0), Rational(1)}));
    CHECK(xp1 + xm1 == RationalPoly({Rational(0), Rational(2)}));
    CHECK(xp1 - xm1 == RationalPoly({Rational(2)}));
    CHECK(-xp1 == RationalPoly({Rational(-1), Rational(-1)}));
    CHECK(xp1 * Rational(3) == RationalPoly({Rational(3), Rational(3)}));
}

TEST_CASE("horner_evaluation_at_rational_point") {
    // p(x) = 2x^2 - x + 5 at x = 3/2 gives 8
    RationalPoly p({Rational(5), Rational(-1), Rational(2)});
    CHECK(p.eval(Rational(3, 2)) == Rational(8));
}

TEST_CASE("derivative_drops_degree") {
    RationalPoly p({Rational(1), Rational(2), Rational(3)});
    CHECK(p.derivative() == RationalPoly({Rational(2), Rational(6)}));
    CHECK(RationalPoly({Rational(4)}).derivative().degree() == -1);
}

TEST_CASE("euclidean_division_with_remainder") {
    // x^3 + 2x + 1 = (x^2 - x + 3)(x + 1) - 2
    RationalPoly num({Rational(1), Rational(2), Rational(0), Rational(1)});
    RationalPoly den({Rational(1), Rational(1)});
    auto dr = num.divmod(den);
    CHECK(dr.quotient == RationalPoly({Rational(3), Rational(-1), Rational(1)}));
    CHECK(dr.remainder == RationalPoly({Rational(-2)}));
    CHECK(dr.quotient * den + dr.remainder == num);
}

TEST_CASE("division_by_zero_polynomial_throws") {
    RationalPoly p({Rational(1), Rational(1)});
    CHECK_THROWS_AS(p.divmod(RationalPoly()), std::domain_error);
}

TEST_CASE("gcd_is_monic_common_factor") {
    RationalPoly xp2({Rational(2), Rational(1)});
    RationalPoly a = xp2 * RationalPoly({Rational(1), Rational(3)});
    RationalPoly b = xp2 * RationalPoly({Rational(-5), Rational(0), Rational(7)});
    RationalPoly g = isoq::poly_gcd(a, b);
    CHECK(g == xp2);
    // Coprime pair reduces to the unit polynomial.
    CHECK(isoq::poly_gcd(RationalPoly({Rational(1), Rational(1)}),
                         RationalPoly({Rational(2), Rational(1)})) ==
          RationalPoly({Rational(1)}));
}

TEST_CASE("rational_to_double_conversion_preserves_values") {
    RationalPoly p({Rational(1, 4), Rational(-3, 8)});
    DoublePoly d = isoq::to_double(p);
    CHECK(d.eval(2.0) == doctest::Approx(0.25 - 0.75).epsilon(1e-15));
}
