#include <doctest.h>

#include <itk/padic.hpp>

using namespace itk;

TEST_CASE("context validates its parameters") {
  CHECK_THROWS_AS(PadicContext(2, 20, 200), Error);
  CHECK_THROWS_AS(PadicContext(4, 20, 200), Error);
  CHECK_THROWS_AS(PadicContext(9, 20, 200), Error);
  CHECK_THROWS_AS(PadicContext(3, 0, 200), Error);
  CHECK_THROWS_AS(PadicContext(3, 20, 0), Error);
  PadicContext ctx(3, 20, 200);
  CHECK(ctx.p() == 3);
  CHECK(ctx.precision() == 20);
  CHECK(ctx.truncation() == 200);
  CHECK(ctx == PadicContext(3, 20, 200));
  CHECK_FALSE(ctx == PadicContext(3, 19, 200));
}

TEST_CASE("from_integer reduces into [0, p^N)") {
  PadicContext ctx(3, 3, 10);
  CHECK(ctx.from_integer(27).residue() == 0);
  CHECK(ctx.from_integer(28).residue() == 1);
  CHECK(ctx.from_integer(-1L).residue() == 26);
  CHECK(ctx.from_integer(-1L).precision() == 3);
}

TEST_CASE("invert matches the frozen example") {
  PadicContext ctx(3, 3, 10);
  PadicInt inv = ctx.invert(ctx.from_integer(2));
  CHECK(inv.residue() == 14);  // 2 * 14 = 28 = 1 mod 27
  CHECK(inv.precision() == 3);
  CHECK(ctx.mul(inv, ctx.from_integer(2)).residue() == 1);

  CHECK_THROWS_AS(ctx.invert(ctx.from_integer(3)), NotAUnit);
  CHECK_THROWS_AS(ctx.invert(ctx.from_integer(0)), NotAUnit);
  CHECK_THROWS_AS(ctx.invert(PadicInt{mpz_class(0), 0}), PrecisionExhausted);
}

TEST_CASE("valuation reports exact values and flags infinity") {
  PadicContext c3(3, 5, 10);
  Valuation v = c3.valuation(c3.from_integer(9));
  CHECK_FALSE(v.is_infinite());
  CHECK(v.finite() == 2);

  Valuation z = c3.valuation(c3.from_integer(0));
  CHECK(z.is_infinite());

  PadicContext c5(5, 4, 10);
  CHECK(c5.valuation(c5.from_integer(15)).finite() == 1);

  // Capped valuation of a zero residue is the precision itself.
  CHECK(c3.capped_valuation(c3.from_integer(0)) == 5);
  CHECK(c3.capped_valuation(c3.from_integer(9)) == 2);
}

TEST_CASE("addition and subtraction keep the weaker precision") {
  PadicContext ctx(3, 6, 10);
  PadicInt full = ctx.from_integer(5);
  PadicInt low{mpz_class(2), 3};
  PadicInt s = ctx.add(full, low);
  CHECK(s.precision() == 3);
  CHECK(s.residue() == 7);
  CHECK(ctx.sub(full, low).precision() == 3);
}

TEST_CASE("multiplication gains precision from valuation") {
  PadicContext ctx(3, 6, 10);
  // (known mod 3^3) * 9: product known mod 3^5.
  PadicInt a{mpz_class(2), 3};
  PadicInt b = ctx.from_integer(9);
  PadicInt prod = ctx.mul(a, b);
  CHECK(prod.residue() == 18);
  CHECK(prod.precision() == 5);

  // Unit times unit: min of the precisions.
  PadicInt u{mpz_class(2), 4};
  CHECK(ctx.mul(u, ctx.from_integer(5)).precision() == 4);

  // Never above the working precision.
  CHECK(ctx.mul(b, b).precision() == 6);
}

TEST_CASE("p-power shifts move precision with the digits") {
  PadicContext ctx(3, 6, 10);
  PadicInt a = ctx.from_integer(2);
  PadicInt up = ctx.mul_pow_p(a, 2);
  CHECK(up.residue() == 18);
  CHECK(up.precision() == 6);

  PadicInt down = ctx.div_pow_p(up, 2);
  CHECK(down.residue() == 2);
  CHECK(down.precision() == 4);

  CHECK_THROWS_AS(ctx.div_pow_p(a, 1), NotDivisible);

  // A zero residue passes through with lowered precision.
  PadicInt z = ctx.div_pow_p(ctx.from_integer(0), 2);
  CHECK(z.residue() == 0);
  CHECK(z.precision() == 4);
}

TEST_CASE("congruences and zero tests respect precision") {
  PadicContext ctx(3, 6, 10);
  CHECK(ctx.congruent(ctx.from_integer(5), ctx.from_integer(5 + 81), 4));
  CHECK_FALSE(ctx.congruent(ctx.from_integer(5), ctx.from_integer(6), 1));
  CHECK(ctx.is_zero_at_precision(PadicInt{mpz_class(0), 2}));
  CHECK_FALSE(ctx.is_zero_at_precision(ctx.from_integer(9)));
}
