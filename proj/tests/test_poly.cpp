#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gkoszul/errors.hpp"
#include "gkoszul/monomial.hpp"
#include "gkoszul/polynomial.hpp"
#include "gkoszul/ring.hpp"

using namespace gkoszul;

namespace {

const Fp F(101);

Mono mono(std::vector<uint32_t> e) {
  Mono m;
  m.e = std::move(e);
  return m;
}

}  // namespace

TEST_CASE("monomial order and enumeration") {
  // two variables, degree 3: x^3, x^2 y, x y^2, y^3
  auto deg3 = monomials_of_degree(2, 3);
  REQUIRE(deg3.size() == 4);
  CHECK(deg3[0] == mono({3, 0}));
  CHECK(deg3[1] == mono({2, 1}));
  CHECK(deg3[2] == mono({1, 2}));
  CHECK(deg3[3] == mono({0, 3}));

  // three variables, degree 2: x^2, xy, y^2, xz, yz, z^2
  auto deg2 = monomials_of_degree(3, 2);
  REQUIRE(deg2.size() == 6);
  CHECK(deg2[0] == mono({2, 0, 0}));
  CHECK(deg2[1] == mono({1, 1, 0}));
  CHECK(deg2[2] == mono({0, 2, 0}));
  CHECK(deg2[3] == mono({1, 0, 1}));
  CHECK(deg2[4] == mono({0, 1, 1}));
  CHECK(deg2[5] == mono({0, 0, 2}));

  // the enumeration agrees with the comparator
  for (size_t i = 0; i + 1 < deg2.size(); ++i)
    CHECK(mono_before(deg2[i], deg2[i + 1]));
  // lower degree always first
  CHECK(mono_before(mono({0, 0, 2}), mono({3, 0, 0})));

  CHECK(count_monomials(3, 4) == 15);
  CHECK(count_monomials(2, 7) == 8);
  CHECK(count_monomials(1, 5) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("monomial arithmetic") {
  Mono a = mono({2, 1});
  Mono b = mono({1, 1});
  CHECK(a.deg() == 3);
  CHECK(a.times(b) == mono({3, 2}));
  CHECK(a.times_var(1) == mono({2, 2}));
  CHECK(a.times_var(0, 3) == mono({5, 1}));
  CHECK(b.divides(a));
  CHECK(!a.divides(b));
  CHECK(b.quotient_of(a) == mono({1, 0}));
  CHECK(Mono(2).is_one());
}

TEST_CASE("parsing") {
  std::vector<std::string> xy{"x", "y"};
  Poly f = parse_poly("x^2 + 3*x*y + y^2", xy, F);
  CHECK(f.coeff(mono({2, 0})) == 1);
  CHECK(f.coeff(mono({1, 1})) == 3);
  CHECK(f.coeff(mono({0, 2})) == 1);
  CHECK(f.min_deg() == 2);
  CHECK(f.max_deg() == 2);
  CHECK(f.homogeneous());

  Poly g = parse_poly("-x^2+y^3", xy, F);
  CHECK(g.coeff(mono({2, 0})) == 100);
  CHECK(g.coeff(mono({0, 3})) == 1);
  CHECK(!g.homogeneous());
  CHECK(g.min_deg() == 2);
  CHECK(g.max_deg() == 3);

  // long digit strings reduce mod p while reading
  CHECK(parse_poly("103*x^2", xy, F).coeff(mono({2, 0})) == 2);
  CHECK(parse_poly("123456789012345678901234567890*x", xy, F).coeff(mono({1, 0})) ==
        46);  // the literal reduced mod 101

  // constants and repeated factors
  CHECK(parse_poly("7", xy, F).coeff(mono({0, 0})) == 7);
  CHECK(parse_poly("x*x*y", xy, F).coeff(mono({2, 1})) == 1);
  CHECK(parse_poly("2*x + 99*x", xy, F).coeff(mono({1, 0})) == 0);

  CHECK_THROWS_AS(parse_poly("x^", xy, F), ParseError);
  CHECK_THROWS_AS(parse_poly("x^0", xy, F), ParseError);
  CHECK_THROWS_AS(parse_poly("", xy, F), ParseError);
  CHECK_THROWS_AS(parse_poly("x + ", xy, F), ParseError);
  CHECK_THROWS_AS(parse_poly("^2", xy, F), ParseError);
  CHECK_THROWS_AS(parse_poly("q^2", xy, F), UnknownVariable);
  try {
    parse_poly("x^2 + q", xy, F);
    FAIL("expected UnknownVariable");
  } catch (const UnknownVariable& u) {
    CHECK(u.name == "q");
    CHECK(u.pos == 6);
  }
}

TEST_CASE("printing round-trips") {
  std::vector<std::string> xy{"x", "y"};
  for (const char* text :
       {"x^2 + 3*x*y + y^2", "y^3+x^2", "100*x^2", "x*y", "5", "x^2+x^2"}) {
    Poly f = parse_poly(text, xy, F);
    CHECK(parse_poly(print_poly(f, xy), xy, F) == f);
  }
  Poly f = parse_poly("y^2+x^2+3*x*y", xy, F);
  CHECK(print_poly(f, xy) == "x^2+3*x*y+y^2");

  CHECK(valid_variable_name("x"));
  CHECK(valid_variable_name("x1"));
  CHECK(valid_variable_name("Abc_2"));
  CHECK(!valid_variable_name("1x"));
  CHECK(!valid_variable_name(""));
  CHECK(!valid_variable_name("x-y"));
}

TEST_CASE("polynomial arithmetic") {
  std::vector<std::string> xy{"x", "y"};
  Poly x = parse_poly("x", xy, F);
  Poly y = parse_poly("y", xy, F);
  Poly sum = x.add(y, F);
  Poly sq = sum.mul(sum, F);
  CHECK(sq == parse_poly("x^2 + 2*x*y + y^2", xy, F));
  CHECK(sq.sub(sq, F).is_zero());
  CHECK(sq.scale(0, F).is_zero());
  CHECK(sq.mul_mono(mono({1, 0})) == parse_poly("x^3 + 2*x^2*y + x*y^2", xy, F));
  Poly g = parse_poly("x^2 + y^3 + x*y^4", xy, F);
  CHECK(g.truncate_deg(3) == parse_poly("x^2 + y^3", xy, F));
  CHECK(g.component(3) == parse_poly("y^3", xy, F));
  CHECK(g.component(4).is_zero());
}

TEST_CASE("ring presentation and json") {
  RingPresentation p = make_presentation(101, {"x", "y"}, {"x^3", "y^3"});
  CHECK(p.nvars() == 2);
  CHECK(p.generators.size() == 2);
  CHECK(!p.truncation);

  std::string text = presentation_to_json_text(p);
  RingPresentation q = presentation_from_json_text(text);
  CHECK(q.field == p.field);
  CHECK(q.variables == p.variables);
  CHECK(q.generators == p.generators);
  CHECK(presentation_to_json_text(q) == text);

  RingPresentation trunc = make_presentation(101, {"x", "y"}, {}, 3);
  CHECK(trunc.truncation == 3);
  std::string ttext = presentation_to_json_text(trunc);
  CHECK(presentation_from_json_text(ttext).truncation == 3);

  CHECK_THROWS_AS(make_presentation(100, {"x"}, {}), PreconditionViolated);
  CHECK_THROWS_AS(make_presentation(101, {"x", "x"}, {}), PreconditionViolated);
  CHECK_THROWS_AS(make_presentation(101, {"x", "2y"}, {}), PreconditionViolated);
  CHECK_THROWS_AS(make_presentation(101, {}, {}), PreconditionViolated);
  CHECK_THROWS_AS(make_presentation(101, {"x", "y"}, {"x + y^2"}),
                  PreconditionViolated);
  CHECK_THROWS_AS(make_presentation(101, {"x", "y"}, {"1 + x^2"}),
                  PreconditionViolated);
  CHECK_THROWS_AS(make_presentation(101, {"x", "y"}, {}, 1), TruncationTooSmall);
  CHECK_THROWS_AS(presentation_from_json_text("not json"), ParseError);
  CHECK_THROWS_AS(presentation_from_json_text("{\"field\": 101}"), ParseError);
  CHECK_THROWS_AS(
      presentation_from_json_text(
          "{\"field\":101,\"variables\":[\"x\"],\"generators\":[\"q^2\"]}"),
      UnknownVariable);
}
