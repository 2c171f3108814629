#pragma once
// Sparse polynomials over F_p with the canonical monomial order, plus the
// input grammar parser and a printer whose output reparses to the same
// polynomial.
//
// Grammar (whitespace allowed between tokens, an optional leading sign):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := [integer '*']? factor ('*' factor)* | integer
//   factor := variable ('^' positive-integer)?
//   variable := [A-Za-z][A-Za-z0-9_]*
// Integers are reduced mod p while reading, so arbitrarily long digit strings
// are fine.

#include <map>
#include <string>
#include <vector>

#include "gkoszul/fp.hpp"
#include "gkoszul/monomial.hpp"

namespace gkoszul {

class Poly {
 public:
  using Terms = std::map<Mono, uint32_t, MonoBefore>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  // Degree of the lowest (resp. highest) term; -1 when zero.
  int min_deg() const;
  int max_deg() const;
  bool homogeneous() const;

  uint32_t coeff(const Mono& m) const;
  // Add c * m into the polynomial (coefficients combine mod p).
  void add_term(const Mono& m, uint32_t c, const Fp& F);

  Poly add(const Poly& o, const Fp& F) const;
  Poly sub(const Poly& o, const Fp& F) const;
  Poly mul(const Poly& o, const Fp& F) const;
  Poly mul_mono(const Mono& m) const;
  Poly scale(uint32_t c, const Fp& F) const;
  // Drop all terms of degree > cap.
  Poly truncate_deg(int cap) const;
  // Terms of exactly degree d.
  Poly component(int d) const;

  bool operator==(const Poly&) const = default;

 private:
  int nvars_ = 0;
  Terms t_;
};

// Parse with respect to a declared variable list.  Throws ParseError /
// UnknownVariable with the byte position of the problem.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                const Fp& F);

// Canonical text form: terms in the canonical monomial order joined by '+',
// coefficient prefix omitted when it is 1 (except for the constant term),
// exponent suffix omitted when it is 1.  parse(print(f)) == f.
std::string print_poly(const Poly& f, const std::vector<std::string>& vars);

// Check a variable name against the grammar.
bool valid_variable_name(const std::string& s);

}  // namespace gkoszul
