#include "gkoszul/polynomial.hpp"

#include <cassert>
#include <cctype>

namespace gkoszul {

int Poly::min_deg() const {
  if (t_.empty()) return -1;
  return t_.begin()->first.deg();  // map order is degree-ascending
}

int Poly::max_deg() const {
  if (t_.empty()) return -1;
  return t_.rbegin()->first.deg();
}

bool Poly::homogeneous() const { return t_.empty() || min_deg() == max_deg(); }

uint32_t Poly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? 0 : it->second;
}

void Poly::add_term(const Mono& m, uint32_t c, const Fp& F) {
  assert(m.nvars() == nvars_);
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second = F.add(it->second, c);
    if (it->second == 0) t_.erase(it);
  }
}

Poly Poly::add(const Poly& o, const Fp& F) const {
  Poly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c, F);
  return r;
}

Poly Poly::sub(const Poly& o, const Fp& F) const {
  Poly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, F.neg(c), F);
  return r;
}

Poly Poly::mul(const Poly& o, const Fp& F) const {
  Poly r(nvars_);
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_)
      r.add_term(m1.times(m2), F.mul(c1, c2), F);
  return r;
}

Poly Poly::mul_mono(const Mono& m) const {
  Poly r(nvars_);
  for (const auto& [m1, c1] : t_) r.t_.emplace(m1.times(m), c1);
  return r;
}

Poly Poly::scale(uint32_t c, const Fp& F) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m1, c1] : t_) r.t_.emplace(m1, F.mul(c1, c));
  return r;
}

Poly Poly::truncate_deg(int cap) const {
  Poly r(nvars_);
  for (const auto& [m, c] : t_)
    if (m.deg() <= cap) r.t_.emplace(m, c);
  return r;
}

Poly Poly::component(int d) const {
  Poly r(nvars_);
  for (const auto& [m, c] : t_)
    if (m.deg() == d) r.t_.emplace(m, c);
  return r;
}

bool valid_variable_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars, const Fp& F)
      : s_(text), vars_(vars), F_(F) {}

  Poly run() {
    Poly out(static_cast<int>(vars_.size()));
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    parse_term(out, neg);
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      neg = (get() == '-');
      parse_term(out, neg);
      skip_ws();
    }
    if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  uint32_t parse_integer() {
    size_t start = pos_;
    uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = (v * 10 + static_cast<uint64_t>(get() - '0')) % F_.p();
    }
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return static_cast<uint32_t>(v);
  }

  // Exponent: a plain positive integer (not reduced mod p).
  uint32_t parse_exponent() {
    size_t start = pos_;
    uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<uint64_t>(get() - '0');
      if (v > 1'000'000) throw ParseError("exponent too large", start);
    }
    if (pos_ == start) throw ParseError("expected an exponent", pos_);
    if (v == 0) throw ParseError("exponent must be positive", start);
    return static_cast<uint32_t>(v);
  }

  int parse_variable() {
    size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError("expected a variable name", pos_);
    std::string name;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      name += get();
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    throw UnknownVariable(name, start);
  }

  // factor := variable ('^' positive-integer)?
  void parse_factor(Mono& m) {
    int v = parse_variable();
    skip_ws();
    uint32_t k = 1;
    if (peek() == '^') {
      get();
      skip_ws();
      k = parse_exponent();
    }
    m.e[v] += k;
  }

  void parse_term(Poly& out, bool negate) {
    skip_ws();
    Mono m(static_cast<int>(vars_.size()));
    uint32_t c = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = parse_integer();
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        parse_factor(m);
        skip_ws();
      } else {
        // bare integer term
        out.add_term(m, negate ? F_.neg(c) : c, F_);
        return;
      }
    } else {
      parse_factor(m);
      skip_ws();
    }
    while (peek() == '*') {
      get();
      skip_ws();
      parse_factor(m);
      skip_ws();
    }
    out.add_term(m, negate ? F_.neg(c) : c, F_);
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  const Fp& F_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                const Fp& F) {
  return Parser(text, vars, F).run();
}

std::string print_poly(const Poly& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += "+";
    bool has_vars = m.deg() > 0;
    if (c != 1 || !has_vars) {
      out += std::to_string(c);
      if (has_vars) out += "*";
    }
    bool first = true;
    for (int v = 0; v < m.nvars(); ++v) {
      if (m.e[v] == 0) continue;
      if (!first) out += "*";
      first = false;
      out += vars[v];
      if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
    }
  }
  return out;
}

}  // namespace gkoszul
