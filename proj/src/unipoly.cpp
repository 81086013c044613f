#include "virmod/unipoly.hpp"

#include <cctype>
#include <sstream>

namespace virmod {

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(Rat a) {
  UniPoly p;
  if (a != 0) p.c_ = {std::move(a)};
  return p;
}

UniPoly UniPoly::x() { return monomial(Rat(1), 1); }

UniPoly UniPoly::monomial(Rat c, std::size_t k) {
  UniPoly p;
  if (c != 0) {
    p.c_.assign(k + 1, Rat(0));
    p.c_[k] = std::move(c);
  }
  return p;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& a : r) a = -a;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  if (s == 0) return UniPoly();
  std::vector<Rat> r(c_);
  for (auto& a : r) a *= s;
  return UniPoly(std::move(r));
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Rat& a = c_[k];
    if (a == 0) continue;
    Rat mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << rat_str(mag);
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

UniPoly poly_shift(const UniPoly& f, const Rat& c) {
  // Horner in (x - c)
  UniPoly xm = UniPoly::x() - UniPoly::constant(c);
  UniPoly acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    acc = acc * xm + UniPoly::constant(*it);
  return acc;
}

namespace {

struct PolyLexer {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
};

}  // namespace

UniPoly poly_parse(const std::string& s) {
  PolyLexer lx{s};
  UniPoly result;
  bool any = false;
  while (!lx.eof()) {
    int sign = 1;
    while (!lx.eof() && (lx.peek() == '+' || lx.peek() == '-')) {
      if (lx.peek() == '-') sign = -sign;
      ++lx.i;
    }
    if (lx.eof()) throw ParseError("dangling sign in polynomial '" + s + "'");
    // coefficient (optional), then optional x[^k]
    Rat coef(1);
    bool saw_coef = false;
    lx.skip_ws();
    std::size_t start = lx.i;
    while (lx.i < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[lx.i])) || s[lx.i] == '/'))
      ++lx.i;
    if (lx.i > start) {
      coef = rat_parse(s.substr(start, lx.i - start));
      saw_coef = true;
    }
    lx.skip_ws();
    if (lx.i < s.size() && (s[lx.i] == '*')) {
      ++lx.i;
      lx.skip_ws();
    }
    std::size_t exp = 0;
    if (lx.i < s.size() && s[lx.i] == 'x') {
      ++lx.i;
      exp = 1;
      if (lx.i < s.size() && s[lx.i] == '^') {
        ++lx.i;
        std::size_t e0 = lx.i;
        while (lx.i < s.size() && std::isdigit(static_cast<unsigned char>(s[lx.i])))
          ++lx.i;
        if (lx.i == e0) throw ParseError("bad exponent in '" + s + "'");
        exp = std::stoul(s.substr(e0, lx.i - e0));
      }
    } else if (!saw_coef) {
      throw ParseError("expected term at position " + std::to_string(lx.i) +
                       " in '" + s + "'");
    }
    result = result + UniPoly::monomial(sign * coef, exp);
    any = true;
  }
  if (!any) throw ParseError("empty polynomial literal");
  return result;
}

}  // namespace virmod
