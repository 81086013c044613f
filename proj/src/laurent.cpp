#include "virmod/laurent.hpp"

#include <sstream>

namespace virmod {

LaurentPoly LaurentPoly::constant(Rat a) { return term(std::move(a), 0); }

LaurentPoly LaurentPoly::term(Rat c, long k) {
  LaurentPoly p;
  if (c != 0) p.c_[k] = std::move(c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

Rat LaurentPoly::coeff(long k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Rat(0) : it->second;
}

long LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::logic_error("min_exp of zero Laurent polynomial");
  return c_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::logic_error("max_exp of zero Laurent polynomial");
  return c_.rbegin()->first;
}

void LaurentPoly::add_term(long k, const Rat& c) {
  auto it = c_.find(k);
  if (it == c_.end()) {
    if (c != 0) c_[k] = c;
  } else {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  for (const auto& [k, c] : o.c_) r.add_term(k, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  for (const auto& [k, c] : o.c_) r.add_term(k, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [k, c] : c_) r.c_[k] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [k1, c1] : c_)
    for (const auto& [k2, c2] : o.c_) r.add_term(k1 + k2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& s) const {
  LaurentPoly r;
  if (s == 0) return r;
  for (const auto& [k, c] : c_) r.c_[k] = c * s;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly acc = constant(Rat(1));
  for (unsigned long i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [k, a] = *it;
    Rat mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << rat_str(mag);
    if (k != 0) {
      os << var;
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace virmod
