#ifndef VIRMOD_LAURENT_HPP
#define VIRMOD_LAURENT_HPP

#include <map>
#include <string>

#include "virmod/rat.hpp"

namespace virmod {

/// Sparse Laurent polynomial over the rationals: a finite map from integer
/// exponent to nonzero coefficient. Canonical form stores no zeros, so
/// equality is map equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(Rat a);
  // c * q^k
  static LaurentPoly term(Rat c, long k);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  Rat coeff(long k) const;
  const std::map<long, Rat>& terms() const { return c_; }
  long min_exp() const;  // throws on zero polynomial
  long max_exp() const;

  void add_term(long k, const Rat& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rat& s) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  LaurentPoly pow(unsigned long e) const;

  std::string str(const std::string& var = "t") const;

 private:
  std::map<long, Rat> c_;
};

inline LaurentPoly operator*(const Rat& s, const LaurentPoly& p) { return p * s; }

}  // namespace virmod

#endif
