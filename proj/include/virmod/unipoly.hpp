#ifndef VIRMOD_UNIPOLY_HPP
#define VIRMOD_UNIPOLY_HPP

#include <string>
#include <vector>

#include "virmod/rat.hpp"

namespace virmod {

/// Dense univariate polynomial over the rationals.
/// Coefficients run from degree 0; the leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient vector).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(Rat a);
  static UniPoly x();
  // c * x^k
  static UniPoly monomial(Rat c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is reported as -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rat coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rat(0);
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& s) const;
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  Rat eval(const Rat& x) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

inline UniPoly operator*(const Rat& s, const UniPoly& p) { return p * s; }

// g with g(x) = f(x - c), computed exactly.
UniPoly poly_shift(const UniPoly& f, const Rat& c);

// Parse e.g. "x^2 - 2x + 1", "-3/2x^3 + 5", "7". Variable name fixed to x.
UniPoly poly_parse(const std::string& s);

}  // namespace virmod

#endif
