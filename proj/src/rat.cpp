#include "virmod/rat.hpp"

namespace virmod {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    Rat q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rat(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rat(z);
}

Rat factorial(unsigned long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rat(z);
}

Rat int_pow(long m, unsigned long e) {
  mpz_class base(m), z;
  mpz_pow_ui(z.get_mpz_t(), base.get_mpz_t(), e);
  return Rat(z);
}

}  // namespace virmod
