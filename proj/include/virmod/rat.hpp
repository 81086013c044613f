#ifndef VIRMOD_RAT_HPP
#define VIRMOD_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace virmod {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as they are produced through arithmetic
// or canonicalize()d after raw construction.
using Rat = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat rat_of(long n) { return Rat(n); }

inline Rat rat_of(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// "p/q" or "p"; optional sign, arbitrary precision.
Rat rat_parse(const std::string& s);

// Always "p/q"-style: denominator omitted when 1.
std::string rat_str(const Rat& q);

// C(n, k) with the convention C(n, k) = 0 for k > n.
Rat binomial(unsigned long n, unsigned long k);

Rat factorial(unsigned long n);

// m^e for integer m and nonnegative e.
Rat int_pow(long m, unsigned long e);

}  // namespace virmod

#endif
