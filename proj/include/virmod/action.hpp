#ifndef VIRMOD_ACTION_HPP
#define VIRMOD_ACTION_HPP

#include <functional>
#include <map>
#include <string>

#include "virmod/coeff.hpp"
#include "virmod/laurent.hpp"

namespace virmod {

/// Element of M tensor C[t,t^-1]: finitely many graded components, each a
/// coefficient-module vector sitting at an integer grade. Canonical form
/// stores no zero components; equality is componentwise exact equality.
class WeightVector {
 public:
  explicit WeightVector(Family f) : fam_(f) {}

  static WeightVector single(Family f, long grade, AVector v);

  Family family() const { return fam_; }
  bool is_zero() const { return comp_.empty(); }
  const std::map<long, AVector>& components() const { return comp_; }

  void add(long grade, const AVector& v);

  WeightVector operator+(const WeightVector& o) const;
  WeightVector operator-(const WeightVector& o) const;
  WeightVector operator*(const Rat& s) const;
  bool operator==(const WeightVector& o) const;

  std::string str() const;

 private:
  Family fam_;
  std::map<long, AVector> comp_;
};

inline WeightVector operator*(const Rat& s, const WeightVector& w) {
  return w * s;
}

/// A coefficient module together with the weight offset alpha.
struct ModuleInstance {
  CoeffDescriptor coeff;
  Rat alpha;
};

/// A coefficient module together with the twist Laurent polynomial beta.
/// When beta is constant the twisted action coincides with the plain one
/// at alpha = beta.
struct TwistedInstance {
  CoeffDescriptor coeff;
  LaurentPoly beta;
};

// d_m (v tensor t^n) = ((alpha + n) v + sum_i m^{i+1}/(i+1)! e_i v)
//   tensor t^{n+m}
WeightVector d_act(const ModuleInstance& inst, long m, const WeightVector& w);

// the center acts as zero
WeightVector c_act(const WeightVector& w);

// t^k shifts every grade by k
WeightVector t_act(long k, const WeightVector& w);

// d_n o v = (d_n + beta t^n) v on N(M, 0)
WeightVector twisted_d_act(const TwistedInstance& inst, long n,
                           const WeightVector& w);

/// The finite-difference operators: omega^{(s)}_{l,m} =
/// sum_i C(s,i) (-1)^{s-i} d_{l-m-i} d_{m+i}.
struct OmegaSpec {
  long l = 0;
  long m = 0;
  unsigned s = 0;
};

using DAction = std::function<WeightVector(long, const WeightVector&)>;

inline DAction plain_action(const ModuleInstance& inst) {
  return [&inst](long m, const WeightVector& w) { return d_act(inst, m, w); };
}

inline DAction twisted_action(const TwistedInstance& inst) {
  return [&inst](long n, const WeightVector& w) {
    return twisted_d_act(inst, n, w);
  };
}

WeightVector omega_apply(const OmegaSpec& spec, const WeightVector& w,
                         const DAction& act);

// sum_i e_r^2 v_i tensor t^{i+l}, with r the instance rank
WeightVector dr_squared_shift(const ModuleInstance& inst, long l,
                              const WeightVector& w);

}  // namespace virmod

#endif
