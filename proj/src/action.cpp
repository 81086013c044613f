#include "virmod/action.hpp"

#include <sstream>

namespace virmod {

WeightVector WeightVector::single(Family f, long grade, AVector v) {
  WeightVector w(f);
  w.add(grade, v);
  return w;
}

void WeightVector::add(long grade, const AVector& v) {
  if (v.family() != fam_)
    throw std::invalid_argument("WeightVector::add: family mismatch");
  if (v.is_zero()) return;
  auto it = comp_.find(grade);
  if (it == comp_.end()) {
    comp_.emplace(grade, v);
  } else {
    it->second = it->second + v;
    if (it->second.is_zero()) comp_.erase(it);
  }
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
  if (fam_ != o.fam_) throw std::invalid_argument("family mismatch in +");
  WeightVector r(*this);
  for (const auto& [n, v] : o.comp_) r.add(n, v);
  return r;
}

WeightVector WeightVector::operator-(const WeightVector& o) const {
  return *this + o * Rat(-1);
}

WeightVector WeightVector::operator*(const Rat& s) const {
  WeightVector r(fam_);
  if (s == 0) return r;
  for (const auto& [n, v] : comp_) r.comp_.emplace(n, v * s);
  return r;
}

bool WeightVector::operator==(const WeightVector& o) const {
  return fam_ == o.fam_ && comp_ == o.comp_;
}

std::string WeightVector::str() const {
  if (comp_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, v] : comp_) {
    if (!first) os << "; ";
    first = false;
    os << "(" << v.str() << ") @ " << n;
  }
  return os.str();
}

WeightVector d_act(const ModuleInstance& inst, long m, const WeightVector& w) {
  if (w.family() != inst.coeff.family())
    throw std::invalid_argument("d_act: family mismatch");
  const int r = inst.coeff.rank();
  WeightVector out(w.family());
  for (const auto& [n, v] : w.components()) {
    AVector u = v * (inst.alpha + Rat(n));
    for (int i = 0; i <= r; ++i) {
      Rat c = int_pow(m, i + 1) / factorial(i + 1);
      if (c != 0) u = u + a_act(inst.coeff, i, v) * c;
    }
    out.add(n + m, u);
  }
  return out;
}

WeightVector c_act(const WeightVector& w) { return WeightVector(w.family()); }

WeightVector t_act(long k, const WeightVector& w) {
  WeightVector out(w.family());
  for (const auto& [n, v] : w.components()) out.add(n + k, v);
  return out;
}

WeightVector twisted_d_act(const TwistedInstance& inst, long n,
                           const WeightVector& w) {
  if (w.family() != inst.coeff.family())
    throw std::invalid_argument("twisted_d_act: family mismatch");
  ModuleInstance at_zero{inst.coeff, Rat(0)};
  WeightVector out = d_act(at_zero, n, w);
  for (const auto& [k, c] : inst.beta.terms())
    out = out + t_act(n + k, w) * c;
  return out;
}

WeightVector omega_apply(const OmegaSpec& spec, const WeightVector& w,
                         const DAction& act) {
  WeightVector out(w.family());
  for (unsigned i = 0; i <= spec.s; ++i) {
    Rat c = binomial(spec.s, i);
    if ((spec.s - i) % 2 == 1) c = -c;
    out = out + act(spec.l - spec.m - i, act(spec.m + i, w)) * c;
  }
  return out;
}

WeightVector dr_squared_shift(const ModuleInstance& inst, long l,
                              const WeightVector& w) {
  if (w.family() != inst.coeff.family())
    throw std::invalid_argument("dr_squared_shift: family mismatch");
  const int r = inst.coeff.rank();
  WeightVector out(w.family());
  for (const auto& [n, v] : w.components())
    out.add(n + l, a_act(inst.coeff, r, a_act(inst.coeff, r, v)));
  return out;
}

}  // namespace virmod
