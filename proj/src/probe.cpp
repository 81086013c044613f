#include <deque>
#include <sstream>

#include "virmod/suites.hpp"

namespace virmod {

namespace {

// Coordinate of the ambient space M tensor C[t,t^-1], ordered so that every
// out-of-slice coordinate compares below every in-slice coordinate. With
// that ordering, echelon rows whose pivot lies in the slice region are
// supported entirely inside the slice, so counting them gives the dimension
// of span intersect slice directly.
struct Coord {
  int in_slice;  // 0 = outside, 1 = inside
  long grade;
  Monomial inner;  // {degree} for gamma, {} for onedim, monomial for qlambda

  auto operator<=>(const Coord&) const = default;
};

using SparseRow = std::map<Coord, Rat>;

struct SliceSpec {
  long grade_lo, grade_hi;
  int degree_cap;
};

int inner_degree(Family fam, const Monomial& inner) {
  switch (fam) {
    case Family::OneDim: return 0;
    case Family::Gamma: return inner.empty() ? 0 : inner.front();
    case Family::QLambda: return static_cast<int>(inner.size());
  }
  return 0;
}

bool in_slice(const SliceSpec& sl, Family fam, long grade,
              const Monomial& inner) {
  return grade >= sl.grade_lo && grade <= sl.grade_hi &&
         inner_degree(fam, inner) <= sl.degree_cap;
}

SparseRow to_row(const WeightVector& w, const SliceSpec& sl) {
  SparseRow row;
  Family fam = w.family();
  auto put = [&](long grade, Monomial inner, const Rat& c) {
    if (c == 0) return;
    row[{in_slice(sl, fam, grade, inner) ? 1 : 0, grade, std::move(inner)}] = c;
  };
  for (const auto& [n, v] : w.components()) {
    switch (fam) {
      case Family::OneDim:
        put(n, {}, v.scalar());
        break;
      case Family::Gamma:
        for (std::size_t k = 0; k < v.poly().coeffs().size(); ++k)
          put(n, {static_cast<int>(k)}, v.poly().coeffs()[k]);
        break;
      case Family::QLambda:
        for (const auto& [m, c] : v.terms()) put(n, m, c);
        break;
    }
  }
  return row;
}

// Incremental reduced echelon basis over exact rationals.
class Rref {
 public:
  // returns true when the row enlarged the span
  bool insert(SparseRow row) {
    for (const auto& b : rows_) {
      auto it = row.find(b.begin()->first);
      if (it != row.end()) {
        Rat c = it->second;
        subtract(row, b, c);
      }
      if (row.empty()) return false;
    }
    if (row.empty()) return false;
    // normalize and eliminate the new pivot from existing rows
    Rat lead = row.begin()->second;
    for (auto& [k, c] : row) c /= lead;
    const Coord pivot = row.begin()->first;
    for (auto& b : rows_) {
      auto it = b.find(pivot);
      if (it != b.end()) {
        Rat c = it->second;
        subtract(b, row, c);
      }
    }
    auto pos = rows_.begin();
    while (pos != rows_.end() && pos->begin()->first < pivot) ++pos;
    rows_.insert(pos, std::move(row));
    return true;
  }

  long rank() const { return static_cast<long>(rows_.size()); }

  long slice_rank() const {
    long n = 0;
    for (const auto& b : rows_)
      if (b.begin()->first.in_slice == 1) ++n;
    return n;
  }

 private:
  static void subtract(SparseRow& target, const SparseRow& src, const Rat& c) {
    for (const auto& [k, v] : src) {
      auto it = target.find(k);
      if (it == target.end()) {
        target[k] = -c * v;
      } else {
        it->second -= c * v;
        if (it->second == 0) target.erase(it);
      }
    }
  }

  // kept sorted by pivot coordinate
  std::vector<SparseRow> rows_;
};

long slice_dimension(const CoeffDescriptor& desc, const SliceSpec& sl,
                     long dim_cap) {
  long grades = sl.grade_hi - sl.grade_lo + 1;
  long per_grade = 0;
  switch (desc.family()) {
    case Family::OneDim:
      per_grade = 1;
      break;
    case Family::Gamma:
      per_grade = sl.degree_cap + 1;
      break;
    case Family::QLambda: {
      // monomials of length <= cap over the surviving generators
      long free_gens = 0;
      for (int i = 0; i <= desc.qlambda().r; ++i)
        if (!desc.qlambda().S.count(i)) ++free_gens;
      // multisets of size k out of free_gens symbols
      Rat total(0);
      for (int k = 0; k <= sl.degree_cap; ++k)
        total += binomial(free_gens + k - 1, k);
      per_grade = static_cast<long>(total.get_num().get_si());
      break;
    }
  }
  long dim = grades * per_grade;
  if (dim > dim_cap)
    throw ConfigError("slice dimension " + std::to_string(dim) +
                      " exceeds the configured cap " + std::to_string(dim_cap));
  return dim;
}

}  // namespace

ProbeResult reachability_probe(const ModuleInstance& inst,
                               const WeightVector& seed, int degree_cap,
                               long grade_lo, long grade_hi, int op_window,
                               int max_len, long dim_cap) {
  if (grade_lo > grade_hi) throw ConfigError("empty grade window");
  SliceSpec sl{grade_lo, grade_hi, degree_cap};
  ProbeResult res;
  res.slice_dim = slice_dimension(inst.coeff, sl, dim_cap);
  res.report.suite = "reach";
  res.report.params["family"] = family_name(inst.coeff.family());
  res.report.params["alpha"] = rat_str(inst.alpha);
  res.report.params["seed_vector"] = seed.str();
  res.report.params["degree_cap"] = degree_cap;
  res.report.params["grades"] = Json::array({grade_lo, grade_hi});
  res.report.params["op_window"] = op_window;
  res.report.params["max_word_len"] = max_len;

  Rref basis;
  std::vector<WeightVector> frontier;
  if (!seed.is_zero()) {
    if (basis.insert(to_row(seed, sl))) {
      frontier.push_back(seed);
      ++res.vectors_inserted;
    }
  }
  bool done = false;
  for (int len = 1; len <= max_len && !done && !frontier.empty(); ++len) {
    std::vector<WeightVector> next;
    for (const WeightVector& v : frontier) {
      for (long m = -op_window; m <= op_window && !done; ++m) {
        WeightVector w = d_act(inst, m, v);
        if (w.is_zero()) continue;
        ++res.vectors_inserted;
        if (basis.insert(to_row(w, sl))) next.push_back(w);
        if (basis.slice_rank() >= res.slice_dim) done = true;
      }
      if (done) break;
    }
    frontier = std::move(next);
  }
  res.slice_rank = basis.slice_rank();
  res.span_rank = basis.rank();
  res.full = res.slice_rank == res.slice_dim;
  res.report.total_checks = res.vectors_inserted;
  res.report.derived["slice_rank"] = res.slice_rank;
  res.report.derived["slice_dim"] = res.slice_dim;
  res.report.derived["span_rank"] = res.span_rank;
  res.report.derived["full"] = res.full;
  res.report.notes.push_back(
      "finite-evidence probe: full rank supports simplicity on this slice, "
      "a deficit exhibits an invariant direction; neither is a proof");
  if (!res.full)
    res.report.notes.push_back("rank deficit: " +
                               std::to_string(res.slice_dim - res.slice_rank) +
                               " slice directions unreached");
  return res;
}

}  // namespace virmod
