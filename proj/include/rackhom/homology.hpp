#ifndef RACKHOM_HOMOLOGY_HPP
#define RACKHOM_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "rackhom/complex.hpp"

namespace rackhom {

/// Exact unbounded integers; SNF intermediates can blow up well past any
/// fixed width.
using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix: row lists of (col, value).
class IntegerMatrix {
 public:
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void set(int r, int c, BigInt v) {
    if (v != 0) data_[r].emplace_back(c, std::move(v));
  }
  const std::vector<std::pair<int, BigInt>>& row(int r) const { return data_[r]; }

  std::vector<std::vector<BigInt>> to_dense() const {
    std::vector<std::vector<BigInt>> d(rows_, std::vector<BigInt>(cols_, 0));
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) d[r][c] = v;
    return d;
  }

 private:
  int rows_, cols_;
  std::vector<std::vector<std::pair<int, BigInt>>> data_;
};

/// Boundary matrices of the augmented chain complex, indexed by degree:
/// result[0] is the 1 x f_0 augmentation into degree -1, result[d] for
/// d >= 1 is the usual alternating-sign boundary C_d -> C_{d-1}. Faces
/// are enumerated in the deterministic sorted order of
/// OrderComplex::faces. Consecutive boundaries compose to zero.
std::vector<IntegerMatrix> boundary_matrices(const OrderComplex& K);

struct SnfResult {
  std::vector<BigInt> invariant_factors;  // positive, d1 | d2 | ...
  int rank = 0;
};

/// Smith normal form by classic minimal-absolute-pivot reduction, exact
/// throughout.
SnfResult smith_normal_form(const IntegerMatrix& M);

/// Reduced integral homology, degrees -1 .. dim.
struct HomologyProfile {
  int top_degree = -1;
  std::vector<long long> betti;              // betti[d + 1] = rank of H~_d
  std::vector<std::vector<BigInt>> torsion;  // torsion[d + 1], factors > 1

  long long betti_at(int d) const {
    int i = d + 1;
    return (i >= 0 && i < static_cast<int>(betti.size())) ? betti[i] : 0;
  }
  const std::vector<BigInt>& torsion_at(int d) const {
    static const std::vector<BigInt> empty;
    int i = d + 1;
    return (i >= 0 && i < static_cast<int>(torsion.size())) ? torsion[i] : empty;
  }
  bool has_torsion() const {
    for (const auto& t : torsion)
      if (!t.empty()) return true;
    return false;
  }
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile reduced_homology(const OrderComplex& K);

/// True iff the profile is that of a homology d-sphere: H~_d = Z, no
/// torsion, everything else zero. d = -1 matches the empty complex.
bool is_homology_sphere(const HomologyProfile& H, int d);

}  // namespace rackhom

#endif
