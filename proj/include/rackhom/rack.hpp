#ifndef RACKHOM_RACK_HPP
#define RACKHOM_RACK_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "rackhom/group.hpp"

namespace rackhom {

/// Subset of a rack carrier as a bit mask. Carriers are capped well
/// below 64 elements by the enumeration limit.
using RackSet = std::uint64_t;

inline int rackset_size(RackSet s) { return std::popcount(s); }
inline RackSet rackset_full(int n) {
  return n == 64 ? ~RackSet{0} : (RackSet{1} << n) - 1;
}

/// Finite rack on dense carrier ids 0..size-1 with a full operation
/// table. Conjugation racks keep a map back to group element ids.
class Rack {
 public:
  Rack(int size, std::vector<int> op_table, bool quandle,
       std::vector<int> element_map = {})
      : size_(size), op_(std::move(op_table)), quandle_(quandle),
        element_map_(std::move(element_map)) {}

  int size() const { return size_; }
  int op(int a, int b) const { return op_[static_cast<std::size_t>(a) * size_ + b]; }
  bool quandle() const { return quandle_; }
  bool has_element_map() const { return !element_map_.empty(); }
  int group_element(int a) const { return element_map_[a]; }
  const std::vector<int>& element_map() const { return element_map_; }

 private:
  int size_;
  std::vector<int> op_;  // row-major
  bool quandle_;
  std::vector<int> element_map_;
};

/// Axiom check outcome; failures carry the witnessing triple/row/element.
struct RackAxiomReport {
  bool a1 = true;                      // self-distributivity
  std::array<int, 3> a1_witness{};     // (a,b,c)
  bool a2 = true;                      // left translations bijective
  std::array<int, 3> a2_witness{};     // (a,b,c) with a>b == a>c, b != c
  bool a3 = true;                      // idempotence
  int a3_witness = 0;
  bool rack() const { return a1 && a2; }
  bool all_pass() const { return a1 && a2 && a3; }
};

/// Checks (A1), (A2), (A3) exhaustively on an explicit operation table.
/// Failures are reported as data, not thrown.
RackAxiomReport verify_rack(const std::vector<std::vector<int>>& op_table);

/// Conjugation rack of a class: carrier C, a > b = a b a^{-1}. Always a
/// quandle. Throws ClassNotClosedError if the member set is not
/// conjugation-closed (cannot happen for conjugacy_classes output).
Rack conjugation_rack(const FiniteGroup& G, const ConjClass& C);

/// Smallest superset of S closed under the rack operation. For finite
/// racks this is the full subrack closure: left translations are
/// injective on a finite carrier, so closure under > alone already
/// restricts them to bijections of the result (A2 holds there).
RackSet subrack_closure(const Rack& R, RackSet S);

/// Orbits of H = <C> acting on the class rack carrier by conjugation,
/// in order of smallest member id. Computed by closing under the
/// generators C only; since C generates H this yields the H-orbits
/// without materializing H's action (the equivalence is asserted in
/// tests).
struct OrbitDecomposition {
  std::vector<RackSet> orbits;  // disjoint, cover the carrier
  int m() const { return static_cast<int>(orbits.size()); }
  /// Index in [0, m) of the orbit containing rack element a.
  int orbit_of(int a) const {
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if (orbits[i] >> a & 1) return static_cast<int>(i);
    return -1;
  }
};

OrbitDecomposition orbit_decomposition(const FiniteGroup& G, const ConjClass& C,
                                       const Subgroup& H);

/// A class is connected when <C> acts transitively on it (m == 1).
bool is_connected_class(const FiniteGroup& G, const ConjClass& C);

}  // namespace rackhom

#endif
