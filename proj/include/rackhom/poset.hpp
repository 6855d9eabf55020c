#ifndef RACKHOM_POSET_HPP
#define RACKHOM_POSET_HPP

#include <unordered_map>
#include <vector>

#include "rackhom/rack.hpp"

namespace rackhom {

inline constexpr int kDefaultEnumerationCap = 24;

/// All subracks of a class rack, including the empty set and the full
/// carrier, ordered by containment. Elements are listed by (size, mask)
/// ascending; hasse holds the cover relation.
struct SubrackPoset {
  int carrier_size = 0;
  std::vector<RackSet> elements;
  std::vector<std::vector<int>> upper_covers;
  std::vector<std::vector<int>> lower_covers;
  int bottom = 0;  // index of the empty set
  int top = 0;     // index of the full carrier

  int index_of(RackSet s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
  }

  std::unordered_map<RackSet, int> index_;  // filled by enumerate_subracks
};

/// Enumerates every subrack via Ganter's Next-Closure in lectic order
/// over subrack_closure. Subracks form a Moore family: intersections of
/// closed sets are closed and the full carrier is closed, so Next-Closure
/// visits each exactly once with polynomial delay. Throws
/// CapExceededError when the carrier exceeds the cap.
SubrackPoset enumerate_subracks(const Rack& R, int cap = kDefaultEnumerationCap);

/// Maximal subracks by the closed form: the unions of all but one
/// H-orbit, in orbit order. Requires a p-group ambient (throws
/// NotApplicableError otherwise). For m == 1 the formula is vacuous and
/// the result is empty; callers handle central classes via m directly.
std::vector<RackSet> maximal_subracks_via_lemma(const Rack& R,
                                                const OrbitDecomposition& orbits,
                                                const PGroupStatus& ambient);

/// Maximal subracks read off the Hasse diagram: all lower covers of the
/// top element. A pure poset query: when the only subrack below the full
/// carrier is the empty set (|C| = 1), the empty set is returned.
std::vector<RackSet> maximal_subracks_bruteforce(const SubrackPoset& P);

/// The orbit-saturation closure operator: S maps to the union of all
/// H-orbits meeting S. Defined on subracks; the result is itself a
/// subrack (asserted in debug builds).
RackSet closure_phi(const Rack& R, RackSet S, const OrbitDecomposition& orbits);

/// Image of the closure operator, identified with the power set of the
/// orbit index set [m].
struct PhiImage {
  int m = 0;
  std::vector<int> poset_indices;          // image elements, ascending
  std::vector<std::uint64_t> orbit_sets;   // witness: subset of [m] per element
};

/// Applies phi to every poset element and builds the order-isomorphism
/// witness onto 2^[m]. Throws ImageNotBooleanError if any orbit union
/// fails to be a subrack or the image misses part of the power set.
PhiImage phi_image(const Rack& R, const SubrackPoset& P,
                   const OrbitDecomposition& orbits);

}  // namespace rackhom

#endif
