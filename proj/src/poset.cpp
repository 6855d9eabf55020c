#include "rackhom/poset.hpp"

#include <algorithm>
#include <cassert>

namespace rackhom {

SubrackPoset enumerate_subracks(const Rack& R, int cap) {
  const int n = R.size();
  if (n > cap)
    throw CapExceededError(static_cast<std::size_t>(n), static_cast<std::size_t>(cap));

  std::vector<RackSet> closed;
  RackSet A = subrack_closure(R, 0);  // = 0: the empty set is a subrack
  closed.push_back(A);
  // Next-Closure: A <_i B iff i in B\A and they agree below i.
  while (true) {
    bool advanced = false;
    for (int i = n - 1; i >= 0; --i) {
      if (A >> i & 1) continue;
      RackSet low = i == 0 ? 0 : (RackSet{1} << i) - 1;
      RackSet B = subrack_closure(R, (A & low) | (RackSet{1} << i));
      if ((B & low) == (A & low)) {
        A = B;
        closed.push_back(A);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  std::sort(closed.begin(), closed.end(), [](RackSet a, RackSet b) {
    int pa = rackset_size(a), pb = rackset_size(b);
    return pa != pb ? pa < pb : a < b;
  });

  SubrackPoset P;
  P.carrier_size = n;
  P.elements = std::move(closed);
  const int N = static_cast<int>(P.elements.size());
  for (int i = 0; i < N; ++i) P.index_[P.elements[i]] = i;
  P.bottom = P.index_.at(0);
  P.top = P.index_.at(rackset_full(n));

  // Cover relation: walk the strict subsets of each element by
  // decreasing size; a subset is a lower cover unless it sits below an
  // already accepted one.
  P.upper_covers.assign(N, {});
  P.lower_covers.assign(N, {});
  for (int j = N - 1; j >= 0; --j) {
    std::vector<int> subs;
    for (int i = 0; i < j; ++i)
      if ((P.elements[i] & ~P.elements[j]) == 0 && P.elements[i] != P.elements[j])
        subs.push_back(i);
    std::sort(subs.begin(), subs.end(), [&](int a, int b) {
      return rackset_size(P.elements[a]) > rackset_size(P.elements[b]);
    });
    std::vector<int> accepted;
    for (int i : subs) {
      bool dominated = false;
      for (int c : accepted)
        if ((P.elements[i] & ~P.elements[c]) == 0) { dominated = true; break; }
      if (!dominated) accepted.push_back(i);
    }
    std::sort(accepted.begin(), accepted.end());
    for (int i : accepted) {
      P.lower_covers[j].push_back(i);
      P.upper_covers[i].push_back(j);
    }
  }
  return P;
}

std::vector<RackSet> maximal_subracks_via_lemma(const Rack& R,
                                                const OrbitDecomposition& orbits,
                                                const PGroupStatus& ambient) {
  if (!ambient.is_p_group())
    throw NotApplicableError("maximal-subrack formula requires a p-group ambient");
  if (orbits.m() < 2) return {};
  RackSet full = rackset_full(R.size());
  std::vector<RackSet> out;
  out.reserve(orbits.orbits.size());
  for (RackSet orbit : orbits.orbits) out.push_back(full & ~orbit);
  return out;
}

std::vector<RackSet> maximal_subracks_bruteforce(const SubrackPoset& P) {
  std::vector<RackSet> out;
  for (int i : P.lower_covers[P.top]) out.push_back(P.elements[i]);
  return out;
}

RackSet closure_phi(const Rack& R, RackSet S, const OrbitDecomposition& orbits) {
  RackSet out = 0;
  for (RackSet orbit : orbits.orbits)
    if (orbit & S) out |= orbit;
  assert(subrack_closure(R, out) == out);
  (void)R;
  return out;
}

PhiImage phi_image(const Rack& R, const SubrackPoset& P,
                   const OrbitDecomposition& orbits) {
  const int m = orbits.m();
  if (m > 24)
    throw Error("orbit count too large for power-set verification");

  PhiImage img;
  img.m = m;

  // every union of orbits must be a subrack present in the poset
  std::vector<int> union_index(std::size_t{1} << m, -1);
  for (std::uint64_t J = 0; J < (std::uint64_t{1} << m); ++J) {
    RackSet u = 0;
    for (int i = 0; i < m; ++i)
      if (J >> i & 1) u |= orbits.orbits[i];
    if (subrack_closure(R, u) != u)
      throw ImageNotBooleanError("orbit union is not a subrack");
    int idx = P.index_of(u);
    if (idx < 0) throw ImageNotBooleanError("orbit union missing from the poset");
    union_index[J] = idx;
  }

  // phi of every poset element must land in, and cover, the power set
  std::vector<bool> hit(std::size_t{1} << m, false);
  for (RackSet S : P.elements) {
    std::uint64_t J = 0;
    for (int i = 0; i < m; ++i)
      if (orbits.orbits[i] & S) J |= std::uint64_t{1} << i;
    RackSet u = closure_phi(R, S, orbits);
    if (P.elements[union_index[J]] != u)
      throw ImageNotBooleanError("phi image disagrees with its orbit labeling");
    hit[J] = true;
  }
  for (std::uint64_t J = 0; J < (std::uint64_t{1} << m); ++J)
    if (!hit[J]) throw ImageNotBooleanError("power set not fully covered by phi");

  for (std::uint64_t J = 0; J < (std::uint64_t{1} << m); ++J) {
    img.poset_indices.push_back(union_index[J]);
    img.orbit_sets.push_back(J);
  }
  return img;
}

}  // namespace rackhom
