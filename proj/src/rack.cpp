#include "rackhom/rack.hpp"

#include <algorithm>
#include <cassert>

namespace rackhom {

RackAxiomReport verify_rack(const std::vector<std::vector<int>>& op_table) {
  const int n = static_cast<int>(op_table.size());
  for (const auto& row : op_table) {
    if (static_cast<int>(row.size()) != n) throw Error("operation table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error("operation table entry out of range");
  }
  auto op = [&](int a, int b) { return op_table[a][b]; };

  RackAxiomReport rep;
  for (int a = 0; a < n && rep.a1; ++a)
    for (int b = 0; b < n && rep.a1; ++b)
      for (int c = 0; c < n; ++c)
        if (op(a, op(b, c)) != op(op(a, b), op(a, c))) {
          rep.a1 = false;
          rep.a1_witness = {a, b, c};
          break;
        }
  for (int a = 0; a < n && rep.a2; ++a) {
    std::vector<int> seen(n, -1);
    for (int c = 0; c < n; ++c) {
      int v = op(a, c);
      if (seen[v] >= 0) {
        rep.a2 = false;
        rep.a2_witness = {a, seen[v], c};
        break;
      }
      seen[v] = c;
    }
  }
  for (int a = 0; a < n; ++a)
    if (op(a, a) != a) {
      rep.a3 = false;
      rep.a3_witness = a;
      break;
    }
  return rep;
}

Rack conjugation_rack(const FiniteGroup& G, const ConjClass& C) {
  const int k = C.size();
  // group id -> rack id (carrier ids follow the sorted member list)
  std::vector<int> rack_id(G.order(), -1);
  for (int i = 0; i < k; ++i) rack_id[C.member_list[i]] = i;

  std::vector<int> op(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int c = G.conjugate(C.member_list[a], C.member_list[b]);
      if (rack_id[c] < 0)
        throw ClassNotClosedError("conjugate of a member escapes the carrier");
      op[static_cast<std::size_t>(a) * k + b] = rack_id[c];
    }
  return Rack(k, std::move(op), /*quandle=*/true, C.member_list);
}

RackSet subrack_closure(const Rack& R, RackSet S) {
  RackSet cl = S;
  RackSet frontier = S;
  while (frontier) {
    RackSet added = 0;
    for (RackSet fa = frontier; fa; fa &= fa - 1) {
      int a = std::countr_zero(fa);
      for (RackSet fb = cl; fb; fb &= fb - 1) {
        int b = std::countr_zero(fb);
        added |= RackSet{1} << R.op(a, b);
        added |= RackSet{1} << R.op(b, a);
      }
    }
    frontier = added & ~cl;
    cl |= added;
  }
  return cl;
}

OrbitDecomposition orbit_decomposition(const FiniteGroup& G, const ConjClass& C,
                                       const Subgroup& H) {
  Rack R = conjugation_rack(G, C);
  const int k = R.size();
  OrbitDecomposition dec;
  RackSet visited = 0;
  for (int x = 0; x < k; ++x) {
    if (visited >> x & 1) continue;
    // orbit of x under repeated conjugation by members of C; the acting
    // maps are permutations of a finite set, so no inverses are needed
    RackSet orbit = RackSet{1} << x;
    RackSet frontier = orbit;
    while (frontier) {
      RackSet added = 0;
      for (RackSet fb = frontier; fb; fb &= fb - 1) {
        int b = std::countr_zero(fb);
        for (int a = 0; a < k; ++a) added |= RackSet{1} << R.op(a, b);
      }
      frontier = added & ~orbit;
      orbit |= added;
    }
    visited |= orbit;
    dec.orbits.push_back(orbit);
  }
#ifndef NDEBUG
  // each orbit must be invariant under conjugation by every element of H
  for (RackSet orbit : dec.orbits)
    for (int h : H.member_list)
      for (RackSet f = orbit; f; f &= f - 1) {
        int b = std::countr_zero(f);
        int img = G.conjugate(h, C.member_list[b]);
        auto it = std::lower_bound(C.member_list.begin(), C.member_list.end(), img);
        assert(it != C.member_list.end() && *it == img);
        int rb = static_cast<int>(it - C.member_list.begin());
        assert(orbit >> rb & 1);
      }
#else
  (void)H;
#endif
  return dec;
}

bool is_connected_class(const FiniteGroup& G, const ConjClass& C) {
  Subgroup H = subgroup_generated(G, C.member_list);
  return orbit_decomposition(G, C, H).m() == 1;
}

}  // namespace rackhom
