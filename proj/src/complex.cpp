#include "rackhom/complex.hpp"

#include <algorithm>
#include <set>

namespace rackhom {

int OrderComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<std::vector<int>> OrderComplex::faces(int d) const {
  std::set<std::vector<int>> out;
  std::vector<int> pick;
  for (const auto& facet : facets) {
    const int k = static_cast<int>(facet.size());
    if (k < d + 1) continue;
    // all (d+1)-subsets of the facet, in sorted vertex order
    std::vector<int> idx(d + 1);
    for (int i = 0; i <= d; ++i) idx[i] = i;
    while (true) {
      pick.clear();
      for (int i : idx) pick.push_back(facet[i]);
      out.insert(pick);
      int pos = d;
      while (pos >= 0 && idx[pos] == k - (d + 1) + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i <= d; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<long long> OrderComplex::f_vector() const {
  std::vector<long long> f;
  for (int d = 0; d <= dimension(); ++d)
    f.push_back(static_cast<long long>(faces(d).size()));
  return f;
}

OrderComplex order_complex(const SubrackPoset& P) {
  OrderComplex K;
  const int N = static_cast<int>(P.elements.size());
  std::vector<int> vertex_of(N, -1);
  for (int i = 0; i < N; ++i) {
    if (i == P.top || i == P.bottom) continue;
    vertex_of[i] = K.vertex_count++;
    K.vertex_poset_index.push_back(i);
  }

  // Covers restricted to the proper part are unchanged (nothing lies
  // strictly between two proper elements through top or bottom), so
  // maximal chains follow the induced Hasse diagram.
  std::vector<std::vector<int>> up(K.vertex_count);
  std::vector<bool> has_lower(K.vertex_count, false);
  for (int i = 0; i < N; ++i) {
    if (vertex_of[i] < 0) continue;
    for (int j : P.upper_covers[i]) {
      if (vertex_of[j] < 0) continue;
      up[vertex_of[i]].push_back(vertex_of[j]);
      has_lower[vertex_of[j]] = true;
    }
  }

  std::vector<int> chain;
  auto dfs = [&](auto&& self, int v) -> void {
    chain.push_back(v);
    if (up[v].empty()) {
      K.facets.push_back(chain);
    } else {
      for (int w : up[v]) self(self, w);
    }
    chain.pop_back();
  };
  for (int v = 0; v < K.vertex_count; ++v)
    if (!has_lower[v]) dfs(dfs, v);

  std::sort(K.facets.begin(), K.facets.end());
  return K;
}

OrderComplex complex_from_facets(int vertex_count,
                                 std::vector<std::vector<int>> facets) {
  OrderComplex K;
  K.vertex_count = vertex_count;
  for (auto& f : facets) std::sort(f.begin(), f.end());
  std::sort(facets.begin(), facets.end());
  K.facets = std::move(facets);
  return K;
}

EulerCharacteristic euler_characteristic(const OrderComplex& K) {
  EulerCharacteristic chi;
  auto f = K.f_vector();
  for (std::size_t d = 0; d < f.size(); ++d)
    chi.unreduced += (d % 2 == 0 ? f[d] : -f[d]);
  chi.reduced = chi.unreduced - 1;
  return chi;
}

}  // namespace rackhom
