#include <doctest.h>

#include "oracles.hpp"
#include "rackhom/catalog.hpp"
#include "rackhom/complex.hpp"

using namespace rackhom;

namespace {

SubrackPoset poset_for(const char* name, const std::string& rep_label) {
  auto G = catalog_find(name)->build();
  for (const auto& c : conjugacy_classes(G))
    if (G.label(c.representative) == rep_label)
      return enumerate_subracks(conjugation_rack(G, c));
  throw std::runtime_error("class not found");
}

// Proper part of the Boolean lattice 2^[m], built directly with no group
// behind it.
SubrackPoset boolean_poset(int m) {
  SubrackPoset P;
  P.carrier_size = m;
  for (RackSet s = 0; s < (RackSet{1} << m); ++s) P.elements.push_back(s);
  std::sort(P.elements.begin(), P.elements.end(), [](RackSet a, RackSet b) {
    int pa = rackset_size(a), pb = rackset_size(b);
    return pa != pb ? pa < pb : a < b;
  });
  const int N = static_cast<int>(P.elements.size());
  for (int i = 0; i < N; ++i) P.index_[P.elements[i]] = i;
  P.bottom = P.index_.at(0);
  P.top = P.index_.at(rackset_full(m));
  P.upper_covers.assign(N, {});
  P.lower_covers.assign(N, {});
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if ((P.elements[i] & ~P.elements[j]) == 0 &&
          rackset_size(P.elements[j]) == rackset_size(P.elements[i]) + 1) {
        P.upper_covers[i].push_back(j);
        P.lower_covers[j].push_back(i);
      }
  return P;
}

}  // namespace

TEST_CASE("singleton class: complex is empty (only the empty face)") {
  auto K = order_complex(poset_for("D4", "e"));
  CHECK(K.vertex_count == 0);
  CHECK(K.facets.empty());
  CHECK(K.dimension() == -1);
  CHECK(K.f_vector().empty());
}

TEST_CASE("D4 rotation class: two isolated vertices") {
  auto K = order_complex(poset_for("D4", "s"));
  CHECK(K.vertex_count == 2);
  CHECK(K.dimension() == 0);
  CHECK(K.facets == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("Heisenberg-27 non-central class: the hexagon") {
  auto G = catalog_find("Heis27")->build();
  for (const auto& C : conjugacy_classes(G)) {
    if (C.size() != 3) continue;
    auto K = order_complex(enumerate_subracks(conjugation_rack(G, C)));
    CHECK(K.vertex_count == 6);
    CHECK(K.dimension() == 1);
    CHECK(K.f_vector() == std::vector<long long>{6, 6});
    // every vertex has degree 2: a circle
    std::vector<int> deg(6, 0);
    for (const auto& f : K.faces(1)) {
      ++deg[f[0]];
      ++deg[f[1]];
    }
    for (int d : deg) CHECK(d == 2);
  }
}

TEST_CASE("faces are chains and closed under subsets") {
  auto P = poset_for("D8", "t");
  auto K = order_complex(P);
  for (const auto& facet : K.facets) {
    for (std::size_t i = 0; i + 1 < facet.size(); ++i) {
      RackSet a = P.elements[K.vertex_poset_index[facet[i]]];
      RackSet b = P.elements[K.vertex_poset_index[facet[i + 1]]];
      CHECK((a & ~b) == 0);
      CHECK(a != b);
    }
  }
  // each 0-face of an edge is a face
  auto edges = K.faces(1);
  auto verts = K.faces(0);
  for (const auto& e : edges) {
    CHECK(std::find(verts.begin(), verts.end(), std::vector<int>{e[0]}) != verts.end());
    CHECK(std::find(verts.begin(), verts.end(), std::vector<int>{e[1]}) != verts.end());
  }
}

TEST_CASE("dimension + 1 equals the longest proper chain") {
  for (const char* name : {"D4", "D8", "Q16", "Heis27", "S3"}) {
    auto G = catalog_find(name)->build();
    for (const auto& C : conjugacy_classes(G)) {
      auto P = enumerate_subracks(conjugation_rack(G, C));
      auto K = order_complex(P);
      std::size_t longest = 0;
      for (const auto& f : K.facets) longest = std::max(longest, f.size());
      CHECK(K.dimension() + 1 == static_cast<int>(longest));
    }
  }
}

TEST_CASE("order complex of 2^[m] proper part matches barycentric counts") {
  for (int m = 1; m <= 5; ++m) {
    auto K = order_complex(boolean_poset(m));
    auto f = K.f_vector();
    CHECK(static_cast<int>(f.size()) == (m >= 2 ? m - 1 : 0));
    for (int j = 1; j <= m - 1; ++j)
      CHECK(f[j - 1] == oracles::boolean_proper_chain_count(m, j));
  }
}

TEST_CASE("euler characteristics") {
  SUBCASE("empty complex") {
    auto chi = euler_characteristic(order_complex(poset_for("D4", "e")));
    CHECK(chi.unreduced == 0);
    CHECK(chi.reduced == -1);
  }
  SUBCASE("two isolated vertices: S^0") {
    auto chi = euler_characteristic(order_complex(poset_for("D4", "s")));
    CHECK(chi.unreduced == 2);
    CHECK(chi.reduced == 1);
  }
  SUBCASE("hexagon: S^1") {
    auto G = catalog_find("Heis27")->build();
    for (const auto& C : conjugacy_classes(G)) {
      if (C.size() != 3) continue;
      auto chi = euler_characteristic(order_complex(enumerate_subracks(
          conjugation_rack(G, C))));
      CHECK(chi.unreduced == 0);
      CHECK(chi.reduced == -1);
      break;
    }
  }
}
