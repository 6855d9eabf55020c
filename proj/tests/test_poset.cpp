#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rackhom/catalog.hpp"
#include "rackhom/poset.hpp"

using namespace rackhom;

namespace {

struct ClassPipeline {
  FiniteGroup G;
  ConjClass C;
  Rack R;
  Subgroup H;
  OrbitDecomposition orbits;
  SubrackPoset P;
};

ClassPipeline pipeline(const char* name, const std::string& rep_label) {
  auto G = catalog_find(name)->build();
  for (const auto& c : conjugacy_classes(G))
    if (G.label(c.representative) == rep_label) {
      Rack R = conjugation_rack(G, c);
      Subgroup H = subgroup_generated(G, c.member_list);
      OrbitDecomposition dec = orbit_decomposition(G, c, H);
      SubrackPoset P = enumerate_subracks(R);
      return {std::move(G), c, std::move(R), std::move(H), std::move(dec),
              std::move(P)};
    }
  throw std::runtime_error("class not found");
}

}  // namespace

TEST_CASE("singleton class: poset is the two-element chain") {
  auto pl = pipeline("D4", "e");
  CHECK(pl.P.elements.size() == 2);
  CHECK(pl.P.elements[pl.P.bottom] == 0);
  CHECK(pl.P.elements[pl.P.top] == 1);
  CHECK(pl.P.lower_covers[pl.P.top] == std::vector<int>{pl.P.bottom});
}

TEST_CASE("D4 rotation class: all four subsets are subracks") {
  auto pl = pipeline("D4", "s");
  REQUIRE(pl.P.elements.size() == 4);
  CHECK(pl.P.elements == std::vector<RackSet>{0b00, 0b01, 0b10, 0b11});
}

TEST_CASE("D8 reflection class: exactly 8 subracks") {
  auto pl = pipeline("D8", "t");
  REQUIRE(pl.C.size() == 4);
  // empty, four singletons, the two orbit pairs, and the class itself
  REQUIRE(pl.P.elements.size() == 8);
  std::vector<RackSet> nontrivial;
  for (RackSet s : pl.P.elements)
    if (rackset_size(s) == 2) nontrivial.push_back(s);
  REQUIRE(nontrivial.size() == 2);
  CHECK((nontrivial[0] | nontrivial[1]) == rackset_full(4));
}

TEST_CASE("Next-Closure output equals brute-force subset filtering") {
  for (const auto& entry : catalog()) {
    auto G = entry.build();
    for (const auto& C : conjugacy_classes(G)) {
      if (C.size() > 16) continue;
      Rack R = conjugation_rack(G, C);
      auto P = enumerate_subracks(R);
      auto brute = oracles::brute_subracks(R);
      std::vector<RackSet> mine = P.elements;
      std::sort(mine.begin(), mine.end());
      std::sort(brute.begin(), brute.end());
      CHECK(mine == brute);
    }
  }
}

TEST_CASE("subracks form a Moore family: closed under intersection") {
  for (const char* name : {"D4", "D8", "Q16", "Heis27", "S3"}) {
    auto G = catalog_find(name)->build();
    for (const auto& C : conjugacy_classes(G)) {
      Rack R = conjugation_rack(G, C);
      auto P = enumerate_subracks(R);
      for (RackSet x : P.elements)
        for (RackSet y : P.elements)
          CHECK(P.index_of(x & y) >= 0);
    }
  }
}

TEST_CASE("Hasse covers: no closed set strictly between endpoints") {
  auto pl = pipeline("D8", "t");
  const auto& P = pl.P;
  for (int i = 0; i < static_cast<int>(P.elements.size()); ++i)
    for (int j : P.upper_covers[i]) {
      CHECK((P.elements[i] & ~P.elements[j]) == 0);
      for (RackSet z : P.elements) {
        if (z == P.elements[i] || z == P.elements[j]) continue;
        bool between = (P.elements[i] & ~z) == 0 && (z & ~P.elements[j]) == 0;
        CHECK_FALSE(between);
      }
    }
}

TEST_CASE("enumeration cap") {
  auto G = catalog_find("D8")->build();
  for (const auto& C : conjugacy_classes(G))
    if (C.size() == 4) {
      Rack R = conjugation_rack(G, C);
      CHECK_THROWS_AS(enumerate_subracks(R, 3), CapExceededError);
    }
}

TEST_CASE("maximal subracks: closed form agrees with the Hasse query") {
  for (const char* name : {"D4", "D8", "Q8", "Q16", "Heis27", "E8", "C8"}) {
    auto G = catalog_find(name)->build();
    auto pstat = p_group_status(G);
    for (const auto& C : conjugacy_classes(G)) {
      Rack R = conjugation_rack(G, C);
      Subgroup H = subgroup_generated(G, C.member_list);
      auto dec = orbit_decomposition(G, C, H);
      if (dec.m() < 2) continue;
      auto lemma = maximal_subracks_via_lemma(R, dec, pstat);
      auto brute = maximal_subracks_bruteforce(enumerate_subracks(R));
      auto indep = oracles::brute_maximal(oracles::brute_subracks(R),
                                          rackset_full(R.size()));
      std::sort(lemma.begin(), lemma.end());
      std::sort(brute.begin(), brute.end());
      std::sort(indep.begin(), indep.end());
      CHECK(lemma == brute);
      CHECK(lemma == indep);
    }
  }
}

TEST_CASE("maximal subracks via lemma: edge and error cases") {
  auto pl = pipeline("D4", "s");
  SUBCASE("m = 2 complements in orbit order") {
    auto out = maximal_subracks_via_lemma(pl.R, pl.orbits, p_group_status(pl.G));
    REQUIRE(out.size() == 2);
    CHECK(out[0] == 0b10);  // complement of {s}
    CHECK(out[1] == 0b01);
  }
  SUBCASE("m = 1 gives the empty list") {
    auto pe = pipeline("D4", "e");
    auto out = maximal_subracks_via_lemma(pe.R, pe.orbits, p_group_status(pe.G));
    CHECK(out.empty());
  }
  SUBCASE("non-p-group ambient is rejected") {
    auto ps = pipeline("S3", "t");
    CHECK_THROWS_AS(
        maximal_subracks_via_lemma(ps.R, ps.orbits, p_group_status(ps.G)),
        NotApplicableError);
  }
}

TEST_CASE("brute-force maximal query on a singleton class returns the empty set") {
  // pure Hasse query: the only cover of the top is the bottom here
  auto pl = pipeline("D4", "e");
  auto out = maximal_subracks_bruteforce(pl.P);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == 0);
}

TEST_CASE("Heisenberg-27 non-central class: maximal subracks are orbit pairs") {
  auto G = catalog_find("Heis27")->build();
  for (const auto& C : conjugacy_classes(G)) {
    if (C.size() != 3) continue;
    Rack R = conjugation_rack(G, C);
    auto H = subgroup_generated(G, C.member_list);
    auto dec = orbit_decomposition(G, C, H);
    REQUIRE(dec.m() == 3);
    auto maxs = maximal_subracks_bruteforce(enumerate_subracks(R));
    REQUIRE(maxs.size() == 3);
    for (RackSet s : maxs) CHECK(rackset_size(s) == 2);
  }
}

TEST_CASE("phi: base cases on the D8 reflection class") {
  auto pl = pipeline("D8", "t");
  CHECK(closure_phi(pl.R, 0, pl.orbits) == 0);
  RackSet full = rackset_full(4);
  CHECK(closure_phi(pl.R, full, pl.orbits) == full);
  // phi of a singleton is its H-orbit: {t} -> {t, s4t}
  RackSet singleton = RackSet{1} << std::countr_zero(pl.orbits.orbits[0]);
  CHECK(closure_phi(pl.R, singleton, pl.orbits) == pl.orbits.orbits[0]);
  CHECK(rackset_size(pl.orbits.orbits[0]) == 2);
}

TEST_CASE("phi closure laws on every poset element") {
  for (const char* name : {"D4", "D8", "Q16", "Heis27", "E8", "S3"}) {
    auto G = catalog_find(name)->build();
    bool pg = p_group_status(G).is_p_group();
    for (const auto& C : conjugacy_classes(G)) {
      Rack R = conjugation_rack(G, C);
      auto H = subgroup_generated(G, C.member_list);
      auto dec = orbit_decomposition(G, C, H);
      auto P = enumerate_subracks(R);
      RackSet full = rackset_full(R.size());
      for (RackSet S : P.elements) {
        RackSet pS = closure_phi(R, S, dec);
        CHECK((S & ~pS) == 0);
        CHECK(closure_phi(R, pS, dec) == pS);
        if (pg && C.size() > 1 && S != full) CHECK(pS != full);
        for (RackSet T : P.elements)
          if ((S & ~T) == 0)
            CHECK((pS & ~closure_phi(R, T, dec)) == 0);
      }
    }
  }
}

TEST_CASE("phi image is the Boolean lattice 2^[m]") {
  SUBCASE("m = 2") {
    auto pl = pipeline("D4", "s");
    auto img = phi_image(pl.R, pl.P, pl.orbits);
    CHECK(img.m == 2);
    CHECK(img.poset_indices.size() == 4);
  }
  SUBCASE("m = 1") {
    auto pl = pipeline("D4", "e");
    auto img = phi_image(pl.R, pl.P, pl.orbits);
    CHECK(img.m == 1);
    REQUIRE(img.poset_indices.size() == 2);
    CHECK(pl.P.elements[img.poset_indices[0]] == 0);
    CHECK(pl.P.elements[img.poset_indices[1]] == 1);
  }
  SUBCASE("Heisenberg-27: all 8 orbit unions") {
    auto G = catalog_find("Heis27")->build();
    for (const auto& C : conjugacy_classes(G)) {
      if (C.size() != 3) continue;
      Rack R = conjugation_rack(G, C);
      auto H = subgroup_generated(G, C.member_list);
      auto dec = orbit_decomposition(G, C, H);
      auto P = enumerate_subracks(R);
      auto img = phi_image(R, P, dec);
      CHECK(img.m == 3);
      CHECK(img.poset_indices.size() == 8);
      // inclusion-preserving bijection onto the power set
      for (std::size_t a = 0; a < img.poset_indices.size(); ++a)
        for (std::size_t b = 0; b < img.poset_indices.size(); ++b) {
          bool sub_poset = (P.elements[img.poset_indices[a]] &
                            ~P.elements[img.poset_indices[b]]) == 0;
          bool sub_index = (img.orbit_sets[a] & ~img.orbit_sets[b]) == 0;
          CHECK(sub_poset == sub_index);
        }
    }
  }
}
