#include <doctest.h>

#include <algorithm>

#include "rackhom/catalog.hpp"
#include "rackhom/io.hpp"
#include "rackhom/verify.hpp"

using namespace rackhom;

TEST_CASE("verify_group on D4: all five classes pass end to end") {
  auto rep = verify_group(catalog_find("D4")->build(), {}, "D4");
  CHECK(rep.overall == VerdictStatus::Holds);
  REQUIRE(rep.classes.size() == 5);

  std::vector<std::tuple<int, int, int>> got;
  for (const auto& c : rep.classes) {
    got.emplace_back(c.class_size, c.m, c.sphere_degree);
    CHECK(c.proper.status == VerdictStatus::Holds);
    CHECK(c.corollary.status == VerdictStatus::Holds);
    CHECK(c.phi_laws.status == VerdictStatus::Holds);
    CHECK(c.boolean_image.status == VerdictStatus::Holds);
    CHECK(c.sphere.status == VerdictStatus::Holds);
    if (c.m >= 2) CHECK(c.maximal_agreement.status == VerdictStatus::Holds);
  }
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::tuple<int, int, int>>{
                   {1, 1, -1}, {1, 1, -1}, {2, 2, 0}, {2, 2, 0}, {2, 2, 0}});
}

TEST_CASE("verify_group on Heisenberg-27: central S^(-1), non-central S^1") {
  auto rep = verify_group(catalog_find("Heis27")->build(), {}, "Heis27");
  CHECK(rep.overall == VerdictStatus::Holds);
  REQUIRE(rep.classes.size() == 11);
  int central = 0, noncentral = 0;
  for (const auto& c : rep.classes) {
    if (c.central) {
      ++central;
      CHECK(c.m == 1);
      CHECK(c.sphere_degree == -1);
    } else {
      ++noncentral;
      CHECK(c.class_size == 3);
      CHECK(c.m == 3);
      CHECK(c.sphere_degree == 1);
      CHECK(c.homology.betti_at(1) == 1);
    }
    CHECK(c.sphere.status == VerdictStatus::Holds);
  }
  CHECK(central == 3);
  CHECK(noncentral == 8);
}

TEST_CASE("verify_group on S3: informational, theorems not applicable") {
  auto rep = verify_group(catalog_find("S3")->build(), {}, "S3");
  CHECK(rep.overall == VerdictStatus::Holds);
  CHECK(rep.p.kind == PGroupKind::No);
  bool saw_connected_noncentral = false;
  for (const auto& c : rep.classes) {
    CHECK(c.proper.status == VerdictStatus::NotApplicable);
    CHECK(c.corollary.status == VerdictStatus::NotApplicable);
    CHECK(c.sphere.status == VerdictStatus::NotApplicable);
    if (!c.central && c.connected) saw_connected_noncentral = true;
  }
  // the transposition class is connected: the hypothesis is necessary
  CHECK(saw_connected_noncentral);
}

TEST_CASE("verify_lemma_proper") {
  SUBCASE("cyclic p-group: generating class passes via the exclusion") {
    auto C4 = catalog_find("C4")->build();
    auto verdicts = verify_lemma_proper(C4);
    bool saw_exclusion = false;
    for (const auto& v : verdicts) {
      CHECK(v.status == VerdictStatus::Holds);
      if (v.detail.find("exclusion") != std::string::npos) saw_exclusion = true;
    }
    CHECK(saw_exclusion);
  }
  SUBCASE("D4: every class generates a proper subgroup") {
    for (const auto& v : verify_lemma_proper(catalog_find("D4")->build()))
      CHECK(v.status == VerdictStatus::Holds);
  }
  SUBCASE("Q8 class {i, -i} generates a proper subgroup of order 4") {
    auto Q8 = catalog_find("Q8")->build();
    for (const auto& c : conjugacy_classes(Q8))
      if (c.size() == 2)
        CHECK(subgroup_generated(Q8, c.member_list).order() == 4);
    for (const auto& v : verify_lemma_proper(Q8))
      CHECK(v.status == VerdictStatus::Holds);
  }
  SUBCASE("rejects non-p-groups") {
    CHECK_THROWS_AS(verify_lemma_proper(catalog_find("S3")->build()),
                    NotApplicableError);
  }
}

TEST_CASE("experimental nilpotent mode stays off non-nilpotent groups") {
  VerifyOptions opts;
  opts.experimental_nilpotent = true;
  auto rep = verify_group(catalog_find("D6")->build(), opts, "D6");
  for (const auto& c : rep.classes) {
    CHECK(c.proper.status == VerdictStatus::NotApplicable);
    CHECK(c.corollary.status == VerdictStatus::NotApplicable);
  }
  CHECK(rep.overall == VerdictStatus::Holds);
}

TEST_CASE("cap exceeded is per class, not fatal") {
  VerifyOptions opts;
  opts.max_class_size = 3;
  auto rep = verify_group(catalog_find("D8")->build(), opts, "D8");
  CHECK(rep.any_cap_exceeded);
  int capped = 0, verified = 0;
  for (const auto& c : rep.classes)
    c.cap_exceeded ? ++capped : ++verified;
  CHECK(capped == 2);   // the two size-4 reflection classes
  CHECK(verified == 5);
  CHECK(rep.overall == VerdictStatus::Holds);  // capped classes are N/A, not failures
}

TEST_CASE("parallel and sequential verification agree") {
  VerifyOptions seq;
  seq.parallel = false;
  auto a = verify_group(catalog_find("Q16")->build(), {}, "Q16");
  auto b = verify_group(catalog_find("Q16")->build(), seq, "Q16");
  CHECK(a == b);
}

TEST_CASE("JSON report round-trips and is deterministic") {
  auto G = catalog_find("D8")->build();
  auto rep1 = verify_group(G, {}, "D8");
  auto rep2 = verify_group(G, {}, "D8");
  auto j1 = report_to_json(rep1);
  auto j2 = report_to_json(rep2);
  CHECK(j1.dump() == j2.dump());  // byte-identical
  CHECK(report_from_json(j1) == rep1);
}

TEST_CASE("text and JSON reports carry identical verdicts") {
  auto rep = verify_group(catalog_find("Q8")->build(), {}, "Q8");
  auto j = report_to_json(rep);
  auto text = report_to_text(rep);
  for (const auto& jc : j.at("classes")) {
    // every status string in the JSON also shows up on the class line
    CHECK(text.find(jc.at("sphere").at("status").get<std::string>()) !=
          std::string::npos);
  }
  CHECK(report_from_json(j).overall == rep.overall);
}

TEST_CASE("catalog golden data re-derived, not trusted") {
  for (const auto& entry : catalog()) {
    if (entry.expected.empty()) continue;
    CHECK(!entry.expected_note.empty());
    auto rep = verify_group(entry.build(), {}, entry.name);
    std::vector<GoldenClassDatum> got;
    for (const auto& c : rep.classes)
      got.push_back({c.class_size, c.m, c.sphere_degree});
    auto want = entry.expected;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("catalog entries build to their stated orders") {
  for (const auto& entry : catalog()) {
    auto G = entry.build();
    CHECK(G.order() == entry.order);
  }
  CHECK(catalog_find("Q8")->order == 8);
  CHECK(catalog_find("Heis27")->order == 27);
  CHECK(catalog_find("nosuch") == nullptr);
}

TEST_CASE("group ingestion formats") {
  SUBCASE("cayley") {
    nlohmann::json j = {{"format", 1},
                        {"order", 2},
                        {"table", {{0, 1}, {1, 0}}},
                        {"labels", {"e", "x"}}};
    auto G = group_from_json(j);
    CHECK(G.order() == 2);
    CHECK(G.label(1) == "x");
  }
  SUBCASE("permutations with cycles") {
    nlohmann::json j = {{"format", 1},
                        {"degree", 4},
                        {"generators", {{{0, 1, 2, 3}}, {{1, 3}}}}};
    auto G = group_from_json(j);
    CHECK(G.order() == 8);  // dihedral
  }
  SUBCASE("bad input") {
    CHECK_THROWS(group_from_json(nlohmann::json::array()));
    nlohmann::json j = {{"order", 2}, {"table", {{0, 0}, {1, 1}}}};
    CHECK_THROWS_AS(group_from_json(j), NotAGroupError);
  }
}
