#ifndef RACKHOM_CATALOG_HPP
#define RACKHOM_CATALOG_HPP

#include <string>
#include <vector>

#include "rackhom/group.hpp"

namespace rackhom {

/// Golden per-class datum: (class size, orbit count, sphere degree).
/// Stored as an unordered multiset; tests re-derive every entry with the
/// brute-force pipeline rather than trusting it.
struct GoldenClassDatum {
  int class_size = 0;
  int m = 0;
  int sphere_degree = 0;
  friend auto operator<=>(const GoldenClassDatum&, const GoldenClassDatum&) = default;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  int order = 0;
  int degree = 0;
  std::vector<std::vector<int>> generators;  // permutations, one-line form
  std::vector<std::string> gen_names;
  std::vector<GoldenClassDatum> expected;  // empty for non-examples
  std::string expected_note;               // how the golden data was derived

  FiniteGroup build() const;
};

/// Built-in groups, all given by explicit permutation generators.
const std::vector<CatalogEntry>& catalog();

/// nullptr when no entry has that name.
const CatalogEntry* catalog_find(const std::string& name);

}  // namespace rackhom

#endif
