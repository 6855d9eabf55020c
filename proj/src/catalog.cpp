#include "rackhom/catalog.hpp"

#include <numeric>

namespace rackhom {

namespace {

std::vector<int> cycle_perm(int degree, int shift) {
  std::vector<int> p(degree);
  for (int i = 0; i < degree; ++i) p[i] = (i + shift) % degree;
  return p;
}

// Dihedral group of order 2k on k points: rotation s, reflection t.
CatalogEntry dihedral(const std::string& name, int k) {
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = (k - i) % k;
  return {name, "dihedral group of order " + std::to_string(2 * k), 2 * k, k,
          {cycle_perm(k, 1), t}, {"s", "t"}, {}, ""};
}

CatalogEntry cyclic(const std::string& name, int n) {
  return {name, "cyclic group of order " + std::to_string(n), n, n,
          {cycle_perm(n, 1)}, {"a"}, {}, ""};
}

// Generalized quaternion group of order 4n via the left-regular action
// on normal forms a^i b^eps (point id = i + 2n*eps):
//   a * a^i b^eps = a^(i+1) b^eps
//   b * a^i      = a^(-i) b        b * a^i b = a^(n-i)
CatalogEntry quaternion(const std::string& name, int n) {
  const int half = 2 * n, deg = 4 * n;
  std::vector<int> la(deg), lb(deg);
  for (int i = 0; i < half; ++i) {
    la[i] = (i + 1) % half;
    la[half + i] = half + (i + 1) % half;
    lb[i] = half + (half - i) % half;
    lb[half + i] = (n - i + half) % half;
  }
  return {name, "generalized quaternion group of order " + std::to_string(4 * n),
          4 * n, deg, {la, lb}, {"a", "b"}, {}, ""};
}

// Heisenberg group over F_3 (upper unitriangular 3x3) via the
// left-regular action on triples (a,b,c), point id = 9a + 3b + c, with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
CatalogEntry heisenberg27() {
  auto id_of = [](int a, int b, int c) { return 9 * a + 3 * b + c; };
  std::vector<int> lx(27), ly(27);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        lx[id_of(a, b, c)] = id_of((a + 1) % 3, b, (c + b) % 3);
        ly[id_of(a, b, c)] = id_of(a, (b + 1) % 3, c);
      }
  return {"Heis27", "Heisenberg group: unitriangular 3x3 matrices over F_3", 27, 27,
          {lx, ly}, {"x", "y"}, {}, ""};
}

CatalogEntry elementary_abelian_8() {
  return {"E8", "elementary abelian group of order 8 (2^3)", 8, 6,
          {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}},
          {"a", "b", "c"}, {}, ""};
}

CatalogEntry symmetric3() {
  return {"S3", "symmetric group on 3 letters (non-example: not nilpotent)", 6, 3,
          {{1, 2, 0}, {1, 0, 2}}, {"s", "t"}, {}, ""};
}

std::vector<CatalogEntry> build_catalog() {
  const std::string oracle =
      "re-derived by the brute-force pipeline (subset filter + rational ranks) "
      "in the test suite";
  std::vector<CatalogEntry> cat;
  for (auto [name, n] : {std::pair<const char*, int>{"C2", 2}, {"C3", 3}, {"C4", 4},
                         {"C8", 8}, {"C9", 9}, {"C27", 27}}) {
    auto e = cyclic(name, n);
    e.expected.assign(static_cast<std::size_t>(n), {1, 1, -1});
    e.expected_note = oracle;
    cat.push_back(std::move(e));
  }

  auto d4 = dihedral("D4", 4);
  d4.expected = {{1, 1, -1}, {1, 1, -1}, {2, 2, 0}, {2, 2, 0}, {2, 2, 0}};
  d4.expected_note = oracle;
  cat.push_back(std::move(d4));

  auto d8 = dihedral("D8", 8);
  d8.expected = {{1, 1, -1}, {1, 1, -1}, {2, 2, 0}, {2, 2, 0},
                 {2, 2, 0},  {4, 2, 0},  {4, 2, 0}};
  d8.expected_note = oracle;
  cat.push_back(std::move(d8));

  auto q8 = quaternion("Q8", 2);
  q8.expected = {{1, 1, -1}, {1, 1, -1}, {2, 2, 0}, {2, 2, 0}, {2, 2, 0}};
  q8.expected_note = oracle;
  cat.push_back(std::move(q8));

  auto q16 = quaternion("Q16", 4);
  q16.expected = {{1, 1, -1}, {1, 1, -1}, {2, 2, 0}, {2, 2, 0},
                  {2, 2, 0},  {4, 2, 0},  {4, 2, 0}};
  q16.expected_note = oracle;
  cat.push_back(std::move(q16));

  auto heis = heisenberg27();
  heis.expected.assign(3, {1, 1, -1});
  for (int i = 0; i < 8; ++i) heis.expected.push_back({3, 3, 1});
  heis.expected_note = oracle;
  cat.push_back(std::move(heis));

  auto e8 = elementary_abelian_8();
  e8.expected.assign(8, {1, 1, -1});
  e8.expected_note = oracle;
  cat.push_back(std::move(e8));

  cat.push_back(symmetric3());

  auto d6 = dihedral("D6", 6);
  d6.description += " (non-example: not nilpotent)";
  cat.push_back(std::move(d6));
  return cat;
}

}  // namespace

FiniteGroup CatalogEntry::build() const {
  FiniteGroup G = FiniteGroup::from_permutations(degree, generators, gen_names);
  if (G.order() != order)
    throw Error("catalog entry " + name + " built with wrong order");
  return G;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace rackhom
