#include "rackhom/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>

namespace rackhom {

namespace {

void check_latin_and_range(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[r].size()) != n)
      throw NotAGroupError(NotAGroupError::Reason::NotLatinSquare,
                           "row " + std::to_string(r) + " has wrong length");
    std::vector<bool> seen(n, false);
    for (int c = 0; c < n; ++c) {
      int v = table[r][c];
      if (v < 0 || v >= n)
        throw NotAGroupError(NotAGroupError::Reason::NotLatinSquare,
                             "entry out of range at (" + std::to_string(r) + "," +
                                 std::to_string(c) + ")");
      if (seen[v])
        throw NotAGroupError(NotAGroupError::Reason::NotLatinSquare,
                             "duplicate in row " + std::to_string(r));
      seen[v] = true;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<bool> seen(n, false);
    for (int r = 0; r < n; ++r) {
      int v = table[r][c];
      if (seen[v])
        throw NotAGroupError(NotAGroupError::Reason::NotLatinSquare,
                             "duplicate in column " + std::to_string(c));
      seen[v] = true;
    }
  }
}

}  // namespace

void FiniteGroup::validate(std::uint64_t seed) {
  const int n = n_;
  // identity
  int e = -1;
  for (int g = 0; g < n; ++g) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mul(g, x) == x && mul(x, g) == x;
    if (ok) { e = g; break; }
  }
  if (e < 0)
    throw NotAGroupError(NotAGroupError::Reason::NoIdentity, "no two-sided identity");
  identity_ = e;

  inv_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (mul(g, h) == e && mul(h, g) == e) { inv_[g] = h; break; }
    }
    if (inv_[g] < 0)
      throw NotAGroupError(NotAGroupError::Reason::MissingInverse,
                           "element " + std::to_string(g) + " has no two-sided inverse");
  }

  if (static_cast<std::size_t>(n) <= kExhaustiveAssocBound) {
    validation_.assoc_mode = ValidationInfo::AssocMode::Exhaustive;
    validation_.sampled_triples = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw NotAGroupError(NotAGroupError::Reason::NotAssociative,
                                 "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + ")");
  } else {
    validation_.assoc_mode = ValidationInfo::AssocMode::Randomized;
    validation_.sampled_triples = kRandomTriples;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < kRandomTriples; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw NotAGroupError(NotAGroupError::Reason::NotAssociative,
                             "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + ")");
    }
  }
  validation_.seed = seed;
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<int>>& table,
                                     std::vector<std::string> labels,
                                     std::uint64_t seed) {
  check_latin_and_range(table);
  FiniteGroup G;
  G.n_ = static_cast<int>(table.size());
  if (G.n_ == 0)
    throw NotAGroupError(NotAGroupError::Reason::NoIdentity, "empty table");
  G.mul_.resize(static_cast<std::size_t>(G.n_) * G.n_);
  for (int r = 0; r < G.n_; ++r)
    for (int c = 0; c < G.n_; ++c)
      G.mul_[static_cast<std::size_t>(r) * G.n_ + c] = table[r][c];
  if (labels.empty()) {
    for (int g = 0; g < G.n_; ++g) labels.push_back("g" + std::to_string(g));
  } else if (static_cast<int>(labels.size()) != G.n_) {
    throw Error("label count does not match group order");
  }
  G.labels_ = std::move(labels);
  G.validate(seed);
  return G;
}

FiniteGroup FiniteGroup::from_permutations(int degree,
                                           const std::vector<std::vector<int>>& generators,
                                           std::vector<std::string> gen_names,
                                           std::size_t closure_bound) {
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw Error("generator degree mismatch");
    std::vector<bool> seen(degree, false);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]) throw Error("generator is not a bijection");
      seen[v] = true;
    }
  }
  if (gen_names.empty()) {
    const std::string alphabet = "abcdefgh";
    for (std::size_t i = 0; i < generators.size(); ++i)
      gen_names.push_back(i < alphabet.size() ? std::string(1, alphabet[i])
                                              : "g" + std::to_string(i));
  }

  std::vector<int> id_perm(degree);
  std::iota(id_perm.begin(), id_perm.end(), 0);

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  std::vector<std::string> labels;
  elems.push_back(id_perm);
  labels.push_back("e");
  index[id_perm] = 0;

  // BFS closure; labels are shortest words in the generators.
  std::queue<int> work;
  work.push(0);
  auto compose = [degree](const std::vector<int>& f, const std::vector<int>& g) {
    // (f*g)(x) = f(g(x))
    std::vector<int> h(degree);
    for (int x = 0; x < degree; ++x) h[x] = f[g[x]];
    return h;
  };
  while (!work.empty()) {
    int cur = work.front();
    work.pop();
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      auto prod = compose(elems[cur], generators[gi]);
      if (index.count(prod)) continue;
      if (elems.size() >= closure_bound) throw ClosureBoundError(closure_bound);
      int id = static_cast<int>(elems.size());
      index[prod] = id;
      elems.push_back(std::move(prod));
      labels.push_back(labels[cur] == "e" ? gen_names[gi] : labels[cur] + gen_names[gi]);
      work.push(id);
    }
  }

  FiniteGroup G;
  G.n_ = static_cast<int>(elems.size());
  G.mul_.resize(static_cast<std::size_t>(G.n_) * G.n_);
  for (int a = 0; a < G.n_; ++a)
    for (int b = 0; b < G.n_; ++b)
      G.mul_[static_cast<std::size_t>(a) * G.n_ + b] = index.at(compose(elems[a], elems[b]));
  G.labels_ = std::move(labels);
  G.validate(kDefaultSeed);
  return G;
}

int FiniteGroup::element_order(int g) const {
  int k = 1, x = g;
  while (x != identity_) { x = mul(x, g); ++k; }
  return k;
}

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& G) {
  const int n = G.order();
  std::vector<bool> visited(n, false);
  std::vector<ConjClass> classes;
  for (int x = 0; x < n; ++x) {
    if (visited[x]) continue;
    ConjClass c;
    c.members = DynBitset(n);
    for (int g = 0; g < n; ++g) {
      int y = G.conjugate(g, x);
      if (!c.members.test(y)) {
        c.members.set(y);
        visited[y] = true;
      }
    }
    c.member_list = c.members.to_vector();
    c.representative = c.member_list.front();
    classes.push_back(std::move(c));
  }
  return classes;
}

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& S) {
  const int n = G.order();
  Subgroup H;
  H.members = DynBitset(n);
  std::vector<int> elems;
  auto add = [&](int g) {
    if (!H.members.test(g)) {
      H.members.set(g);
      elems.push_back(g);
      return true;
    }
    return false;
  };
  add(G.identity());
  for (int s : S) add(s);
  // closure under multiplication; finite, so inverses come for free
  std::size_t next = 0;
  while (next < elems.size()) {
    int a = elems[next++];
    for (std::size_t i = 0; i < elems.size(); ++i) {
      add(G.mul(a, elems[i]));
      add(G.mul(elems[i], a));
    }
  }
  H.member_list = H.members.to_vector();
  return H;
}

PGroupStatus p_group_status(const FiniteGroup& G) {
  int n = G.order();
  if (n == 1) return {PGroupKind::Trivial, 0};
  for (int p = 2; p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1 ? PGroupStatus{PGroupKind::Yes, p} : PGroupStatus{PGroupKind::No, 0};
    }
  }
  return {PGroupKind::No, 0};
}

bool is_central(const FiniteGroup& G, int g) {
  for (int x = 0; x < G.order(); ++x)
    if (G.mul(g, x) != G.mul(x, g)) return false;
  return true;
}

Subgroup center(const FiniteGroup& G) {
  Subgroup Z;
  Z.members = DynBitset(G.order());
  for (int g = 0; g < G.order(); ++g)
    if (is_central(G, g)) Z.members.set(g);
  Z.member_list = Z.members.to_vector();
  return Z;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (int g = 0; g < G.order(); ++g)
    for (int h : H.member_list)
      if (!H.contains(G.conjugate(g, h))) return false;
  return true;
}

bool is_cyclic(const FiniteGroup& G) {
  for (int g = 0; g < G.order(); ++g)
    if (G.element_order(g) == G.order()) return true;
  return false;
}

bool is_nilpotent(const FiniteGroup& G) {
  int n = G.order();
  std::vector<int> orders(n);
  for (int g = 0; g < n; ++g) orders[g] = G.element_order(g);
  int rest = n;
  for (int p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    int ppart = 1;
    while (rest % p == 0) { rest /= p; ppart *= p; }
    int count = 0;
    for (int g = 0; g < n; ++g) {
      int o = orders[g];
      while (o % p == 0) o /= p;
      if (o == 1) ++count;  // p-power order (identity included)
    }
    if (count != ppart) return false;
  }
  return true;
}

}  // namespace rackhom
