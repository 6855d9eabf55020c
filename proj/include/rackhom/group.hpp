#ifndef RACKHOM_GROUP_HPP
#define RACKHOM_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rackhom/bitset.hpp"
#include "rackhom/errors.hpp"

namespace rackhom {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// How a group's associativity was checked. Exhaustive up to order 256;
/// randomized triples (seeded) above that, since the full check is cubic.
struct ValidationInfo {
  enum class AssocMode { Exhaustive, Randomized };
  AssocMode assoc_mode = AssocMode::Exhaustive;
  std::uint64_t seed = kDefaultSeed;
  int sampled_triples = 0;  // 0 for exhaustive
};

/// Finite group on dense element ids 0..order-1, backed by a full
/// multiplication table. Immutable after construction.
class FiniteGroup {
 public:
  static constexpr std::size_t kExhaustiveAssocBound = 256;
  static constexpr int kRandomTriples = 10000;
  static constexpr std::size_t kDefaultClosureBound = 1'000'000;

  /// Validates and wraps an explicit Cayley table. Throws NotAGroupError
  /// with the first failed check (latin square, identity, inverses,
  /// associativity). Element order is taken as given; no relabeling.
  static FiniteGroup from_cayley(const std::vector<std::vector<int>>& table,
                                 std::vector<std::string> labels = {},
                                 std::uint64_t seed = kDefaultSeed);

  /// Closure of permutation generators on {0..degree-1} under
  /// composition, breadth-first from the identity. Element labels are
  /// shortest generator words ("e" for the identity). Throws
  /// ClosureBoundError past the cap.
  static FiniteGroup from_permutations(int degree,
                                       const std::vector<std::vector<int>>& generators,
                                       std::vector<std::string> gen_names = {},
                                       std::size_t closure_bound = kDefaultClosureBound);

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int g) const;
  const std::string& label(int g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const ValidationInfo& validation() const { return validation_; }

 private:
  FiniteGroup() = default;
  void validate(std::uint64_t seed);

  int n_ = 0;
  std::vector<int> mul_;  // row-major n x n
  std::vector<int> inv_;
  int identity_ = 0;
  std::vector<std::string> labels_;
  ValidationInfo validation_;
};

/// Conjugacy class: sorted members, representative = smallest id.
struct ConjClass {
  DynBitset members;
  std::vector<int> member_list;  // sorted ascending
  int representative = 0;
  int size() const { return static_cast<int>(member_list.size()); }
};

struct Subgroup {
  DynBitset members;
  std::vector<int> member_list;  // sorted ascending
  int order() const { return static_cast<int>(member_list.size()); }
  bool contains(int g) const { return members.test(static_cast<std::size_t>(g)); }
};

/// Partition of the element set into conjugacy classes, ordered by
/// smallest member id. The identity's class comes first.
std::vector<ConjClass> conjugacy_classes(const FiniteGroup& G);

/// Smallest subgroup containing S (closure under mul; inverses follow in
/// a finite group).
Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& S);

enum class PGroupKind { No, Trivial, Yes };

/// is_p_group outcome. The trivial group is a p-group for every prime;
/// it gets the distinguished Trivial kind rather than an arbitrary p.
struct PGroupStatus {
  PGroupKind kind = PGroupKind::No;
  int prime = 0;  // set iff kind == Yes
  bool is_p_group() const { return kind != PGroupKind::No; }
};

PGroupStatus p_group_status(const FiniteGroup& G);

bool is_central(const FiniteGroup& G, int g);
Subgroup center(const FiniteGroup& G);
bool is_normal(const FiniteGroup& G, const Subgroup& H);
bool is_cyclic(const FiniteGroup& G);

/// Nilpotence test: for every prime p dividing |G|, the p-elements must
/// number exactly the p-part of |G| (then they form the unique Sylow
/// p-subgroup, so all Sylows are normal).
bool is_nilpotent(const FiniteGroup& G);

}  // namespace rackhom

#endif
