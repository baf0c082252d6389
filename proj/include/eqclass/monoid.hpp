#pragma once

#include <random>
#include <set>
#include <span>
#include <vector>

#include "eqclass/core.hpp"

namespace eqclass {

inline constexpr int kMaxCap = 8;
inline constexpr int kDefaultCap = 3;

/// A class of Boolean functions truncated to arities 1..cap, closed under
/// simple variable substitutions within the cap.
///
/// Truncation makes every infinite class an under-approximation. Lattice
/// operations are exact at the cap; class composition is exact for inputs
/// materialized at the cap but omits composites whose natural expression needs
/// inner arity above it.
class CappedClass {
 public:
  explicit CappedClass(int cap = kDefaultCap);

  /// Smallest capped class containing `members`; throws if one exceeds cap.
  static CappedClass closure_of(std::span<const BooleanFunction> members, int cap);

  /// Takes the member set as given, without closing it. Test-only: it is the
  /// only way to build a class that violates the closure invariant.
  static CappedClass unchecked_for_testing(std::span<const BooleanFunction> members, int cap);

  int cap() const { return cap_; }
  const std::set<BooleanFunction>& at_arity(int arity) const;
  bool contains(const BooleanFunction& f) const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<BooleanFunction> members() const;

  /// Every minor of a member with arity <= cap is a member.
  bool is_closed() const;
  bool is_subset_of(const CappedClass& other) const;

  friend bool operator==(const CappedClass&, const CappedClass&) = default;

 private:
  friend CappedClass compose_classes(const CappedClass&, const CappedClass&);
  friend CappedClass compose_classes_serial(const CappedClass&, const CappedClass&);
  friend CappedClass class_union(const CappedClass&, const CappedClass&);
  friend CappedClass class_intersection(const CappedClass&, const CappedClass&);
  friend CappedClass map_members(const CappedClass&, BooleanFunction (*)(const BooleanFunction&));

  void insert(const BooleanFunction& f);

  int cap_;
  std::vector<std::set<BooleanFunction>> by_arity_;  // index 0 unused
};

/// All minors f(x_{s1}, ..., x_{sn}) of f with arity 1..cap.
std::vector<BooleanFunction> minors_up_to(const BooleanFunction& f, int cap);

CappedClass closure(std::span<const BooleanFunction> generators, int cap = kDefaultCap);
/// The capped projection class.
CappedClass projections(int cap = kDefaultCap);

/// Closure of 1..max_generators uniformly random functions of arity
/// 1..min(cap, max_arity).
CappedClass random_capped_class(std::mt19937_64& rng, int cap = kDefaultCap,
                                int max_generators = 2, int max_arity = 3);

/// IJ at the cap: all f(g_1..g_n), f n-ary in I, g_i of one common arity in J.
CappedClass compose_classes(const CappedClass& left, const CappedClass& right);
/// Single-threaded reference for compose_classes.
CappedClass compose_classes_serial(const CappedClass& left, const CappedClass& right);

CappedClass class_union(const CappedClass& a, const CappedClass& b);
CappedClass class_intersection(const CappedClass& a, const CappedClass& b);

/// Applies a unary map (complement, dual, ...) memberwise.
CappedClass map_members(const CappedClass& k, BooleanFunction (*fn)(const BooleanFunction&));

bool is_idempotent_at_cap(const CappedClass& k);

struct AssocLemmaResult {
  bool subset_holds;    // (IJ)K within I(JK)
  bool equality_holds;  // (IJ)K == I(JK)
  bool j_closed;
};
AssocLemmaResult assoc_lemma_check(const CappedClass& i, const CappedClass& j,
                                   const CappedClass& k);

}  // namespace eqclass
