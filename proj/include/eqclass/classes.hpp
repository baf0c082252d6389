#pragma once

#include <climits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqclass/core.hpp"

namespace eqclass {

enum class Tag {
  Empty, C0, C1, C, Ic, I0, I1, I, Istar, Omega1,
  Lambda, Lambda0, Lambda1, LambdaC, V, V0, V1, Vc,
  L, L0, L1, Lc, LS, S, Sc, SM, M, M0, M1, Mc, T0, T1, Tc, Omega,
  // Parameterized by m >= 2 or infinity.
  U, W, TcU, TcW, MU, MW, McU, McW,
};

inline constexpr int kInf = INT_MAX;

/// A named class of the catalog. Parameterized tags carry m >= 2 or kInf.
struct ClassId {
  Tag tag = Tag::Empty;
  int m = 0;

  bool parameterized() const { return tag >= Tag::U; }
  std::string to_string() const;
  friend bool operator==(const ClassId&, const ClassId&) = default;
  friend auto operator<=>(const ClassId&, const ClassId&) = default;
};

/// `T0`, `Lambda0`, `U3`, `TcW2`, `McUInf`, ...
ClassId parse_class_id(std::string_view text);
ClassId make_class(Tag tag, int m = 0);

/// The class of duals of members.
ClassId dual_class(ClassId c);

/// a-separating rank of f.
struct Rank {
  enum Kind { BelowTwo, Finite, Infinite } kind = BelowTwo;
  int m = 0;  // for Finite: separating of rank m, not m+1

  std::string to_string() const;
  friend bool operator==(const Rank&, const Rank&) = default;
  /// Whether f is a-separating of rank k (k = kInf for a-separating).
  bool at_least(int k) const {
    return kind == Infinite || (kind == Finite && k != kInf && m >= k);
  }
};

inline constexpr int kMaxRankArity = 16;

Rank separating_rank(const BooleanFunction& f, bool a);

/// Smallest subset of f^{-1}(a) that is not a-separating, as point indices;
/// empty when none exists.
std::vector<std::uint32_t> smallest_nonseparating_subset(const BooleanFunction& f, bool a);

/// Precomputed structural facts about one function; membership in every
/// catalog class is a cheap predicate on it.
struct ClassProfile {
  bool t0 = false, t1 = false, monotone = false, self_dual = false, linear = false;
  bool conjunction = false, disjunction = false;  // pure, non-constant
  bool is_constant = false, constant_value = false;
  enum class Monadic { None, Var, NegVar, Zero, One } monadic = Monadic::None;
  std::optional<Rank> rank1, rank0;  // absent above kMaxRankArity
};

ClassProfile profile_of(const BooleanFunction& f);
bool member(const ClassProfile& p, ClassId c);
bool member(const BooleanFunction& f, ClassId c);

/// All catalog classes with parameters 2..max_param plus infinity.
std::vector<ClassId> catalog(int max_param);

/// Cover relations (lower, upper) among catalog classes with parameters up to
/// max_param, as drawn in the lattice of clones extended by the four
/// non-clone idempotents.
struct InclusionTable {
  int max_param = 0;
  std::vector<ClassId> nodes;
  std::vector<std::pair<ClassId, ClassId>> covers;

  /// Reflexive-transitive closure of the covers.
  bool includes(ClassId lower, ClassId upper) const;
};

InclusionTable default_inclusion_table(int max_param);

bool is_subclass(ClassId c1, ClassId c2);

struct TableValidation {
  bool ok = true;
  /// Table claims inclusion but some function of arity <= cap separates.
  std::vector<std::string> false_inclusions;
  /// Table denies inclusion but no function of arity <= cap separates.
  std::vector<std::string> unseparated;
  std::size_t functions_checked = 0;
};

/// Checks every pair of table nodes against membership predicates over all
/// functions of arity <= cap. Non-inclusions between parameterized classes
/// whose parameters exceed cap - 1 cannot be separated at that arity and are
/// not counted against the table.
TableValidation validate_inclusion_table(const InclusionTable& table, int cap = 4);

/// Every catalog class is an idempotent of the class monoid.
bool is_idempotent_class(ClassId c);

/// Functions of arity <= arity_cap in c2 but not c1, one canonical
/// representative per equivalence class.
std::vector<BooleanFunction> difference_sample(ClassId c1, ClassId c2, int arity_cap);

/// Every function of the given arity, in table order.
std::vector<BooleanFunction> all_functions(int arity);

}  // namespace eqclass
