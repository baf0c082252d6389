#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqclass/classes.hpp"
#include "eqclass/core.hpp"
#include "eqclass/families.hpp"

namespace eqclass {

struct IntervalVerdict {
  enum Kind { Empty, Finite, CountablyInfinite, Uncountable } kind = Empty;
  /// Number of equational classes in the interval, for Finite.
  std::optional<std::size_t> count;
  /// Stable clause name: "empty", "thm5.finite", "thm9.bullet1".."thm9.bullet4",
  /// "thm10.witness".
  std::string justification;
  /// For thm9.bullet4, the class C that fired.
  std::optional<ClassId> bullet_class;
  std::optional<BooleanFunction> witness;
  std::string witness_name;
};

std::string to_string(IntervalVerdict::Kind k);

IntervalVerdict classify_interval(ClassId c1, ClassId c2);

/// The least catalog class containing every member of c that is not
/// quasi-monadic. C2 minus C1 is quasi-monadic iff this class lies in C1.
ClassId nonmonadic_part(ClassId c);

/// Bitmask over {x1, !x1, 0, 1} (bits 0..3) of the quasi-monadic types in c.
unsigned monadic_types(ClassId c);

/// Checks nonmonadic_part over the catalog with parameters up to max_param
/// against membership of every function of arity <= cap: it agrees with c off
/// the quasi-monadic functions, lies in c, and lies in every catalog class
/// containing the non-quasi-monadic members of c. Returns the offending
/// classes.
std::vector<std::string> validate_nonmonadic_part(int max_param = 4, int cap = 4);

/// Number of minor-closed classes K with C1 <= K <= C2 after truncation to
/// arity <= cap, counted by materializing both ends. Requires C2 minus C1 to
/// be quasi-monadic.
std::size_t materialized_interval_count(ClassId c1, ClassId c2, int cap = 3);

enum class WitnessTransform { None, Dual, Complement };

struct MinimalInterval {
  ClassId lower, upper;
  FamilySpec family;
  WitnessTransform transform = WitnessTransform::None;
  std::string source;  // e.g. "prop4.ii"

  BooleanFunction witness() const;
  std::string witness_name() const;  // "f@5", "dual(H@4)", "not(T@7)"
};

/// Minimal uncountable intervals, with parameterized entries instantiated for
/// n = 2..max_param and infinity.
std::vector<MinimalInterval> minimal_interval_table(int max_param = 4);

struct EntryCheck {
  bool in_upper = false, outside_lower = false, not_quasi_associative = false;
  bool ok() const { return in_upper && outside_lower && not_quasi_associative; }
};
EntryCheck validate_entry(const MinimalInterval& e);

/// The first table entry <D1, D2> with C1 <= D1 and D2 <= C2.
std::optional<MinimalInterval> minimal_interval_inside(ClassId c1, ClassId c2);

struct CrossCheckReport {
  IntervalVerdict verdict;
  std::size_t sample_size = 0;
  std::size_t non_quasi_associative = 0;
  std::optional<BooleanFunction> first_non_quasi_associative;
  /// A non-quasi-associative member at the cap implies an Uncountable verdict
  /// (vacuous for an empty interval).
  bool consistent = true;
  /// For Uncountable: whether the cap already exhibits a witness.
  bool witness_at_cap = false;
};

CrossCheckReport cross_check_thm10(ClassId c1, ClassId c2, int arity_cap);

/// cross_check_thm10 over every ordered catalog pair with parameters up to
/// max_param with C1 within C2, sharing one scan of the functions of arity
/// <= arity_cap.
struct SweepResult {
  std::size_t pairs = 0;
  std::size_t uncountable = 0;
  std::vector<std::pair<ClassId, ClassId>> inconsistent;
};
SweepResult cross_check_sweep(int max_param, int arity_cap);

}  // namespace eqclass
