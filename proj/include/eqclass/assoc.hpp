#pragma once

#include <optional>

#include "eqclass/core.hpp"
#include "eqclass/minor.hpp"

namespace eqclass {

/// Positions i < j (1-based) and a point of arity 2n-1 at which nesting f
/// into argument i differs from nesting it into argument j.
struct NonAssocWitness {
  int i = 0, j = 0;
  std::uint32_t point = 0;
  bool value_i = false, value_j = false;
};

/// The (2n-1)-ary function f(x_1, ..., x_{i-1}, f(x_i, ..., x_{i+n-1}), x_{i+n}, ...).
BooleanFunction nesting(const BooleanFunction& f, int i);

inline constexpr int kMaxAssocArity = 10;

/// None iff f is associative; otherwise the first witness in (i, j, point)
/// order.
std::optional<NonAssocWitness> is_associative(const BooleanFunction& f);

/// Evaluates both nestings at `point`; returns the pair of values.
std::pair<bool, bool> nesting_values(const BooleanFunction& f, int i, int j, std::uint32_t point);

/// The point of arity `arity` whose coordinates are 1 exactly at `ones`
/// (1-based).
std::uint32_t point_with_ones(int arity, std::initializer_list<int> ones);
std::uint32_t point_with_ones(int arity, const std::vector<int>& ones);

/// Associativity of the essential core.
bool is_quasi_associative(const BooleanFunction& f);

/// f^0 is the unary diagonal x -> f(x, ..., x); f^1 = f; f^k nests f into the
/// last argument of f^{k-1}.
BooleanFunction iterate(const BooleanFunction& f, int k);

struct StrictExtension {
  BooleanFunction function;  // x_{n+1} ^ x_{n+2} ^ f
  Verdict not_below;         // Holds when function is not a minor of f
  bool identification_recovers;
};

/// Requires essential arity >= 2.
StrictExtension strict_extension_witness(const BooleanFunction& f,
                                         const SearchOptions& opts = {});

struct ArityGrowth {
  BooleanFunction function;  // f(x_1..x_{N-1}, f(x_N..x_{2N-1}))
  int essential_arity;
  bool full;  // essential_arity == 2N - 1
};

ArityGrowth arity_growth_witness(const BooleanFunction& f);

}  // namespace eqclass
