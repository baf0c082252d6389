#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqclass/classes.hpp"
#include "eqclass/core.hpp"
#include "eqclass/monoid.hpp"

namespace eqclass {

// Named function families used as antichain witnesses.
//
//   f_n    1 exactly on points of weight 1 or n-1                  (n >= 4)
//   g_n    0 exactly on points with one zero or all zeros          (n >= 4)
//   u_n    x1 & f_n(x2..x_{n+1})      guard variable in position 1 (n >= 4)
//   tu_n   x1 & g_n(x2..x_{n+1})                                   (n >= 4)
//   H_n    1 exactly on points of weight >= 2                      (n >= 2)
//   G^n_m  H_n(x1..x_{n-1}, H_m(x_n..x_{m+n-1}))                   (m >= n >= 2)
//   mu_n   threshold (n+1)/2                                       (n odd, n >= 3)
//   T_n    H_n / mu_n / dual(H_n) selected by the last two inputs  (n odd, n >= 7)
//   s_n    T_n with both selectors complemented                    (n odd, n >= 7)

enum class Family { F, G, U, TU, H, BigG, Mu, T, S };

struct FamilySpec {
  Family family;
  int n;
  int m = 0;  // only for G^n_m

  std::string to_string() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// A generated member plus whether its parameters lie in the range where the
/// antichain constructions are stated.
struct FamilyMember {
  BooleanFunction function;
  bool in_standard_range;
};

/// Generates a member. Parameters below the standard range are accepted only
/// when `allow_out_of_range` is set and are flagged in the result.
FamilyMember generate(const FamilySpec& spec, bool allow_out_of_range = false);

BooleanFunction make_f(int n);
BooleanFunction make_g(int n);
BooleanFunction make_u(int n);
BooleanFunction make_tu(int n);
BooleanFunction make_H(int n);
BooleanFunction make_G(int n, int m);
BooleanFunction make_mu(int n);
BooleanFunction make_T(int n);
BooleanFunction make_s(int n);

/// Recognizes `f@5`, `G@3,5`, ... Returns nullopt when the text is not
/// shaped like a family spec; throws ParseError on a malformed one.
std::optional<FamilySpec> parse_family_spec(std::string_view text);

/// "label lies in every class of `in` and in none of `out`".
struct PlacementAssertion {
  std::string label;  // e.g. "H@5"
  BooleanFunction function;
  std::vector<ClassId> in, out;
};

/// Class placements of the antichain families used to separate minimal
/// intervals, for members of arity <= max_arity (T and s at n = 7, 9).
std::vector<PlacementAssertion> placement_assertions(int max_arity = 8);

/// The subset of `a.in` / `a.out` that fails; empty when the assertion holds.
std::vector<std::string> placement_violations(const PlacementAssertion& a);

/// One of the sixteen classes S·Ic for S a subset of {x1, !x1, 0, 1},
/// materialized as members up to `cap`.
struct MonadicClass {
  unsigned generator_mask;  // bit 0: x1, bit 1: !x1, bit 2: 0, bit 3: 1
  std::string name;
  CappedClass members;
};

std::string monadic_class_name(unsigned generator_mask);
std::vector<MonadicClass> quasi_monadic_lattice(int cap = 3);

/// Hasse edges (lower name, upper name) of the quasi-monadic lattice as drawn
/// in the reference diagram.
const std::vector<std::pair<std::string, std::string>>& monadic_reference_edges();

/// Covering pairs (lower name, upper name) among the given classes by member
/// inclusion, sorted.
std::vector<std::pair<std::string, std::string>> hasse_edges(const std::vector<MonadicClass>& classes);

}  // namespace eqclass
