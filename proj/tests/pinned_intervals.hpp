#pragma once

#include <vector>

#include "eqclass/classify.hpp"

namespace pinned {

enum class Expect { Uncountable, Countable, Finite };

struct Interval {
  const char* lower;
  const char* upper;
  Expect expect;
  int count = -1;  // exact number of classes, when known
};

// Verdicts implied by the countability conditions and by the minimal intervals
// shown uncountable by the family antichains.
inline const std::vector<Interval>& intervals() {
  using E = Expect;
  static const std::vector<Interval> t{
      // Minimal intervals below Omega, T0, T1 and Tc.
      {"T0", "Omega", E::Uncountable},
      {"T1", "Omega", E::Uncountable},
      {"L", "Omega", E::Uncountable},
      {"S", "Omega", E::Uncountable},
      {"M", "Omega", E::Uncountable},
      {"Tc", "T0", E::Uncountable},
      {"L0", "T0", E::Uncountable},
      {"M0", "T0", E::Uncountable},
      {"U2", "T0", E::Uncountable},
      {"Tc", "T1", E::Uncountable},
      {"L1", "T1", E::Uncountable},
      {"M1", "T1", E::Uncountable},
      {"W2", "T1", E::Uncountable},
      {"Mc", "Tc", E::Uncountable},
      {"Sc", "Tc", E::Uncountable},
      {"TcU2", "Tc", E::Uncountable},
      {"TcW2", "Tc", E::Uncountable},
      // Separating classes and their meets.
      {"TcU2", "U2", E::Uncountable},
      {"MU2", "U2", E::Uncountable},
      {"TcUInf", "UInf", E::Uncountable},
      {"MUInf", "UInf", E::Uncountable},
      {"TcW3", "W3", E::Uncountable},
      {"MW3", "W3", E::Uncountable},
      {"McU4", "TcU4", E::Uncountable},
      {"McWInf", "TcWInf", E::Uncountable},
      // Monotone intervals.
      {"Lambda", "M", E::Uncountable},
      {"V", "M", E::Uncountable},
      {"MU2", "M0", E::Uncountable},
      {"MW2", "M1", E::Uncountable},
      {"McU2", "Mc", E::Uncountable},
      {"McW2", "Mc", E::Uncountable},
      {"SM", "McU2", E::Uncountable},
      {"SM", "McW2", E::Uncountable},
      // Consecutive ranks.
      {"U3", "U2", E::Uncountable},
      {"TcU3", "TcU2", E::Uncountable},
      {"MU4", "MU3", E::Uncountable},
      {"McU3", "McU2", E::Uncountable},
      {"W3", "W2", E::Uncountable},
      {"McW4", "McW3", E::Uncountable},
      // Infinite rank above the semilattices.
      {"Lambda0", "MUInf", E::Uncountable},
      {"LambdaC", "McUInf", E::Uncountable},
      {"V1", "MWInf", E::Uncountable},
      {"Vc", "McWInf", E::Uncountable},
      // Self-dual intervals.
      {"Ic", "SM", E::Uncountable},
      {"SM", "Sc", E::Uncountable},
      {"Lc", "Sc", E::Uncountable},
      {"Sc", "S", E::Uncountable},
      {"LS", "S", E::Uncountable},
      // Countable instances of the four conditions.
      {"Empty", "V", E::Countable},
      {"Empty", "Lambda", E::Countable},
      {"Empty", "L", E::Countable},
      {"Lambda0", "Lambda", E::Countable},
      {"V1", "V", E::Countable},
      {"L0", "L", E::Countable},
      {"Ic", "LS", E::Countable},
      {"McU2", "MU2", E::Countable},
      {"McU3", "MU3", E::Countable},
      {"McU4", "MU4", E::Countable},
      {"McUInf", "MUInf", E::Countable},
      {"McW2", "MW2", E::Countable},
      {"McW4", "MW4", E::Countable},
      {"McWInf", "MWInf", E::Countable},
      // Finite intervals.
      {"Mc", "M", E::Finite, 4},
      {"Empty", "Omega1", E::Finite, 16},
      {"Ic", "I", E::Finite},
  };
  return t;
}

inline bool matches(const Interval& p, const eqclass::IntervalVerdict& v) {
  using K = eqclass::IntervalVerdict;
  switch (p.expect) {
    case Expect::Uncountable: return v.kind == K::Uncountable;
    case Expect::Countable: return v.kind == K::CountablyInfinite || v.kind == K::Finite;
    case Expect::Finite:
      return v.kind == K::Finite && (p.count < 0 || (v.count && *v.count == static_cast<std::size_t>(p.count)));
  }
  return false;
}

}  // namespace pinned
