#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqclass/core.hpp"

namespace eqclass {

/// Outcome of a bounded search: the property holds, provably fails, or the
/// node budget ran out first.
enum class Verdict { Holds, Fails, Inconclusive };

std::string to_string(Verdict v);

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Counterexample points kept for early rejection; 0 disables the cache.
  int point_cache = 64;
};

/// sigma[i] is the variable of g (1-based) fed to position i+1 of f, so that
/// g = f(x_{sigma[0]}, ..., x_{sigma[n-1]}).
using Substitution = std::vector<int>;

struct MinorResult {
  Verdict verdict = Verdict::Fails;
  std::optional<Substitution> witness;
  std::uint64_t nodes = 0;
};

/// Decides g <=_V f, i.e. whether g is obtained from f by a simple variable
/// substitution. Witnesses refer to the original (uncored) arities.
MinorResult minor_leq(const BooleanFunction& g, const BooleanFunction& f,
                      const SearchOptions& opts = {});

/// True iff replaying sigma through f reproduces g.
bool replays(const BooleanFunction& g, const BooleanFunction& f, const Substitution& sigma);

/// Both directions of minor_leq. Holds/Fails/Inconclusive as usual.
Verdict equivalent(const BooleanFunction& g, const BooleanFunction& f,
                   const SearchOptions& opts = {});

inline constexpr int kMaxCanonicalArity = 10;

/// The smallest truth table (in BooleanFunction order) of the essential core
/// over all permutations of its variables. Equal keys iff equivalent.
BooleanFunction canonical_key(const BooleanFunction& f);

struct PairResult {
  std::size_t i, j;  // result of minor_leq(fs[i], fs[j])
  Verdict verdict;
  std::optional<Substitution> witness;
  std::uint64_t nodes;
};

struct AntichainReport {
  std::size_t count = 0;
  /// Holds: pairwise incomparable. Fails: some pair is comparable.
  Verdict verdict = Verdict::Holds;
  std::optional<PairResult> violation;  // first comparable ordered pair
  std::vector<PairResult> pairs;        // sorted by (i, j)
  std::uint64_t total_nodes = 0;
};

AntichainReport verify_antichain(const std::vector<BooleanFunction>& fs,
                                 const SearchOptions& opts = {});
/// Single-threaded reference for verify_antichain.
AntichainReport verify_antichain_serial(const std::vector<BooleanFunction>& fs,
                                        const SearchOptions& opts = {});

struct MinimalElements {
  std::vector<std::size_t> indices;
  bool inconclusive = false;
};

/// Members of fs not strictly above another member.
MinimalElements minimal_elements(const std::vector<BooleanFunction>& fs,
                                 const SearchOptions& opts = {});

}  // namespace eqclass
