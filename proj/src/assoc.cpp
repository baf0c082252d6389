#include "eqclass/assoc.hpp"

#include <bit>
#include <numeric>

namespace eqclass {
namespace {

std::vector<BooleanFunction> projections_of(int arity, int from, int count) {
  std::vector<BooleanFunction> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back(projection(arity, from + k));
  return out;
}

}  // namespace

BooleanFunction nesting(const BooleanFunction& f, int i) {
  const int n = f.arity();
  if (i < 1 || i > n) throw Error("nesting position out of range");
  const int big = 2 * n - 1;
  if (big > kMaxArity) throw Error("nesting needs arity 2n-1 <= " + std::to_string(kMaxArity));
  std::vector<int> inner_sigma(n);
  std::iota(inner_sigma.begin(), inner_sigma.end(), i);
  std::vector<BooleanFunction> args = projections_of(big, 1, i - 1);
  args.push_back(substitute(f, inner_sigma, big));
  for (int k = i + n; k <= big; ++k) args.push_back(projection(big, k));
  return compose(f, args);
}

std::optional<NonAssocWitness> is_associative(const BooleanFunction& f) {
  const int n = f.arity();
  if (n > kMaxAssocArity) {
    throw Error("associativity check needs arity <= " + std::to_string(kMaxAssocArity));
  }
  if (n == 1) return std::nullopt;
  std::vector<BooleanFunction> nests;
  for (int i = 1; i <= n; ++i) nests.push_back(nesting(f, i));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto& a = nests[i - 1];
      const auto& b = nests[j - 1];
      if (a == b) continue;
      const auto aw = a.words(), bw = b.words();
      for (std::size_t w = 0; w < aw.size(); ++w) {
        if (const auto diff = aw[w] ^ bw[w]) {
          const auto p = static_cast<std::uint32_t>((w << 6) | std::countr_zero(diff));
          return NonAssocWitness{i, j, p, a.bit(p), b.bit(p)};
        }
      }
    }
  }
  return std::nullopt;
}

std::pair<bool, bool> nesting_values(const BooleanFunction& f, int i, int j, std::uint32_t point) {
  const int n = f.arity();
  auto value = [&](int pos) {
    std::uint32_t inner = 0;
    for (int k = 0; k < n; ++k) inner |= ((point >> (pos - 1 + k)) & 1u) << k;
    const bool v = f.bit(inner);
    std::uint32_t outer = 0;
    for (int k = 1; k <= n; ++k) {
      bool b;
      if (k < pos) b = (point >> (k - 1)) & 1u;
      else if (k == pos) b = v;
      else b = (point >> (k + n - 2)) & 1u;
      outer |= static_cast<std::uint32_t>(b) << (k - 1);
    }
    return f.bit(outer);
  };
  if (i < 1 || j < 1 || i > n || j > n) throw Error("nesting position out of range");
  return {value(i), value(j)};
}

std::uint32_t point_with_ones(int arity, std::initializer_list<int> ones) {
  return point_with_ones(arity, std::vector<int>(ones));
}

std::uint32_t point_with_ones(int arity, const std::vector<int>& ones) {
  std::uint32_t p = 0;
  for (int t : ones) {
    if (t < 1 || t > arity) throw Error("coordinate out of range");
    p |= 1u << (t - 1);
  }
  return p;
}

bool is_quasi_associative(const BooleanFunction& f) {
  const auto core = essential_core(f).function;
  if (core.arity() > kMaxAssocArity) {
    throw Error("essential arity too large for the associativity check");
  }
  return !is_associative(core).has_value();
}

BooleanFunction iterate(const BooleanFunction& f, int k) {
  if (k < 0) throw Error("iteration count must be non-negative");
  const int n = f.arity();
  if (k == 0) {
    const std::vector<int> diag(n, 1);
    return substitute(f, diag, 1);
  }
  const long arity = static_cast<long>(k) * (n - 1) + 1;
  if (arity > kMaxArity) throw Error("iterate: resulting arity exceeds " + std::to_string(kMaxArity));
  BooleanFunction cur = f;
  for (int step = 2; step <= k; ++step) {
    const int a = step * (n - 1) + 1;
    const int keep = (step - 1) * (n - 1);
    std::vector<BooleanFunction> args = projections_of(a, 1, keep);
    std::vector<int> tail(n);
    std::iota(tail.begin(), tail.end(), keep + 1);
    args.push_back(substitute(f, tail, a));
    cur = compose(cur, args);
  }
  return cur;
}

StrictExtension strict_extension_witness(const BooleanFunction& f, const SearchOptions& opts) {
  if (essential_arity(f) < 2) throw Error("strict extension needs essential arity >= 2");
  const int n = f.arity();
  if (n + 2 > kMaxArity) throw Error("strict extension would exceed the arity cap");
  const auto wide = widen(f, n + 2);
  const auto fp = projection(n + 2, n + 1) ^ projection(n + 2, n + 2) ^ wide;
  std::vector<int> ident(n + 2);
  std::iota(ident.begin(), ident.end(), 1);
  ident[n + 1] = n + 1;  // y -> x
  const bool recovers = substitute(fp, ident, n + 1) == widen(f, n + 1);
  const auto below = minor_leq(fp, f, opts).verdict;
  const Verdict not_below = below == Verdict::Holds   ? Verdict::Fails
                            : below == Verdict::Fails ? Verdict::Holds
                                                      : Verdict::Inconclusive;
  return {fp, not_below, recovers};
}

ArityGrowth arity_growth_witness(const BooleanFunction& f) {
  const int n = f.arity();
  if (n < 2) throw Error("arity growth needs arity >= 2");
  const auto g = nesting(f, n);
  const int ess = essential_arity(g);
  return {g, ess, ess == 2 * n - 1};
}

}  // namespace eqclass
