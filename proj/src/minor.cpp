#include "eqclass/minor.hpp"

#include <algorithm>
#include <numeric>

#ifdef EQCLASS_HAVE_OPENMP
#include <omp.h>
#endif

namespace eqclass {
namespace {

constexpr std::uint8_t kMixed = 2;

bool symmetric_positions(const BooleanFunction& f, int i, int j) {
  const std::uint32_t bi = 1u << i, bj = 1u << j;
  const auto n = static_cast<std::uint32_t>(f.size());
  for (std::uint32_t p = 0; p < n; ++p) {
    if ((p & bi) && !(p & bj)) {
      if (f.bit(p) != f.bit((p ^ bi) | bj)) return false;
    }
  }
  return true;
}

// Backtracking search for sigma with G = F o sigma, both functions being
// essential cores (or 1-ary constants).
class MinorSearch {
 public:
  MinorSearch(const BooleanFunction& g, const BooleanFunction& f, const SearchOptions& opts)
      : g_(g), f_(f), n_(f.arity()), m_(g.arity()), opts_(opts) {
    build_prefix_levels();
    build_blocks();
    cache_size_ = std::max(0, opts.point_cache);
    cache_.reserve(cache_size_);
    prefix_.assign(n_ + 1, std::vector<std::uint32_t>(cache_size_, 0));
    sigma_.assign(n_, 0);
    used_.assign(m_, 0);
  }

  Verdict run() {
    if (m_ > n_) return Verdict::Fails;
    const int r = dfs(0);
    if (r == 1) return Verdict::Holds;
    return exhausted_ ? Verdict::Inconclusive : Verdict::Fails;
  }

  const std::vector<int>& sigma() const { return sigma_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // levels_[k][b] says whether F is constant 0, constant 1 or mixed over all
  // points whose first k coordinates are b.
  void build_prefix_levels() {
    levels_.resize(n_ + 1);
    levels_[n_].resize(f_.size());
    for (std::uint32_t p = 0; p < f_.size(); ++p) levels_[n_][p] = f_.bit(p);
    for (int k = n_ - 1; k >= 0; --k) {
      levels_[k].resize(std::size_t{1} << k);
      for (std::uint32_t b = 0; b < levels_[k].size(); ++b) {
        const auto lo = levels_[k + 1][b];
        const auto hi = levels_[k + 1][b | (1u << k)];
        levels_[k][b] = lo == hi ? lo : kMixed;
      }
    }
  }

  void build_blocks() {
    std::vector<int> block(n_, -1);
    prev_in_block_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) {
      if (block[i] >= 0) continue;
      block[i] = i;
      int last = i;
      for (int j = i + 1; j < n_; ++j) {
        if (block[j] < 0 && symmetric_positions(f_, i, j)) {
          block[j] = i;
          prev_in_block_[j] = last;
          last = j;
        }
      }
    }
  }

  std::uint32_t bit_for(std::uint32_t point, int value) const { return (point >> value) & 1u; }

  void add_counterexample(std::uint32_t point) {
    if (cache_size_ == 0) return;
    std::size_t slot;
    if (static_cast<int>(cache_.size()) < cache_size_) {
      slot = cache_.size();
      cache_.push_back(point);
    } else {
      slot = next_slot_;
      next_slot_ = (next_slot_ + 1) % cache_size_;
      cache_[slot] = point;
    }
    for (int d = 1; d <= n_; ++d) {
      prefix_[d][slot] = prefix_[d - 1][slot] | (bit_for(point, sigma_[d - 1]) << (d - 1));
    }
  }

  // Cached points refute the partial assignment of positions [0, depth).
  bool refuted(int depth) {
    const auto& level = levels_[depth];
    for (std::size_t s = 0; s < cache_.size(); ++s) {
      prefix_[depth][s] =
          prefix_[depth - 1][s] | (bit_for(cache_[s], sigma_[depth - 1]) << (depth - 1));
      const auto code = level[prefix_[depth][s]];
      if (code != kMixed && code != g_.bit(cache_[s])) return true;
    }
    return false;
  }

  bool full_check() {
    const auto points = static_cast<std::uint32_t>(g_.size());
    for (std::uint32_t a = 0; a < points; ++a) {
      std::uint32_t idx = 0;
      for (int i = 0; i < n_; ++i) idx |= bit_for(a, sigma_[i]) << i;
      if (f_.bit(idx) != g_.bit(a)) {
        add_counterexample(a);
        return false;
      }
    }
    return true;
  }

  // 1 found, 0 exhausted this subtree, -1 budget hit.
  int dfs(int pos) {
    if (pos == n_) return full_check() ? 1 : 0;
    const int lo = prev_in_block_[pos] >= 0 ? sigma_[prev_in_block_[pos]] : 0;
    for (int v = lo; v < m_; ++v) {
      if (++nodes_ > opts_.budget) {
        exhausted_ = true;
        return -1;
      }
      sigma_[pos] = v;
      if (used_[v]++ == 0) ++distinct_;
      const bool coverable = n_ - pos - 1 >= m_ - distinct_;
      int r = 0;
      if (coverable && !refuted(pos + 1)) r = dfs(pos + 1);
      if (--used_[v] == 0) --distinct_;
      if (r != 0) return r;
    }
    return 0;
  }

  const BooleanFunction& g_;
  const BooleanFunction& f_;
  int n_, m_;
  SearchOptions opts_;
  std::vector<std::vector<std::uint8_t>> levels_;
  std::vector<int> prev_in_block_;
  int cache_size_ = 0;
  std::vector<std::uint32_t> cache_;
  std::size_t next_slot_ = 0;
  std::vector<std::vector<std::uint32_t>> prefix_;  // [depth][cache slot]
  std::vector<int> sigma_;
  std::vector<int> used_;
  int distinct_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

PairResult compare_pair(const std::vector<BooleanFunction>& fs, std::size_t i, std::size_t j,
                        const SearchOptions& opts) {
  auto r = minor_leq(fs[i], fs[j], opts);
  return {i, j, r.verdict, std::move(r.witness), r.nodes};
}

AntichainReport summarize(std::size_t count, std::vector<PairResult> pairs) {
  AntichainReport rep;
  rep.count = count;
  bool inconclusive = false;
  for (const auto& p : pairs) {
    rep.total_nodes += p.nodes;
    if (p.verdict == Verdict::Holds && !rep.violation) rep.violation = p;
    if (p.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  rep.verdict = rep.violation ? Verdict::Fails
                : inconclusive ? Verdict::Inconclusive
                               : Verdict::Holds;
  rep.pairs = std::move(pairs);
  return rep;
}

std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(std::size_t n) {
  if (n < 2) throw Error("antichain check needs at least two functions");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

MinorResult minor_leq(const BooleanFunction& g, const BooleanFunction& f,
                      const SearchOptions& opts) {
  const auto gc = essential_core(g);
  const auto fc = essential_core(f);
  MinorSearch search(gc.function, fc.function, opts);
  MinorResult out;
  out.verdict = search.run();
  out.nodes = search.nodes();
  if (out.verdict == Verdict::Holds) {
    Substitution sigma(f.arity(), 1);
    const auto& core_sigma = search.sigma();
    for (std::size_t k = 0; k < fc.index_map.size(); ++k) {
      sigma[fc.index_map[k] - 1] = gc.index_map.empty() ? 1 : gc.index_map[core_sigma[k]];
    }
    out.witness = std::move(sigma);
  }
  return out;
}

bool replays(const BooleanFunction& g, const BooleanFunction& f, const Substitution& sigma) {
  if (static_cast<int>(sigma.size()) != f.arity()) return false;
  for (int s : sigma) {
    if (s < 1 || s > g.arity()) return false;
  }
  return substitute(f, sigma, g.arity()) == g;
}

Verdict equivalent(const BooleanFunction& g, const BooleanFunction& f, const SearchOptions& opts) {
  const auto a = minor_leq(g, f, opts).verdict;
  if (a == Verdict::Fails) return Verdict::Fails;
  const auto b = minor_leq(f, g, opts).verdict;
  if (b == Verdict::Fails) return Verdict::Fails;
  return a == Verdict::Holds && b == Verdict::Holds ? Verdict::Holds : Verdict::Inconclusive;
}

BooleanFunction canonical_key(const BooleanFunction& f) {
  const auto core = essential_core(f).function;
  const int k = core.arity();
  if (k > kMaxCanonicalArity) {
    throw Error("essential arity " + std::to_string(k) + " too large for a canonical key (max " +
                std::to_string(kMaxCanonicalArity) + ")");
  }
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  BooleanFunction best = core;
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto candidate = substitute(core, perm, k);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

AntichainReport verify_antichain(const std::vector<BooleanFunction>& fs,
                                 const SearchOptions& opts) {
  const auto idx = ordered_pairs(fs.size());
  std::vector<PairResult> pairs(idx.size());
  const auto count = static_cast<std::int64_t>(idx.size());
#ifdef EQCLASS_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t k = 0; k < count; ++k) {
    pairs[k] = compare_pair(fs, idx[k].first, idx[k].second, opts);
  }
  return summarize(fs.size(), std::move(pairs));
}

AntichainReport verify_antichain_serial(const std::vector<BooleanFunction>& fs,
                                        const SearchOptions& opts) {
  std::vector<PairResult> pairs;
  for (auto [i, j] : ordered_pairs(fs.size())) pairs.push_back(compare_pair(fs, i, j, opts));
  return summarize(fs.size(), std::move(pairs));
}

MinimalElements minimal_elements(const std::vector<BooleanFunction>& fs,
                                 const SearchOptions& opts) {
  MinimalElements out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < fs.size() && minimal; ++j) {
      if (i == j) continue;
      const auto below = minor_leq(fs[j], fs[i], opts).verdict;
      if (below == Verdict::Fails) continue;
      const auto above = minor_leq(fs[i], fs[j], opts).verdict;
      if (below == Verdict::Holds && above == Verdict::Fails) {
        minimal = false;
      } else if (below == Verdict::Inconclusive || above == Verdict::Inconclusive) {
        out.inconclusive = true;
      }
    }
    if (minimal) out.indices.push_back(i);
  }
  return out;
}

}  // namespace eqclass
