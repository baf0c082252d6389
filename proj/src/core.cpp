#include "eqclass/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#ifdef EQCLASS_HAVE_OPENMP
#include <omp.h>
#endif

namespace eqclass {
namespace {

// kVarMask[v] has bit p set iff variable v+1 is 1 at point p (p < 64).
constexpr std::uint64_t kVarMask[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

std::size_t word_count(int arity) {
  return arity <= 6 ? 1 : (std::size_t{1} << (arity - 6));
}

std::uint64_t tail_mask(int arity) {
  return arity >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1u << arity)) - 1);
}

void check_arity(int arity) {
  if (arity < 1 || arity > kMaxArity) {
    throw Error("arity " + std::to_string(arity) + " outside [1, " +
                std::to_string(kMaxArity) + "]");
  }
}

void check_same_arity(const BooleanFunction& a, const BooleanFunction& b) {
  if (a.arity() != b.arity()) throw Error("arity mismatch in bitwise operation");
}

}  // namespace

BooleanFunction::BooleanFunction(int arity) : arity_(arity) {
  check_arity(arity);
  words_.assign(word_count(arity), 0);
}

BooleanFunction BooleanFunction::constant(int arity, bool value) {
  BooleanFunction f(arity);
  if (value) {
    std::fill(f.words_.begin(), f.words_.end(), ~std::uint64_t{0});
    f.mask_tail();
  }
  return f;
}

BooleanFunction BooleanFunction::from_words(int arity, std::vector<std::uint64_t> words) {
  BooleanFunction f(arity);
  if (words.size() != f.words_.size()) throw Error("word count does not match arity");
  f.words_ = std::move(words);
  if (arity < 6 && (f.words_[0] & ~tail_mask(arity)) != 0) {
    throw Error("table has bits beyond 2^arity");
  }
  return f;
}

void BooleanFunction::mask_tail() { words_[0] &= arity_ < 6 ? tail_mask(arity_) : ~0ull; }

std::uint64_t BooleanFunction::count_ones() const {
  std::uint64_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool BooleanFunction::is_constant() const {
  const auto ones = count_ones();
  return ones == 0 || ones == size();
}

BooleanFunction BooleanFunction::operator~() const {
  BooleanFunction r(*this);
  for (auto& w : r.words_) w = ~w;
  r.mask_tail();
  return r;
}

BooleanFunction BooleanFunction::operator&(const BooleanFunction& o) const {
  check_same_arity(*this, o);
  BooleanFunction r(*this);
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

BooleanFunction BooleanFunction::operator|(const BooleanFunction& o) const {
  check_same_arity(*this, o);
  BooleanFunction r(*this);
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

BooleanFunction BooleanFunction::operator^(const BooleanFunction& o) const {
  check_same_arity(*this, o);
  BooleanFunction r(*this);
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] ^= o.words_[i];
  return r;
}

std::strong_ordering operator<=>(const BooleanFunction& a, const BooleanFunction& b) {
  if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t BooleanFunction::hash() const {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(arity_);
  for (auto w : words_) {
    h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Point::Point(int a, std::uint32_t b) : arity(a), bits(b) {
  check_arity(a);
  if (a < 32 && (b >> a) != 0) throw Error("point bits exceed arity");
}

Point Point::from_coordinates(std::span<const int> coords) {
  std::uint32_t bits = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] != 0 && coords[j] != 1) throw Error("coordinates must be 0 or 1");
    bits |= static_cast<std::uint32_t>(coords[j]) << j;
  }
  return Point(static_cast<int>(coords.size()), bits);
}

int Polynomial::degree() const {
  int d = -1;
  for (auto m : monomials) d = std::max(d, std::popcount(m));
  return d;
}

BooleanFunction projection(int arity, int index) {
  check_arity(arity);
  if (index < 1 || index > arity) throw Error("projection index out of range");
  TableWriter w(arity);
  auto words = w.words();
  const int v = index - 1;
  if (v < 6) {
    for (auto& word : words) word = kVarMask[v];
  } else {
    for (std::size_t j = 0; j < words.size(); ++j) {
      words[j] = ((j >> (v - 6)) & 1) ? ~std::uint64_t{0} : 0;
    }
  }
  return std::move(w).finish();
}

BooleanFunction widen(const BooleanFunction& f, int new_arity) {
  check_arity(new_arity);
  if (new_arity < f.arity()) throw Error("widen cannot reduce arity");
  if (new_arity == f.arity()) return f;
  const std::uint64_t low = f.size();
  return BooleanFunction::from_predicate(
      new_arity, [&](std::uint32_t p) { return f.bit(static_cast<std::uint32_t>(p & (low - 1))); });
}

bool eval(const BooleanFunction& f, const Point& p) {
  if (p.arity != f.arity()) throw Error("point arity does not match function arity");
  return f.bit(p.bits);
}

namespace {

void check_compose_shape(const BooleanFunction& f, std::span<const BooleanFunction> gs) {
  if (static_cast<int>(gs.size()) != f.arity()) {
    throw Error("compose: expected " + std::to_string(f.arity()) + " inner functions, got " +
                std::to_string(gs.size()));
  }
  for (const auto& g : gs) {
    if (g.arity() != gs[0].arity()) throw Error("compose: inner functions differ in arity");
  }
}

// Fills output word `w` (points 64w .. 64w+63, clipped to the table size).
std::uint64_t compose_word(const BooleanFunction& f, std::span<const BooleanFunction> gs,
                           std::size_t w, std::uint64_t points) {
  std::uint32_t idx[64] = {};
  const std::uint64_t limit = std::min<std::uint64_t>(64, points);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const std::uint64_t gw = gs[i].words()[w];
    for (std::uint64_t b = 0; b < limit; ++b) {
      idx[b] |= static_cast<std::uint32_t>((gw >> b) & 1u) << i;
    }
  }
  std::uint64_t out = 0;
  for (std::uint64_t b = 0; b < limit; ++b) {
    out |= static_cast<std::uint64_t>(f.bit(idx[b])) << b;
  }
  return out;
}

}  // namespace

BooleanFunction compose(const BooleanFunction& f, std::span<const BooleanFunction> gs) {
  check_compose_shape(f, gs);
  const int m = gs[0].arity();
  TableWriter out(m);
  auto words = out.words();
  const std::uint64_t points = std::uint64_t{1} << m;
  const auto nwords = static_cast<std::int64_t>(words.size());
#ifdef EQCLASS_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (nwords >= 256)
#endif
  for (std::int64_t w = 0; w < nwords; ++w) {
    words[w] = compose_word(f, gs, static_cast<std::size_t>(w), points);
  }
  return std::move(out).finish();
}

BooleanFunction compose_serial(const BooleanFunction& f, std::span<const BooleanFunction> gs) {
  check_compose_shape(f, gs);
  const int m = gs[0].arity();
  return BooleanFunction::from_predicate(m, [&](std::uint32_t a) {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      idx |= static_cast<std::uint32_t>(gs[i].bit(a)) << i;
    }
    return f.bit(idx);
  });
}

BooleanFunction substitute(const BooleanFunction& f, std::span<const int> sigma, int m) {
  if (static_cast<int>(sigma.size()) != f.arity()) {
    throw Error("substitution length does not match arity");
  }
  for (int s : sigma) {
    if (s < 1 || s > m) throw Error("substitution target out of range");
  }
  return BooleanFunction::from_predicate(m, [&](std::uint32_t a) {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      idx |= ((a >> (sigma[i] - 1)) & 1u) << i;
    }
    return f.bit(idx);
  });
}

BooleanFunction flip_variable(const BooleanFunction& f, int index) {
  if (index < 1 || index > f.arity()) throw Error("variable index out of range");
  const int v = index - 1;
  std::vector<std::uint64_t> words(f.words().begin(), f.words().end());
  if (v < 6) {
    const unsigned s = 1u << v;
    const std::uint64_t m = kVarMask[v];
    for (auto& w : words) w = ((w & m) >> s) | ((w & ~m) << s);
  } else {
    const std::size_t bit = std::size_t{1} << (v - 6);
    for (std::size_t j = 0; j < words.size(); ++j) {
      if ((j & bit) == 0) std::swap(words[j], words[j | bit]);
    }
  }
  return BooleanFunction::from_words(f.arity(), std::move(words));
}

bool is_essential(const BooleanFunction& f, int index) {
  if (index < 1 || index > f.arity()) throw Error("variable index out of range");
  const int v = index - 1;
  const auto words = f.words();
  if (v < 6) {
    const unsigned s = 1u << v;
    const std::uint64_t m = kVarMask[v];
    for (auto w : words) {
      if ((((w & m) >> s) ^ w) & ~m) return true;
    }
    return false;
  }
  const std::size_t bit = std::size_t{1} << (v - 6);
  for (std::size_t j = 0; j < words.size(); ++j) {
    if ((j & bit) == 0 && words[j] != words[j | bit]) return true;
  }
  return false;
}

std::vector<int> essential_indices(const BooleanFunction& f) {
  std::vector<int> out;
  for (int i = 1; i <= f.arity(); ++i) {
    if (is_essential(f, i)) out.push_back(i);
  }
  return out;
}

int essential_arity(const BooleanFunction& f) {
  int k = 0;
  for (int i = 1; i <= f.arity(); ++i) k += is_essential(f, i);
  return k;
}

EssentialCore essential_core(const BooleanFunction& f) {
  auto ess = essential_indices(f);
  if (ess.empty()) return {BooleanFunction::constant(1, f.bit(0)), {}};
  if (static_cast<int>(ess.size()) == f.arity()) return {f, std::move(ess)};
  const int k = static_cast<int>(ess.size());
  auto g = BooleanFunction::from_predicate(k, [&](std::uint32_t b) {
    std::uint32_t a = 0;
    for (int j = 0; j < k; ++j) a |= ((b >> j) & 1u) << (ess[j] - 1);
    return f.bit(a);
  });
  return {std::move(g), std::move(ess)};
}

BooleanFunction complement(const BooleanFunction& f) { return ~f; }

BooleanFunction dual(const BooleanFunction& f) {
  // Reversing the point index flips every coordinate.
  const std::uint32_t top = static_cast<std::uint32_t>(f.size() - 1);
  return BooleanFunction::from_predicate(f.arity(),
                                         [&](std::uint32_t p) { return !f.bit(top ^ p); });
}

BooleanFunction underline(const BooleanFunction& f) { return complement(dual(f)); }

void moebius_transform(std::span<std::uint64_t> words, int arity) {
  for (int v = 0; v < arity; ++v) {
    if (v < 6) {
      const unsigned s = 1u << v;
      for (auto& w : words) w ^= (w << s) & kVarMask[v];
    } else {
      const std::size_t bit = std::size_t{1} << (v - 6);
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (j & bit) words[j] ^= words[j ^ bit];
      }
    }
  }
  if (arity < 6) words[0] &= tail_mask(arity);
}

namespace {

bool monomial_less(std::uint32_t a, std::uint32_t b) {
  const int da = std::popcount(a), db = std::popcount(b);
  if (da != db) return da < db;
  // Same degree: compare ascending index lists lexicographically.
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace

Polynomial zhegalkin(const BooleanFunction& f) {
  std::vector<std::uint64_t> words(f.words().begin(), f.words().end());
  moebius_transform(words, f.arity());
  Polynomial p;
  p.arity = f.arity();
  for (std::size_t j = 0; j < words.size(); ++j) {
    for (std::uint64_t w = words[j]; w != 0; w &= w - 1) {
      p.monomials.push_back(static_cast<std::uint32_t>((j << 6) | std::countr_zero(w)));
    }
  }
  std::sort(p.monomials.begin(), p.monomials.end(), monomial_less);
  return p;
}

BooleanFunction from_zhegalkin(const Polynomial& p) {
  TableWriter w(p.arity);
  for (auto m : p.monomials) {
    if (p.arity < 32 && (m >> p.arity) != 0) throw Error("monomial mentions variable beyond arity");
    w.words()[m >> 6] ^= std::uint64_t{1} << (m & 63);
  }
  auto words = w.words();
  moebius_transform(words, p.arity);
  return std::move(w).finish();
}

bool is_idempotent_fn(const BooleanFunction& f) { return !f.at_zero() && f.at_one(); }

bool is_monotone(const BooleanFunction& f) {
  // f is monotone iff f <= f with any single coordinate raised.
  for (int i = 1; i <= f.arity(); ++i) {
    const auto up = flip_variable(f, i);
    const int v = i - 1;
    const auto fw = f.words();
    const auto uw = up.words();
    for (std::size_t j = 0; j < fw.size(); ++j) {
      std::uint64_t low_half;
      if (v < 6) {
        low_half = ~kVarMask[v];
      } else {
        low_half = ((j >> (v - 6)) & 1) ? 0 : ~std::uint64_t{0};
      }
      // At points with x_i = 0, `up` holds the value with x_i raised to 1.
      if (fw[j] & ~uw[j] & low_half) return false;
    }
  }
  return true;
}

}  // namespace eqclass
