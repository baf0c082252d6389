#include "eqclass/monoid.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#ifdef EQCLASS_HAVE_OPENMP
#include <omp.h>
#endif

namespace eqclass {
namespace {

void check_cap(int cap) {
  if (cap < 1 || cap > kMaxCap) {
    throw Error("cap " + std::to_string(cap) + " outside [1, " + std::to_string(kMaxCap) + "]");
  }
}

void check_shared_cap(const CappedClass& a, const CappedClass& b) {
  if (a.cap() != b.cap()) throw Error("classes have different caps");
}

// Calls visit(sigma) for every map [n] -> [m], sigma 1-based.
template <class Visit>
void for_each_map(int n, int m, Visit&& visit) {
  std::vector<int> sigma(n, 1);
  while (true) {
    visit(std::span<const int>(sigma));
    int i = 0;
    while (i < n && sigma[i] == m) sigma[i++] = 1;
    if (i == n) return;
    ++sigma[i];
  }
}

// f(g_1, ..., g_n) on raw word tables of arity m <= kMaxCap (at most 4 words).
struct WordTable {
  std::uint64_t w[4];
};

std::uint64_t arity_mask(int m) {
  return m >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1u << m)) - 1);
}

WordTable compose_words(const BooleanFunction& f, const WordTable* const* gs, int nwords,
                        std::uint64_t mask) {
  WordTable out{};
  const int n = f.arity();
  const auto points = static_cast<std::uint32_t>(f.size());
  for (int k = 0; k < nwords; ++k) {
    std::uint64_t acc = 0;
    for (std::uint32_t p = 0; p < points; ++p) {
      if (!f.bit(p)) continue;
      std::uint64_t term = mask;
      for (int i = 0; i < n && term; ++i) {
        const std::uint64_t g = gs[i]->w[k];
        term &= ((p >> i) & 1u) ? g : ~g;
      }
      acc |= term;
    }
    out.w[k] = acc & mask;
  }
  return out;
}

BooleanFunction to_function(int m, const WordTable& t) {
  const std::size_t nwords = m <= 6 ? 1 : (std::size_t{1} << (m - 6));
  return BooleanFunction::from_words(m, std::vector<std::uint64_t>(t.w, t.w + nwords));
}

// Deduplicates composites of one arity: a bitmap over all tables when m <= 4,
// an ordered set above that.
class Sink {
 public:
  explicit Sink(int m) : m_(m) {
    if (m <= 4) bits_.assign(std::max<std::size_t>(1, (std::size_t{1} << (1u << m)) / 64), 0);
  }
  void add(const WordTable& t) {
    if (bits_.empty()) {
      set_.insert(to_function(m_, t));
    } else {
      bits_[t.w[0] >> 6] |= std::uint64_t{1} << (t.w[0] & 63);
    }
  }
  void drain_into(std::set<BooleanFunction>& out) {
    for (std::size_t k = 0; k < bits_.size(); ++k) {
      for (std::uint64_t b = bits_[k]; b; b &= b - 1) {
        const std::uint64_t v = k * 64 + static_cast<std::uint64_t>(std::countr_zero(b));
        out.insert(BooleanFunction::from_words(m_, {v}));
      }
    }
    out.merge(set_);
  }

 private:
  int m_;
  std::vector<std::uint64_t> bits_;
  std::set<BooleanFunction> set_;
};

}  // namespace

CappedClass::CappedClass(int cap) : cap_(cap) {
  check_cap(cap);
  by_arity_.resize(cap + 1);
}

void CappedClass::insert(const BooleanFunction& f) {
  if (f.arity() > cap_) throw Error("member arity exceeds cap");
  by_arity_[f.arity()].insert(f);
}

CappedClass CappedClass::closure_of(std::span<const BooleanFunction> members, int cap) {
  return closure(members, cap);
}

CappedClass CappedClass::unchecked_for_testing(std::span<const BooleanFunction> members,
                                               int cap) {
  CappedClass k(cap);
  for (const auto& f : members) k.insert(f);
  return k;
}

const std::set<BooleanFunction>& CappedClass::at_arity(int arity) const {
  if (arity < 1 || arity > cap_) throw Error("arity outside the class cap");
  return by_arity_[arity];
}

bool CappedClass::contains(const BooleanFunction& f) const {
  return f.arity() <= cap_ && by_arity_[f.arity()].count(f) > 0;
}

std::size_t CappedClass::size() const {
  std::size_t n = 0;
  for (const auto& s : by_arity_) n += s.size();
  return n;
}

std::vector<BooleanFunction> CappedClass::members() const {
  std::vector<BooleanFunction> out;
  for (const auto& s : by_arity_) out.insert(out.end(), s.begin(), s.end());
  return out;
}

bool CappedClass::is_closed() const {
  for (const auto& s : by_arity_) {
    for (const auto& f : s) {
      for (const auto& g : minors_up_to(f, cap_)) {
        if (!contains(g)) return false;
      }
    }
  }
  return true;
}

bool CappedClass::is_subset_of(const CappedClass& other) const {
  check_shared_cap(*this, other);
  for (int a = 1; a <= cap_; ++a) {
    const auto& mine = by_arity_[a];
    const auto& theirs = other.by_arity_[a];
    if (!std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end())) return false;
  }
  return true;
}

std::vector<BooleanFunction> minors_up_to(const BooleanFunction& f, int cap) {
  check_cap(cap);
  std::set<BooleanFunction> seen;
  for (int m = 1; m <= cap; ++m) {
    for_each_map(f.arity(), m, [&](std::span<const int> sigma) {
      seen.insert(substitute(f, sigma, m));
    });
  }
  return {seen.begin(), seen.end()};
}

CappedClass closure(std::span<const BooleanFunction> generators, int cap) {
  check_cap(cap);
  std::vector<BooleanFunction> all;
  for (const auto& g : generators) {
    if (g.arity() > cap) {
      throw Error("generator of arity " + std::to_string(g.arity()) + " exceeds cap " +
                  std::to_string(cap));
    }
    auto ms = minors_up_to(g, cap);
    all.insert(all.end(), ms.begin(), ms.end());
  }
  return CappedClass::unchecked_for_testing(all, cap);
}

CappedClass random_capped_class(std::mt19937_64& rng, int cap, int max_generators,
                                int max_arity) {
  check_cap(cap);
  std::uniform_int_distribution<int> count(1, std::max(1, max_generators));
  std::uniform_int_distribution<int> arity(1, std::clamp(max_arity, 1, std::min(cap, 6)));
  std::vector<BooleanFunction> gens;
  for (int k = count(rng); k > 0; --k) {
    const int a = arity(rng);
    const std::uint64_t mask = a == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << a)) - 1;
    gens.push_back(BooleanFunction::from_words(a, {rng() & mask}));
  }
  return closure(gens, cap);
}

CappedClass projections(int cap) {
  const BooleanFunction x1 = projection(1, 1);
  return closure(std::span<const BooleanFunction>(&x1, 1), cap);
}

CappedClass compose_classes(const CappedClass& left, const CappedClass& right) {
  check_shared_cap(left, right);
  const int cap = left.cap();
  CappedClass out(cap);
  for (int m = 1; m <= cap; ++m) {
    const auto& inner_set = right.at_arity(m);
    if (inner_set.empty()) continue;
    std::vector<WordTable> inner;
    inner.reserve(inner_set.size());
    for (const auto& g : inner_set) {
      WordTable t{};
      std::copy(g.words().begin(), g.words().end(), t.w);
      inner.push_back(t);
    }
    const int nwords = m <= 6 ? 1 : 1 << (m - 6);
    const std::uint64_t mask = arity_mask(m);
    const auto count = static_cast<std::int64_t>(inner.size());

    for (int n = 1; n <= cap; ++n) {
      for (const auto& f : left.at_arity(n)) {
        // Tuples are enumerated with the first coordinate as the parallel axis.
#ifdef EQCLASS_HAVE_OPENMP
        std::vector<Sink> partial(omp_get_max_threads(), Sink(m));
#pragma omp parallel for schedule(dynamic) if (count >= 16 && n >= 2)
#else
        std::vector<Sink> partial(1, Sink(m));
#endif
        for (std::int64_t first = 0; first < count; ++first) {
#ifdef EQCLASS_HAVE_OPENMP
          auto& local = partial[omp_get_thread_num()];
#else
          auto& local = partial[0];
#endif
          std::vector<std::int64_t> idx(n, 0);
          idx[0] = first;
          std::vector<const WordTable*> gs(n);
          while (true) {
            for (int i = 0; i < n; ++i) gs[i] = &inner[idx[i]];
            local.add(compose_words(f, gs.data(), nwords, mask));
            int i = 1;
            while (i < n && idx[i] == count - 1) idx[i++] = 0;
            if (i >= n) break;
            ++idx[i];
          }
        }
        for (auto& s : partial) s.drain_into(out.by_arity_[m]);
      }
    }
  }
  return out;
}

CappedClass compose_classes_serial(const CappedClass& left, const CappedClass& right) {
  check_shared_cap(left, right);
  const int cap = left.cap();
  CappedClass out(cap);
  for (int m = 1; m <= cap; ++m) {
    const std::vector<BooleanFunction> inner(right.at_arity(m).begin(), right.at_arity(m).end());
    if (inner.empty()) continue;
    for (int n = 1; n <= cap; ++n) {
      for (const auto& f : left.at_arity(n)) {
        std::vector<std::size_t> idx(n, 0);
        std::vector<BooleanFunction> gs(n, inner[0]);
        while (true) {
          for (int i = 0; i < n; ++i) gs[i] = inner[idx[i]];
          out.insert(compose_serial(f, gs));
          int i = 0;
          while (i < n && idx[i] == inner.size() - 1) idx[i++] = 0;
          if (i == n) break;
          ++idx[i];
        }
      }
    }
  }
  return out;
}

CappedClass class_union(const CappedClass& a, const CappedClass& b) {
  check_shared_cap(a, b);
  CappedClass out = a;
  for (int k = 1; k <= a.cap(); ++k) {
    out.by_arity_[k].insert(b.by_arity_[k].begin(), b.by_arity_[k].end());
  }
  return out;
}

CappedClass class_intersection(const CappedClass& a, const CappedClass& b) {
  check_shared_cap(a, b);
  CappedClass out(a.cap());
  for (int k = 1; k <= a.cap(); ++k) {
    std::set_intersection(a.by_arity_[k].begin(), a.by_arity_[k].end(), b.by_arity_[k].begin(),
                          b.by_arity_[k].end(),
                          std::inserter(out.by_arity_[k], out.by_arity_[k].end()));
  }
  return out;
}

CappedClass map_members(const CappedClass& k, BooleanFunction (*fn)(const BooleanFunction&)) {
  CappedClass out(k.cap());
  for (const auto& f : k.members()) out.insert(fn(f));
  return out;
}

bool is_idempotent_at_cap(const CappedClass& k) { return compose_classes(k, k) == k; }

AssocLemmaResult assoc_lemma_check(const CappedClass& i, const CappedClass& j,
                                   const CappedClass& k) {
  check_shared_cap(i, j);
  check_shared_cap(j, k);
  const CappedClass lhs = compose_classes(compose_classes(i, j), k);
  const CappedClass rhs = compose_classes(i, compose_classes(j, k));
  return {lhs.is_subset_of(rhs), lhs == rhs, j.is_closed()};
}

}  // namespace eqclass
