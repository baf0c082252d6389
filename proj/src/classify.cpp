#include "eqclass/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "eqclass/assoc.hpp"
#include "eqclass/minor.hpp"
#include "eqclass/monoid.hpp"

namespace eqclass {
namespace {

int param_of(ClassId c) { return c.parameterized() && c.m != kInf ? c.m : 0; }

ClassId cls(Tag t, int m = 0) { return make_class(t, m); }

bool is_quasi_monadic_tag(Tag t) { return t <= Tag::Omega1; }

// C cap Mc and C cap M for the classes C quantified in the countability test.
struct Bullet4Option {
  ClassId c, with_mc, with_m;
};

std::vector<Bullet4Option> bullet4_options(int max_m) {
  std::vector<Bullet4Option> out;
  out.push_back({cls(Tag::Omega), cls(Tag::Mc), cls(Tag::M)});
  std::vector<int> ms;
  for (int m = 2; m <= max_m; ++m) ms.push_back(m);
  ms.push_back(kInf);
  for (int m : ms) {
    out.push_back({cls(Tag::U, m), cls(Tag::McU, m), cls(Tag::MU, m)});
    out.push_back({cls(Tag::W, m), cls(Tag::McW, m), cls(Tag::MW, m)});
  }
  return out;
}

std::size_t capped_monadic_count(ClassId c1, ClassId c2) {
  const unsigned lo = monadic_types(c1), hi = monadic_types(c2);
  std::size_t count = 0;
  for (const auto& mc : quasi_monadic_lattice(2)) {
    if ((mc.generator_mask & lo) == lo && (mc.generator_mask & ~hi) == 0) ++count;
  }
  return count;
}

const std::vector<MinimalInterval>& cached_table(int max_param) {
  static std::mutex mu;
  static std::map<int, std::vector<MinimalInterval>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(max_param);
  if (it == cache.end()) it = cache.emplace(max_param, minimal_interval_table(max_param)).first;
  return it->second;
}

}  // namespace

std::string to_string(IntervalVerdict::Kind k) {
  switch (k) {
    case IntervalVerdict::Empty: return "empty";
    case IntervalVerdict::Finite: return "finite";
    case IntervalVerdict::CountablyInfinite: return "countably-infinite";
    case IntervalVerdict::Uncountable: return "uncountable";
  }
  return "?";
}

ClassId nonmonadic_part(ClassId c) {
  switch (c.tag) {
    case Tag::Lambda: case Tag::Lambda0: case Tag::Lambda1: case Tag::LambdaC:
      return cls(Tag::LambdaC);
    case Tag::V: case Tag::V0: case Tag::V1: case Tag::Vc:
      return cls(Tag::Vc);
    case Tag::M: case Tag::M0: case Tag::M1: case Tag::Mc:
      return cls(Tag::Mc);
    case Tag::MU: case Tag::McU:
      return cls(Tag::McU, c.m);
    case Tag::MW: case Tag::McW:
      return cls(Tag::McW, c.m);
    default:
      return is_quasi_monadic_tag(c.tag) ? cls(Tag::Empty) : c;
  }
}

unsigned monadic_types(ClassId c) {
  const BooleanFunction types[] = {projection(1, 1), ~projection(1, 1),
                                   BooleanFunction::constant(1, false),
                                   BooleanFunction::constant(1, true)};
  unsigned mask = 0;
  for (unsigned b = 0; b < 4; ++b) {
    if (member(types[b], c)) mask |= 1u << b;
  }
  return mask;
}

IntervalVerdict classify_interval(ClassId c1, ClassId c2) {
  IntervalVerdict v;
  if (!is_subclass(c1, c2)) {
    v.justification = "empty";
    return v;
  }

  if (is_subclass(nonmonadic_part(c2), c1)) {
    v.kind = IntervalVerdict::Finite;
    v.justification = "thm5.finite";
    const unsigned extra = monadic_types(c2) & ~monadic_types(c1);
    v.count = std::size_t{1} << std::popcount(extra);
    if (is_subclass(c2, cls(Tag::Omega1))) {
      const auto enumerated = capped_monadic_count(c1, c2);
      if (enumerated != *v.count) throw Error("quasi-monadic count disagrees with enumeration");
    }
    return v;
  }

  const std::pair<Tag, const char*> simple[] = {
      {Tag::V, "thm9.bullet1"}, {Tag::Lambda, "thm9.bullet2"}, {Tag::L, "thm9.bullet3"}};
  for (auto [t, name] : simple) {
    if (is_subclass(c2, cls(t))) {
      v.kind = IntervalVerdict::CountablyInfinite;
      v.justification = name;
      return v;
    }
  }
  const int top = std::max(param_of(c1), param_of(c2)) + 2;
  for (const auto& opt : bullet4_options(top)) {
    if (is_subclass(opt.with_mc, c1) && is_subclass(c2, opt.with_m)) {
      v.kind = IntervalVerdict::CountablyInfinite;
      v.justification = "thm9.bullet4";
      v.bullet_class = opt.c;
      return v;
    }
  }

  v.kind = IntervalVerdict::Uncountable;
  v.justification = "thm10.witness";
  const auto e = minimal_interval_inside(c1, c2);
  if (!e) {
    throw Error("no minimal uncountable interval inside <" + c1.to_string() + ", " +
                c2.to_string() + ">");
  }
  auto w = e->witness();
  if (!member(w, c2) || member(w, c1)) {
    throw Error("witness " + e->witness_name() + " is not in the difference");
  }
  v.witness = std::move(w);
  v.witness_name = e->witness_name();
  return v;
}

std::optional<MinimalInterval> minimal_interval_inside(ClassId c1, ClassId c2) {
  const int k = std::max({4, param_of(c1), param_of(c2)}) + 1;
  for (const auto& e : cached_table(k)) {
    if (is_subclass(c1, e.lower) && is_subclass(e.upper, c2)) return e;
  }
  return std::nullopt;
}

std::vector<std::string> validate_nonmonadic_part(int max_param, int cap) {
  const auto nodes = catalog(max_param);
  std::vector<ClassProfile> profiles;
  for (int a = 1; a <= cap; ++a) {
    for (const auto& f : all_functions(a)) {
      auto p = profile_of(f);
      if (p.monadic == ClassProfile::Monadic::None) profiles.push_back(std::move(p));
    }
  }
  // in[i][k]: the k-th non-quasi-monadic function lies in nodes[i].
  std::vector<std::vector<bool>> in(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& p : profiles) in[i].push_back(member(p, nodes[i]));
  }
  auto index_of = [&](ClassId c) {
    return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), c) - nodes.begin());
  };
  // Above the cap every rank collapses, so such pairs are not separable.
  auto collapsed = [&](ClassId c) { return c.parameterized() && c.m >= cap; };
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const ClassId x = nodes[i], g = nonmonadic_part(x);
    const std::size_t gi = index_of(g);
    bool ok = gi < nodes.size() && is_subclass(g, x) && in[gi] == in[i];
    for (std::size_t d = 0; ok && d < nodes.size(); ++d) {
      bool covers = true;
      for (std::size_t k = 0; k < profiles.size() && covers; ++k) {
        if (in[i][k] && !in[d][k]) covers = false;
      }
      if (covers && !is_subclass(g, nodes[d]) && !(collapsed(g) && collapsed(nodes[d]))) ok = false;
    }
    if (!ok) bad.push_back(x.to_string());
  }
  return bad;
}

std::size_t materialized_interval_count(ClassId c1, ClassId c2, int cap) {
  if (cap < 1 || cap > 3) throw Error("materialized count supports cap 1..3");
  std::vector<BooleanFunction> lower;
  std::map<BooleanFunction, std::vector<BooleanFunction>> groups;  // by canonical key
  for (int a = 1; a <= cap; ++a) {
    for (const auto& f : all_functions(a)) {
      const auto p = profile_of(f);
      if (member(p, c1)) {
        lower.push_back(f);
      } else if (member(p, c2)) {
        if (p.monadic == ClassProfile::Monadic::None) {
          throw Error("interval difference is not quasi-monadic");
        }
        groups[canonical_key(f)].push_back(f);
      }
    }
  }
  std::vector<const std::vector<BooleanFunction>*> parts;
  for (const auto& [key, fs] : groups) parts.push_back(&fs);
  std::size_t count = 0;
  for (std::uint32_t s = 0; s < (1u << parts.size()); ++s) {
    std::vector<BooleanFunction> members = lower;
    for (std::size_t b = 0; b < parts.size(); ++b) {
      if (s & (1u << b)) members.insert(members.end(), parts[b]->begin(), parts[b]->end());
    }
    if (CappedClass::unchecked_for_testing(members, cap).is_closed()) ++count;
  }
  return count;
}

BooleanFunction MinimalInterval::witness() const {
  auto f = generate(family, true).function;
  switch (transform) {
    case WitnessTransform::None: return f;
    case WitnessTransform::Dual: return dual(f);
    case WitnessTransform::Complement: return complement(f);
  }
  return f;
}

std::string MinimalInterval::witness_name() const {
  switch (transform) {
    case WitnessTransform::None: return family.to_string();
    case WitnessTransform::Dual: return "dual(" + family.to_string() + ")";
    case WitnessTransform::Complement: return "not(" + family.to_string() + ")";
  }
  return family.to_string();
}

std::vector<MinimalInterval> minimal_interval_table(int max_param) {
  if (max_param < 2) throw Error("minimal interval table needs max_param >= 2");
  using WT = WitnessTransform;
  std::vector<MinimalInterval> t;
  auto add = [&](ClassId lo, ClassId hi, FamilySpec fam, WT tr, const char* src) {
    t.push_back({lo, hi, fam, tr, src});
  };
  const FamilySpec f5{Family::F, 5}, g5{Family::G, 5}, u4{Family::U, 4}, tu4{Family::TU, 4},
      h4{Family::H, 4}, t7{Family::T, 7}, s7{Family::S, 7}, g23{Family::BigG, 2, 3};

  for (Tag c : {Tag::T1, Tag::L, Tag::S, Tag::M}) add(cls(c), cls(Tag::Omega), f5, WT::None, "prop1.i");
  add(cls(Tag::T0), cls(Tag::Omega), f5, WT::Dual, "prop1.i");
  for (Tag c : {Tag::Tc, Tag::L0, Tag::M0}) add(cls(c), cls(Tag::T0), f5, WT::None, "prop1.ii");
  add(cls(Tag::U, 2), cls(Tag::T0), f5, WT::None, "prop1.ii");
  for (Tag c : {Tag::Tc, Tag::L1, Tag::M1}) add(cls(c), cls(Tag::T1), f5, WT::Dual, "prop1.iii");
  add(cls(Tag::W, 2), cls(Tag::T1), f5, WT::Dual, "prop1.iii");
  for (Tag c : {Tag::Mc, Tag::Sc}) add(cls(c), cls(Tag::Tc), g5, WT::None, "prop1.iv");
  add(cls(Tag::TcU, 2), cls(Tag::Tc), g5, WT::None, "prop1.iv");
  add(cls(Tag::TcW, 2), cls(Tag::Tc), g5, WT::None, "prop1.iv");

  std::vector<int> ms;
  for (int m = 2; m <= max_param; ++m) ms.push_back(m);
  ms.push_back(kInf);
  for (int m : ms) {
    add(cls(Tag::TcU, m), cls(Tag::U, m), u4, WT::None, "prop2.i");
    add(cls(Tag::MU, m), cls(Tag::U, m), u4, WT::None, "prop2.i");
    add(cls(Tag::TcW, m), cls(Tag::W, m), u4, WT::Dual, "prop2.ii");
    add(cls(Tag::MW, m), cls(Tag::W, m), u4, WT::Dual, "prop2.ii");
    add(cls(Tag::McU, m), cls(Tag::TcU, m), tu4, WT::None, "prop2.iii");
    add(cls(Tag::McW, m), cls(Tag::TcW, m), tu4, WT::Dual, "prop2.iv");
  }

  add(cls(Tag::Lambda), cls(Tag::M), h4, WT::None, "prop3.i");
  add(cls(Tag::V), cls(Tag::M), h4, WT::None, "prop3.i");
  // Not among the listed minimal intervals, but uncountable by the same family.
  add(cls(Tag::Lambda1), cls(Tag::M1), h4, WT::None, "prop3.i.ext");
  add(cls(Tag::V0), cls(Tag::M0), h4, WT::None, "prop3.i.ext");
  add(cls(Tag::MU, 2), cls(Tag::M0), h4, WT::None, "prop3.ii");
  add(cls(Tag::MW, 2), cls(Tag::M1), h4, WT::Dual, "prop3.ii");
  add(cls(Tag::McU, 2), cls(Tag::Mc), h4, WT::None, "prop3.iii");
  add(cls(Tag::McW, 2), cls(Tag::Mc), h4, WT::Dual, "prop3.iii");
  add(cls(Tag::SM), cls(Tag::McU, 2), h4, WT::Dual, "prop3.iv");
  add(cls(Tag::SM), cls(Tag::McW, 2), h4, WT::None, "prop3.iv");

  for (int n = 2; n <= max_param; ++n) {
    // G^{n+1}_{n+1} has arity 2n+1; beyond the associativity arity limit the
    // smaller H_{n+1} stands in.
    const FamilySpec w = 2 * n + 1 <= kMaxAssocArity ? FamilySpec{Family::BigG, n + 1, n + 1}
                                                     : FamilySpec{Family::H, n + 1};
    const std::pair<Tag, Tag> sides[] = {
        {Tag::U, Tag::W}, {Tag::TcU, Tag::TcW}, {Tag::MU, Tag::MW}, {Tag::McU, Tag::McW}};
    for (auto [u, wt] : sides) {
      add(cls(u, n + 1), cls(u, n), w, WT::Dual, "prop4.i");
      add(cls(wt, n + 1), cls(wt, n), w, WT::None, "prop4.ii");
    }
  }

  add(cls(Tag::Lambda0), cls(Tag::MU, kInf), g23, WT::None, "prop5.i");
  add(cls(Tag::LambdaC), cls(Tag::McU, kInf), g23, WT::None, "prop5.i");
  add(cls(Tag::V1), cls(Tag::MW, kInf), g23, WT::Dual, "prop5.ii");
  add(cls(Tag::Vc), cls(Tag::McW, kInf), g23, WT::Dual, "prop5.ii");

  add(cls(Tag::Ic), cls(Tag::SM), t7, WT::None, "prop6.i");
  add(cls(Tag::SM), cls(Tag::Sc), s7, WT::None, "prop6.ii");
  add(cls(Tag::Lc), cls(Tag::Sc), s7, WT::None, "prop6.ii");
  add(cls(Tag::Sc), cls(Tag::S), t7, WT::Complement, "prop6.iii");
  add(cls(Tag::LS), cls(Tag::S), t7, WT::Complement, "prop6.iii");
  return t;
}

EntryCheck validate_entry(const MinimalInterval& e) {
  const auto w = e.witness();
  EntryCheck c;
  c.in_upper = member(w, e.upper);
  c.outside_lower = !member(w, e.lower);
  c.not_quasi_associative = !is_quasi_associative(w);
  return c;
}

CrossCheckReport cross_check_thm10(ClassId c1, ClassId c2, int arity_cap) {
  if (arity_cap < 1 || arity_cap > 4) throw Error("cross-check supports arity cap 1..4");
  CrossCheckReport r;
  r.verdict = classify_interval(c1, c2);
  const auto sample = difference_sample(c1, c2, arity_cap);
  r.sample_size = sample.size();
  for (const auto& f : sample) {
    if (is_quasi_associative(f)) continue;
    if (++r.non_quasi_associative == 1) r.first_non_quasi_associative = f;
  }
  const bool uncountable = r.verdict.kind == IntervalVerdict::Uncountable;
  r.consistent = r.non_quasi_associative == 0 || uncountable ||
                 r.verdict.kind == IntervalVerdict::Empty;
  r.witness_at_cap = uncountable && r.non_quasi_associative > 0;
  return r;
}

SweepResult cross_check_sweep(int max_param, int arity_cap) {
  if (arity_cap < 1 || arity_cap > 4) throw Error("cross-check supports arity cap 1..4");
  const auto nodes = catalog(max_param);
  // One canonical representative per equivalence class; only the
  // non-quasi-associative ones can make a pair inconsistent.
  std::map<BooleanFunction, bool> reps;
  for (int a = 1; a <= arity_cap; ++a) {
    for (const auto& f : all_functions(a)) reps.emplace(canonical_key(f), false);
  }
  std::vector<ClassProfile> bad;
  for (auto& [f, _] : reps) {
    if (!is_quasi_associative(f)) bad.push_back(profile_of(f));
  }
  std::vector<std::vector<bool>> in(nodes.size(), std::vector<bool>(bad.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t k = 0; k < bad.size(); ++k) in[i][k] = member(bad[k], nodes[i]);
  }
  SweepResult s;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (!is_subclass(nodes[i], nodes[j])) continue;
      ++s.pairs;
      const auto v = classify_interval(nodes[i], nodes[j]);
      if (v.kind == IntervalVerdict::Uncountable) {
        ++s.uncountable;
        continue;
      }
      for (std::size_t k = 0; k < bad.size(); ++k) {
        if (in[j][k] && !in[i][k]) {
          s.inconsistent.emplace_back(nodes[i], nodes[j]);
          break;
        }
      }
    }
  }
  return s;
}

}  // namespace eqclass
