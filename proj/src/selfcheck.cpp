#include "eqclass/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "eqclass/assoc.hpp"
#include "eqclass/classify.hpp"
#include "eqclass/families.hpp"
#include "eqclass/hypergraph.hpp"
#include "eqclass/monoid.hpp"

namespace eqclass {
namespace {

struct Outcome {
  Verdict status = Verdict::Holds;
  std::string detail;

  void fail(std::string why) {
    if (status != Verdict::Fails) detail = std::move(why);
    status = Verdict::Fails;
  }
  void inconclusive(std::string why) {
    if (status == Verdict::Holds) {
      status = Verdict::Inconclusive;
      detail = std::move(why);
    }
  }
  bool failed() const { return status == Verdict::Fails; }
};

std::vector<BooleanFunction> functions_up_to(int arity) {
  std::vector<BooleanFunction> out;
  for (int a = 1; a <= arity; ++a) {
    auto fs = all_functions(a);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

std::string show(const BooleanFunction& f) { return format_function(f, FormatStyle::Hex); }

// g <=_V f by trying every map from positions of f to variables of g.
bool naive_minor(const BooleanFunction& g, const BooleanFunction& f) {
  const int n = f.arity(), m = g.arity();
  std::vector<int> sigma(n, 1);
  while (true) {
    if (substitute(f, sigma, m) == g) return true;
    int k = 0;
    while (k < n && sigma[k] == m) sigma[k++] = 1;
    if (k == n) return false;
    ++sigma[k];
  }
}

BooleanFunction random_function(std::mt19937_64& rng, int arity) {
  const std::uint64_t mask = (std::uint64_t{1} << (1u << arity)) - 1;
  return BooleanFunction::from_words(arity, {rng() & mask});
}

// ---- core ----------------------------------------------------------------

Outcome core_bit_convention() {
  Outcome o;
  for (const auto& f : functions_up_to(4)) {
    const auto back = parse_function(format_function(f, FormatStyle::Dnf));
    if (back != f) {
      o.fail("dnf of " + show(f) + " re-parses to " + show(back));
      return o;
    }
  }
  return o;
}

Outcome core_round_trips() {
  Outcome o;
  for (const auto& f : functions_up_to(4)) {
    if (from_zhegalkin(zhegalkin(f)) != f) o.fail("zhegalkin round trip on " + show(f));
    if (parse_function(format_function(f, FormatStyle::Hex)) != f) o.fail("hex round trip on " + show(f));
    if (o.failed()) return o;
  }
  return o;
}

Outcome core_automorphisms() {
  Outcome o;
  for (const auto& f : functions_up_to(3)) {
    const bool ok = dual(complement(f)) == underline(f) && complement(dual(f)) == underline(f) &&
                    dual(dual(f)) == f && complement(complement(f)) == f;
    if (!ok) {
      o.fail("dual/complement/underline disagree on " + show(f));
      return o;
    }
  }
  return o;
}

Outcome core_compose_associativity(std::mt19937_64& rng) {
  Outcome o;
  std::uniform_int_distribution<int> ar(1, 3);
  for (int t = 0; t < 2000 && !o.failed(); ++t) {
    const int n = ar(rng), m = ar(rng), p = ar(rng);
    const auto f = random_function(rng, n);
    std::vector<BooleanFunction> gs, hs;
    for (int i = 0; i < n; ++i) gs.push_back(random_function(rng, m));
    for (int i = 0; i < m; ++i) hs.push_back(random_function(rng, p));
    std::vector<BooleanFunction> ghs;
    for (const auto& g : gs) ghs.push_back(compose(g, hs));
    if (compose(compose(f, gs), hs) != compose(f, ghs)) o.fail("composition not associative at " + show(f));
  }
  return o;
}

Outcome core_essential_core() {
  Outcome o;
  for (const auto& f : functions_up_to(4)) {
    const auto core = essential_core(f);
    const auto again = essential_core(core.function);
    std::vector<int> id(again.index_map.size());
    for (std::size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int>(k) + 1;
    if (again.function != core.function || again.index_map != id) {
      o.fail("essential_core not idempotent on " + show(f));
      return o;
    }
  }
  return o;
}

// ---- minor ---------------------------------------------------------------

Outcome minor_naive_agreement(const SearchOptions& opts) {
  Outcome o;
  std::set<BooleanFunction> keys;
  for (const auto& f : functions_up_to(3)) keys.insert(canonical_key(f));
  const std::vector<BooleanFunction> cores(keys.begin(), keys.end());
  for (const auto& g : cores) {
    for (const auto& f : cores) {
      const auto r = minor_leq(g, f, opts);
      if (r.verdict == Verdict::Inconclusive) {
        o.inconclusive("budget exhausted on " + show(g) + " vs " + show(f));
        continue;
      }
      const bool fast = r.verdict == Verdict::Holds;
      if (fast != naive_minor(g, f)) o.fail("disagreement on " + show(g) + " vs " + show(f));
      if (fast && !replays(g, f, *r.witness)) o.fail("witness does not replay for " + show(g));
      if (o.failed()) return o;
    }
  }
  return o;
}

Outcome minor_preorder_laws(std::mt19937_64& rng, const SearchOptions& opts) {
  Outcome o;
  std::uniform_int_distribution<int> ar(1, 4);
  auto leq = [&](const BooleanFunction& a, const BooleanFunction& b) -> std::optional<bool> {
    const auto r = minor_leq(a, b, opts);
    if (r.verdict == Verdict::Inconclusive) return std::nullopt;
    if (r.verdict == Verdict::Holds) {
      if (!replays(a, b, *r.witness)) o.fail("witness does not replay");
      // A strict minor has fewer essential variables.
      if (essential_arity(a) > essential_arity(b)) o.fail("minor with more essential variables");
    }
    return r.verdict == Verdict::Holds;
  };
  for (int t = 0; t < 1000 && !o.failed(); ++t) {
    const auto a = random_function(rng, ar(rng));
    // Take b and c as minors of their successors often enough to exercise
    // transitivity.
    auto c = random_function(rng, ar(rng));
    std::vector<int> sigma(c.arity());
    std::uniform_int_distribution<int> pick(1, 3);
    for (auto& s : sigma) s = pick(rng);
    auto b = substitute(c, sigma, 3);
    const auto refl = leq(a, a);
    if (!refl) {
      o.inconclusive("budget exhausted");
      continue;
    }
    if (!*refl) o.fail("not reflexive at " + show(a));
    const auto ab = leq(a, b), bc = leq(b, c), ac = leq(a, c);
    if (!ab || !bc || !ac) {
      o.inconclusive("budget exhausted");
      continue;
    }
    if (*ab && *bc && !*ac) o.fail("not transitive");
  }
  return o;
}

Outcome antichain_prefix(const std::vector<BooleanFunction>& fs, const SearchOptions& opts) {
  Outcome o;
  const auto r = verify_antichain(fs, opts);
  if (r.verdict == Verdict::Fails) {
    o.fail("pair (" + std::to_string(r.violation->i) + ", " + std::to_string(r.violation->j) +
           ") comparable");
  } else if (r.verdict == Verdict::Inconclusive) {
    o.inconclusive("budget exhausted");
  }
  return o;
}

// ---- classes -------------------------------------------------------------

Outcome classes_table(const std::optional<InclusionTable>& table) {
  Outcome o;
  const auto v = validate_inclusion_table(table ? *table : default_inclusion_table(4), 4);
  if (!v.ok) {
    o.fail(!v.false_inclusions.empty() ? "false inclusion " + v.false_inclusions.front()
                                       : "unseparated " + v.unseparated.front());
  }
  return o;
}

Outcome classes_meet_and_duality() {
  Outcome o;
  const auto nodes = catalog(4);
  auto is = [](const ClassProfile& p, std::string_view c) { return member(p, parse_class_id(c)); };
  for (const auto& f : functions_up_to(3)) {
    const auto p = profile_of(f), pd = profile_of(dual(f));
    for (int m : {2, 3, 4, kInf}) {
      auto in = [&](Tag t) { return member(p, make_class(t, m)); };
      const bool u = in(Tag::U), w = in(Tag::W);
      if (in(Tag::TcU) != (is(p, "Tc") && u) || in(Tag::TcW) != (is(p, "Tc") && w) ||
          in(Tag::MU) != (is(p, "M") && u) || in(Tag::MW) != (is(p, "M") && w) ||
          in(Tag::McU) != (is(p, "Mc") && u) || in(Tag::McW) != (is(p, "Mc") && w)) {
        o.fail("meet inconsistency at " + show(f));
      }
    }
    for (auto c : nodes) {
      if (member(p, c) != member(pd, dual_class(c))) {
        o.fail("duality transport fails for " + c.to_string() + " at " + show(f));
      }
    }
    if (o.failed()) return o;
  }
  return o;
}

Outcome classes_rank_chain() {
  Outcome o;
  for (const auto& f : functions_up_to(4)) {
    for (bool a : {false, true}) {
      const auto r = separating_rank(f, a);
      const Tag t = a ? Tag::U : Tag::W;
      if (r.kind != Rank::Finite) continue;
      for (int k = 2; k <= r.m; ++k) {
        if (!member(f, make_class(t, k))) o.fail("rank chain broken at " + show(f));
      }
      if (member(f, make_class(t, r.m + 1))) o.fail("rank not tight at " + show(f));
    }
    if (o.failed()) return o;
  }
  return o;
}

Outcome classes_minor_closed() {
  Outcome o;
  const auto nodes = catalog(4);
  for (const auto& f : functions_up_to(3)) {
    const auto p = profile_of(f);
    const auto minors = minors_up_to(f, 3);
    for (auto c : nodes) {
      if (!member(p, c)) continue;
      for (const auto& g : minors) {
        if (!member(g, c)) {
          o.fail(c.to_string() + " not closed: " + show(g) + " below " + show(f));
          return o;
        }
      }
    }
  }
  return o;
}

// ---- families ------------------------------------------------------------

Outcome families_placement() {
  Outcome o;
  for (const auto& a : placement_assertions(8)) {
    const auto bad = placement_violations(a);
    if (!bad.empty()) o.fail(a.label + " " + bad.front());
  }
  return o;
}

Outcome families_monadic_lattice() {
  Outcome o;
  const auto lat = quasi_monadic_lattice(3);
  const auto hasse = hasse_edges(lat);
  const auto& ref = monadic_reference_edges();
  auto expected = ref;
  std::sort(expected.begin(), expected.end());
  if (lat.size() != 16) o.fail(std::to_string(lat.size()) + " classes");
  else if (hasse != expected) o.fail("Hasse diagram differs from the reference");
  return o;
}

// ---- hypergraph ----------------------------------------------------------

Outcome hypergraph_round_trip() {
  Outcome o;
  for (const auto& f : functions_up_to(4)) {
    if (!is_monotone(f) || f.at_zero()) continue;
    if (function_of(hypergraph_of(f)) != f) o.fail("round trip fails at " + show(f));
  }
  return o;
}

std::vector<Hypergraph> small_hypergraphs() {
  std::vector<Hypergraph> out;
  for (int n = 1; n <= 3; ++n) {
    auto hs = all_hypergraphs(n);
    out.insert(out.end(), hs.begin(), hs.end());
  }
  return out;
}

// The hom/minor correspondence split into its two directions; `forward` is hom => minor.
Outcome hypergraph_lemma4(bool forward, const SearchOptions& opts) {
  Outcome o;
  const auto hs = small_hypergraphs();
  for (const auto& g : hs) {
    for (const auto& h : hs) {
      const auto r = lemma4_check(g, h, opts);
      if (r.hom == Verdict::Holds && !is_edge_surjective_hom(g, h, *r.hom_witness)) {
        o.fail("invalid homomorphism witness for " + g.to_string() + " -> " + h.to_string());
      }
      const Verdict premise = forward ? r.hom : r.minor;
      const Verdict conclusion = forward ? r.minor : r.hom;
      if (premise == Verdict::Inconclusive ||
          (premise == Verdict::Holds && conclusion == Verdict::Inconclusive)) {
        o.inconclusive("budget exhausted");
      } else if (premise == Verdict::Holds && conclusion == Verdict::Fails) {
        o.fail((forward ? "homomorphism without minor: " : "minor without homomorphism: ") +
               g.to_string() + " -> " + h.to_string());
      }
      if (o.failed()) return o;
    }
  }
  return o;
}

// ---- assoc ---------------------------------------------------------------

Outcome assoc_properties(const SearchOptions& opts) {
  Outcome o;
  const auto fs = functions_up_to(3);
  std::map<BooleanFunction, bool> by_key;
  for (const auto& f : fs) {
    const bool qa = is_quasi_associative(f);
    if (essential_arity(f) <= 1 && !qa) o.fail("quasi-monadic " + show(f) + " not quasi-associative");
    if (const auto w = is_associative(f)) {
      const auto [vi, vj] = nesting_values(f, w->i, w->j, w->point);
      const bool by_compose_i = nesting(f, w->i).bit(w->point);
      const bool by_compose_j = nesting(f, w->j).bit(w->point);
      if (vi != w->value_i || vj != w->value_j || vi == vj || by_compose_i != vi ||
          by_compose_j != vj) {
        o.fail("witness does not replay for " + show(f));
      }
    } else if (f.arity() >= 2) {
      const int top = (kMaxArity - 1) / (f.arity() - 1);
      for (int k = 2; k <= std::min(top, 3); ++k) {
        const auto it = iterate(f, k);
        if (it.arity() <= kMaxAssocArity && is_associative(it)) {
          o.fail("iterate of associative " + show(f) + " is not associative");
        }
      }
    }
    const auto key = canonical_key(f);
    if (auto [it, fresh] = by_key.emplace(key, qa); !fresh && it->second != qa) {
      o.fail("quasi-associativity not invariant under equivalence at " + show(f));
    }
    if (o.failed()) return o;
  }
  // Spot-check the equivalence claim behind the key grouping.
  const auto a = projection(3, 1) & projection(3, 3), b = projection(2, 2) & projection(2, 1);
  if (equivalent(a, b, opts) == Verdict::Fails) o.fail("x1&x3 and x2&x1 not equivalent");
  return o;
}

Outcome assoc_displayed_tuples() {
  Outcome o;
  auto range = [](int a, int b) {
    std::vector<int> v;
    for (int t = a; t <= b; ++t) v.push_back(t);
    return v;
  };
  auto join = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  struct Case {
    std::string name;
    BooleanFunction f;
    int i, j;
    std::vector<int> ones;
    bool vi, vj;
  };
  std::vector<Case> cases;
  for (int n = 5; n <= 7; ++n) {
    cases.push_back({"f", make_f(n), 2, 3, join({n}, range(n + 2, 2 * n - 1)), true, false});
    cases.push_back({"g", make_g(n), 1, 3, join({1}, range(n + 1, 2 * n - 1)), true, false});
    cases.push_back({"u", make_u(n), 1, 2, join({1}, range(3, 2 * n + 1)), false, true});
    cases.push_back({"tu", make_tu(n), 1, 2, join({1}, range(n, 2 * n + 1)), true, false});
    cases.push_back({"H", make_H(n), 1, 2, range(1, n), false, true});
  }
  cases.push_back({"G", make_G(4, 4), 2, 3, {1, 2}, false, true});
  cases.push_back({"G", make_G(4, 5), 2, 3, {1, 2}, false, true});
  for (int n : {7, 9}) {
    cases.push_back({"T", make_T(n), 1, 2, join(range(1, n + 2), {2 * n + 2, 2 * n + 3}), false, true});
    cases.push_back({"s", make_s(n), 1, 2, range(1, n + 2), false, true});
  }
  for (const auto& c : cases) {
    const int big = 2 * c.f.arity() - 1;
    const auto [vi, vj] = nesting_values(c.f, c.i, c.j, point_with_ones(big, c.ones));
    if (vi != c.vi || vj != c.vj) o.fail(c.name + " at arity " + std::to_string(c.f.arity()));
  }
  return o;
}

// ---- monoid --------------------------------------------------------------

Outcome monoid_laws(std::mt19937_64& rng) {
  Outcome o;
  const int cap = 3;
  const auto p = projections(cap);
  for (int t = 0; t < 20 && !o.failed(); ++t) {
    const auto a = random_capped_class(rng, cap), b = random_capped_class(rng, cap);
    if (!(compose_classes(a, p) == a) || !(compose_classes(p, a) == a)) o.fail("identity law");
    const auto ab = class_union(a, b);
    // a <= a u b, so composition must grow.
    if (!compose_classes(a, b).is_subset_of(compose_classes(ab, ab))) o.fail("monotonicity");
    const auto am = a.members(), bm = b.members();
    std::vector<BooleanFunction> both = am;
    both.insert(both.end(), bm.begin(), bm.end());
    if (!(closure(both, cap) == class_union(closure(am, cap), closure(bm, cap)))) {
      o.fail("closure does not distribute over union");
    }
    const auto inter = class_intersection(a, b).members();
    if (!(closure(inter, cap) == class_intersection(a, b))) o.fail("closure does not distribute over intersection");
    for (auto map : {&complement, &dual, &underline}) {
      if (!(map_members(a, map) == closure(map_members(a, map).members(), cap)) ||
          !map_members(a, map).is_closed()) {
        o.fail("closure does not commute with an automorphism");
      }
    }
    if (!assoc_lemma_check(a, b, a).subset_holds) o.fail("(IJ)K not within I(JK)");
  }
  // Closed intervals within the quasi-monadic lattice are semigroups.
  const auto lat = quasi_monadic_lattice(cap);
  for (const auto& c1 : lat) {
    if (!is_idempotent_at_cap(c1.members)) continue;
    for (const auto& c2 : lat) {
      if (!c1.members.is_subset_of(c2.members) || !is_idempotent_at_cap(c2.members)) continue;
      for (const auto& k1 : lat) {
        if (!c1.members.is_subset_of(k1.members) || !k1.members.is_subset_of(c2.members)) continue;
        for (const auto& k2 : lat) {
          if (!c1.members.is_subset_of(k2.members) || !k2.members.is_subset_of(c2.members)) continue;
          const auto k = compose_classes(k1.members, k2.members);
          if (!c1.members.is_subset_of(k) || !k.is_subset_of(c2.members)) {
            o.fail("interval " + c1.name + " .. " + c2.name + " not a semigroup");
            return o;
          }
        }
      }
    }
  }
  return o;
}

// ---- classify ------------------------------------------------------------

Outcome classify_table() {
  Outcome o;
  for (const auto& e : minimal_interval_table(4)) {
    if (!validate_entry(e).ok()) {
      o.fail("<" + e.lower.to_string() + ", " + e.upper.to_string() + "> " + e.witness_name());
    }
  }
  if (const auto bad = validate_nonmonadic_part(4, 4); !bad.empty()) {
    o.fail("nonmonadic part wrong for " + bad.front());
  }
  return o;
}

Outcome classify_symmetry_and_agreement() {
  Outcome o;
  const auto nodes = catalog(4);
  for (auto a : nodes) {
    for (auto b : nodes) {
      const auto v = classify_interval(a, b);
      if (classify_interval(dual_class(a), dual_class(b)).kind != v.kind) {
        o.fail("duality asymmetry at <" + a.to_string() + ", " + b.to_string() + ">");
      }
      const bool inside = v.kind != IntervalVerdict::Empty && minimal_interval_inside(a, b);
      if (inside != (v.kind == IntervalVerdict::Uncountable)) {
        o.fail("minimal-interval disagreement at <" + a.to_string() + ", " + b.to_string() + ">");
      }
      if (v.kind == IntervalVerdict::Finite && materialized_interval_count(a, b, 3) != *v.count) {
        o.fail("finite count mismatch at <" + a.to_string() + ", " + b.to_string() + ">");
      }
      if (o.failed()) return o;
    }
  }
  return o;
}

Outcome classify_monotone() {
  Outcome o;
  const auto nodes = catalog(3);
  std::map<std::pair<ClassId, ClassId>, bool> unc;
  for (auto a : nodes) {
    for (auto b : nodes) unc[{a, b}] = classify_interval(a, b).kind == IntervalVerdict::Uncountable;
  }
  for (auto [key, u] : unc) {
    if (!u) continue;
    for (auto a2 : nodes) {
      if (!is_subclass(a2, key.first)) continue;
      for (auto b2 : nodes) {
        if (is_subclass(key.second, b2) && !unc[{a2, b2}]) {
          o.fail("<" + a2.to_string() + ", " + b2.to_string() + "> countable around uncountable <" +
                 key.first.to_string() + ", " + key.second.to_string() + ">");
          return o;
        }
      }
    }
  }
  return o;
}

Outcome classify_cross_check() {
  Outcome o;
  const auto s = cross_check_sweep(3, 4);
  if (!s.inconsistent.empty()) {
    o.fail("non-quasi-associative member in countable <" + s.inconsistent.front().first.to_string() +
           ", " + s.inconsistent.front().second.to_string() + ">");
  }
  return o;
}

}  // namespace

std::vector<PropertyResult> run_selfcheck(const SelfcheckOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  SearchOptions so;
  so.budget = opts.budget;
  std::vector<std::pair<std::pair<const char*, const char*>, std::function<Outcome()>>> props = {
      {{"core", "bit-convention"}, core_bit_convention},
      {{"core", "round-trips"}, core_round_trips},
      {{"core", "automorphisms-commute"}, core_automorphisms},
      {{"core", "composition-associative"}, [&] { return core_compose_associativity(rng); }},
      {{"core", "essential-core-idempotent"}, core_essential_core},
      {{"minor", "naive-oracle-agreement"}, [&] { return minor_naive_agreement(so); }},
      {{"minor", "preorder-laws"}, [&] { return minor_preorder_laws(rng, so); }},
      {{"minor", "antichain-f4-f6"},
       [&] { return antichain_prefix({make_f(4), make_f(5), make_f(6)}, so); }},
      {{"classes", "inclusion-table"}, [&] { return classes_table(opts.table); }},
      {{"classes", "meet-and-duality"}, classes_meet_and_duality},
      {{"classes", "rank-chain"}, classes_rank_chain},
      {{"classes", "minor-closed"}, classes_minor_closed},
      {{"families", "placement"}, families_placement},
      {{"families", "monadic-lattice"}, families_monadic_lattice},
      {{"families", "antichain-H2-H5"},
       [&] { return antichain_prefix({make_H(2), make_H(3), make_H(4), make_H(5)}, so); }},
      {{"hypergraph", "round-trip"}, hypergraph_round_trip},
      {{"hypergraph", "lemma4-hom-implies-minor"}, [&] { return hypergraph_lemma4(true, so); }},
      {{"hypergraph", "lemma4-minor-implies-hom"}, [&] { return hypergraph_lemma4(false, so); }},
      {{"assoc", "properties"}, [&] { return assoc_properties(so); }},
      {{"assoc", "nonassociativity-tuples"}, assoc_displayed_tuples},
      {{"monoid", "laws"}, [&] { return monoid_laws(rng); }},
      {{"classify", "witness-table"}, classify_table},
      {{"classify", "duality-agreement-counts"}, classify_symmetry_and_agreement},
      {{"classify", "monotonicity"}, classify_monotone},
      {{"classify", "cross-check"}, classify_cross_check},
  };
  std::vector<PropertyResult> out;
  for (auto& [name, run] : props) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    out.push_back({name.first, name.second, o.status, o.detail});
  }
  return out;
}

int selfcheck_exit_code(const std::vector<PropertyResult>& results) {
  bool failed = false, open = false;
  for (const auto& r : results) {
    failed |= r.status == Verdict::Fails;
    open |= r.status == Verdict::Inconclusive;
  }
  return open ? 2 : failed ? 1 : 0;
}

}  // namespace eqclass
