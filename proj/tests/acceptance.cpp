// Acceptance runner: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqclass/assoc.hpp"
#include "eqclass/classify.hpp"
#include "eqclass/families.hpp"
#include "eqclass/hypergraph.hpp"
#include "eqclass/minor.hpp"
#include "eqclass/monoid.hpp"
#include "oracle.hpp"
#include "pinned_intervals.hpp"

using namespace eqclass;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<BooleanFunction> specs(const std::vector<std::string>& names) {
  std::vector<BooleanFunction> out;
  for (const auto& s : names) out.push_back(generate(*parse_family_spec(s)).function);
  return out;
}

// 1. The sixteen quasi-monadic classes and their Hasse diagram.
Outcome c1() {
  Outcome o;
  const auto lat = quasi_monadic_lattice(3);
  if (lat.size() != 16) o.fail(std::to_string(lat.size()) + " classes");
  std::set<std::vector<BooleanFunction>> distinct;
  for (const auto& c : lat) distinct.insert(c.members.members());
  if (distinct.size() != lat.size()) o.fail("duplicate classes");
  auto ref = monadic_reference_edges();
  std::sort(ref.begin(), ref.end());
  if (hasse_edges(lat) != ref) o.fail("Hasse diagram differs from the reference lattice");
  if (o.pass) o.detail = "16 classes, " + std::to_string(ref.size()) + " covering pairs";
  return o;
}

// 2. Antichain prefixes, each suite within 60 s.
Outcome c2() {
  Outcome o;
  const std::vector<std::vector<std::string>> suites{
      {"f@4", "f@5", "f@6", "f@7", "f@8"},
      {"g@4", "g@5", "g@6", "g@7", "g@8"},
      {"u@4", "u@5", "u@6", "u@7"},
      {"tu@4", "tu@5", "tu@6", "tu@7"},
      {"H@2", "H@3", "H@4", "H@5", "H@6"},
      {"G@3,3", "G@3,4", "G@3,5", "G@3,6"},
      {"G@2,2", "G@2,3", "G@2,4", "G@2,5", "G@2,6"},
  };
  double worst = 0;
  for (const auto& s : suites) {
    const auto t0 = Clock::now();
    const auto r = verify_antichain(specs(s));
    const double dt = since(t0);
    worst = std::max(worst, dt);
    if (r.verdict != Verdict::Holds) o.fail(s.front() + " suite: " + to_string(r.verdict));
    if (dt > 60) o.fail(s.front() + " suite took " + std::to_string(dt) + " s");
  }
  if (o.pass) o.detail = "7 suites, slowest " + std::to_string(worst) + " s";
  return o;
}

// 3. T_7/T_9 and s_7/s_9 incomparable both ways.
Outcome c3() {
  Outcome o;
  SearchOptions opts;
  opts.budget = std::uint64_t{1} << 40;
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"T@7", "T@9"}, {"T@9", "T@7"}, {"s@7", "s@9"}, {"s@9", "s@7"}};
  for (const auto& [a, b] : pairs) {
    const auto fa = specs({a}).front(), fb = specs({b}).front();
    const auto r = minor_leq(fa, fb, opts);
    if (r.verdict == Verdict::Fails) continue;
    std::string why = a + " <= " + b + ": " + to_string(r.verdict);
    if (r.witness) {
      why += " via (";
      for (std::size_t k = 0; k < r.witness->size(); ++k) why += (k ? "," : "") + std::to_string((*r.witness)[k]);
      why += ")";
    }
    o.fail(why);
  }
  if (o.pass) o.detail = "both pairs incomparable";
  return o;
}

// 4. Homomorphisms versus minors of hypergraph functions.
Outcome c4() {
  Outcome o;
  std::vector<Hypergraph> hs;
  for (int k = 1; k <= 3; ++k) {
    const auto a = all_hypergraphs(k);
    hs.insert(hs.end(), a.begin(), a.end());
  }
  std::size_t bad = 0, total = 0;
  std::string first;
  auto check = [&](const Hypergraph& g, const Hypergraph& h) {
    ++total;
    const auto r = lemma4_check(g, h);
    if (r.consistent != Verdict::Holds) {
      if (!bad) first = g.to_string() + " -> " + h.to_string();
      ++bad;
    }
  };
  for (const auto& g : hs) {
    for (const auto& h : hs) check(g, h);
  }
  std::mt19937_64 rng(4);
  for (int t = 0; t < 500; ++t) {
    const auto g = random_hypergraph(rng, 5, 6), h = random_hypergraph(rng, 5, 6);
    check(g, h);
  }
  if (bad) o.fail(std::to_string(bad) + " of " + std::to_string(total) + " pairs disagree, first " + first);
  else o.detail = std::to_string(total) + " pairs";
  return o;
}

// 5. Family placement table.
Outcome c5() {
  Outcome o;
  const auto all = placement_assertions(8);
  for (const auto& a : all) {
    const auto v = placement_violations(a);
    if (!v.empty()) o.fail(a.label + ": " + v.front());
  }
  if (o.pass) o.detail = std::to_string(all.size()) + " assertions";
  return o;
}

// 6. Displayed non-associativity tuples.
Outcome c6() {
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
    const auto sn = std::to_string(n);
    cases.push_back({"f@" + sn, make_f(n), 2, 3, join({n}, range(n + 2, 2 * n - 1)), true, false});
    cases.push_back({"g@" + sn, make_g(n), 1, 3, join({1}, range(n + 1, 2 * n - 1)), true, false});
    cases.push_back({"u@" + sn, make_u(n), 1, 2, join({1}, range(3, 2 * n + 1)), false, true});
    cases.push_back({"tu@" + sn, make_tu(n), 1, 2, join({1}, range(n, 2 * n + 1)), true, false});
    cases.push_back({"H@" + sn, make_H(n), 1, 2, range(1, n), false, true});
  }
  cases.push_back({"G@4,4", make_G(4, 4), 2, 3, {1, 2}, false, true});
  cases.push_back({"G@4,5", make_G(4, 5), 2, 3, {1, 2}, false, true});
  for (int n : {7, 9}) {
    const auto sn = std::to_string(n);
    cases.push_back({"T@" + sn, make_T(n), 1, 2, join(range(1, n + 2), {2 * n + 2, 2 * n + 3}), false, true});
    cases.push_back({"s@" + sn, make_s(n), 1, 2, range(1, n + 2), false, true});
  }
  for (const auto& c : cases) {
    const auto [vi, vj] = nesting_values(c.f, c.i, c.j, point_with_ones(2 * c.f.arity() - 1, c.ones));
    if (vi != c.vi || vj != c.vj) o.fail(c.name);
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " tuples";
  return o;
}

// 7. Classifier against the pinned verdicts.
Outcome c7() {
  Outcome o;
  for (const auto& p : pinned::intervals()) {
    const auto v = classify_interval(parse_class_id(p.lower), parse_class_id(p.upper));
    if (!pinned::matches(p, v)) o.fail(std::string(p.lower) + ".." + p.upper + " gave " + to_string(v.kind));
  }
  if (o.pass) o.detail = std::to_string(pinned::intervals().size()) + " pinned pairs";
  return o;
}

// 8. Non-quasi-associative members only in uncountable intervals.
Outcome c8() {
  Outcome o;
  const auto s = cross_check_sweep(3, 4);
  if (!s.inconsistent.empty()) {
    o.fail(std::to_string(s.inconsistent.size()) + " inconsistent pairs, first " +
           s.inconsistent.front().first.to_string() + ".." + s.inconsistent.front().second.to_string());
  } else {
    o.detail = std::to_string(s.pairs) + " pairs, " + std::to_string(s.uncountable) + " uncountable";
  }
  return o;
}

// 9. Monoid laws on 200 random capped classes.
Outcome c9() {
  Outcome o;
  const int cap = 3;
  std::mt19937_64 rng(12345);
  const auto p = projections(cap);
  std::size_t subset_fail = 0, eq_fail = 0, other_fail = 0;
  std::string first_other;
  for (int t = 0; t < 200; ++t) {
    const auto i = random_capped_class(rng, cap), j = random_capped_class(rng, cap),
               k = random_capped_class(rng, cap);
    const auto r = assoc_lemma_check(i, j, k);
    subset_fail += !r.subset_holds;
    eq_fail += !r.equality_holds;
    auto law = [&](bool ok, const char* name) {
      if (ok) return;
      if (!other_fail++) first_other = name;
    };
    law(compose_classes(i, p) == i && compose_classes(p, i) == i, "identity");
    const auto ij = class_union(i, j);
    law(compose_classes(i, k).is_subset_of(compose_classes(ij, k)), "monotone left");
    law(compose_classes(k, i).is_subset_of(compose_classes(k, ij)), "monotone right");
    const auto ci = closure(i.members(), cap), cj = closure(j.members(), cap);
    law(closure(ij.members(), cap) == class_union(ci, cj), "closure over union");
    law(closure(class_intersection(i, j).members(), cap) == class_intersection(ci, cj),
        "closure over intersection");
  }
  if (subset_fail) o.fail(std::to_string(subset_fail) + " subset failures");
  if (eq_fail) o.fail(std::to_string(eq_fail) + " of 200 triples with (IJ)K != I(JK)");
  if (other_fail) o.fail(std::to_string(other_fail) + " law failures, first " + first_other);
  if (o.pass) o.detail = "200 triples";
  return o;
}

// 10. Minor search against naive enumeration on all core pairs at arity <= 3.
Outcome c10() {
  Outcome o;
  std::set<BooleanFunction> keys;
  for (const auto& f : oracle::all_up_to(3)) keys.insert(canonical_key(f));
  std::size_t pairs = 0;
  for (const auto& g : keys) {
    for (const auto& f : keys) {
      ++pairs;
      const auto r = minor_leq(g, f);
      const bool naive = oracle::minor_leq(g, f);
      if (r.verdict == Verdict::Inconclusive || (r.verdict == Verdict::Holds) != naive) {
        o.fail(format_function(g) + " vs " + format_function(f));
      }
      if (r.witness && oracle::substitute(f, *r.witness, g.arity()) != g) o.fail("bad witness");
    }
  }
  if (o.pass) o.detail = std::to_string(keys.size()) + " cores, " + std::to_string(pairs) + " pairs";
  return o;
}

struct Criterion {
  int id;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("--criterion", only, "Run only these criteria (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  // Time limits in seconds.
  const std::vector<Criterion> all{
      {1, 1.0, c1},     {2, 7 * 60.0, c2}, {3, 600.0, c3}, {4, 300.0, c4},  {5, 120.0, c5},
      {6, 10.0, c6},    {7, 60.0, c7},     {8, 1800.0, c8}, {9, 120.0, c9}, {10, 300.0, c10},
  };
  bool ok = true;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = Clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double dt = since(t0);
    if (dt > c.limit_s) r.fail("took " + std::to_string(dt) + " s, limit " + std::to_string(c.limit_s));
    ok = ok && r.pass;
    std::printf("criterion %d: %s (%.2f s) %s\n", c.id, r.pass ? "PASS" : "FAIL", dt, r.detail.c_str());
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
