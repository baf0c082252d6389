// eqclass: command-line front end. Every command prints a text report, or a
// JSON report with --json, and exits 0 (definitive), 2 (inconclusive) or 1
// (usage or parse error).

#include <algorithm>
#include <chrono>
#include <functional>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqclass/assoc.hpp"
#include "eqclass/classify.hpp"
#include "eqclass/families.hpp"
#include "eqclass/hypergraph.hpp"
#include "eqclass/monoid.hpp"
#include "eqclass/selfcheck.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace eqclass;

constexpr const char* kBitConvention = "x1-lsb/1";

struct Common {
  bool json = false;
  std::uint64_t budget = kDefaultBudget;
  int cap = kDefaultCap;
  std::string format = "hex";
};

struct Report {
  json result = json::object();
  std::string text;
  std::uint64_t nodes = 0;
  bool inconclusive = false;
};

class Context {
 public:
  explicit Context(const Common& c) : c_(c), style_(parse_format_style(c.format)) {}

  SearchOptions search() const {
    SearchOptions o;
    o.budget = c_.budget;
    return o;
  }
  int cap() const { return c_.cap; }

  std::string show(const BooleanFunction& f) const { return format_function(f, style_); }

 private:
  const Common& c_;
  FormatStyle style_;
};

json fn_json(const BooleanFunction& f) { return format_function(f, FormatStyle::Hex); }

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + ")";
}

std::vector<BooleanFunction> parse_all(const std::vector<std::string>& texts) {
  std::vector<BooleanFunction> out;
  for (const auto& t : texts) out.push_back(parse_function(t));
  return out;
}

json class_json(const CappedClass& k) {
  json by_arity = json::object();
  for (int a = 1; a <= k.cap(); ++a) {
    json row = json::array();
    for (const auto& f : k.at_arity(a)) row.push_back(fn_json(f));
    by_arity[std::to_string(a)] = std::move(row);
  }
  return {{"cap", k.cap()}, {"size", k.size()}, {"members", std::move(by_arity)}};
}

std::string class_text(const CappedClass& k, const Context& ctx) {
  std::string s = "cap " + std::to_string(k.cap()) + ", " + std::to_string(k.size()) + " functions\n";
  for (int a = 1; a <= k.cap(); ++a) {
    s += "  arity " + std::to_string(a) + ":";
    for (const auto& f : k.at_arity(a)) s += " " + ctx.show(f);
    s += "\n";
  }
  return s;
}

// ---- commands --------------------------------------------------------------

Report cmd_cmp(const Context& ctx, const std::string& a, const std::string& b) {
  const auto f = parse_function(a), g = parse_function(b);
  const auto le = minor_leq(f, g, ctx.search()), ge = minor_leq(g, f, ctx.search());
  Report r;
  r.nodes = le.nodes + ge.nodes;
  std::string rel;
  if (le.verdict == Verdict::Holds && ge.verdict == Verdict::Holds) rel = "equivalent";
  else if (le.verdict == Verdict::Holds && ge.verdict == Verdict::Fails) rel = "le";
  else if (le.verdict == Verdict::Fails && ge.verdict == Verdict::Holds) rel = "ge";
  else if (le.verdict == Verdict::Fails && ge.verdict == Verdict::Fails) rel = "incomparable";
  else rel = "inconclusive";
  r.inconclusive = rel == "inconclusive";
  r.result = {{"relation", rel}, {"le", to_string(le.verdict)}, {"ge", to_string(ge.verdict)}};
  r.text = rel + "\n";
  if (le.witness) {
    r.result["le_witness"] = *le.witness;
    r.text += "  first <= second via sigma = " + join(*le.witness) + "\n";
  }
  if (ge.witness) {
    r.result["ge_witness"] = *ge.witness;
    r.text += "  second <= first via sigma = " + join(*ge.witness) + "\n";
  }
  return r;
}

Report cmd_antichain(const Context& ctx, const std::vector<std::string>& texts) {
  const auto fs = parse_all(texts);
  const auto rep = verify_antichain(fs, ctx.search());
  Report r;
  r.nodes = rep.total_nodes;
  r.inconclusive = rep.verdict == Verdict::Inconclusive;
  json pairs = json::array();
  for (const auto& p : rep.pairs) {
    json e = {{"i", p.i}, {"j", p.j}, {"result", to_string(p.verdict)}, {"witness", nullptr}};
    if (p.witness) e["witness"] = *p.witness;
    pairs.push_back(std::move(e));
  }
  r.result = {{"verdict", to_string(rep.verdict)}, {"count", rep.count}, {"pairs", std::move(pairs)}};
  r.text = "antichain of " + std::to_string(rep.count) + ": " + to_string(rep.verdict) + "\n";
  if (rep.violation) {
    r.text += "  " + texts[rep.violation->i] + " <= " + texts[rep.violation->j];
    r.text += rep.violation->witness ? " via sigma = " + join(*rep.violation->witness) + "\n" : "\n";
  }
  return r;
}

Report cmd_member(const std::string& fn, const std::string& cls) {
  const auto f = parse_function(fn);
  const auto c = parse_class_id(cls);
  const bool in = member(f, c);
  Report r;
  r.result = {{"function", fn_json(f)}, {"class", c.to_string()}, {"member", in}};
  r.text = in ? "true\n" : "false\n";
  return r;
}

Report cmd_rank(const std::string& fn, int a) {
  if (a != 0 && a != 1) throw Error("rank takes 0 or 1");
  const auto f = parse_function(fn);
  const auto rk = separating_rank(f, a == 1);
  Report r;
  r.result = {{"function", fn_json(f)}, {"a", a}, {"rank", rk.to_string()}};
  r.text = rk.to_string() + "\n";
  return r;
}

Report cmd_assoc(const std::string& fn) {
  const auto f = parse_function(fn);
  const auto w = is_associative(f);
  Report r;
  r.result = {{"function", fn_json(f)}, {"associative", !w.has_value()}};
  if (!w) {
    r.text = "associative\n";
    return r;
  }
  const int big = 2 * f.arity() - 1;
  std::string point;
  for (int k = 1; k <= big; ++k) point += ((w->point >> (k - 1)) & 1u) ? '1' : '0';
  r.result["witness"] = {{"i", w->i}, {"j", w->j}, {"point", point},
                         {"value_i", static_cast<int>(w->value_i)},
                         {"value_j", static_cast<int>(w->value_j)}};
  r.text = "non-associative\n  nesting at " + std::to_string(w->i) + " and " + std::to_string(w->j) +
           " differ at (x1..x" + std::to_string(big) + ") = " + point + ": " +
           std::to_string(w->value_i) + " vs " + std::to_string(w->value_j) + "\n";
  return r;
}

Report cmd_quasi_assoc(const std::string& fn) {
  const auto f = parse_function(fn);
  const bool qa = is_quasi_associative(f);
  Report r;
  r.result = {{"function", fn_json(f)}, {"quasi_associative", qa}};
  r.text = qa ? "true\n" : "false\n";
  return r;
}

Report cmd_iterate(const Context& ctx, const std::string& fn, int k) {
  const auto g = iterate(parse_function(fn), k);
  Report r;
  r.result = {{"k", k}, {"function", fn_json(g)}};
  r.text = ctx.show(g) + "\n";
  return r;
}

Report cmd_hom(const Context& ctx, const std::string& a, const std::string& b) {
  const auto g = parse_hypergraph(a), h = parse_hypergraph(b);
  const auto res = edge_surjective_hom(g, h, ctx.search().budget);
  Report r;
  r.nodes = res.nodes;
  r.inconclusive = res.verdict == Verdict::Inconclusive;
  r.result = {{"verdict", to_string(res.verdict)}, {"map", nullptr}};
  r.text = to_string(res.verdict) + "\n";
  if (res.witness) {
    r.result["map"] = *res.witness;
    r.text += "  map = " + join(*res.witness) + "\n";
  }
  return r;
}

Report cmd_lemma4(const Context& ctx, const std::string& a, const std::string& b) {
  const auto g = parse_hypergraph(a), h = parse_hypergraph(b);
  const auto res = lemma4_check(g, h, ctx.search());
  Report r;
  r.inconclusive = res.consistent == Verdict::Inconclusive;
  r.result = {{"consistent", to_string(res.consistent)},
              {"hom", to_string(res.hom)},
              {"minor", to_string(res.minor)},
              {"f_G", fn_json(function_of(g))},
              {"f_H", fn_json(function_of(h))}};
  if (res.hom_witness) r.result["hom_witness"] = *res.hom_witness;
  if (res.minor_witness) r.result["minor_witness"] = *res.minor_witness;
  r.text = "consistent: " + to_string(res.consistent) + "\n  homomorphism: " + to_string(res.hom) +
           "\n  f_H <= f_G: " + to_string(res.minor) + "\n";
  return r;
}

Report cmd_closure(const Context& ctx, const std::vector<std::string>& gens) {
  const auto k = closure(parse_all(gens), ctx.cap());
  Report r;
  r.result = class_json(k);
  r.text = class_text(k, ctx);
  return r;
}

Report cmd_compose(const Context& ctx, const std::vector<std::string>& left,
                   const std::vector<std::string>& right) {
  const auto i = closure(parse_all(left), ctx.cap()), j = closure(parse_all(right), ctx.cap());
  const auto k = compose_classes(i, j);
  Report r;
  r.result = class_json(k);
  r.text = class_text(k, ctx);
  return r;
}

Report cmd_idempotent(const Context& ctx, const std::vector<std::string>& gens) {
  const auto k = closure(parse_all(gens), ctx.cap());
  const bool idem = is_idempotent_at_cap(k);
  Report r;
  r.result = {{"cap", k.cap()}, {"size", k.size()}, {"idempotent", idem}};
  r.text = idem ? "true\n" : "false\n";
  return r;
}

Report cmd_assoc_lemma(const Context& ctx, const std::vector<std::string>& i,
                       const std::vector<std::string>& j, const std::vector<std::string>& k,
                       bool raw_j) {
  const auto ci = closure(parse_all(i), ctx.cap()), ck = closure(parse_all(k), ctx.cap());
  const auto jf = parse_all(j);
  const auto cj = raw_j ? CappedClass::unchecked_for_testing(jf, ctx.cap()) : closure(jf, ctx.cap());
  const auto res = assoc_lemma_check(ci, cj, ck);
  Report r;
  r.result = {{"cap", ctx.cap()},
              {"subset_holds", res.subset_holds},
              {"equality_holds", res.equality_holds},
              {"j_closed", res.j_closed}};
  r.text = std::string("(IJ)K within I(JK): ") + (res.subset_holds ? "true" : "false") +
           "\n(IJ)K = I(JK): " + (res.equality_holds ? "true" : "false") +
           "\nJ closed: " + (res.j_closed ? "true" : "false") + "\n";
  return r;
}

Report cmd_classify(const Context& ctx, const std::string& a, const std::string& b) {
  const auto c1 = parse_class_id(a), c2 = parse_class_id(b);
  const auto v = classify_interval(c1, c2);
  Report r;
  r.result = {{"lower", c1.to_string()},
              {"upper", c2.to_string()},
              {"kind", to_string(v.kind)},
              {"justification", v.justification}};
  r.text = to_string(v.kind);
  if (v.count) {
    r.result["count"] = *v.count;
    r.text += " (" + std::to_string(*v.count) + ")";
  }
  r.text += "\n  by " + v.justification + "\n";
  if (v.bullet_class) {
    r.result["bullet_class"] = v.bullet_class->to_string();
    r.text += "  with C = " + v.bullet_class->to_string() + "\n";
  }
  if (v.witness) {
    r.result["witness"] = {{"name", v.witness_name}, {"function", fn_json(*v.witness)}};
    r.text += "  witness " + v.witness_name + " = " + ctx.show(*v.witness) + "\n";
  }
  return r;
}

Report cmd_crosscheck(const Context& ctx, const std::string& a, const std::string& b) {
  const auto c1 = parse_class_id(a), c2 = parse_class_id(b);
  const auto rep = cross_check_thm10(c1, c2, ctx.cap());
  Report r;
  r.result = {{"lower", c1.to_string()},
              {"upper", c2.to_string()},
              {"cap", ctx.cap()},
              {"kind", to_string(rep.verdict.kind)},
              {"sample_size", rep.sample_size},
              {"non_quasi_associative", rep.non_quasi_associative},
              {"consistent", rep.consistent},
              {"witness_at_cap", rep.witness_at_cap}};
  r.text = std::string(rep.consistent ? "consistent" : "INCONSISTENT") + ": " +
           to_string(rep.verdict.kind) + ", " + std::to_string(rep.non_quasi_associative) + " of " +
           std::to_string(rep.sample_size) + " difference members at arity <= " +
           std::to_string(ctx.cap()) + " are not quasi-associative\n";
  if (rep.first_non_quasi_associative) {
    r.result["first_non_quasi_associative"] = fn_json(*rep.first_non_quasi_associative);
    r.text += "  first: " + ctx.show(*rep.first_non_quasi_associative) + "\n";
  }
  return r;
}

Report cmd_enumerate_monadic(const Context& ctx) {
  const auto lat = quasi_monadic_lattice(ctx.cap());
  const auto edges = hasse_edges(lat);
  auto ref = monadic_reference_edges();
  std::sort(ref.begin(), ref.end());
  Report r;
  json classes = json::array();
  r.text = std::to_string(lat.size()) + " classes\n";
  for (const auto& c : lat) {
    classes.push_back({{"name", c.name}, {"generators", c.generator_mask}, {"size", c.members.size()}});
    r.text += "  " + c.name + " (" + std::to_string(c.members.size()) + " functions)\n";
  }
  json jedges = json::array();
  r.text += "covers:\n";
  for (const auto& [lo, hi] : edges) {
    jedges.push_back({lo, hi});
    r.text += "  " + lo + " < " + hi + "\n";
  }
  const bool match = edges == ref;
  r.text += std::string("matches reference diagram: ") + (match ? "true" : "false") + "\n";
  r.result = {{"cap", ctx.cap()},
              {"count", lat.size()},
              {"classes", std::move(classes)},
              {"covers", std::move(jedges)},
              {"matches_reference", match}};
  return r;
}

InclusionTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  const auto j = json::parse(in);
  const int max_param = j.value("max_param", 4);
  auto table = default_inclusion_table(max_param);
  auto pairs = [&](const char* key) {
    std::vector<std::pair<ClassId, ClassId>> out;
    if (j.contains(key)) {
      for (const auto& e : j.at(key)) {
        out.emplace_back(parse_class_id(e.at(0).get<std::string>()),
                         parse_class_id(e.at(1).get<std::string>()));
      }
    }
    return out;
  };
  if (j.contains("covers")) table.covers = pairs("covers");
  for (const auto& p : pairs("remove")) std::erase(table.covers, p);
  for (const auto& p : pairs("add")) table.covers.push_back(p);
  return table;
}

Report cmd_selfcheck(const Common& c, const std::string& table_path, std::uint64_t seed) {
  SelfcheckOptions opts;
  opts.budget = c.budget;
  opts.seed = seed;
  if (!table_path.empty()) opts.table = load_table(table_path);
  const auto results = run_selfcheck(opts);
  Report r;
  json props = json::array();
  for (const auto& p : results) {
    const std::string status = p.status == Verdict::Holds   ? "pass"
                               : p.status == Verdict::Fails ? "fail"
                                                            : "inconclusive";
    props.push_back({{"module", p.module}, {"name", p.name}, {"status", status}, {"detail", p.detail}});
    r.text += status + "  " + p.module + "/" + p.name + (p.detail.empty() ? "" : ": " + p.detail) + "\n";
  }
  const int code = selfcheck_exit_code(results);
  r.inconclusive = code == 2;
  r.result = {{"properties", std::move(props)}, {"exit_code", code}};
  return r;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "Emit a JSON report");
  sub->add_option("--budget", c.budget, "Search node budget")->check(CLI::PositiveNumber);
  sub->add_option("--cap", c.cap, "Arity cap")->check(CLI::Range(1, 8));
  sub->add_option("--format", c.format, "Function format in text output")
      ->check(CLI::IsMember({"hex", "anf", "dnf"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equational classes of Boolean functions"};
  app.require_subcommand(1);
  Common common;
  std::string a, b, table_path;
  int number = 0;
  std::uint64_t seed = SelfcheckOptions{}.seed;
  bool raw_j = false;
  std::vector<std::string> list1, list2, list3;
  std::function<Report(const Context&)> action;

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    add_common(s, common);
    return s;
  };

  auto* s = sub("cmp", "Compare two functions under simple variable substitution");
  s->add_option("F", a)->required();
  s->add_option("G", b)->required();
  s->callback([&] { action = [&](const Context& c) { return cmd_cmp(c, a, b); }; });

  s = sub("antichain", "Verify pairwise incomparability");
  s->add_option("F", list1)->required();
  s->callback([&] { action = [&](const Context& c) { return cmd_antichain(c, list1); }; });

  s = sub("member", "Test class membership");
  s->add_option("F", a)->required();
  s->add_option("CLASS", b)->required();
  s->callback([&] { action = [&](const Context&) { return cmd_member(a, b); }; });

  s = sub("rank", "a-separating rank");
  s->add_option("F", a)->required();
  s->add_option("A", number)->required();
  s->callback([&] { action = [&](const Context&) { return cmd_rank(a, number); }; });

  s = sub("assoc", "Test associativity");
  s->add_option("F", a)->required();
  s->callback([&] { action = [&](const Context&) { return cmd_assoc(a); }; });

  s = sub("quasi-assoc", "Test quasi-associativity");
  s->add_option("F", a)->required();
  s->callback([&] { action = [&](const Context&) { return cmd_quasi_assoc(a); }; });

  s = sub("iterate", "k-th iterate of a function");
  s->add_option("F", a)->required();
  s->add_option("K", number)->required()->check(CLI::NonNegativeNumber);
  s->callback([&] { action = [&](const Context& c) { return cmd_iterate(c, a, number); }; });

  s = sub("hom", "Search a hyperedge-surjective homomorphism G -> H");
  s->add_option("G", a)->required();
  s->add_option("H", b)->required();
  s->callback([&] { action = [&](const Context& c) { return cmd_hom(c, a, b); }; });

  s = sub("lemma4", "Compare homomorphism existence with f_H <= f_G");
  s->add_option("G", a)->required();
  s->add_option("H", b)->required();
  s->callback([&] { action = [&](const Context& c) { return cmd_lemma4(c, a, b); }; });

  s = sub("closure", "Capped class generated by functions");
  s->add_option("F", list1)->required();
  s->callback([&] { action = [&](const Context& c) { return cmd_closure(c, list1); }; });

  s = sub("compose-classes", "Class composition of two generated classes");
  s->add_option("--left", list1, "Generators of the left class")->required();
  s->add_option("--right", list2, "Generators of the right class")->required();
  s->callback([&] { action = [&](const Context& c) { return cmd_compose(c, list1, list2); }; });

  s = sub("idempotent", "Is the generated class idempotent at the cap");
  s->add_option("F", list1)->required();
  s->callback([&] { action = [&](const Context& c) { return cmd_idempotent(c, list1); }; });

  s = sub("assoc-lemma", "Compare (IJ)K with I(JK)");
  s->add_option("--i", list1, "Generators of I")->required();
  s->add_option("--j", list2, "Generators of J")->required();
  s->add_option("--k", list3, "Generators of K")->required();
  s->add_flag("--raw-j", raw_j, "Use the J generators as given, without closing them");
  s->callback([&] {
    action = [&](const Context& c) { return cmd_assoc_lemma(c, list1, list2, list3, raw_j); };
  });

  s = sub("classify", "Cardinality of the interval of equational classes");
  s->add_option("C1", a)->required();
  s->add_option("C2", b)->required();
  s->callback([&] { action = [&](const Context& c) { return cmd_classify(c, a, b); }; });

  s = sub("crosscheck", "Scan the interval difference for non-quasi-associative functions");
  s->add_option("C1", a)->required();
  s->add_option("C2", b)->required();
  s->callback([&] { action = [&](const Context& c) { return cmd_crosscheck(c, a, b); }; });

  s = sub("enumerate-monadic", "The classes of quasi-monadic functions");
  s->callback([&] { action = [&](const Context& c) { return cmd_enumerate_monadic(c); }; });

  s = sub("selfcheck", "Run the invariant suite");
  s->add_option("--table", table_path, "Inclusion table override (JSON)");
  s->add_option("--seed", seed, "Seed for sampled properties");
  s->callback([&] {
    action = [&](const Context&) { return cmd_selfcheck(common, table_path, seed); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    const Context ctx(common);
    r = action(ctx);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int code = r.inconclusive ? 2 : 0;
  if (r.result.contains("exit_code")) code = r.result["exit_code"].get<int>();

  if (common.json) {
    json argv_echo = json::array();
    for (int k = 1; k < argc; ++k) argv_echo.push_back(argv[k]);
    json out = {{"command", app.get_subcommands().front()->get_name()},
                {"argv", std::move(argv_echo)},
                {"result", std::move(r.result)},
                {"stats", {{"nodes", r.nodes}, {"wall_time", wall}}},
                {"bit_convention", kBitConvention}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.text;
  }
  return code;
}
