#include "eqclass/classes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <regex>
#include <set>

#include "eqclass/minor.hpp"

namespace eqclass {
namespace {

struct TagName {
  Tag tag;
  const char* name;
};

constexpr TagName kPlainNames[] = {
    {Tag::Empty, "Empty"},     {Tag::C0, "C0"},           {Tag::C1, "C1"},
    {Tag::C, "C"},             {Tag::Ic, "Ic"},           {Tag::I0, "I0"},
    {Tag::I1, "I1"},           {Tag::I, "I"},             {Tag::Istar, "Istar"},
    {Tag::Omega1, "Omega1"},   {Tag::Lambda, "Lambda"},   {Tag::Lambda0, "Lambda0"},
    {Tag::Lambda1, "Lambda1"}, {Tag::LambdaC, "LambdaC"}, {Tag::V, "V"},
    {Tag::V0, "V0"},           {Tag::V1, "V1"},           {Tag::Vc, "Vc"},
    {Tag::L, "L"},             {Tag::L0, "L0"},           {Tag::L1, "L1"},
    {Tag::Lc, "Lc"},           {Tag::LS, "LS"},           {Tag::S, "S"},
    {Tag::Sc, "Sc"},           {Tag::SM, "SM"},           {Tag::M, "M"},
    {Tag::M0, "M0"},           {Tag::M1, "M1"},           {Tag::Mc, "Mc"},
    {Tag::T0, "T0"},           {Tag::T1, "T1"},           {Tag::Tc, "Tc"},
    {Tag::Omega, "Omega"},
};

constexpr TagName kParamNames[] = {
    {Tag::U, "U"},     {Tag::W, "W"},     {Tag::TcU, "TcU"}, {Tag::TcW, "TcW"},
    {Tag::MU, "MU"},   {Tag::MW, "MW"},   {Tag::McU, "McU"}, {Tag::McW, "McW"},
};

bool is_u_side(Tag t) { return t == Tag::U || t == Tag::TcU || t == Tag::MU || t == Tag::McU; }

}  // namespace

std::string ClassId::to_string() const {
  for (const auto& [t, name] : kPlainNames) {
    if (t == tag) return name;
  }
  for (const auto& [t, name] : kParamNames) {
    if (t == tag) return std::string(name) + (m == kInf ? "Inf" : std::to_string(m));
  }
  return "?";
}

ClassId make_class(Tag tag, int m) {
  ClassId c{tag, m};
  if (c.parameterized()) {
    if (m < 2) throw Error("class " + c.to_string() + " needs a parameter m >= 2");
  } else {
    c.m = 0;
  }
  return c;
}

ClassId parse_class_id(std::string_view text) {
  for (const auto& [t, name] : kPlainNames) {
    if (text == name) return {t, 0};
  }
  static const std::regex kParam(R"(^(U|W|TcU|TcW|MU|MW|McU|McW)([0-9]+|Inf)$)");
  std::cmatch match;
  const std::string s(text);
  if (std::regex_match(s.c_str(), match, kParam)) {
    Tag tag = Tag::U;
    for (const auto& [t, name] : kParamNames) {
      if (match[1] == name) tag = t;
    }
    if (match[2] == "Inf") return {tag, kInf};
    const std::string digits = match[2];
    if (digits.size() > 6) throw ParseError("class parameter too large in '" + s + "'");
    const int m = std::stoi(digits);
    if (m < 2) throw ParseError("class parameter must be >= 2 in '" + s + "'");
    return {tag, m};
  }
  throw ParseError("unknown class '" + s + "'");
}

ClassId dual_class(ClassId c) {
  auto swap = [&](Tag a, Tag b) -> std::optional<Tag> {
    if (c.tag == a) return b;
    if (c.tag == b) return a;
    return std::nullopt;
  };
  static constexpr std::pair<Tag, Tag> kPairs[] = {
      {Tag::U, Tag::W},           {Tag::TcU, Tag::TcW},      {Tag::MU, Tag::MW},
      {Tag::McU, Tag::McW},       {Tag::T0, Tag::T1},        {Tag::Lambda, Tag::V},
      {Tag::Lambda0, Tag::V1},    {Tag::Lambda1, Tag::V0},   {Tag::LambdaC, Tag::Vc},
      {Tag::M0, Tag::M1},         {Tag::I0, Tag::I1},        {Tag::C0, Tag::C1},
      {Tag::L0, Tag::L1},
  };
  for (auto [a, b] : kPairs) {
    if (auto t = swap(a, b)) return {*t, c.m};
  }
  return c;
}

std::string Rank::to_string() const {
  switch (kind) {
    case BelowTwo: return "below-two";
    case Finite: return std::to_string(m);
    case Infinite: return "infinite";
  }
  return "?";
}

std::vector<std::uint32_t> smallest_nonseparating_subset(const BooleanFunction& f, bool a) {
  const int n = f.arity();
  if (n > kMaxRankArity) {
    throw Error("separating rank needs arity <= " + std::to_string(kMaxRankArity));
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  // A subset is non-separating iff the coordinates where its points differ
  // from a cover every coordinate. Only maximal differ-sets matter.
  std::vector<std::uint8_t> present(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> witness_of(std::size_t{1} << n, 0);
  for (std::uint32_t p = 0; p <= full; ++p) {
    if (f.bit(p) != a) continue;
    const std::uint32_t differ = a ? (~p & full) : p;
    present[differ] = 1;
    witness_of[differ] = p;
  }
  std::vector<std::uint8_t> has_super(present);
  for (int b = 0; b < n; ++b) {
    for (std::uint32_t s = 0; s <= full; ++s) {
      if (!(s & (1u << b))) has_super[s] |= has_super[s | (1u << b)];
    }
  }
  std::vector<std::uint32_t> maximal;
  std::uint32_t reach = 0;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (!present[s]) continue;
    bool strict = false;
    for (int b = 0; b < n && !strict; ++b) {
      if (!(s & (1u << b)) && has_super[s | (1u << b)]) strict = true;
    }
    if (!strict) maximal.push_back(s);
    reach |= s;
  }
  if (reach != full) return {};

  // Exact minimum set cover by iterative deepening, branching on the lowest
  // uncovered coordinate.
  std::vector<std::uint32_t> chosen;
  auto search = [&](auto&& self, std::uint32_t covered, int left) -> bool {
    if (covered == full) return true;
    if (left == 0) return false;
    const std::uint32_t need = std::countr_zero(~covered & full);
    const int max_gain = [&] {
      int best = 0;
      for (auto s : maximal) best = std::max(best, std::popcount(s & ~covered));
      return best;
    }();
    if (max_gain * left < std::popcount(~covered & full)) return false;
    for (auto s : maximal) {
      if (!(s & (1u << need))) continue;
      chosen.push_back(s);
      if (self(self, covered | s, left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= n; ++k) {
    chosen.clear();
    if (search(search, 0, k)) break;
  }
  std::vector<std::uint32_t> points;
  for (auto s : chosen) points.push_back(witness_of[s]);
  return points;
}

Rank separating_rank(const BooleanFunction& f, bool a) {
  const auto subset = smallest_nonseparating_subset(f, a);
  if (subset.empty()) return {Rank::Infinite, 0};
  const int s = static_cast<int>(subset.size());
  if (s <= 2) return {Rank::BelowTwo, 0};
  return {Rank::Finite, s - 1};
}

namespace {

bool is_pure_conjunction(const BooleanFunction& f) {
  if (f.is_constant()) return false;
  std::uint32_t meet = ~0u;
  const auto n = static_cast<std::uint32_t>(f.size());
  for (std::uint32_t p = 0; p < n; ++p) {
    if (f.bit(p)) meet &= p;
  }
  for (std::uint32_t p = 0; p < n; ++p) {
    if (f.bit(p) != ((p & meet) == meet)) return false;
  }
  return true;
}

}  // namespace

ClassProfile profile_of(const BooleanFunction& f) {
  ClassProfile p;
  p.t0 = !f.at_zero();
  p.t1 = f.at_one();
  p.monotone = is_monotone(f);
  const auto d = dual(f);
  p.self_dual = d == f;
  p.linear = zhegalkin(f).degree() <= 1;
  p.is_constant = f.is_constant();
  p.constant_value = f.at_zero();
  p.conjunction = is_pure_conjunction(f);
  p.disjunction = is_pure_conjunction(d);
  if (p.is_constant) {
    p.monadic = p.constant_value ? ClassProfile::Monadic::One : ClassProfile::Monadic::Zero;
  } else if (essential_arity(f) == 1) {
    p.monadic = p.t0 ? ClassProfile::Monadic::Var : ClassProfile::Monadic::NegVar;
  }
  if (f.arity() <= kMaxRankArity) {
    p.rank1 = separating_rank(f, true);
    p.rank0 = separating_rank(f, false);
  }
  return p;
}

bool member(const ClassProfile& p, ClassId c) {
  using Mo = ClassProfile::Monadic;
  const bool tc = p.t0 && p.t1;
  const bool zero = p.monadic == Mo::Zero, one = p.monadic == Mo::One;
  const bool var = p.monadic == Mo::Var;
  auto rank_ok = [&](const std::optional<Rank>& r) {
    if (!r) throw Error("separating rank needs arity <= " + std::to_string(kMaxRankArity));
    return r->at_least(c.m);
  };
  switch (c.tag) {
    case Tag::Empty: return false;
    case Tag::C0: return zero;
    case Tag::C1: return one;
    case Tag::C: return zero || one;
    case Tag::Ic: return var;
    case Tag::I0: return var || zero;
    case Tag::I1: return var || one;
    case Tag::I: return var || zero || one;
    case Tag::Istar: return var || p.monadic == Mo::NegVar;
    case Tag::Omega1: return p.monadic != Mo::None;
    case Tag::Lambda: return p.conjunction || p.is_constant;
    case Tag::Lambda0: return p.conjunction || zero;
    case Tag::Lambda1: return p.conjunction || one;
    case Tag::LambdaC: return p.conjunction;
    case Tag::V: return p.disjunction || p.is_constant;
    case Tag::V0: return p.disjunction || zero;
    case Tag::V1: return p.disjunction || one;
    case Tag::Vc: return p.disjunction;
    case Tag::L: return p.linear;
    case Tag::L0: return p.linear && p.t0;
    case Tag::L1: return p.linear && p.t1;
    case Tag::Lc: return p.linear && tc;
    case Tag::LS: return p.linear && p.self_dual;
    case Tag::S: return p.self_dual;
    case Tag::Sc: return p.self_dual && tc;
    case Tag::SM: return p.self_dual && p.monotone;
    case Tag::M: return p.monotone;
    case Tag::M0: return p.monotone && p.t0;
    case Tag::M1: return p.monotone && p.t1;
    case Tag::Mc: return p.monotone && tc;
    case Tag::T0: return p.t0;
    case Tag::T1: return p.t1;
    case Tag::Tc: return tc;
    case Tag::Omega: return true;
    case Tag::U: return rank_ok(p.rank1);
    case Tag::W: return rank_ok(p.rank0);
    case Tag::TcU: return tc && rank_ok(p.rank1);
    case Tag::TcW: return tc && rank_ok(p.rank0);
    case Tag::MU: return p.monotone && rank_ok(p.rank1);
    case Tag::MW: return p.monotone && rank_ok(p.rank0);
    case Tag::McU: return p.monotone && tc && rank_ok(p.rank1);
    case Tag::McW: return p.monotone && tc && rank_ok(p.rank0);
  }
  return false;
}

bool member(const BooleanFunction& f, ClassId c) {
  if (c.parameterized() && f.arity() > kMaxRankArity) {
    // Rank-based classes are decided on the essential core.
    const auto core = essential_core(f).function;
    if (core.arity() > kMaxRankArity) {
      throw Error("separating rank needs essential arity <= " + std::to_string(kMaxRankArity));
    }
    return member(profile_of(core), c);
  }
  return member(profile_of(f), c);
}

std::vector<ClassId> catalog(int max_param) {
  std::vector<ClassId> out;
  for (const auto& [t, name] : kPlainNames) out.push_back({t, 0});
  for (const auto& [t, name] : kParamNames) {
    for (int m = 2; m <= max_param; ++m) out.push_back({t, m});
    out.push_back({t, kInf});
  }
  return out;
}

InclusionTable default_inclusion_table(int max_param) {
  if (max_param < 2) throw Error("inclusion table needs max_param >= 2");
  InclusionTable t;
  t.max_param = max_param;
  t.nodes = catalog(max_param);
  auto add = [&](std::string_view lo, std::string_view hi) {
    t.covers.emplace_back(parse_class_id(lo), parse_class_id(hi));
  };
  static constexpr std::pair<const char*, const char*> kPlainCovers[] = {
      {"Empty", "C0"},      {"Empty", "C1"},      {"Empty", "Ic"},      {"C0", "C"},
      {"C1", "C"},          {"C0", "I0"},         {"C1", "I1"},         {"C", "I"},
      {"Ic", "Istar"},      {"Ic", "I0"},         {"Ic", "I1"},         {"Ic", "LambdaC"},
      {"Ic", "Vc"},         {"Ic", "Lc"},         {"Ic", "SM"},         {"I0", "I"},
      {"I0", "Lambda0"},    {"I0", "V0"},         {"I0", "L0"},         {"I1", "I"},
      {"I1", "V1"},         {"I1", "Lambda1"},    {"I1", "L1"},         {"I", "Omega1"},
      {"I", "Lambda"},      {"I", "V"},           {"Istar", "Omega1"},  {"Istar", "LS"},
      {"Omega1", "L"},      {"LambdaC", "Lambda0"}, {"LambdaC", "Lambda1"},
      {"Lambda0", "Lambda"}, {"Lambda1", "Lambda"}, {"Lambda1", "M1"},  {"Lambda", "M"},
      {"Vc", "V0"},         {"Vc", "V1"},         {"V0", "V"},          {"V1", "V"},
      {"V0", "M0"},         {"V", "M"},           {"Lc", "L0"},         {"Lc", "L1"},
      {"Lc", "LS"},         {"Lc", "Sc"},         {"L0", "L"},          {"L1", "L"},
      {"LS", "L"},          {"LS", "S"},          {"L0", "T0"},         {"L1", "T1"},
      {"L", "Omega"},       {"SM", "Sc"},         {"Sc", "S"},          {"Sc", "Tc"},
      {"S", "Omega"},       {"Mc", "M0"},         {"Mc", "M1"},         {"Mc", "Tc"},
      {"M0", "M"},          {"M1", "M"},          {"M0", "T0"},         {"M1", "T1"},
      {"M", "Omega"},       {"Tc", "T0"},         {"Tc", "T1"},         {"T0", "Omega"},
      {"T1", "Omega"},
      // Entry points of the separating chains.
      {"LambdaC", "McUInf"}, {"Lambda0", "MUInf"}, {"Vc", "McWInf"},    {"V1", "MWInf"},
      {"SM", "McU2"},       {"SM", "McW2"},       {"McU2", "Mc"},       {"MU2", "M0"},
      {"TcU2", "Tc"},       {"U2", "T0"},         {"McW2", "Mc"},       {"MW2", "M1"},
      {"TcW2", "Tc"},       {"W2", "T1"},
  };
  for (auto [lo, hi] : kPlainCovers) add(lo, hi);

  std::vector<int> params;
  for (int m = 2; m <= max_param; ++m) params.push_back(m);
  params.push_back(kInf);
  for (Tag base : {Tag::U, Tag::W}) {
    const bool u = is_u_side(base);
    const Tag tc = u ? Tag::TcU : Tag::TcW, mono = u ? Tag::MU : Tag::MW,
              mc = u ? Tag::McU : Tag::McW;
    for (int m : params) {
      t.covers.push_back({{mc, m}, {tc, m}});
      t.covers.push_back({{mc, m}, {mono, m}});
      t.covers.push_back({{tc, m}, {base, m}});
      t.covers.push_back({{mono, m}, {base, m}});
    }
    for (Tag k : {base, tc, mono, mc}) {
      for (int m = 2; m < max_param; ++m) t.covers.push_back({{k, m + 1}, {k, m}});
      t.covers.push_back({{k, kInf}, {k, max_param}});
    }
  }
  return t;
}

bool InclusionTable::includes(ClassId lower, ClassId upper) const {
  if (lower == upper) return true;
  std::set<ClassId> seen{lower};
  std::vector<ClassId> stack{lower};
  while (!stack.empty()) {
    const ClassId c = stack.back();
    stack.pop_back();
    for (const auto& [lo, hi] : covers) {
      if (lo == c && seen.insert(hi).second) {
        if (hi == upper) return true;
        stack.push_back(hi);
      }
    }
  }
  return false;
}

namespace {

int table_param(ClassId c) { return c.parameterized() && c.m != kInf ? c.m : 0; }

const InclusionTable& table_for(int max_param) {
  static std::mutex mu;
  static std::map<int, InclusionTable> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(max_param);
  if (it == cache.end()) it = cache.emplace(max_param, default_inclusion_table(max_param)).first;
  return it->second;
}

}  // namespace

bool is_subclass(ClassId c1, ClassId c2) {
  const int k = std::max({2, table_param(c1), table_param(c2)});
  return table_for(k).includes(c1, c2);
}

std::vector<BooleanFunction> all_functions(int arity) {
  if (arity < 1 || arity > 4) throw Error("exhaustive enumeration supports arity 1..4");
  const std::uint64_t count = std::uint64_t{1} << (1u << arity);
  std::vector<BooleanFunction> out;
  out.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) out.push_back(BooleanFunction::from_words(arity, {t}));
  return out;
}

TableValidation validate_inclusion_table(const InclusionTable& table, int cap) {
  TableValidation v;
  const auto& nodes = table.nodes;
  // membership[i] holds, per function, whether it is in nodes[i].
  std::vector<std::vector<bool>> membership(nodes.size());
  for (int a = 1; a <= cap; ++a) {
    for (const auto& f : all_functions(a)) {
      const auto prof = profile_of(f);
      for (std::size_t i = 0; i < nodes.size(); ++i) membership[i].push_back(member(prof, nodes[i]));
      ++v.functions_checked;
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i == j) continue;
      bool subset = true;
      for (std::size_t k = 0; k < v.functions_checked && subset; ++k) {
        if (membership[i][k] && !membership[j][k]) subset = false;
      }
      const bool claimed = table.includes(nodes[i], nodes[j]);
      const std::string pair = nodes[i].to_string() + " <= " + nodes[j].to_string();
      if (claimed && !subset) {
        v.false_inclusions.push_back(pair);
        v.ok = false;
      } else if (!claimed && subset) {
        // At arity <= cap every rank >= cap collapses to infinite rank.
        auto collapsed = [&](ClassId c) { return c.parameterized() && c.m >= cap; };
        const bool invisible = collapsed(nodes[i]) && collapsed(nodes[j]);
        v.unseparated.push_back(pair);
        if (!invisible) v.ok = false;
      }
    }
  }
  return v;
}

bool is_idempotent_class(ClassId c) {
  // Clones plus the four non-clone idempotents Empty, C0, C1, C; the catalog
  // contains nothing else.
  (void)c;
  return true;
}

std::vector<BooleanFunction> difference_sample(ClassId c1, ClassId c2, int arity_cap) {
  if (arity_cap < 1 || arity_cap > 4) throw Error("difference_sample supports arity cap 1..4");
  std::set<BooleanFunction> keys;
  for (int a = 1; a <= arity_cap; ++a) {
    for (const auto& f : all_functions(a)) {
      const auto prof = profile_of(f);
      if (member(prof, c2) && !member(prof, c1)) keys.insert(canonical_key(f));
    }
  }
  return {keys.begin(), keys.end()};
}

}  // namespace eqclass
