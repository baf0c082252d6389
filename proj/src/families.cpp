#include "eqclass/families.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace eqclass {
namespace {

struct Range {
  int standard_min;
  int relaxed_min;
};

Range range_of(Family f) {
  switch (f) {
    case Family::F:
    case Family::G:
    case Family::U:
    case Family::TU: return {4, 2};
    case Family::H: return {2, 2};
    case Family::BigG: return {2, 2};
    case Family::Mu: return {3, 3};
    case Family::T:
    case Family::S: return {7, 3};
  }
  return {0, 0};
}

const char* family_name(Family f) {
  switch (f) {
    case Family::F: return "f";
    case Family::G: return "g";
    case Family::U: return "u";
    case Family::TU: return "tu";
    case Family::H: return "H";
    case Family::BigG: return "G";
    case Family::Mu: return "mu";
    case Family::T: return "T";
    case Family::S: return "s";
  }
  return "?";
}

int weight(std::uint32_t p) { return std::popcount(p); }

BooleanFunction build_f(int n) {
  return BooleanFunction::from_predicate(n, [n](std::uint32_t p) {
    const int w = weight(p);
    return w == 1 || w == n - 1;
  });
}

BooleanFunction build_g(int n) {
  return BooleanFunction::from_predicate(n, [n](std::uint32_t p) {
    const int zeros = n - weight(p);
    return !(zeros == 1 || zeros == n);
  });
}

// x1 & inner(x2, ..., x_{n+1})
BooleanFunction guarded(const BooleanFunction& inner) {
  const int n = inner.arity();
  return BooleanFunction::from_predicate(
      n + 1, [&](std::uint32_t p) { return (p & 1u) && inner.bit(p >> 1); });
}

BooleanFunction build_H(int n) {
  return BooleanFunction::from_predicate(n, [](std::uint32_t p) { return weight(p) >= 2; });
}

BooleanFunction build_G(int n, int m) {
  const int arity = m + n - 1;
  if (arity > kMaxArity) throw Error("G parameters exceed the arity cap");
  return BooleanFunction::from_predicate(arity, [n, m](std::uint32_t p) {
    const std::uint32_t outer = p & ((1u << (n - 1)) - 1);
    const std::uint32_t inner = p >> (n - 1);
    const int inner_value = weight(inner & ((1u << m) - 1)) >= 2 ? 1 : 0;
    return weight(outer) + inner_value >= 2;
  });
}

BooleanFunction build_mu(int n) {
  return BooleanFunction::from_predicate(
      n, [n](std::uint32_t p) { return weight(p) >= (n + 1) / 2; });
}

// Selectors s1 = x_{n+1}, s2 = x_{n+2}; `flip` complements both first.
BooleanFunction build_T(int n, bool flip) {
  if (n + 2 > kMaxArity) throw Error("T parameter exceeds the arity cap");
  return BooleanFunction::from_predicate(n + 2, [n, flip](std::uint32_t p) {
    const std::uint32_t body = p & ((1u << n) - 1);
    int sel = weight(p >> n);
    if (flip) sel = 2 - sel;
    const int w = weight(body);
    switch (sel) {
      case 2: return w >= 2;            // H_n
      case 1: return w >= (n + 1) / 2;  // mu_n
      default: return n - w < 2;        // dual of H_n
    }
  });
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad integer '" + std::string(s) + "' in family spec");
  }
  return v;
}

}  // namespace

std::string FamilySpec::to_string() const {
  std::string s = std::string(family_name(family)) + "@" + std::to_string(n);
  if (family == Family::BigG) s += "," + std::to_string(m);
  return s;
}

FamilyMember generate(const FamilySpec& spec, bool allow_out_of_range) {
  const Range r = range_of(spec.family);
  bool standard = spec.n >= r.standard_min;
  const bool odd_required =
      spec.family == Family::Mu || spec.family == Family::T || spec.family == Family::S;
  if (odd_required && spec.n % 2 == 0) {
    throw Error(spec.to_string() + ": parameter must be odd");
  }
  if (spec.family == Family::BigG && spec.m < spec.n) {
    throw Error(spec.to_string() + ": requires m >= n");
  }
  if (!standard && (!allow_out_of_range || spec.n < r.relaxed_min)) {
    throw Error(spec.to_string() + ": parameter below the supported range (minimum " +
                std::to_string(r.standard_min) + ")");
  }
  BooleanFunction fn(1);
  switch (spec.family) {
    case Family::F: fn = build_f(spec.n); break;
    case Family::G: fn = build_g(spec.n); break;
    case Family::U: fn = guarded(build_f(spec.n)); break;
    case Family::TU: fn = guarded(build_g(spec.n)); break;
    case Family::H: fn = build_H(spec.n); break;
    case Family::BigG: fn = build_G(spec.n, spec.m); break;
    case Family::Mu: fn = build_mu(spec.n); break;
    case Family::T: fn = build_T(spec.n, false); break;
    case Family::S: fn = build_T(spec.n, true); break;
  }
  return {std::move(fn), standard};
}

BooleanFunction make_f(int n) { return generate({Family::F, n}).function; }
BooleanFunction make_g(int n) { return generate({Family::G, n}).function; }
BooleanFunction make_u(int n) { return generate({Family::U, n}).function; }
BooleanFunction make_tu(int n) { return generate({Family::TU, n}).function; }
BooleanFunction make_H(int n) { return generate({Family::H, n}).function; }
BooleanFunction make_G(int n, int m) { return generate({Family::BigG, n, m}).function; }
BooleanFunction make_mu(int n) { return generate({Family::Mu, n}).function; }
BooleanFunction make_T(int n) { return generate({Family::T, n}).function; }
BooleanFunction make_s(int n) { return generate({Family::S, n}).function; }

std::optional<FamilySpec> parse_family_spec(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) return std::nullopt;
  const auto name = text.substr(0, at);
  static const std::pair<std::string_view, Family> kNames[] = {
      {"f", Family::F},   {"g", Family::G},     {"u", Family::U},
      {"tu", Family::TU}, {"H", Family::H},     {"G", Family::BigG},
      {"mu", Family::Mu}, {"T", Family::T},     {"s", Family::S}};
  for (const auto& [key, fam] : kNames) {
    if (name != key) continue;
    auto params = text.substr(at + 1);
    FamilySpec spec{fam, 0, 0};
    const auto comma = params.find(',');
    if (fam == Family::BigG) {
      if (comma == std::string_view::npos) throw ParseError("G spec needs two parameters: G@n,m");
      spec.n = parse_int(params.substr(0, comma));
      spec.m = parse_int(params.substr(comma + 1));
    } else {
      if (comma != std::string_view::npos) {
        throw ParseError(std::string(key) + " spec takes one parameter");
      }
      spec.n = parse_int(params);
    }
    return spec;
  }
  return std::nullopt;
}

std::string monadic_class_name(unsigned mask) {
  switch (mask) {
    case 0b0000: return "Empty";
    case 0b0100: return "C0";
    case 0b1000: return "C1";
    case 0b1100: return "C";
    case 0b0001: return "Ic";
    case 0b0101: return "I0";
    case 0b1001: return "I1";
    case 0b1101: return "I";
    case 0b0011: return "Istar";
    case 0b1111: return "Omega1";
    default: break;
  }
  std::string s = "{";
  bool first = true;
  auto add = [&](const char* t) {
    if (!first) s += ",";
    s += t;
    first = false;
  };
  if (mask & 0b0100) add("0");
  if (mask & 0b1000) add("1");
  if (mask & 0b0001) add("x1");
  if (mask & 0b0010) add("!x1");
  return s + "}Ic";
}

std::vector<MonadicClass> quasi_monadic_lattice(int cap) {
  const BooleanFunction gens[4] = {projection(1, 1), ~projection(1, 1),
                                   BooleanFunction::constant(1, false),
                                   BooleanFunction::constant(1, true)};
  std::vector<MonadicClass> out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<BooleanFunction> g;
    for (int b = 0; b < 4; ++b) {
      if (mask & (1u << b)) g.push_back(gens[b]);
    }
    out.push_back({mask, monadic_class_name(mask), closure(g, cap)});
  }
  return out;
}

const std::vector<std::pair<std::string, std::string>>& monadic_reference_edges() {
  static const std::vector<std::pair<std::string, std::string>> kEdges = {
      {"Empty", "C0"},
      {"Empty", "C1"},
      {"Empty", "Ic"},
      {"Empty", "{!x1}Ic"},
      {"C0", "C"},
      {"C0", "I0"},
      {"C0", "{0,!x1}Ic"},
      {"C1", "C"},
      {"C1", "I1"},
      {"C1", "{1,!x1}Ic"},
      {"Ic", "I0"},
      {"Ic", "I1"},
      {"Ic", "Istar"},
      {"{!x1}Ic", "{0,!x1}Ic"},
      {"{!x1}Ic", "{1,!x1}Ic"},
      {"{!x1}Ic", "Istar"},
      {"C", "I"},
      {"C", "{0,1,!x1}Ic"},
      {"I0", "I"},
      {"I0", "{0,x1,!x1}Ic"},
      {"I1", "I"},
      {"I1", "{1,x1,!x1}Ic"},
      {"{0,!x1}Ic", "{0,x1,!x1}Ic"},
      {"{0,!x1}Ic", "{0,1,!x1}Ic"},
      {"{1,!x1}Ic", "{0,1,!x1}Ic"},
      {"{1,!x1}Ic", "{1,x1,!x1}Ic"},
      {"Istar", "{0,x1,!x1}Ic"},
      {"Istar", "{1,x1,!x1}Ic"},
      {"{0,1,!x1}Ic", "Omega1"},
      {"I", "Omega1"},
      {"{0,x1,!x1}Ic", "Omega1"},
      {"{1,x1,!x1}Ic", "Omega1"},
  };
  return kEdges;
}

std::vector<PlacementAssertion> placement_assertions(int max_arity) {
  auto c = [](std::string_view name) { return parse_class_id(name); };
  std::vector<PlacementAssertion> out;
  auto add = [&](std::string label, BooleanFunction f, std::vector<ClassId> in,
                 std::vector<ClassId> not_in) {
    out.push_back({std::move(label), std::move(f), std::move(in), std::move(not_in)});
  };
  const auto s = [](auto... parts) { return (std::string() + ... + std::string(parts)); };
  for (int n = 4; n <= max_arity; ++n) {
    std::vector<ClassId> f_out{c("T1"), c("Tc"), c("U2"), c("S"), c("M")};
    if (n >= 5) f_out.push_back(c("L"));
    add(s("f@", std::to_string(n)), make_f(n), {c("T0")}, f_out);
    add(s("g@", std::to_string(n)), make_g(n), {c("Tc")},
        {c("Mc"), c("Sc"), c("TcU2"), c("TcW2")});
    add(s("H@", std::to_string(n)), make_H(n), {c("McW2")}, {c("U2"), c("Lambda"), c("V")});
    add(s("dual(H@", std::to_string(n), ")"), dual(make_H(n)), {c("McU2")},
        {c("W2"), c("Lambda"), c("V")});
  }
  for (int n = 4; n + 1 <= max_arity; ++n) {
    add(s("u@", std::to_string(n)), make_u(n), {c("UInf")}, {c("TcU2")});
    add(s("tu@", std::to_string(n)), make_tu(n), {c("TcUInf")}, {c("MU2")});
  }
  for (int n = 2; n + 1 <= max_arity; ++n) {
    add(s("H@", std::to_string(n + 1)), make_H(n + 1), {make_class(Tag::McW, n)},
        {make_class(Tag::W, n + 1)});
    for (int m = n + 1; n + m <= max_arity; ++m) {
      add(s("G@", std::to_string(n + 1), ",", std::to_string(m)), make_G(n + 1, m),
          {make_class(Tag::McW, n)}, {make_class(Tag::W, n + 1)});
    }
  }
  // x1 & H_m: every true point has x1 = 1, so the family sits on the
  // 1-separating side.
  for (int m = 2; m + 1 <= max_arity; ++m) {
    std::vector<ClassId> g_out{c("V")};
    if (m >= 3) g_out.push_back(c("Lambda"));
    add(s("G@2,", std::to_string(m)), make_G(2, m), {c("McUInf")}, g_out);
    add(s("dual(G@2,", std::to_string(m), ")"), dual(make_G(2, m)), {c("McWInf")},
        {c("Lambda")});
  }
  for (int n : {7, 9}) {
    add(s("T@", std::to_string(n)), make_T(n), {c("SM")}, {c("L")});
    add(s("not(T@", std::to_string(n), ")"), complement(make_T(n)), {c("S")},
        {c("Sc"), c("L")});
    add(s("s@", std::to_string(n)), make_s(n), {c("Sc")}, {c("SM"), c("L")});
  }
  return out;
}

std::vector<std::string> placement_violations(const PlacementAssertion& a) {
  const auto prof = profile_of(a.function);
  std::vector<std::string> bad;
  for (auto k : a.in) {
    if (!member(prof, k)) bad.push_back("not in " + k.to_string());
  }
  for (auto k : a.out) {
    if (member(prof, k)) bad.push_back("in " + k.to_string());
  }
  return bad;
}

std::vector<std::pair<std::string, std::string>> hasse_edges(const std::vector<MonadicClass>& classes) {
  auto below = [](const MonadicClass& a, const MonadicClass& b) {
    return a.members.is_subset_of(b.members) && !(a.members == b.members);
  };
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& lo : classes) {
    for (const auto& hi : classes) {
      if (!below(lo, hi)) continue;
      const bool cover = std::none_of(classes.begin(), classes.end(), [&](const MonadicClass& mid) {
        return below(lo, mid) && below(mid, hi);
      });
      if (cover) out.emplace_back(lo.name, hi.name);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eqclass
