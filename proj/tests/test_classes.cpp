#include <doctest.h>

#include "eqclass/classes.hpp"
#include "eqclass/families.hpp"
#include "eqclass/minor.hpp"
#include "eqclass/monoid.hpp"
#include "oracle.hpp"

using namespace eqclass;

namespace {

// Membership straight from the definitions of the Post classes.
bool oracle_member(const BooleanFunction& f, ClassId c) {
  namespace o = oracle;
  const bool t0 = o::t0(f), t1 = o::t1(f), tc = t0 && t1;
  const int ess = o::essential_arity(f);
  const bool is_const = ess == 0;
  const bool var = ess == 1 && tc;
  const bool negvar = ess == 1 && !t0 && !t1;
  const int m = c.m == kInf ? 64 : c.m;
  auto u = [&] { return o::separating(f, 1, m); };
  auto w = [&] { return o::separating(f, 0, m); };
  switch (c.tag) {
    case Tag::Empty: return false;
    case Tag::C0: return is_const && t0;
    case Tag::C1: return is_const && t1;
    case Tag::C: return is_const;
    case Tag::Ic: return var;
    case Tag::I0: return var || (is_const && t0);
    case Tag::I1: return var || (is_const && t1);
    case Tag::I: return var || is_const;
    case Tag::Istar: return var || negvar;
    case Tag::Omega1: return ess <= 1;
    case Tag::Lambda: return o::lambda(f);
    case Tag::Lambda0: return o::lambda(f) && t0;
    case Tag::Lambda1: return o::lambda(f) && t1;
    case Tag::LambdaC: return o::lambda(f) && tc;
    case Tag::V: return o::vee(f);
    case Tag::V0: return o::vee(f) && t0;
    case Tag::V1: return o::vee(f) && t1;
    case Tag::Vc: return o::vee(f) && tc;
    case Tag::L: return o::linear(f);
    case Tag::L0: return o::linear(f) && t0;
    case Tag::L1: return o::linear(f) && t1;
    case Tag::Lc: return o::linear(f) && tc;
    case Tag::LS: return o::linear(f) && o::self_dual(f);
    case Tag::S: return o::self_dual(f);
    case Tag::Sc: return o::self_dual(f) && tc;
    case Tag::SM: return o::self_dual(f) && o::monotone(f);
    case Tag::M: return o::monotone(f);
    case Tag::M0: return o::monotone(f) && t0;
    case Tag::M1: return o::monotone(f) && t1;
    case Tag::Mc: return o::monotone(f) && tc;
    case Tag::T0: return t0;
    case Tag::T1: return t1;
    case Tag::Tc: return tc;
    case Tag::Omega: return true;
    case Tag::U: return u();
    case Tag::W: return w();
    case Tag::TcU: return tc && u();
    case Tag::TcW: return tc && w();
    case Tag::MU: return o::monotone(f) && u();
    case Tag::MW: return o::monotone(f) && w();
    case Tag::McU: return o::monotone(f) && tc && u();
    case Tag::McW: return o::monotone(f) && tc && w();
  }
  return false;
}

}  // namespace

TEST_SUITE("classes") {

TEST_CASE("membership examples") {
  const auto a = parse_function("x1 & x2");
  CHECK(member(a, parse_class_id("M")));
  CHECK_FALSE(member(a, parse_class_id("S")));
  CHECK(member(make_f(4), parse_class_id("L")));
  CHECK_FALSE(member(make_f(5), parse_class_id("L")));
}

TEST_CASE("membership agrees with the definitions at arity <= 3") {
  const auto nodes = catalog(4);
  for (const auto& f : oracle::all_up_to(3)) {
    const auto p = profile_of(f);
    for (auto c : nodes) {
      INFO(c.to_string(), " ", format_function(f));
      REQUIRE(member(p, c) == oracle_member(f, c));
    }
  }
}

TEST_CASE("membership agrees with the definitions on the families") {
  const auto nodes = catalog(5);
  for (const auto& f : {make_f(5), make_g(5), make_u(4), make_tu(4), make_H(4), make_H(5),
                        dual(make_H(4)), make_G(2, 3), make_G(3, 3), make_mu(5)}) {
    for (auto c : nodes) {
      INFO(c.to_string(), " ", format_function(f));
      REQUIRE(member(f, c) == oracle_member(f, c));
    }
  }
}

TEST_CASE("class names round trip") {
  for (auto c : catalog(6)) CHECK(parse_class_id(c.to_string()) == c);
  CHECK(parse_class_id("McUInf") == make_class(Tag::McU, kInf));
  CHECK(parse_class_id("TcW2") == make_class(Tag::TcW, 2));
  CHECK(parse_class_id("U3") == make_class(Tag::U, 3));
  CHECK_THROWS(parse_class_id("U1"));
  CHECK_THROWS(parse_class_id("Nope"));
}

TEST_CASE("separating ranks") {
  CHECK(separating_rank(parse_function("x1 & x2"), true).kind == Rank::Infinite);
  const auto h4 = separating_rank(make_H(4), false);
  CHECK(h4.kind == Rank::Finite);
  CHECK(h4.m == 3);
  CHECK(separating_rank(make_u(4), true).kind == Rank::Infinite);
  CHECK(separating_rank(BooleanFunction::constant(2, false), true).kind == Rank::Infinite);
  for (const auto& f : oracle::all_up_to(4)) {
    for (int a : {0, 1}) {
      const auto r = separating_rank(f, a);
      for (int k = 2; k <= 17; ++k) {
        const bool expect = r.kind == Rank::Infinite || (r.kind == Rank::Finite && k <= r.m);
        REQUIRE(oracle::separating(f, a, k) == expect);
      }
    }
  }
}

TEST_CASE("rank chain") {
  for (const auto& f : oracle::all_up_to(4)) {
    const auto r = separating_rank(f, true);
    if (r.kind != Rank::Finite) continue;
    for (int k = 2; k <= r.m; ++k) REQUIRE(member(f, make_class(Tag::U, k)));
    REQUIRE_FALSE(member(f, make_class(Tag::U, r.m + 1)));
  }
}

TEST_CASE("inclusions") {
  CHECK(is_subclass(parse_class_id("Sc"), parse_class_id("S")));
  CHECK(is_subclass(parse_class_id("U3"), parse_class_id("U2")));
  CHECK_FALSE(is_subclass(parse_class_id("M"), parse_class_id("L")));
  CHECK(is_subclass(parse_class_id("UInf"), parse_class_id("U7")));
  CHECK_FALSE(is_subclass(parse_class_id("U2"), parse_class_id("U3")));
}

TEST_CASE("inclusion table validates and a corrupted one does not") {
  const auto t = default_inclusion_table(4);
  const auto ok = validate_inclusion_table(t, 4);
  CHECK(ok.ok);
  auto bad = t;
  bad.covers.emplace_back(parse_class_id("M"), parse_class_id("L"));
  const auto v = validate_inclusion_table(bad, 4);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.false_inclusions.empty());
}

TEST_CASE("subclass relation agrees with membership at arity <= 3") {
  const auto nodes = catalog(3);
  std::vector<ClassProfile> ps;
  for (const auto& f : oracle::all_up_to(3)) ps.push_back(profile_of(f));
  for (auto a : nodes) {
    for (auto b : nodes) {
      if (!is_subclass(a, b)) continue;
      for (const auto& p : ps) REQUIRE((!member(p, a) || member(p, b)));
    }
  }
}

TEST_CASE("meet consistency and duality transport") {
  for (const auto& f : oracle::all_up_to(3)) {
    const auto d = dual(f);
    for (int m : {2, 3, kInf}) {
      const bool u = member(f, make_class(Tag::U, m));
      CHECK(member(f, make_class(Tag::TcU, m)) == (member(f, parse_class_id("Tc")) && u));
      CHECK(member(f, make_class(Tag::McU, m)) == (member(f, parse_class_id("Mc")) && u));
      CHECK(u == member(d, make_class(Tag::W, m)));
    }
    CHECK(member(f, parse_class_id("T0")) == member(d, parse_class_id("T1")));
    CHECK(member(f, parse_class_id("Lambda0")) == member(d, parse_class_id("V1")));
  }
}

TEST_CASE("catalog classes are closed under minors") {
  const auto nodes = catalog(3);
  for (const auto& f : oracle::all_up_to(3)) {
    for (auto c : nodes) {
      if (!member(f, c)) continue;
      for (const auto& g : oracle::minors_closure({f}, 3)) REQUIRE(member(g, c));
    }
  }
}

TEST_CASE("idempotent catalog classes") {
  CHECK(is_idempotent_class(parse_class_id("Empty")));
  CHECK(is_idempotent_class(parse_class_id("C0")));
  CHECK(is_idempotent_class(parse_class_id("Mc")));
}

TEST_CASE("difference samples") {
  const auto mc = difference_sample(parse_class_id("Mc"), parse_class_id("M"), 1);
  CHECK(mc.size() == 2);
  for (const auto& f : mc) CHECK(f.is_constant());
  const auto ic = difference_sample(parse_class_id("Empty"), parse_class_id("Ic"), 2);
  REQUIRE_FALSE(ic.empty());
  for (const auto& f : ic) CHECK(equivalent(f, projection(1, 1)) == Verdict::Holds);
  CHECK(difference_sample(parse_class_id("Lambda"), parse_class_id("Lambda"), 3).empty());
}

}  // TEST_SUITE
