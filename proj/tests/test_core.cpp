#include <doctest.h>

#include <random>

#include "eqclass/core.hpp"
#include "eqclass/families.hpp"
#include "oracle.hpp"

using namespace eqclass;

namespace {

BooleanFunction fn(std::string_view s) { return parse_function(s); }

BooleanFunction random_fn(std::mt19937_64& rng, int n) {
  const std::uint64_t mask = n == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << n)) - 1;
  return BooleanFunction::from_words(n, {rng() & mask});
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("storage keeps exactly 2^n bits") {
  for (int n : {1, 3, 6, 7, 10}) {
    const auto f = ~BooleanFunction::constant(n, false);
    CHECK(f.count_ones() == (std::uint64_t{1} << n));
    for (auto w : f.words()) CHECK(w != 0);
  }
  CHECK_THROWS(BooleanFunction(0));
  CHECK_THROWS(BooleanFunction(kMaxArity + 1));
}

TEST_CASE("parsing the three grammars") {
  CHECK(fn("tt:2:0x8") == (projection(2, 1) & projection(2, 2)));
  CHECK(fn("x1 & x2") == fn("tt:2:0x8"));
  CHECK(fn("f@5") == make_f(5));
  CHECK(fn("x1 | !x2 ^ x3") == (projection(3, 1) | (~projection(3, 2) ^ projection(3, 3))));
  CHECK(fn("x1 @3").arity() == 3);
  CHECK(fn("1 @2") == BooleanFunction::constant(2, true));
  CHECK_THROWS(fn("x1 &"));
  CHECK_THROWS(fn("tt:2:0x18"));
  CHECK_THROWS(fn("x21"));
  CHECK_THROWS(fn("x3 @2"));
}

TEST_CASE("formatting") {
  CHECK(format_function(fn("x1 | x2"), FormatStyle::Anf) == "x1 + x2 + x1*x2");
  CHECK(format_function(fn("x1 & x2"), FormatStyle::Hex) == "tt:2:0x8");
  CHECK(format_function(BooleanFunction::constant(1, true), FormatStyle::Anf) == "1");
  CHECK(format_function(projection(2, 2)) == "tt:2:0xC");
}

TEST_CASE("hex and dnf round trip on every function of arity <= 4") {
  for (const auto& f : oracle::all_up_to(4)) {
    REQUIRE(parse_function(format_function(f, FormatStyle::Hex)) == f);
    REQUIRE(parse_function(format_function(f, FormatStyle::Dnf)) == f);
  }
}

TEST_CASE("dnf of a monotone function lists its minimal true points") {
  CHECK(format_function(make_H(3), FormatStyle::Dnf) == "(x1 & x2) | (x1 & x3) | (x2 & x3)");
  CHECK(format_function(fn("x1 @3"), FormatStyle::Dnf) == "x1 @3");
}

TEST_CASE("eval and the bit convention") {
  const auto a = fn("x1 & x2");
  const int p10[] = {1, 0}, p11[] = {1, 1}, z4[] = {0, 0, 0, 0};
  CHECK_FALSE(eval(a, Point::from_coordinates(p10)));
  CHECK(eval(a, Point::from_coordinates(p11)));
  CHECK_FALSE(eval(make_g(4), Point::from_coordinates(z4)));
  // x1 is the least significant bit, so projections are the broadcast masks.
  CHECK(projection(3, 1).words()[0] == 0xAA);
  CHECK(projection(3, 2).words()[0] == 0xCC);
  CHECK(projection(3, 3).words()[0] == 0xF0);
  CHECK(projection(7, 7).words()[1] == ~std::uint64_t{0});
}

TEST_CASE("projections") {
  CHECK(projection(1, 1) == fn("x1"));
  CHECK(format_function(projection(2, 2)) == "tt:2:0xC");
  CHECK(essential_arity(projection(3, 1)) == 1);
  CHECK_THROWS(projection(2, 3));
}

TEST_CASE("compose examples") {
  const auto x1 = projection(2, 1), x2 = projection(2, 2);
  const BooleanFunction diag[] = {projection(1, 1), projection(1, 1)};
  CHECK(compose(fn("x1 & x2"), diag) == projection(1, 1));
  const auto g = make_H(3);
  const BooleanFunction one[] = {g};
  CHECK(compose(projection(1, 1), one) == g);
  const BooleanFunction both[] = {x1, x2};
  CHECK(compose(make_H(2), both) == (x1 & x2));
}

TEST_CASE("compose agrees with the pointwise oracle and the serial kernel") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4), m = 1 + static_cast<int>(rng() % 9);
    const auto f = random_fn(rng, n);
    std::vector<BooleanFunction> gs;
    for (int k = 0; k < n; ++k) {
      gs.push_back(m <= 6 ? random_fn(rng, m) : widen(random_fn(rng, 6), m) ^ projection(m, m));
    }
    const auto c = compose(f, gs);
    REQUIRE(c == oracle::compose(f, gs));
    REQUIRE(c == compose_serial(f, gs));
  }
}

TEST_CASE("composition is associative at arity <= 3") {
  const auto fs1 = oracle::all(1), fs2 = oracle::all(2);
  // f binary, gs binary, hs unary and binary: exhaustive over the unary inner layer.
  for (const auto& f : fs2) {
    for (const auto& g1 : fs2) {
      for (const auto& g2 : fs2) {
        for (const auto& h1 : fs1) {
          for (const auto& h2 : fs1) {
            const std::vector<BooleanFunction> gs{g1, g2}, hs{h1, h2};
            const std::vector<BooleanFunction> ghs{compose(g1, hs), compose(g2, hs)};
            REQUIRE(compose(compose(f, gs), hs) == compose(f, ghs));
          }
        }
      }
    }
  }
}

TEST_CASE("substitute matches the oracle") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4), m = 1 + static_cast<int>(rng() % 5);
    const auto f = random_fn(rng, n);
    std::vector<int> sigma(n);
    for (auto& s : sigma) s = 1 + static_cast<int>(rng() % m);
    REQUIRE(substitute(f, sigma, m) == oracle::substitute(f, sigma, m));
  }
}

TEST_CASE("essential variables") {
  CHECK(essential_indices(projection(3, 2)) == std::vector<int>{2});
  CHECK(essential_indices(BooleanFunction::constant(4, false)).empty());
  // Frozen from the flip-test oracle.
  CHECK(essential_indices(make_f(4)) == std::vector<int>{1, 2, 3, 4});
  for (int i = 1; i <= 4; ++i) CHECK(oracle::essential(make_f(4), i));
  for (const auto& f : oracle::all_up_to(3)) REQUIRE(essential_arity(f) == oracle::essential_arity(f));
}

TEST_CASE("essential core") {
  auto c = essential_core(projection(3, 2));
  CHECK(c.function == projection(1, 1));
  CHECK(c.index_map == std::vector<int>{2});
  c = essential_core(widen(fn("x1 & x2"), 4));
  CHECK(c.function == fn("x1 & x2"));
  CHECK(c.index_map == std::vector<int>{1, 2});
  c = essential_core(BooleanFunction::constant(3, true));
  CHECK(c.function == BooleanFunction::constant(1, true));
  CHECK(c.index_map.empty());
  for (const auto& f : oracle::all_up_to(4)) {
    const auto once = essential_core(f);
    REQUIRE(essential_core(once.function).function == once.function);
  }
}

TEST_CASE("automorphisms") {
  CHECK(dual(fn("x1 & x2")) == fn("x1 | x2"));
  CHECK(dual(make_mu(7)) == make_mu(7));
  CHECK(dual(make_T(7)) == make_T(7));
  for (const auto& f : oracle::all_up_to(3)) {
    REQUIRE(dual(f) == oracle::dual(f));
    REQUIRE(dual(complement(f)) == underline(f));
    REQUIRE(complement(dual(f)) == underline(f));
  }
}

TEST_CASE("Zhegalkin polynomials") {
  const auto p = zhegalkin(fn("x1 | x2"));
  CHECK(p.monomials == std::vector<std::uint32_t>{0b01, 0b10, 0b11});
  CHECK(zhegalkin(BooleanFunction::constant(2, false)).monomials.empty());
  CHECK(from_zhegalkin(zhegalkin(make_H(4))) == make_H(4));
  for (const auto& f : oracle::all_up_to(4)) {
    const auto q = zhegalkin(f);
    REQUIRE(from_zhegalkin(q) == f);
    REQUIRE(zhegalkin(from_zhegalkin(q)) == q);
  }
}

TEST_CASE("idempotent functions") {
  CHECK(is_idempotent_fn(fn("x1 & x2")));
  CHECK_FALSE(is_idempotent_fn(BooleanFunction::constant(1, true)));
  CHECK(is_idempotent_fn(make_g(5)));
}

}  // TEST_SUITE
