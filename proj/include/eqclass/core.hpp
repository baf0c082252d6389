#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqclass {

/// Raised for malformed inputs: arity out of range, mismatched composition
/// shapes, unparsable literals.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMaxArity = 20;

/// A Boolean function stored as a bit-packed truth table.
///
/// Bit `i` of the table holds f(a) for the point a with a_j = (i >> (j-1)) & 1,
/// i.e. variable x1 is the least significant index bit. Storage beyond 2^n bits
/// is always zero, so word-wise equality is function equality.
class BooleanFunction {
 public:
  /// The constant-0 function of the given arity.
  explicit BooleanFunction(int arity);

  static BooleanFunction constant(int arity, bool value);
  static BooleanFunction from_words(int arity, std::vector<std::uint64_t> words);

  /// Builds the table by calling `pred(point)` for every point index.
  template <class Pred>
  static BooleanFunction from_predicate(int arity, Pred&& pred) {
    BooleanFunction f(arity);
    const std::uint64_t n = f.size();
    for (std::uint64_t p = 0; p < n; ++p) {
      if (pred(static_cast<std::uint32_t>(p))) {
        f.words_[p >> 6] |= std::uint64_t{1} << (p & 63);
      }
    }
    return f;
  }

  int arity() const { return arity_; }
  /// Number of points, 2^arity.
  std::uint64_t size() const { return std::uint64_t{1} << arity_; }

  bool bit(std::uint32_t point) const {
    return (words_[point >> 6] >> (point & 63)) & 1u;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::uint64_t count_ones() const;
  bool is_constant() const;
  /// Value at the all-zero point / all-one point.
  bool at_zero() const { return bit(0); }
  bool at_one() const { return bit(static_cast<std::uint32_t>(size() - 1)); }

  BooleanFunction operator~() const;
  BooleanFunction operator&(const BooleanFunction& o) const;
  BooleanFunction operator|(const BooleanFunction& o) const;
  BooleanFunction operator^(const BooleanFunction& o) const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
  /// Orders by arity, then by table read as a big-endian number.
  friend std::strong_ordering operator<=>(const BooleanFunction& a,
                                          const BooleanFunction& b);

  std::size_t hash() const;

 private:
  friend class TableWriter;
  void mask_tail();

  int arity_;
  std::vector<std::uint64_t> words_;
};

struct BooleanFunctionHash {
  std::size_t operator()(const BooleanFunction& f) const { return f.hash(); }
};

/// Mutable access to a table under construction; keeps BooleanFunction itself
/// immutable once handed out.
class TableWriter {
 public:
  explicit TableWriter(int arity) : fn_(arity) {}
  void set(std::uint32_t point, bool value = true) {
    auto& w = fn_.words_[point >> 6];
    const std::uint64_t m = std::uint64_t{1} << (point & 63);
    w = value ? (w | m) : (w & ~m);
  }
  std::span<std::uint64_t> words() { return fn_.words_; }
  BooleanFunction finish() && {
    fn_.mask_tail();
    return std::move(fn_);
  }

 private:
  BooleanFunction fn_;
};

/// A point of {0,1}^arity in the table index convention.
struct Point {
  int arity;
  std::uint32_t bits;

  Point(int arity, std::uint32_t bits);
  /// From explicit coordinates (a_1, ..., a_n).
  static Point from_coordinates(std::span<const int> coords);
  bool coordinate(int index) const { return (bits >> (index - 1)) & 1u; }
};

/// Multilinear GF(2) polynomial; each monomial is a bitmask of variables
/// (bit j-1 for x_j), the empty mask being the constant 1.
struct Polynomial {
  int arity = 1;
  std::vector<std::uint32_t> monomials;  // canonical order: degree, then index list

  int degree() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

enum class FormatStyle { Hex, Anf, Dnf };

// Construction.
BooleanFunction projection(int arity, int index);
/// Adds dummy variables at positions arity+1..new_arity.
BooleanFunction widen(const BooleanFunction& f, int new_arity);

// Evaluation and composition.
bool eval(const BooleanFunction& f, const Point& p);
/// f(g_1, ..., g_n) computed pointwise. Uses the parallel kernel for large
/// inner arity.
BooleanFunction compose(const BooleanFunction& f, std::span<const BooleanFunction> gs);
/// Point-by-point reference implementation of compose, kept for testing and
/// benchmarking the blocked kernel against.
BooleanFunction compose_serial(const BooleanFunction& f, std::span<const BooleanFunction> gs);

/// The m-ary minor f(x_{sigma[0]}, ..., x_{sigma[n-1]}); sigma holds 1-based
/// variable indices in [1, m].
BooleanFunction substitute(const BooleanFunction& f, std::span<const int> sigma, int m);

// Essential variables.
BooleanFunction flip_variable(const BooleanFunction& f, int index);
bool is_essential(const BooleanFunction& f, int index);
std::vector<int> essential_indices(const BooleanFunction& f);
int essential_arity(const BooleanFunction& f);

struct EssentialCore {
  BooleanFunction function;
  /// index_map[k] is the original index of core variable k+1.
  std::vector<int> index_map;
};
EssentialCore essential_core(const BooleanFunction& f);

// Duality.
BooleanFunction complement(const BooleanFunction& f);
BooleanFunction dual(const BooleanFunction& f);
BooleanFunction underline(const BooleanFunction& f);

// Zhegalkin (algebraic normal form).
Polynomial zhegalkin(const BooleanFunction& f);
BooleanFunction from_zhegalkin(const Polynomial& p);
/// In-place GF(2) Moebius transform on a raw table; an involution.
void moebius_transform(std::span<std::uint64_t> words, int arity);

bool is_idempotent_fn(const BooleanFunction& f);
bool is_monotone(const BooleanFunction& f);

// Text formats.
std::string format_function(const BooleanFunction& f, FormatStyle style = FormatStyle::Hex);
std::string format_polynomial(const Polynomial& p);
FormatStyle parse_format_style(std::string_view name);

/// Parses `tt:<n>:<hex>` literals.
BooleanFunction parse_truth_table(std::string_view text);
/// Parses the formula grammar (variables x1..x20, ! & ^ |, parentheses,
/// constants, optional trailing `@n`).
BooleanFunction parse_formula(std::string_view text);
/// Accepts a truth-table literal, a family spec (`f@5`, `G@3,5`, ...) or a
/// formula.
BooleanFunction parse_function(std::string_view text);

}  // namespace eqclass
