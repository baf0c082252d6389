#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "eqclass/core.hpp"
#include "eqclass/families.hpp"

namespace eqclass {
namespace {

std::string term(std::uint32_t mask, const char* sep) {
  std::string s;
  for (int j = 0; mask; ++j, mask >>= 1) {
    if (!(mask & 1u)) continue;
    if (!s.empty()) s += sep;
    s += "x" + std::to_string(j + 1);
  }
  return s;
}

int highest_variable(std::uint32_t mask) { return mask ? 32 - std::countl_zero(mask) : 0; }

std::string format_hex(const BooleanFunction& f) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  const std::uint64_t nibbles = std::max<std::uint64_t>(1, f.size() / 4);
  std::string hex;
  hex.reserve(nibbles);
  for (std::uint64_t k = nibbles; k-- > 0;) {
    const std::uint64_t bitpos = k * 4;
    const unsigned v = (f.words()[bitpos >> 6] >> (bitpos & 63)) & 0xFu;
    hex += kDigits[v];
  }
  return "tt:" + std::to_string(f.arity()) + ":0x" + hex;
}

std::string format_dnf(const BooleanFunction& f) {
  if (f.is_constant()) {
    const std::string c = f.at_zero() ? "1" : "0";
    return f.arity() > 1 ? c + " @" + std::to_string(f.arity()) : c;
  }
  const auto n = static_cast<std::uint32_t>(f.size());
  std::vector<std::string> terms;
  int top = 0;
  if (is_monotone(f)) {
    // Minimal true points: each is a prime implicant of a monotone function.
    for (std::uint32_t p = 0; p < n; ++p) {
      if (!f.bit(p)) continue;
      bool minimal = true;
      for (std::uint32_t rest = p; rest && minimal; rest &= rest - 1) {
        if (f.bit(p & ~(rest & -rest))) minimal = false;
      }
      if (!minimal) continue;
      terms.push_back(term(p, " & "));
      top = std::max(top, highest_variable(p));
    }
  } else {
    top = f.arity();
    for (std::uint32_t p = 0; p < n; ++p) {
      if (!f.bit(p)) continue;
      std::string t;
      for (int j = 1; j <= f.arity(); ++j) {
        if (j > 1) t += " & ";
        t += ((p >> (j - 1)) & 1u) ? "" : "!";
        t += "x" + std::to_string(j);
      }
      terms.push_back(std::move(t));
    }
  }
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " | ";
    out += terms.size() > 1 && t.find('&') != std::string::npos ? "(" + t + ")" : t;
  }
  if (top < f.arity()) out += " @" + std::to_string(f.arity());
  return out;
}

// Recursive-descent parser for the formula grammar.
class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  BooleanFunction run() {
    std::string_view body = text_;
    int explicit_arity = 0;
    if (const auto at = body.rfind('@'); at != std::string_view::npos) {
      explicit_arity = parse_number(trim(body.substr(at + 1)), "arity suffix");
      if (explicit_arity < 1 || explicit_arity > kMaxArity) {
        throw ParseError("arity suffix out of range 1.." + std::to_string(kMaxArity));
      }
      body = body.substr(0, at);
    }
    text_ = body;
    pos_ = 0;
    // First pass only discovers the largest variable index.
    scan_variables();
    arity_ = std::max({1, max_var_, explicit_arity});
    if (explicit_arity && explicit_arity < max_var_) {
      throw ParseError("formula mentions x" + std::to_string(max_var_) + " but arity suffix is @" +
                       std::to_string(explicit_arity));
    }
    pos_ = 0;
    BooleanFunction f = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return f;
  }

 private:
  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  static int parse_number(std::string_view s, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError(std::string("malformed ") + what + " '" + std::string(s) + "'");
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in formula '" +
                     std::string(text_) + "'");
  }

  void scan_variables() {
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] != 'x') continue;
      std::size_t j = i + 1;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      if (j == i + 1) continue;
      const int idx = parse_number(text_.substr(i + 1, j - i - 1), "variable index");
      if (idx < 1 || idx > kMaxArity) {
        pos_ = i;
        fail("variable index out of range 1.." + std::to_string(kMaxArity));
      }
      max_var_ = std::max(max_var_, idx);
      i = j - 1;
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BooleanFunction parse_or() {
    BooleanFunction f = parse_xor();
    while (accept('|')) f = f | parse_xor();
    return f;
  }

  BooleanFunction parse_xor() {
    BooleanFunction f = parse_and();
    while (accept('^')) f = f ^ parse_and();
    return f;
  }

  BooleanFunction parse_and() {
    BooleanFunction f = parse_unary();
    while (accept('&')) f = f & parse_unary();
    return f;
  }

  BooleanFunction parse_unary() {
    if (accept('!')) return ~parse_unary();
    if (accept('(')) {
      BooleanFunction f = parse_or();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      return BooleanFunction::constant(arity_, c == '1');
    }
    if (c == 'x') {
      std::size_t j = pos_ + 1;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      if (j == pos_ + 1) fail("expected variable index after 'x'");
      const int idx = parse_number(text_.substr(pos_ + 1, j - pos_ - 1), "variable index");
      pos_ = j;
      return projection(arity_, idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int max_var_ = 0;
  int arity_ = 1;
};

}  // namespace

std::string format_polynomial(const Polynomial& p) {
  if (p.monomials.empty()) return "0";
  std::string out;
  for (std::uint32_t m : p.monomials) {
    if (!out.empty()) out += " + ";
    out += m == 0 ? "1" : term(m, "*");
  }
  return out;
}

std::string format_function(const BooleanFunction& f, FormatStyle style) {
  switch (style) {
    case FormatStyle::Hex: return format_hex(f);
    case FormatStyle::Anf: return format_polynomial(zhegalkin(f));
    case FormatStyle::Dnf: return format_dnf(f);
  }
  return format_hex(f);
}

FormatStyle parse_format_style(std::string_view name) {
  if (name == "hex") return FormatStyle::Hex;
  if (name == "anf") return FormatStyle::Anf;
  if (name == "dnf") return FormatStyle::Dnf;
  throw ParseError("unknown format style '" + std::string(name) + "' (expected hex, anf or dnf)");
}

BooleanFunction parse_truth_table(std::string_view text) {
  if (!text.starts_with("tt:")) throw ParseError("truth-table literal must start with 'tt:'");
  auto rest = text.substr(3);
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw ParseError("truth-table literal needs 'tt:<n>:<hex>'");
  int n = 0;
  const auto arity_text = rest.substr(0, colon);
  auto [ptr, ec] = std::from_chars(arity_text.data(), arity_text.data() + arity_text.size(), n);
  if (arity_text.empty() || ec != std::errc() || ptr != arity_text.data() + arity_text.size()) {
    throw ParseError("malformed arity in '" + std::string(text) + "'");
  }
  if (n < 1 || n > kMaxArity) {
    throw ParseError("arity " + std::to_string(n) + " out of range 1.." + std::to_string(kMaxArity));
  }
  auto hex = rest.substr(colon + 1);
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t expected = std::max<std::uint64_t>(1, size / 4);
  if (hex.size() != expected) {
    throw ParseError("truth table of arity " + std::to_string(n) + " needs exactly " +
                     std::to_string(expected) + " hex digits, got " + std::to_string(hex.size()));
  }
  TableWriter w(n);
  auto words = w.words();
  for (std::uint64_t k = 0; k < expected; ++k) {
    const char c = hex[expected - 1 - k];
    unsigned v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw ParseError(std::string("invalid hex digit '") + c + "'");
    if (size < 4 && (v >> size)) {
      throw ParseError("hex digit sets bits beyond 2^" + std::to_string(n) + " points");
    }
    const std::uint64_t bitpos = k * 4;
    words[bitpos >> 6] |= std::uint64_t{v} << (bitpos & 63);
  }
  return std::move(w).finish();
}

BooleanFunction parse_formula(std::string_view text) { return FormulaParser(text).run(); }

BooleanFunction parse_function(std::string_view text) {
  if (text.starts_with("tt:")) return parse_truth_table(text);
  if (auto spec = parse_family_spec(text)) return generate(*spec).function;
  return parse_formula(text);
}

}  // namespace eqclass
