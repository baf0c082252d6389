#include "eqclass/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace eqclass {

Hypergraph::Hypergraph(int vertex_count, std::vector<std::uint32_t> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 1 || n_ > kMaxHypergraphVertices) {
    throw Error("hypergraph vertex count must be in [1, " +
                std::to_string(kMaxHypergraphVertices) + "]");
  }
  const std::uint32_t all = (1u << n_) - 1;
  for (auto e : edges_) {
    if (e == 0) throw Error("hypergraph edges must be nonempty");
    if (e & ~all) throw Error("hypergraph edge mentions a vertex beyond " + std::to_string(n_));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Hypergraph::has_edge(std::uint32_t mask) const {
  return std::binary_search(edges_.begin(), edges_.end(), mask);
}

std::string Hypergraph::to_string() const {
  std::string s = "hg:" + std::to_string(n_) + ":";
  for (auto e : edges_) {
    s += "{";
    bool first = true;
    for (int v = 0; v < n_; ++v) {
      if (!(e & (1u << v))) continue;
      if (!first) s += ",";
      s += std::to_string(v + 1);
      first = false;
    }
    s += "}";
  }
  return s;
}

Hypergraph parse_hypergraph(std::string_view text) {
  if (!text.starts_with("hg:")) throw ParseError("hypergraph literal must start with 'hg:'");
  text.remove_prefix(3);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("hypergraph literal needs 'hg:<n>:<edges>'");
  int n = 0;
  {
    auto head = text.substr(0, colon);
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
    if (head.empty() || ec != std::errc() || ptr != head.data() + head.size()) {
      throw ParseError("malformed vertex count in hypergraph literal");
    }
  }
  if (n < 1 || n > kMaxHypergraphVertices) throw ParseError("hypergraph vertex count out of range");
  std::vector<std::uint32_t> edges;
  std::size_t i = colon + 1;
  while (i < text.size()) {
    if (text[i] != '{') throw ParseError("expected '{' in hypergraph literal");
    const auto close = text.find('}', i);
    if (close == std::string_view::npos) throw ParseError("unterminated edge in hypergraph literal");
    auto body = text.substr(i + 1, close - i - 1);
    std::uint32_t mask = 0;
    while (!body.empty()) {
      const auto comma = body.find(',');
      auto tok = body.substr(0, comma);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("malformed vertex '" + std::string(tok) + "' in hypergraph literal");
      }
      if (v < 1 || v > n) throw ParseError("vertex " + std::to_string(v) + " out of range");
      mask |= 1u << (v - 1);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    if (mask == 0) throw ParseError("empty edge in hypergraph literal");
    edges.push_back(mask);
    i = close + 1;
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph complete_graph(int n) {
  if (n < 2) throw Error("complete graph needs n >= 2");
  std::vector<std::uint32_t> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back((1u << i) | (1u << j));
  }
  return Hypergraph(n, std::move(edges));
}

BooleanFunction function_of(const Hypergraph& g) {
  return BooleanFunction::from_predicate(g.vertex_count(), [&](std::uint32_t p) {
    for (auto e : g.edges()) {
      if ((p & e) == e) return true;
    }
    return false;
  });
}

Hypergraph hypergraph_of(const BooleanFunction& f) {
  if (!is_monotone(f)) throw Error("hypergraph_of needs a monotone function");
  if (f.at_zero()) throw Error("the constant 1 has no hypergraph (it would need an empty edge)");
  std::vector<std::uint32_t> edges;
  const auto n = static_cast<std::uint32_t>(f.size());
  for (std::uint32_t p = 0; p < n; ++p) {
    if (!f.bit(p)) continue;
    bool minimal = true;
    for (std::uint32_t rest = p; rest && minimal; rest &= rest - 1) {
      if (f.bit(p & ~(rest & (~rest + 1)))) minimal = false;
    }
    if (minimal) edges.push_back(p);
  }
  return Hypergraph(f.arity(), std::move(edges));
}

bool is_edge_surjective_hom(const Hypergraph& g, const Hypergraph& h, const VertexMap& map) {
  if (static_cast<int>(map.size()) != g.vertex_count()) return false;
  for (int t : map) {
    if (t < 1 || t > h.vertex_count()) return false;
  }
  auto image = [&](std::uint32_t e) {
    std::uint32_t out = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (e & (1u << v)) out |= 1u << (map[v] - 1);
    }
    return out;
  };
  for (auto e : g.edges()) {
    if (!h.has_edge(image(e))) return false;
  }
  for (auto j : h.edges()) {
    std::uint32_t pre = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (j & (1u << (map[v] - 1))) pre |= 1u << v;
    }
    if (!g.has_edge(pre)) return false;
  }
  return true;
}

namespace {

class HomSearch {
 public:
  HomSearch(const Hypergraph& g, const Hypergraph& h, std::uint64_t budget)
      : g_(g), h_(h), budget_(budget), map_(g.vertex_count(), 0) {}

  Verdict run() {
    const int r = dfs(0, 0);
    if (r == 1) return Verdict::Holds;
    return r < 0 ? Verdict::Inconclusive : Verdict::Fails;
  }
  const VertexMap& map() const { return map_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint32_t image(std::uint32_t e) const {
    std::uint32_t out = 0;
    for (; e; e &= e - 1) out |= 1u << (map_[std::countr_zero(e)] - 1);
    return out;
  }

  // Vertices [0, depth) are assigned; `assigned` is their mask.
  bool consistent(int depth, std::uint32_t assigned) const {
    const std::uint32_t newest = 1u << (depth - 1);
    for (auto e : g_.edges()) {
      if ((e & newest) && (e & ~assigned) == 0 && !h_.has_edge(image(e))) return false;
    }
    // Each edge J of H needs an edge of G agreeing with h^{-1}(J) so far.
    for (auto j : h_.edges()) {
      std::uint32_t pre = 0;
      for (int v = 0; v < depth; ++v) {
        if (j & (1u << (map_[v] - 1))) pre |= 1u << v;
      }
      bool found = false;
      for (auto e : g_.edges()) {
        if ((e & assigned) == pre) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  int dfs(int v, std::uint32_t assigned) {
    if (v == g_.vertex_count()) return is_edge_surjective_hom(g_, h_, map_) ? 1 : 0;
    for (int t = 1; t <= h_.vertex_count(); ++t) {
      if (++nodes_ > budget_) return -1;
      map_[v] = t;
      const std::uint32_t next = assigned | (1u << v);
      if (!consistent(v + 1, next)) continue;
      const int r = dfs(v + 1, next);
      if (r != 0) return r;
    }
    map_[v] = 0;
    return 0;
  }

  const Hypergraph& g_;
  const Hypergraph& h_;
  std::uint64_t budget_;
  VertexMap map_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

HomResult edge_surjective_hom(const Hypergraph& g, const Hypergraph& h, std::uint64_t budget) {
  HomSearch s(g, h, budget);
  HomResult out;
  out.verdict = s.run();
  out.nodes = s.nodes();
  if (out.verdict == Verdict::Holds) out.witness = s.map();
  return out;
}

Lemma4Result lemma4_check(const Hypergraph& g, const Hypergraph& h, const SearchOptions& opts) {
  Lemma4Result r;
  auto hom = edge_surjective_hom(g, h, opts.budget);
  auto minor = minor_leq(function_of(h), function_of(g), opts);
  r.hom = hom.verdict;
  r.minor = minor.verdict;
  r.hom_witness = std::move(hom.witness);
  r.minor_witness = std::move(minor.witness);
  if (r.hom == Verdict::Inconclusive || r.minor == Verdict::Inconclusive) {
    r.consistent = Verdict::Inconclusive;
  } else {
    r.consistent = r.hom == r.minor ? Verdict::Holds : Verdict::Fails;
  }
  return r;
}

std::vector<Hypergraph> all_hypergraphs(int n) {
  if (n < 1 || n > 4) throw Error("exhaustive hypergraph enumeration supports 1..4 vertices");
  const std::uint32_t subsets = (1u << n) - 1;  // nonempty vertex sets 1..subsets
  std::vector<Hypergraph> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << subsets); ++choice) {
    std::vector<std::uint32_t> edges;
    for (std::uint32_t s = 1; s <= subsets; ++s) {
      if (choice & (std::uint64_t{1} << (s - 1))) edges.push_back(s);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

Hypergraph random_hypergraph(std::mt19937_64& rng, int max_vertices, int max_edges) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int n = nv(rng);
  std::uniform_int_distribution<int> ne(0, max_edges);
  std::uniform_int_distribution<std::uint32_t> edge(1, (1u << n) - 1);
  const int k = ne(rng);
  std::vector<std::uint32_t> edges;
  for (int i = 0; i < k; ++i) edges.push_back(edge(rng));
  return Hypergraph(n, std::move(edges));
}

}  // namespace eqclass
