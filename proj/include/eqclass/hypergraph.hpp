#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "eqclass/core.hpp"
#include "eqclass/minor.hpp"

namespace eqclass {

/// Vertices {1..n}; each edge is a nonempty vertex set stored as a bitmask
/// (bit v-1 for vertex v). Edges are kept sorted and duplicate-free.
class Hypergraph {
 public:
  Hypergraph(int vertex_count, std::vector<std::uint32_t> edges);

  int vertex_count() const { return n_; }
  const std::vector<std::uint32_t>& edges() const { return edges_; }
  bool has_edge(std::uint32_t mask) const;

  std::string to_string() const;
  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_;
  std::vector<std::uint32_t> edges_;
};

inline constexpr int kMaxHypergraphVertices = 20;

/// `hg:<n>:{1,2}{1,3}`; `hg:<n>:` has no edges.
Hypergraph parse_hypergraph(std::string_view text);

Hypergraph complete_graph(int n);

/// The disjunction over edges of the conjunction of their vertices.
BooleanFunction function_of(const Hypergraph& g);

/// Edges are the supports of the minimal true points of a monotone f. Rejects
/// non-monotone functions and the constant 1.
Hypergraph hypergraph_of(const BooleanFunction& f);

/// h[v-1] is the image of vertex v.
using VertexMap = std::vector<int>;

struct HomResult {
  Verdict verdict = Verdict::Fails;
  std::optional<VertexMap> witness;
  std::uint64_t nodes = 0;
};

/// Searches for h: V(G) -> V(H) sending every edge of G onto an edge of H
/// such that every edge J of H has an edge of G equal to h^{-1}(J).
HomResult edge_surjective_hom(const Hypergraph& g, const Hypergraph& h,
                              std::uint64_t budget = kDefaultBudget);

/// Checks both conditions on a candidate map directly.
bool is_edge_surjective_hom(const Hypergraph& g, const Hypergraph& h, const VertexMap& map);

struct Lemma4Result {
  /// Holds when hom existence and f_H <=_V f_G agree.
  Verdict consistent = Verdict::Holds;
  Verdict hom = Verdict::Fails;
  Verdict minor = Verdict::Fails;
  std::optional<VertexMap> hom_witness;
  std::optional<Substitution> minor_witness;
};

Lemma4Result lemma4_check(const Hypergraph& g, const Hypergraph& h,
                          const SearchOptions& opts = {});

/// Every hypergraph on exactly n vertices (all edge sets).
std::vector<Hypergraph> all_hypergraphs(int n);

/// A hypergraph on 1..max_vertices vertices with at most max_edges edges.
Hypergraph random_hypergraph(std::mt19937_64& rng, int max_vertices, int max_edges);

}  // namespace eqclass
