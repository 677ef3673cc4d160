#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace selfloop {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices {0..n-1}, stored as bit-packed
/// adjacency rows. Self-loops are never stored here; they live in LoopSet.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const;

  bool adjacent(Vertex i, Vertex j) const;
  void add_edge(Vertex i, Vertex j);

  std::size_t degree(Vertex v) const;
  VertexSet neighbors(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Common degree when every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const;
  std::size_t triangle_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t words_per_row() const { return (n_ + 63) / 64; }
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Subset S of {0..n-1} carrying self-loops.
class LoopSet {
 public:
  LoopSet() = default;
  explicit LoopSet(std::size_t universe);
  LoopSet(std::size_t universe, std::span<const Vertex> members);

  static LoopSet all(std::size_t universe);

  std::size_t universe() const { return member_.size(); }
  std::size_t alpha() const { return alpha_; }
  bool empty() const { return alpha_ == 0; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  VertexSet members() const;
  LoopSet complement() const;

  friend bool operator==(const LoopSet&, const LoopSet&) = default;

 private:
  std::vector<bool> member_;
  std::size_t alpha_ = 0;
};

/// G_S: a graph together with the vertices that carry a loop.
class SelfLoopGraph {
 public:
  SelfLoopGraph() = default;
  explicit SelfLoopGraph(Graph base);
  SelfLoopGraph(Graph base, LoopSet loops);

  const Graph& base() const { return base_; }
  const LoopSet& loops() const { return loops_; }
  std::size_t order() const { return base_.order(); }

  friend bool operator==(const SelfLoopGraph&, const SelfLoopGraph&) = default;

 private:
  Graph base_;
  LoopSet loops_;
};

struct VertexPartition {
  std::vector<VertexSet> blocks;
};

// Named families. Vertex labels:
//   path(n):    edges i -- i+1
//   cycle(n):   path plus n-1 -- 0
//   complete_bipartite(p, q): sides {0..p-1} and {p..p+q-1}
//   hex_prism:  hexagon 0..5, hexagon 6..11, spokes i -- i+6
//   truncated_tetrahedron: triangle t holds vertices 3t..3t+2; vertex 3t+k
//               is the corner of t facing the k-th other triangle in
//               ascending order, and facing corners are joined.
Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t p, std::size_t q);
Graph hex_prism();
Graph truncated_tetrahedron();

/// Dispatches on a family tag: empty, complete, path, cycle,
/// complete_bipartite, hex_prism, trunc_tetrahedron.
Graph make_named(std::string_view kind, std::span<const long long> params);

Graph join(const Graph& g, const Graph& h);
Graph disjoint_copies(const Graph& g, std::size_t k);

VertexPartition connected_components(const Graph& g);

/// Two-colouring with vertex 0 of every component on side A
/// (blocks[0]) or nullopt when an odd cycle exists.
std::optional<VertexPartition> is_bipartite(const Graph& g);

/// Greedy ascending scan over `component`; requires |component| >= 2.
VertexSet maximal_independent_set(const Graph& g,
                                  std::span<const Vertex> component);

SelfLoopGraph loop_complement(const SelfLoopGraph& gs);

}  // namespace selfloop
