#include "selfloop/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace selfloop {

Graph::Graph(std::size_t n) : n_(n), bits_(n * words_per_row(), 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(n_));
  }
}

bool Graph::adjacent(Vertex i, Vertex j) const {
  check_vertex(i);
  check_vertex(j);
  return (bits_[i * words_per_row() + j / 64] >> (j % 64)) & 1u;
}

void Graph::add_edge(Vertex i, Vertex j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::invalid_argument("simple graphs carry no loops");
  const std::size_t w = words_per_row();
  bits_[i * w + j / 64] |= std::uint64_t{1} << (j % 64);
  bits_[j * w + i / 64] |= std::uint64_t{1} << (i % 64);
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  const std::size_t w = words_per_row();
  std::size_t d = 0;
  for (std::size_t k = 0; k < w; ++k) d += std::popcount(bits_[v * w + k]);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto word : bits_) twice += std::popcount(word);
  return twice / 2;
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet out;
  for (Vertex u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const std::size_t d = degree(0);
  for (Vertex v = 1; v < n_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

std::size_t Graph::triangle_count() const {
  const std::size_t w = words_per_row();
  std::size_t count = 0;
  for (auto [i, j] : edges()) {
    // common neighbours k > j
    for (std::size_t k = 0; k < w; ++k) {
      std::uint64_t common = bits_[i * w + k] & bits_[j * w + k];
      while (common) {
        const std::size_t v = k * 64 + std::countr_zero(common);
        if (v > j) ++count;
        common &= common - 1;
      }
    }
  }
  return count;
}

LoopSet::LoopSet(std::size_t universe) : member_(universe, false) {}

LoopSet::LoopSet(std::size_t universe, std::span<const Vertex> members) : LoopSet(universe) {
  for (Vertex v : members) insert(v);
}

LoopSet LoopSet::all(std::size_t universe) {
  LoopSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

bool LoopSet::contains(Vertex v) const { return v < member_.size() && member_[v]; }

void LoopSet::insert(Vertex v) {
  if (v >= member_.size()) {
    throw std::out_of_range("loop vertex " + std::to_string(v) + " outside {0.." +
                            std::to_string(member_.size()) + ")");
  }
  if (!member_[v]) {
    member_[v] = true;
    ++alpha_;
  }
}

VertexSet LoopSet::members() const {
  VertexSet out;
  out.reserve(alpha_);
  for (Vertex v = 0; v < member_.size(); ++v)
    if (member_[v]) out.push_back(v);
  return out;
}

LoopSet LoopSet::complement() const {
  LoopSet c(member_.size());
  for (Vertex v = 0; v < member_.size(); ++v)
    if (!member_[v]) c.insert(v);
  return c;
}

SelfLoopGraph::SelfLoopGraph(Graph base) : base_(std::move(base)), loops_(base_.order()) {}

SelfLoopGraph::SelfLoopGraph(Graph base, LoopSet loops)
    : base_(std::move(base)), loops_(std::move(loops)) {
  if (loops_.universe() != base_.order()) {
    throw std::invalid_argument("loop set universe " + std::to_string(loops_.universe()) +
                                " does not match graph order " +
                                std::to_string(base_.order()));
  }
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_bipartite_graph(std::size_t p, std::size_t q) {
  return join(empty_graph(p), empty_graph(q));
}

Graph hex_prism() {
  Graph g(12);
  for (Vertex i = 0; i < 6; ++i) {
    g.add_edge(i, (i + 1) % 6);
    g.add_edge(6 + i, 6 + (i + 1) % 6);
    g.add_edge(i, i + 6);
  }
  return g;
}

Graph truncated_tetrahedron() {
  Graph g(12);
  // index of `other` among the three tetrahedron vertices different from t
  auto corner = [](Vertex t, Vertex other) { return 3 * t + (other < t ? other : other - 1); };
  for (Vertex t = 0; t < 4; ++t) {
    g.add_edge(3 * t, 3 * t + 1);
    g.add_edge(3 * t, 3 * t + 2);
    g.add_edge(3 * t + 1, 3 * t + 2);
  }
  for (Vertex s = 0; s < 4; ++s)
    for (Vertex t = s + 1; t < 4; ++t) g.add_edge(corner(s, t), corner(t, s));
  return g;
}

namespace {

std::size_t param_at(std::string_view kind, std::span<const long long> params, std::size_t count,
                     std::size_t i, long long min_value) {
  if (params.size() != count) {
    throw std::invalid_argument(std::string(kind) + " expects " + std::to_string(count) +
                                " parameter(s), got " + std::to_string(params.size()));
  }
  if (params[i] < min_value) {
    throw std::invalid_argument(std::string(kind) + " parameter " + std::to_string(params[i]) +
                                " below minimum " + std::to_string(min_value));
  }
  return static_cast<std::size_t>(params[i]);
}

}  // namespace

Graph make_named(std::string_view kind, std::span<const long long> params) {
  if (kind == "empty") return empty_graph(param_at(kind, params, 1, 0, 0));
  if (kind == "complete") return complete_graph(param_at(kind, params, 1, 0, 0));
  if (kind == "path") return path_graph(param_at(kind, params, 1, 0, 1));
  if (kind == "cycle") return cycle_graph(param_at(kind, params, 1, 0, 3));
  if (kind == "complete_bipartite") {
    return complete_bipartite_graph(param_at(kind, params, 2, 0, 0),
                                    param_at(kind, params, 2, 1, 0));
  }
  if (kind == "hex_prism" || kind == "trunc_tetrahedron") {
    if (!params.empty()) throw std::invalid_argument(std::string(kind) + " takes no parameters");
    return kind == "hex_prism" ? hex_prism() : truncated_tetrahedron();
  }
  throw std::invalid_argument("unknown graph family '" + std::string(kind) + "'");
}

Graph join(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order();
  Graph out(ng + h.order());
  for (auto [i, j] : g.edges()) out.add_edge(i, j);
  for (auto [i, j] : h.edges()) out.add_edge(ng + i, ng + j);
  for (Vertex i = 0; i < ng; ++i)
    for (Vertex j = 0; j < h.order(); ++j) out.add_edge(i, ng + j);
  return out;
}

Graph disjoint_copies(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("disjoint_copies needs k >= 1");
  const std::size_t n = g.order();
  Graph out(n * k);
  const auto edges = g.edges();
  for (std::size_t c = 0; c < k; ++c)
    for (auto [i, j] : edges) out.add_edge(c * n + i, c * n + j);
  return out;
}

VertexPartition connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  VertexPartition out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet block;
    std::queue<Vertex> frontier;
    frontier.push(root);
    seen[root] = true;
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      block.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          frontier.push(u);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

std::optional<VertexPartition> is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      for (Vertex u : g.neighbors(v)) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          frontier.push(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexPartition out{{{}, {}}};
  for (Vertex v = 0; v < n; ++v) out.blocks[side[v]].push_back(v);
  return out;
}

VertexSet maximal_independent_set(const Graph& g, std::span<const Vertex> component) {
  if (component.size() < 2) {
    throw std::invalid_argument("independent-set witness needs a component of order >= 2");
  }
  VertexSet ordered(component.begin(), component.end());
  std::sort(ordered.begin(), ordered.end());
  VertexSet chosen;
  for (Vertex v : ordered) {
    const bool free = std::none_of(chosen.begin(), chosen.end(),
                                   [&](Vertex u) { return g.adjacent(u, v); });
    if (free) chosen.push_back(v);
  }
  return chosen;
}

SelfLoopGraph loop_complement(const SelfLoopGraph& gs) {
  return SelfLoopGraph(gs.base(), gs.loops().complement());
}

}  // namespace selfloop
