#include "selfloop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "selfloop/graph6.hpp"

namespace selfloop {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks, runs `body(i, summary)` for each
/// index and merges chunk summaries in index order.
CheckSummary parallel_check(std::size_t count, unsigned threads,
                            const std::function<void(std::size_t, CheckSummary&)>& body) {
  const std::size_t workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1));
  std::vector<CheckSummary> partial(workers);
  auto run_chunk = [&](std::size_t w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    for (std::size_t i = begin; i < end; ++i) body(i, partial[w]);
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
  }
  CheckSummary out;
  for (const auto& p : partial) out.merge(p);
  return out;
}

bool is_independent(const Graph& g, const LoopSet& s) {
  const auto members = s.members();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (g.adjacent(members[a], members[b])) return false;
  return true;
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

void check_enumeration_order(std::size_t n) {
  if (n < 2 || n > 6) throw std::invalid_argument("exhaustive checks cover 2 <= n <= 6");
}

LoopSet loop_set_from_mask(std::size_t n, std::uint64_t mask) {
  LoopSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if ((mask >> v) & 1u) s.insert(v);
  return s;
}

/// E(G_S) for every subset mask of V.
std::vector<double> all_loop_energies(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<double> out(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < out.size(); ++mask)
    out[mask] = energy_self_loop_value(g, loop_set_from_mask(n, mask));
  return out;
}

void check_witness(const Graph& g, const std::string& id, double tol, CheckSummary& summary) {
  try {
    const auto cert = conjecture_witness(g, tol);
    std::string problem;
    if (!(cert.margin() > tol)) problem = "margin " + fmt(cert.margin()) + " not above tolerance";
    switch (cert.route) {
      case WitnessRoute::kEmptyGraph:
        if (g.edge_count() != 0) problem = "empty-graph route on a graph with edges";
        break;
      case WitnessRoute::kIndependentSet:
        if (!is_independent(g, cert.loop_set)) problem = "independent-set route, S has an edge";
        break;
      case WitnessRoute::kComplementOfIndependentSet:
        if (!is_independent(g, cert.loop_set.complement()))
          problem = "complement route, V\\S has an edge";
        break;
    }
    summary.record(problem.empty(), id, problem);
  } catch (const AmbiguityError& e) {
    summary.record(false, id, std::string("tolerance-ambiguity: ") + e.what());
  }
}

/// Spectrum of n disjoint copies of a constant-row-sum block, with one
/// instance of the row sum removed.
std::vector<double> residual_of_copies(const std::vector<double>& spectrum, double row_sum,
                                       std::size_t n) {
  std::vector<double> out;
  for (std::size_t c = 0; c < n; ++c) out.insert(out.end(), spectrum.begin(), spectrum.end());
  out.erase(std::find(out.begin(), out.end(), row_sum));
  return out;
}

std::vector<double> complete12_spectrum() {
  std::vector<double> s(12, -1.0);
  s[0] = 11.0;
  return s;
}

}  // namespace

const char* to_string(WitnessRoute r) {
  switch (r) {
    case WitnessRoute::kEmptyGraph: return "empty-graph";
    case WitnessRoute::kIndependentSet: return "independent-set";
    case WitnessRoute::kComplementOfIndependentSet: return "complement-of-independent-set";
  }
  return "?";
}

const char* to_string(Variant v) { return v == Variant::kH1 ? "h1" : "h2"; }
const char* to_string(Partner p) { return p == Partner::kEmpty12 ? "empty" : "complete"; }

AmbiguityError::AmbiguityError(const std::string& what, double base, double set, double comp)
    : std::runtime_error(what), e_base(base), e_set(set), e_complement(comp) {}

void CheckSummary::record(bool ok, const std::string& id, const std::string& detail) {
  ++total;
  if (ok) {
    ++passed;
  } else {
    failures.push_back({id, detail});
  }
}

void CheckSummary::merge(const CheckSummary& other) {
  total += other.total;
  passed += other.passed;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

WitnessCertificate conjecture_witness(const Graph& g, double tol) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("conjecture witness needs n >= 2");

  WitnessCertificate cert;
  cert.e_base = energy(g);
  if (g.edge_count() == 0) {
    const Vertex first = 0;
    cert.loop_set = LoopSet(n, std::span(&first, 1));
    cert.e_loops = energy_self_loop_value(g, cert.loop_set);
    cert.route = WitnessRoute::kEmptyGraph;
    return cert;
  }

  const auto components = connected_components(g);
  const auto it = std::find_if(components.blocks.begin(), components.blocks.end(),
                               [](const VertexSet& b) { return b.size() >= 2; });
  const LoopSet independent(n, maximal_independent_set(g, *it));
  const double e_set = energy_self_loop_value(g, independent);
  if (e_set > cert.e_base + tol) {
    cert.loop_set = independent;
    cert.e_loops = e_set;
    cert.route = WitnessRoute::kIndependentSet;
    return cert;
  }
  const LoopSet rest = independent.complement();
  const double e_rest = energy_self_loop_value(g, rest);
  if (e_rest > cert.e_base + tol) {
    cert.loop_set = rest;
    cert.e_loops = e_rest;
    cert.route = WitnessRoute::kComplementOfIndependentSet;
    return cert;
  }
  throw AmbiguityError("neither S nor V\\S beats E(G) = " + fmt(cert.e_base) + " (E_S = " +
                           fmt(e_set) + ", E_{V\\S} = " + fmt(e_rest) + ")",
                       cert.e_base, e_set, e_rest);
}

double check_subadditivity(const Graph& g, const LoopSet& s) {
  return energy_self_loop_value(g, s) + energy_self_loop_value(g, s.complement()) -
         2.0 * energy(g);
}

CheckSummary check_theorem_cases(const Graph& g, const LoopSet& s, double tol) {
  if (s.universe() != g.order() || s.empty() || s.alpha() == g.order()) {
    throw std::invalid_argument("theorem cases need a proper nonempty loop set");
  }
  const double e = energy(g);
  const double e_s = energy_self_loop_value(g, s);
  const double e_c = energy_self_loop_value(g, s.complement());

  CheckSummary out;
  const std::string id = encode_graph6(g) + " : " + format_loop_mask(s);
  const bool below = e_s < e - tol;
  out.record(!below || e_c > e + tol, id,
             "E_S < E but E_{V\\S} = " + fmt(e_c) + " not above E = " + fmt(e));
  const bool level = std::abs(e_s - e) <= tol;
  out.record(!level || e_c >= e - tol, id,
             "E_S = E but E_{V\\S} = " + fmt(e_c) + " below E = " + fmt(e));
  return out;
}

Graph family_base(Variant v) { return v == Variant::kH1 ? hex_prism() : truncated_tetrahedron(); }

const std::vector<double>& reference_base_spectrum(Variant v) {
  static const std::vector<double> h1{-2, -1, -1, 0, 1, 1, 1, 1, 2, 3, 3, 4};
  static const std::vector<double> h2{-1, -1, -1, 0, 0, 0, 1, 1, 3, 3, 3, 4};
  return v == Variant::kH1 ? h1 : h2;
}

double family_closed_form_energy(Partner p, std::size_t n) {
  const double m = static_cast<double>(n);
  if (p == Partner::kEmpty12) return 24.0 * m - 4.0 + 4.0 * std::sqrt(36.0 * m * m + 1.0);
  return 45.0 * m - 14.0 + std::sqrt(576.0 * m * m + 49.0);
}

FamilyInstance build_family(Variant v, Partner p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("family index n must be >= 1");
  constexpr std::size_t kBlock = 12;
  const Graph h_side = disjoint_copies(family_base(v), n);
  const Graph partner =
      disjoint_copies(p == Partner::kEmpty12 ? empty_graph(kBlock) : complete_graph(kBlock), n);

  LoopSet loops(2 * kBlock * n);
  for (Vertex i = 0; i < kBlock * n; ++i) loops.insert(i);

  FamilyInstance inst;
  inst.variant = v;
  inst.partner = p;
  inst.n = n;
  inst.graph = SelfLoopGraph(join(h_side, partner), std::move(loops));

  const auto& base = reference_base_spectrum(v);
  const std::vector<double> partner_spectrum =
      p == Partner::kEmpty12 ? std::vector<double>(kBlock, 0.0) : complete12_spectrum();
  const RegularBlockSpec h_block{4.0, residual_of_copies(base, 4.0, n), kBlock * n};
  const double partner_row_sum = p == Partner::kEmpty12 ? 0.0 : 11.0;
  const RegularBlockSpec partner_block{
      partner_row_sum, residual_of_copies(partner_spectrum, partner_row_sum, n), kBlock * n};

  inst.predicted_eigenvalues = join_spectrum_regular(h_block, partner_block);
  inst.predicted_spectrum = cluster_spectrum(inst.predicted_eigenvalues);
  inst.predicted_energy = family_closed_form_energy(p, n);
  return inst;
}

FamilyPairReport verify_family_pair(Partner p, std::size_t n, double tol) {
  FamilyPairReport out;
  out.predicted_energy = family_closed_form_energy(p, n);
  std::size_t triangles[2] = {0, 0};

  for (Variant v : {Variant::kH1, Variant::kH2}) {
    const auto inst = build_family(v, p, n);
    const std::string id = std::string(to_string(v)) + "/" + to_string(p) + "/n=" +
                           std::to_string(n);
    const auto report = energy_self_loop(inst.graph);
    (v == Variant::kH1 ? out.energy_h1 : out.energy_h2) = report.energy;
    triangles[v == Variant::kH1 ? 0 : 1] = inst.graph.base().triangle_count();

    out.summary.record(inst.graph.order() == 24 * n && inst.graph.loops().alpha() == 12 * n,
                       id + ":shape", "expected 24n vertices with 12n loops");

    const auto computed = cluster_spectrum(report.spectrum);
    const auto& predicted = inst.predicted_spectrum;
    bool spectra_match = computed.size() == predicted.size();
    for (std::size_t k = 0; spectra_match && k < computed.size(); ++k) {
      spectra_match = computed[k].multiplicity == predicted[k].multiplicity &&
                      std::abs(computed[k].value - predicted[k].value) <= kClusterTolerance;
    }
    out.summary.record(spectra_match, id + ":spectrum",
                       "clustered spectrum differs from the join-rule prediction");

    out.summary.record(std::abs(report.energy - out.predicted_energy) <= tol, id + ":closed-form",
                       "energy " + fmt(report.energy) + " vs closed form " +
                           fmt(out.predicted_energy));
  }

  const std::string pair_id = std::string(to_string(p)) + "/n=" + std::to_string(n);
  out.equal = std::abs(out.energy_h1 - out.energy_h2) <= tol;
  out.summary.record(out.equal, pair_id + ":equienergetic",
                     "energies " + fmt(out.energy_h1) + " and " + fmt(out.energy_h2));

  const bool h1_bipartite = is_bipartite(family_base(Variant::kH1)).has_value();
  const bool h2_has_triangles = family_base(Variant::kH2).triangle_count() > 0;
  out.summary.record(h1_bipartite && h2_has_triangles && triangles[0] != triangles[1],
                     pair_id + ":non-isomorphic",
                     "triangle counts " + std::to_string(triangles[0]) + " and " +
                         std::to_string(triangles[1]) + " do not separate the pair");
  return out;
}

Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1u) g.add_edge(i, j);
  return g;
}

CheckSummary exhaustive_conjecture_check(std::size_t n, double tol, unsigned threads) {
  check_enumeration_order(n);
  const std::size_t count = std::size_t{1} << pair_count(n);
  return parallel_check(count, threads, [&](std::size_t mask, CheckSummary& summary) {
    const Graph g = graph_from_edge_mask(n, mask);
    check_witness(g, encode_graph6(g), tol, summary);
  });
}

CheckSummary corpus_conjecture_check(const std::vector<Graph>& corpus,
                                     const std::vector<std::string>& ids, double tol,
                                     unsigned threads) {
  if (ids.size() != corpus.size()) throw std::invalid_argument("one id per corpus graph");
  return parallel_check(corpus.size(), threads, [&](std::size_t i, CheckSummary& summary) {
    if (corpus[i].order() < 2) {
      summary.record(false, ids[i], "graph has fewer than 2 vertices");
      return;
    }
    check_witness(corpus[i], ids[i], tol, summary);
  });
}

CheckSummary exhaustive_loop_set_check(std::size_t n, double tol, unsigned threads) {
  check_enumeration_order(n);
  const std::size_t count = std::size_t{1} << pair_count(n);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  return parallel_check(count, threads, [&](std::size_t mask, CheckSummary& summary) {
    const Graph g = graph_from_edge_mask(n, mask);
    const auto e_loop = all_loop_energies(g);
    const double e = energy(g);
    const std::string g6 = encode_graph6(g);
    for (std::uint64_t s = 1; s < full; ++s) {
      const double e_s = e_loop[s];
      const double e_c = e_loop[full & ~s];
      std::string problem;
      if (e_s + e_c - 2.0 * e < -tol) problem = "subadditivity gap " + fmt(e_s + e_c - 2.0 * e);
      if (e_s < e - tol && !(e_c > e + tol)) problem = "strict case violated";
      if (std::abs(e_s - e) <= tol && e_c < e - tol) problem = "equality case violated";
      summary.record(problem.empty(), g6 + " : " + format_loop_mask(loop_set_from_mask(n, s)),
                     problem);
    }
  });
}

CheckSummary exhaustive_bipartite_check(std::size_t n, double tol, unsigned threads) {
  check_enumeration_order(n);
  const std::size_t count = std::size_t{1} << pair_count(n);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  return parallel_check(count, threads, [&](std::size_t mask, CheckSummary& summary) {
    const Graph g = graph_from_edge_mask(n, mask);
    if (!is_bipartite(g)) return;
    const auto e_loop = all_loop_energies(g);
    const double e = energy(g);
    const std::string g6 = encode_graph6(g);
    for (std::uint64_t s = 0; s <= full; ++s) {
      std::string problem;
      if (std::abs(e_loop[s] - e_loop[full & ~s]) > tol) problem = "E_S != E_{V\\S}";
      if (e_loop[s] < e - tol) problem = "E_S below E(G)";
      summary.record(problem.empty(), g6 + " : " + format_loop_mask(loop_set_from_mask(n, s)),
                     problem);
    }
  });
}

}  // namespace selfloop
