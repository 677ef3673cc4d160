#include "selfloop/energy.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace selfloop {

namespace {

// Every evaluation re-checks that the eigenvalues sum to the trace alpha.
constexpr double kTraceTolerance = 1e-9;

void check_trace(const Spectrum& s, std::size_t alpha) {
  const double drift = std::abs(s.sum() - static_cast<double>(alpha));
  if (drift > kTraceTolerance) {
    std::ostringstream os;
    os << "eigenvalue sum drifted from trace " << alpha << " by " << drift;
    throw std::logic_error(os.str());
  }
}

}  // namespace

SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix m(g.order());
  for (auto [i, j] : g.edges()) m.set(i, j, 1.0);
  return m;
}

SymmetricMatrix adjacency_with_loops(const SelfLoopGraph& gs) {
  SymmetricMatrix m = adjacency_matrix(gs.base());
  for (Vertex v : gs.loops().members()) m.set(v, v, 1.0);
  return m;
}

double energy(const Graph& g) {
  if (g.order() == 0) return 0.0;
  const Spectrum s = eigenvalues_symmetric(adjacency_matrix(g));
  check_trace(s, 0);
  return s.sum_abs();
}

EnergyReport energy_self_loop(const SelfLoopGraph& gs) {
  const std::size_t n = gs.order();
  if (n == 0) throw std::invalid_argument("self-loop energy needs n >= 1");
  EnergyReport r;
  r.n = n;
  r.alpha = gs.loops().alpha();
  r.shift = static_cast<double>(r.alpha) / static_cast<double>(n);
  r.spectrum = eigenvalues_symmetric(adjacency_with_loops(gs));
  check_trace(r.spectrum, r.alpha);
  r.energy = energy_from_spectrum(r.spectrum, r.alpha, n);
  return r;
}

double energy_self_loop_value(const Graph& g, const LoopSet& s) {
  return energy_self_loop(SelfLoopGraph(g, s)).energy;
}

double energy_from_spectrum(const Spectrum& s, std::size_t alpha, std::size_t n) {
  if (s.size() != n) {
    throw std::invalid_argument("spectrum has " + std::to_string(s.size()) +
                                " values but n = " + std::to_string(n));
  }
  if (n == 0 || alpha > n) throw std::invalid_argument("need 0 <= alpha <= n and n >= 1");
  const double shift = static_cast<double>(alpha) / static_cast<double>(n);
  double e = 0.0;
  for (double x : s.values()) e += std::abs(x - shift);
  return e;
}

}  // namespace selfloop
