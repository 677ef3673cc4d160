#pragma once

#include <cstddef>

#include "selfloop/graph.hpp"
#include "selfloop/spectral.hpp"

namespace selfloop {

/// Absolute tolerance for every equality/inequality claim between energies.
inline constexpr double kComparisonTolerance = 1e-8;

struct EnergyReport {
  std::size_t n = 0;
  std::size_t alpha = 0;
  double shift = 0.0;  // alpha / n
  double energy = 0.0;
  Spectrum spectrum;
};

SymmetricMatrix adjacency_matrix(const Graph& g);

/// A(G_S) = D_S + A(G).
SymmetricMatrix adjacency_with_loops(const SelfLoopGraph& gs);

double energy(const Graph& g);

/// sum |lambda_i^S - alpha/n| over the spectrum of A(G_S). Throws
/// std::invalid_argument for n = 0.
EnergyReport energy_self_loop(const SelfLoopGraph& gs);

double energy_self_loop_value(const Graph& g, const LoopSet& s);

double energy_from_spectrum(const Spectrum& s, std::size_t alpha, std::size_t n);

}  // namespace selfloop
