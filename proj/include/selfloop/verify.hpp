#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "selfloop/energy.hpp"
#include "selfloop/graph.hpp"
#include "selfloop/spectral.hpp"

namespace selfloop {

enum class WitnessRoute { kEmptyGraph, kIndependentSet, kComplementOfIndependentSet };

const char* to_string(WitnessRoute r);

/// A loop set S together with the energies showing E(G_S) > E(G).
struct WitnessCertificate {
  LoopSet loop_set;
  double e_base = 0.0;
  double e_loops = 0.0;
  WitnessRoute route = WitnessRoute::kEmptyGraph;

  double margin() const { return e_loops - e_base; }
};

/// Raised when neither the independent set nor its complement beats E(G)
/// by more than the tolerance.
class AmbiguityError : public std::runtime_error {
 public:
  AmbiguityError(const std::string& what, double e_base, double e_set, double e_complement);
  double e_base;
  double e_set;
  double e_complement;
};

struct Failure {
  std::string input_id;
  std::string detail;
};

struct CheckSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<Failure> failures;

  void record(bool ok, const std::string& id, const std::string& detail = {});
  void merge(const CheckSummary& other);
  bool ok() const { return failures.empty() && passed == total; }
};

WitnessCertificate conjecture_witness(const Graph& g, double tol = kComparisonTolerance);

/// E(G_S) + E(G_{V\S}) - 2E(G).
double check_subadditivity(const Graph& g, const LoopSet& s);

/// For one proper nonempty S: E_S < E implies E_{V\S} > E, and E_S = E
/// implies E_{V\S} >= E.
CheckSummary check_theorem_cases(const Graph& g, const LoopSet& s,
                                 double tol = kComparisonTolerance);

enum class Variant { kH1, kH2 };
enum class Partner { kEmpty12, kComplete12 };

const char* to_string(Variant v);
const char* to_string(Partner p);

/// H1 and H2 as 12-vertex graphs with a loop on every vertex: hexagonal
/// prism and truncated tetrahedron.
Graph family_base(Variant v);

/// Listed spectra of H1 and H2 (with loops), ascending.
const std::vector<double>& reference_base_spectrum(Variant v);

/// Closed-form energy shared by both variants:
///   empty partner:    24n - 4 + 4 sqrt(36n^2 + 1)
///   complete partner: 45n - 14 + sqrt(576n^2 + 49)
double family_closed_form_energy(Partner p, std::size_t n);

struct FamilyInstance {
  Variant variant = Variant::kH1;
  Partner partner = Partner::kEmpty12;
  std::size_t n = 0;
  SelfLoopGraph graph;
  Spectrum predicted_eigenvalues;
  ClusteredSpectrum predicted_spectrum;
  double predicted_energy = 0.0;
};

/// (n copies of H) joined to (n copies of the 12-vertex partner), loops on
/// the 12n H-side vertices, which are labelled first.
FamilyInstance build_family(Variant v, Partner p, std::size_t n);

struct FamilyPairReport {
  CheckSummary summary;
  double energy_h1 = 0.0;
  double energy_h2 = 0.0;
  double predicted_energy = 0.0;
  bool equal = false;
};

FamilyPairReport verify_family_pair(Partner p, std::size_t n,
                                    double tol = kComparisonTolerance);

/// Graph on `n` labelled vertices whose edge set is the bit pattern `mask`
/// over pairs (i<j) in row-major order.
Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask);

/// Runs the witness procedure on every labelled graph on exactly `n`
/// vertices (2 <= n <= 6) and checks each certificate against its route.
CheckSummary exhaustive_conjecture_check(std::size_t n, double tol = kComparisonTolerance,
                                         unsigned threads = 0);

CheckSummary corpus_conjecture_check(const std::vector<Graph>& corpus,
                                     const std::vector<std::string>& ids,
                                     double tol = kComparisonTolerance, unsigned threads = 0);

/// Complement subadditivity plus both complement implications for every proper
/// nonempty S of every labelled graph on `n` vertices.
CheckSummary exhaustive_loop_set_check(std::size_t n, double tol = kComparisonTolerance,
                                       unsigned threads = 0);

/// For every bipartite labelled graph on `n` vertices and every S:
/// E(G_S) = E(G_{V\S}) and E(G_S) >= E(G), both within `tol`.
CheckSummary exhaustive_bipartite_check(std::size_t n, double tol = kComparisonTolerance,
                                        unsigned threads = 0);

}  // namespace selfloop
