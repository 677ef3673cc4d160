#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "selfloop/energy.hpp"
#include "selfloop/spectral.hpp"
#include "selfloop/verify.hpp"

using namespace selfloop;

namespace {

bool close(const Spectrum& s, std::vector<double> expected, double tol) {
  std::sort(expected.begin(), expected.end(), std::greater<>());
  if (s.size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (std::abs(s[i] - expected[i]) > tol) return false;
  return true;
}

SymmetricMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, u(rng));
  return m;
}

}  // namespace

TEST_CASE("eigenvalues of small known matrices") {
  CHECK(close(eigenvalues_symmetric(adjacency_matrix(complete_graph(3))), {2, -1, -1}, 1e-12));
  CHECK(close(eigenvalues_symmetric(adjacency_matrix(path_graph(3))),
              {std::sqrt(2.0), 0.0, -std::sqrt(2.0)}, 1e-12));
  CHECK(close(eigenvalues_symmetric(SymmetricMatrix::diagonal({3, 1, -2})), {3, 1, -2}, 0.0));
  CHECK(close(eigenvalues_symmetric(SymmetricMatrix(4)), {0, 0, 0, 0}, 0.0));
  CHECK_THROWS_AS(eigenvalues_symmetric(SymmetricMatrix(0)), std::invalid_argument);
}

TEST_CASE("spectrum is sorted descending") {
  const Spectrum s({1.0, 3.0, -2.0, 0.5});
  CHECK(s.values() == std::vector<double>{3.0, 1.0, 0.5, -2.0});
  CHECK(s.sum() == doctest::Approx(2.5));
  CHECK(s.sum_abs() == doctest::Approx(6.5));
}

TEST_CASE("non-convergence is reported with the residual") {
  JacobiOptions opts;
  opts.max_sweeps = 0;
  try {
    eigenvalues_symmetric(adjacency_matrix(path_graph(4)), opts);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.sweeps() == 0);
    CHECK(e.residual() == doctest::Approx(std::sqrt(6.0)));
  }
}

TEST_CASE("known graph spectra") {
  for (std::size_t n = 2; n <= 20; ++n) {
    CHECK(close(eigenvalues_symmetric(adjacency_matrix(complete_graph(n))), oracle::complete_spectrum(n), 1e-9));
    CHECK(close(eigenvalues_symmetric(adjacency_matrix(path_graph(n))), oracle::path_spectrum(n), 1e-9));
  }
  for (std::size_t n = 3; n <= 20; ++n)
    CHECK(close(eigenvalues_symmetric(adjacency_matrix(cycle_graph(n))), oracle::cycle_spectrum(n), 1e-9));
  for (std::size_t p = 1; p <= 6; ++p)
    for (std::size_t q = 1; q <= 6; ++q)
      CHECK(close(eigenvalues_symmetric(adjacency_matrix(complete_bipartite_graph(p, q))),
                  oracle::complete_bipartite_spectrum(p, q), 1e-9));
}

TEST_CASE("named cubic graphs") {
  CHECK(close(eigenvalues_symmetric(adjacency_matrix(hex_prism())),
              {3, 2, 2, 1, 0, 0, 0, 0, -1, -2, -2, -3}, 1e-9));
  CHECK(close(eigenvalues_symmetric(adjacency_matrix(truncated_tetrahedron())),
              {3, 2, 2, 2, 0, 0, -1, -1, -1, -2, -2, -2}, 1e-9));
}

TEST_CASE("trace and Frobenius identities on random matrices") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 30;
    const SymmetricMatrix m = random_symmetric(n, rng);
    const Spectrum s = eigenvalues_symmetric(m);
    double squares = 0.0;
    for (double x : s.values()) squares += x * x;
    CHECK(std::abs(s.sum() - m.trace()) <= 1e-9 * n);
    CHECK(std::abs(squares - m.frobenius_norm() * m.frobenius_norm()) <= 1e-9 * n);
  }
}

TEST_CASE("singular values") {
  CHECK(close(singular_values_symmetric(adjacency_matrix(complete_graph(3))), {2, 1, 1}, 1e-12));
  CHECK(close(singular_values_symmetric(SymmetricMatrix(4)), {0, 0, 0, 0}, 0.0));
  CHECK(close(singular_values_symmetric(adjacency_matrix(complete_graph(2)).shifted(-0.5)), {1.5, 0.5},
              1e-12));
}

TEST_CASE("clustering") {
  const auto a = cluster_spectrum(Spectrum({2.0 + 1e-10, 2.0, -1.0}), 1e-6);
  REQUIRE(a.size() == 2);
  CHECK(a[0].value == doctest::Approx(2.0));
  CHECK(a[0].multiplicity == 2);
  CHECK(a[1].value == -1.0);
  CHECK(a[1].multiplicity == 1);

  const auto b = cluster_spectrum(Spectrum({5.0}), 0.3);
  REQUIRE(b.size() == 1);
  CHECK(b[0].multiplicity == 1);

  CHECK_THROWS_AS(cluster_spectrum(Spectrum({1.0}), 0.0), std::invalid_argument);
}

TEST_CASE("clustered spectrum of the H1 join at n = 1") {
  const auto inst = build_family(Variant::kH1, Partner::kEmpty12, 1);
  const auto c = cluster_spectrum(eigenvalues_symmetric(adjacency_with_loops(inst.graph)));
  const double root = 2.0 * std::sqrt(37.0);
  // value : multiplicity, descending
  const std::vector<std::pair<double, std::size_t>> expected{
      {2 + root, 1}, {3, 2}, {2, 1}, {1, 4}, {0, 12}, {-1, 2}, {-2, 1}, {2 - root, 1}};
  REQUIRE(c.size() == expected.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(c[i].value == doctest::Approx(expected[i].first));
    CHECK(c[i].multiplicity == expected[i].second);
  }
}

TEST_CASE("join spectrum of regular blocks") {
  for (std::size_t p = 1; p <= 5; ++p) {
    for (std::size_t q = 1; q <= 5; ++q) {
      const Spectrum s = join_spectrum_regular({0.0, std::vector<double>(p - 1, 0.0), p},
                                               {0.0, std::vector<double>(q - 1, 0.0), q});
      CHECK(close(s, oracle::complete_bipartite_spectrum(p, q), 1e-12));
    }
  }

  // K12 partner: (x-4)(x-11) = 144 has roots 20 and -5.
  const Spectrum k = join_spectrum_regular({4.0, std::vector<double>(11, 0.0), 12},
                                           {11.0, std::vector<double>(11, -1.0), 12});
  CHECK(k[0] == doctest::Approx(20.0));
  CHECK(k[23] == doctest::Approx(-5.0));

  for (std::size_t n = 1; n <= 3; ++n) {
    const double m = static_cast<double>(n);
    const Spectrum e = join_spectrum_regular({4.0, std::vector<double>(12 * n - 1, 0.0), 12 * n},
                                             {0.0, std::vector<double>(12 * n - 1, 0.0), 12 * n});
    CHECK(e[0] == doctest::Approx(2 + 2 * std::sqrt(36 * m * m + 1)));
    CHECK(e[24 * n - 1] == doctest::Approx(2 - 2 * std::sqrt(36 * m * m + 1)));
  }

  CHECK_THROWS_AS(join_spectrum_regular({0.0, {0.0}, 3}, {0.0, {}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(join_spectrum_regular({0.0, {}, 0}, {0.0, {}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(join_spectrum_regular({0.0, {}, 1}, {0.0, {}, 1}, 1.0, -1.0), std::domain_error);
}

TEST_CASE("join spectrum matches a direct eigensolve") {
  const std::vector<Graph> regular{complete_graph(3), cycle_graph(5), hex_prism(),
                                   truncated_tetrahedron(), empty_graph(4), cycle_graph(6),
                                   disjoint_copies(complete_graph(2), 3), complete_graph(1)};
  for (const Graph& g : regular) {
    for (const Graph& h : regular) {
      if (g.order() + h.order() > 16) continue;
      auto block = [](const Graph& x) {
        auto values = eigenvalues_symmetric(adjacency_matrix(x)).values();
        return RegularBlockSpec{values.front(), {values.begin() + 1, values.end()}, x.order()};
      };
      const Spectrum predicted = join_spectrum_regular(block(g), block(h));
      const Spectrum direct = eigenvalues_symmetric(adjacency_matrix(join(g, h)));
      CHECK(close(direct, predicted.values(), 1e-8));
    }
  }
}

TEST_CASE("subadditivity gap") {
  const auto id = SymmetricMatrix::identity(3);
  CHECK(subadditivity_gap(id, id) == doctest::Approx(0.0));
  CHECK(subadditivity_gap(SymmetricMatrix::diagonal({1, -1}), SymmetricMatrix::diagonal({-1, 1})) ==
        doctest::Approx(4.0));
  CHECK_THROWS_AS(subadditivity_gap(SymmetricMatrix(2), SymmetricMatrix(3)), std::invalid_argument);

  // P3 with S = {1}: A(G_S) - I/3 and A(G_{V\S}) - 2I/3 sum to 2A(G).
  const Graph p3 = path_graph(3);
  const Vertex one[] = {1};
  const LoopSet s(3, one);
  const auto a = adjacency_with_loops(SelfLoopGraph(p3, s)).shifted(-1.0 / 3.0);
  const auto b = adjacency_with_loops(SelfLoopGraph(p3, s.complement())).shifted(-2.0 / 3.0);
  CHECK(subadditivity_gap(a, b) == doctest::Approx(20.0 / 3.0 - 4.0 * std::sqrt(2.0)));

  std::mt19937_64 rng(17);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = 1 + rng() % 10;
    CHECK(subadditivity_gap(random_symmetric(n, rng), random_symmetric(n, rng)) >= -1e-8);
  }
}

TEST_CASE("loops perturb each sorted eigenvalue by at most one") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const Graph g = graph_from_edge_mask(n, mask);
      const Spectrum base = eigenvalues_symmetric(adjacency_matrix(g));
      for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        LoopSet loops(n);
        for (Vertex v = 0; v < n; ++v)
          if ((s >> v) & 1u) loops.insert(v);
        const Spectrum shifted = eigenvalues_symmetric(adjacency_with_loops(SelfLoopGraph(g, loops)));
        bool bounded = true;
        for (std::size_t i = 0; i < n; ++i)
          bounded = bounded && shifted[i] >= base[i] - 1e-9 && shifted[i] <= base[i] + 1.0 + 1e-9;
        if (!bounded) FAIL_CHECK("graph mask " << mask << " loops " << s);
      }
    }
  }
}

TEST_CASE("PSD matrix with a zero diagonal entry has a zero row") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + rng() % 8;
    const std::size_t k = 1 + rng() % 8;
    const std::size_t zero_col = rng() % n;
    std::vector<double> b(k * n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c) b[r * n + c] = c == zero_col ? 0.0 : u(rng);
    SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double dot = 0.0;
        for (std::size_t r = 0; r < k; ++r) dot += b[r * n + i] * b[r * n + j];
        m.set(i, j, dot);
      }
    }
    const Spectrum s = eigenvalues_symmetric(m);
    CHECK(s[n - 1] >= -1e-12 * std::max(1.0, m.frobenius_norm()));
    REQUIRE(m(zero_col, zero_col) == 0.0);
    for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(m(zero_col, j)) <= 1e-12);
  }
}
