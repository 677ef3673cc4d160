#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace selfloop {

/// Dense real symmetric matrix. `set` writes both (i,j) and (j,i), so the
/// stored entries are exactly symmetric.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t order);

  static SymmetricMatrix identity(std::size_t order);
  static SymmetricMatrix diagonal(const std::vector<double>& d);

  std::size_t order() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v);

  double trace() const;
  double frobenius_norm() const;

  /// Returns this + shift * I.
  SymmetricMatrix shifted(double shift) const;

  friend SymmetricMatrix operator+(const SymmetricMatrix& x, const SymmetricMatrix& y);

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Eigenvalues (or singular values) sorted in non-increasing order.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double sum() const;
  double sum_abs() const;

 private:
  std::vector<double> values_;
};

struct Cluster {
  double value;
  std::size_t multiplicity;
};
using ClusteredSpectrum = std::vector<Cluster>;

/// Block with constant row sums, described by its row sum r, the remaining
/// eigenvalues and its order.
struct RegularBlockSpec {
  double row_sum = 0.0;
  std::vector<double> residual;
  std::size_t size = 0;
};

struct JacobiOptions {
  double relative_tolerance = 1e-12;
  int max_sweeps = 100;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(int sweeps, double residual);
  int sweeps() const { return sweeps_; }
  double residual() const { return residual_; }

 private:
  int sweeps_;
  double residual_;
};

/// Cyclic Jacobi (row-major sweep over p < q). Stops once the
/// off-diagonal Frobenius mass is <= tol * ||m||_F.
Spectrum eigenvalues_symmetric(const SymmetricMatrix& m, const JacobiOptions& opts = {});

Spectrum singular_values_symmetric(const SymmetricMatrix& m, const JacobiOptions& opts = {});

inline constexpr double kClusterTolerance = 1e-6;

/// Greedy left-to-right grouping of a sorted spectrum. A value joins the
/// running cluster when it lies within `tol` of the cluster mean.
ClusteredSpectrum cluster_spectrum(const Spectrum& s, double tol = kClusterTolerance);

/// Spectrum of [[M1, aJ], [bJ, M2]] for constant-row-sum normal blocks:
/// both residual lists plus the roots of (x-r1)(x-r2) - a*b*n1*n2 = 0.
Spectrum join_spectrum_regular(const RegularBlockSpec& b1, const RegularBlockSpec& b2,
                               double a = 1.0, double b = 1.0);

/// sum s_i(a) + sum s_i(b) - sum s_i(a+b); non-negative up to round-off.
double subadditivity_gap(const SymmetricMatrix& a, const SymmetricMatrix& b);

}  // namespace selfloop
