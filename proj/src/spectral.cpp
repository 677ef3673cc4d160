#include "selfloop/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace selfloop {

SymmetricMatrix::SymmetricMatrix(std::size_t order) : n_(order), a_(order * order, 0.0) {}

SymmetricMatrix SymmetricMatrix::identity(std::size_t order) {
  SymmetricMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.set(i, i, 1.0);
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(const std::vector<double>& d) {
  SymmetricMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double v) {
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = v;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return t;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

SymmetricMatrix SymmetricMatrix::shifted(double shift) const {
  SymmetricMatrix m = *this;
  for (std::size_t i = 0; i < n_; ++i) m.a_[i * n_ + i] += shift;
  return m;
}

SymmetricMatrix operator+(const SymmetricMatrix& x, const SymmetricMatrix& y) {
  if (x.order() != y.order()) throw std::invalid_argument("matrix order mismatch");
  SymmetricMatrix m = x;
  for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += y.a_[k];
  return m;
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

double Spectrum::sum_abs() const {
  double s = 0.0;
  for (double x : values_) s += std::abs(x);
  return s;
}

namespace {

std::string convergence_message(int sweeps, double residual) {
  std::ostringstream os;
  os << "Jacobi eigensolver did not converge after " << sweeps
     << " sweeps (off-diagonal mass " << residual << ")";
  return os.str();
}

double off_diagonal_mass(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
  return std::sqrt(2.0 * s);
}

}  // namespace

ConvergenceError::ConvergenceError(int sweeps, double residual)
    : std::runtime_error(convergence_message(sweeps, residual)),
      sweeps_(sweeps),
      residual_(residual) {}

Spectrum eigenvalues_symmetric(const SymmetricMatrix& m, const JacobiOptions& opts) {
  const std::size_t n = m.order();
  if (n == 0) throw std::invalid_argument("eigenvalues_symmetric needs order >= 1");

  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  const double threshold = opts.relative_tolerance * m.frobenius_norm();
  double off = off_diagonal_mass(a, n);
  int sweep = 0;
  while (off > threshold && off > 0.0) {
    if (sweep == opts.max_sweeps) throw ConvergenceError(sweep, off);
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Rotation that annihilates (p,q), in the small-angle stable form.
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          const double new_rp = arp - s * (arq + tau * arp);
          const double new_rq = arq + s * (arp - tau * arq);
          at(r, p) = at(p, r) = new_rp;
          at(r, q) = at(q, r) = new_rq;
        }
      }
    }
    off = off_diagonal_mass(a, n);
  }

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
  return Spectrum(std::move(diag));
}

Spectrum singular_values_symmetric(const SymmetricMatrix& m, const JacobiOptions& opts) {
  auto values = eigenvalues_symmetric(m, opts).values();
  for (double& x : values) x = std::abs(x);
  return Spectrum(std::move(values));
}

ClusteredSpectrum cluster_spectrum(const Spectrum& s, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("cluster tolerance must be positive");
  ClusteredSpectrum out;
  double running_sum = 0.0;
  for (double x : s.values()) {
    if (!out.empty() && std::abs(x - out.back().value) <= tol) {
      running_sum += x;
      ++out.back().multiplicity;
      out.back().value = running_sum / static_cast<double>(out.back().multiplicity);
    } else {
      out.push_back({x, 1});
      running_sum = x;
    }
  }
  return out;
}

Spectrum join_spectrum_regular(const RegularBlockSpec& b1, const RegularBlockSpec& b2, double a,
                               double b) {
  for (const auto* blk : {&b1, &b2}) {
    if (blk->size < 1) throw std::invalid_argument("regular block must have size >= 1");
    if (blk->residual.size() != blk->size - 1) {
      throw std::invalid_argument("regular block residual list must have size - 1 entries");
    }
  }
  // (x - r1)(x - r2) - a b n1 n2 = x^2 - (r1 + r2) x + r1 r2 - a b n1 n2
  const double coupling = a * b * static_cast<double>(b1.size) * static_cast<double>(b2.size);
  const double half_gap = (b1.row_sum - b2.row_sum) / 2.0;
  const double disc = half_gap * half_gap + coupling;
  if (disc < 0.0) throw std::domain_error("join quadratic has complex roots");
  const double mid = (b1.row_sum + b2.row_sum) / 2.0;
  const double root = std::sqrt(disc);

  std::vector<double> values;
  values.reserve(b1.size + b2.size);
  values.insert(values.end(), b1.residual.begin(), b1.residual.end());
  values.insert(values.end(), b2.residual.begin(), b2.residual.end());
  values.push_back(mid + root);
  values.push_back(mid - root);
  return Spectrum(std::move(values));
}

double subadditivity_gap(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("subadditivity_gap: order mismatch");
  return singular_values_symmetric(a).sum() + singular_values_symmetric(b).sum() -
         singular_values_symmetric(a + b).sum();
}

}  // namespace selfloop
