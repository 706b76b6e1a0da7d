#include "hsred/eigensolver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "hsred/error.hpp"

namespace hsred {

int EigenOptions::krylov_cap(std::size_t dim) const noexcept {
  const std::size_t cap = max_iter > 0 ? static_cast<std::size_t>(max_iter) : 500;
  return static_cast<int>(std::min(dim, cap));
}

namespace {

using Vec = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

double norm(std::span<const double> a) noexcept { return std::sqrt(dot(a, a)); }

void scale(double alpha, std::span<double> x) noexcept {
  for (double& v : x) v *= alpha;
}

// Two rounds of classical Gram-Schmidt against both sets.
void orthogonalize(std::span<double> w, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  for (int round = 0; round < 2; ++round) {
    for (const Vec& q : a) axpy(-dot(q, w), q, w);
    for (const Vec& q : b) axpy(-dot(q, w), q, w);
  }
}

// Unit vector orthogonal to both sets, or empty when their span is the whole space.
Vec random_orthogonal(std::size_t dim, const std::vector<Vec>& a, const std::vector<Vec>& b,
                      std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vec v(dim);
    for (double& x : v) x = dist(rng);
    orthogonalize(v, a, b);
    const double n = norm(v);
    if (n > 1e-8 * std::sqrt(static_cast<double>(dim))) {
      scale(1.0 / n, v);
      return v;
    }
  }
  return {};
}

struct RitzPairs {
  Vec values;
  std::vector<Vec> vectors;
  int iterations = 0;
  bool converged = false;
};

// Lanczos on P A P where P projects out `locked`.
RitzPairs lanczos_pass(const CouplingHamiltonian& h, double g, int want,
                       const std::vector<Vec>& locked, double tol, int cap,
                       std::mt19937_64& rng) {
  const std::size_t dim = h.dim();
  RitzPairs out;
  if (locked.size() >= dim) return out;
  const std::size_t complement = dim - locked.size();
  const int m_max = static_cast<int>(std::min<std::size_t>(complement, cap));
  want = static_cast<int>(std::min<std::size_t>(want, complement));

  std::vector<Vec> basis;
  Vec alpha, beta;  // beta[j] couples basis[j] and basis[j+1]
  Vec v = random_orthogonal(dim, locked, basis, rng);
  if (v.empty()) return out;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
  double anorm = 0.0;
  Vec w(dim);

  auto solve_tridiagonal = [&](int m) {
    Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd e = m > 1 ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1))
                              : Eigen::VectorXd(0);
    tri.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
  };

  int m = 0;
  while (true) {
    basis.push_back(std::move(v));
    const Vec& q = basis.back();
    h.apply_into(g, q, w);
    ++out.iterations;
    for (const Vec& l : locked) axpy(-dot(l, w), l, w);

    const double a = dot(q, w);
    axpy(-a, q, w);
    if (m > 0) axpy(-beta[m - 1], basis[m - 1], w);
    orthogonalize(w, locked, basis);
    const double b = norm(w);
    alpha.push_back(a);
    ++m;
    anorm = std::max(anorm, std::abs(a) + b + (m > 1 ? beta[m - 2] : 0.0));

    const bool full = m >= m_max;
    const bool breakdown = b <= 1e-12 * std::max(anorm, 1e-300);
    const bool check = full || breakdown || (m >= want && (m < 40 || m % 5 == 0));

    if (check) {
      solve_tridiagonal(m);
      bool ok = m >= want;
      for (int i = 0; ok && i < want; ++i) {
        const double theta = tri.eigenvalues()(i);
        const double estimate = (breakdown ? 0.0 : b) * std::abs(tri.eigenvectors()(m - 1, i));
        if (estimate > 0.25 * tol * std::max(1.0, std::abs(theta))) ok = false;
      }
      if (ok || full) {
        out.converged = ok || (full && static_cast<std::size_t>(m) == complement);
        break;
      }
    }

    if (breakdown) {
      // invariant subspace found; continue in its complement
      beta.push_back(0.0);
      v = random_orthogonal(dim, locked, basis, rng);
      if (v.empty()) {
        solve_tridiagonal(m);
        out.converged = true;
        break;
      }
    } else {
      beta.push_back(b);
      v.assign(w.begin(), w.end());
      scale(1.0 / b, v);
    }
  }

  const int count = std::min(want, m);
  for (int i = 0; i < count; ++i) {
    out.values.push_back(tri.eigenvalues()(i));
    Vec y(dim, 0.0);
    for (int j = 0; j < m; ++j) axpy(tri.eigenvectors()(j, i), basis[j], y);
    scale(1.0 / norm(y), y);
    out.vectors.push_back(std::move(y));
  }
  return out;
}

// Rayleigh-Ritz on span(vectors): rotates an orthonormal set into eigenvector
// estimates and sorts by value.
void rayleigh_ritz(const CouplingHamiltonian& h, double g, std::vector<Vec>& vectors, Vec& values) {
  const std::size_t n = vectors.size();
  std::vector<Vec> hv(n);
  for (std::size_t i = 0; i < n; ++i) hv[i] = h.apply(g, vectors[i]);
  Eigen::MatrixXd proj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) proj(i, j) = proj(j, i) = 0.5 * (dot(vectors[i], hv[j]) + dot(vectors[j], hv[i]));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(proj);
  std::vector<Vec> rotated(n, Vec(vectors.front().size(), 0.0));
  values.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = es.eigenvalues()(i);
    for (std::size_t j = 0; j < n; ++j) axpy(es.eigenvectors()(j, i), vectors[j], rotated[i]);
    scale(1.0 / norm(rotated[i]), rotated[i]);
  }
  vectors = std::move(rotated);
}

}  // namespace

void fix_sign(std::span<double> v) noexcept {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  if (!v.empty() && v[best] < 0.0)
    for (double& x : v) x = -x;
}

EigenResult lowest_k(const CouplingHamiltonian& h, double g, const EigenOptions& opts) {
  const std::size_t dim = h.dim();
  if (opts.k < 1 || static_cast<std::size_t>(opts.k) > dim) {
    throw Error(ErrorCode::dimension_too_small, "requested " + std::to_string(opts.k) +
                                                    " eigenpairs from a space of dimension " +
                                                    std::to_string(dim));
  }
  if (!(opts.tol > 0.0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");

  std::mt19937_64 rng(opts.seed);
  const int cap = opts.krylov_cap(dim);
  EigenResult result;

  RitzPairs found = lanczos_pass(h, g, opts.k, {}, opts.tol, cap, rng);
  result.iterations += found.iterations;
  if (!found.converged || found.values.size() < static_cast<std::size_t>(opts.k)) {
    throw NoConvergence("Lanczos did not converge within " + std::to_string(cap) + " iterations",
                        {});
  }

  constexpr int kMaxVerifyPasses = 8;
  for (int pass = 0; opts.verify_multiplicity && pass < kMaxVerifyPasses; ++pass) {
    RitzPairs extra = lanczos_pass(h, g, 1, found.vectors, opts.tol, cap, rng);
    result.iterations += extra.iterations;
    if (extra.values.empty()) break;
    const double top = found.values.back();
    if (!(extra.values.front() < top - 1e-9 * std::max(1.0, std::abs(top)))) break;
    // a missed eigenvalue: swap it in for the current largest and re-verify
    found.vectors.back() = std::move(extra.vectors.front());
    found.values.back() = extra.values.front();
    rayleigh_ritz(h, g, found.vectors, found.values);
  }

  // Clean rotation inside the converged subspace, which matters for clusters.
  rayleigh_ritz(h, g, found.vectors, found.values);

  result.values = std::move(found.values);
  result.vectors = std::move(found.vectors);
  std::vector<double> scratch(dim);
  for (std::size_t i = 0; i < result.values.size(); ++i) {
    fix_sign(result.vectors[i]);
    h.apply_into(g, result.vectors[i], scratch);
    axpy(-result.values[i], result.vectors[i], scratch);
    result.residuals.push_back(norm(scratch));
  }
  for (std::size_t i = 0; i < result.values.size(); ++i) {
    if (result.residuals[i] > opts.tol * std::max(1.0, std::abs(result.values[i]))) {
      throw NoConvergence("Lanczos residual " + std::to_string(result.residuals[i]) +
                              " exceeds tolerance for eigenpair " + std::to_string(i),
                          result.residuals);
    }
  }
  if (result.values.size() >= 2) {
    result.degenerate =
        std::abs(result.values[1] - result.values[0]) <=
        1e-8 * std::max(1.0, std::abs(result.values[0]));
  }
  return result;
}

std::vector<double> dense_matrix(const CouplingHamiltonian& h, double g) {
  const std::size_t dim = h.dim();
  if (dim > kDenseLimit) {
    throw Error(ErrorCode::dimension_guard,
                "dense solve limited to dimension " + std::to_string(kDenseLimit));
  }
  std::vector<double> m(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto c0 = h.h0().row_cols(i);
    const auto v0 = h.h0().row_values(i);
    for (std::size_t p = 0; p < c0.size(); ++p) m[i * dim + c0[p]] += v0[p];
    const auto c1 = h.h1().row_cols(i);
    const auto v1 = h.h1().row_values(i);
    for (std::size_t p = 0; p < c1.size(); ++p) m[i * dim + c1[p]] += g * v1[p];
  }
  return m;
}

std::vector<double> dense_spectrum(const CouplingHamiltonian& h, double g) {
  const auto m = dense_matrix(h, g);
  const auto dim = static_cast<Eigen::Index>(h.dim());
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      a(m.data(), dim, dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(a), Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(), es.eigenvalues().data() + dim};
}

DenseEigensystem dense_eigensystem(const CouplingHamiltonian& h, double g) {
  const auto m = dense_matrix(h, g);
  const auto dim = static_cast<Eigen::Index>(h.dim());
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      a(m.data(), dim, dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es{Eigen::MatrixXd(a)};
  DenseEigensystem out;
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    std::vector<double> v(es.eigenvectors().col(i).data(), es.eigenvectors().col(i).data() + dim);
    fix_sign(v);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

}  // namespace hsred
