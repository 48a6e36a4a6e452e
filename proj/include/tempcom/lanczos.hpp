#pragma once

// Largest algebraic eigenpair of a symmetric operator given only as a
// matrix-vector product. Lanczos with full reorthogonalisation; the Ritz
// pair is accepted once the residual bound |beta_k s_k| falls below
// tol * |theta|, which bounds the eigenvalue error by the same amount.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "tempcom/rng.hpp"

namespace tempcom {

struct LanczosOptions {
  double tol = 1e-10;
  std::size_t max_iter = 0;  // 0: up to n
  std::size_t check_every = 10;
  std::uint64_t seed = 0x1A2C705;
};

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit norm; empty unless requested
  std::size_t iterations = 0;
  double residual = 0.0;
};

// `apply(x, y)` must compute y = M x for spans of length n.
template <class MatVec>
EigenPair largest_eigenpair(std::size_t n, MatVec&& apply, bool want_vector = false,
                            const LanczosOptions& opts = {}) {
  if (n == 0) throw std::invalid_argument("eigenproblem of size 0");
  using Eigen::MatrixXd;
  using Eigen::VectorXd;

  EigenPair out;
  if (n == 1) {
    std::vector<double> x{1.0}, y{0.0};
    apply(std::span<const double>(x), std::span<double>(y));
    out.value = y[0];
    out.iterations = 1;
    if (want_vector) out.vector = {1.0};
    return out;
  }

  const std::size_t max_iter = std::min(n, opts.max_iter ? opts.max_iter : n);
  std::size_t cap = std::min<std::size_t>(max_iter, 64);
  MatrixXd q(n, cap);
  std::vector<double> alpha, beta;

  Rng rng(opts.seed);
  VectorXd v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.uniform() - 0.5;
  v.normalize();
  q.col(0) = v;

  VectorXd w(n);
  Eigen::SelfAdjointEigenSolver<MatrixXd> tri;
  double theta = 0.0;
  VectorXd ritz;

  auto solve_tridiagonal = [&](std::size_t m) {
    VectorXd d = Eigen::Map<const VectorXd>(alpha.data(), static_cast<Eigen::Index>(m));
    VectorXd e = Eigen::Map<const VectorXd>(beta.data(), static_cast<Eigen::Index>(m - 1));
    if (m == 1) {
      theta = d[0];
      ritz = VectorXd::Ones(1);
      return;
    }
    tri.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
    theta = tri.eigenvalues()[static_cast<Eigen::Index>(m - 1)];
    ritz = tri.eigenvectors().col(static_cast<Eigen::Index>(m - 1));
  };

  std::size_t m = 0;
  for (std::size_t j = 0; j < max_iter; ++j) {
    apply(std::span<const double>(q.col(j).data(), n), std::span<double>(w.data(), n));
    const double a = q.col(j).dot(w);
    alpha.push_back(a);
    m = j + 1;
    // two passes of classical Gram-Schmidt against the whole basis
    auto basis = q.leftCols(static_cast<Eigen::Index>(m));
    for (int pass = 0; pass < 2; ++pass) {
      VectorXd h = basis.transpose() * w;
      w.noalias() -= basis * h;
    }
    const double b = w.norm();
    const double scale = std::max({std::abs(a), j ? beta.back() : 0.0, 1e-300});
    const bool breakdown = b <= 1e-13 * scale;
    const bool last = m == max_iter;
    if (breakdown || last || (m >= 8 && m % opts.check_every == 0)) {
      solve_tridiagonal(m);
      const double resid = breakdown ? 0.0 : b * std::abs(ritz[static_cast<Eigen::Index>(m - 1)]);
      out.residual = resid;
      if (breakdown || last || resid <= opts.tol * std::max(std::abs(theta), 1e-12)) break;
    }
    beta.push_back(b);
    if (m == cap) {
      cap = std::min(max_iter, 2 * cap);
      q.conservativeResize(Eigen::NoChange, static_cast<Eigen::Index>(cap));
    }
    q.col(static_cast<Eigen::Index>(m)) = w / b;
  }

  out.value = theta;
  out.iterations = m;
  if (want_vector) {
    VectorXd x = q.leftCols(static_cast<Eigen::Index>(m)) * ritz;
    x.normalize();
    out.vector.assign(x.data(), x.data() + n);
  }
  return out;
}

}  // namespace tempcom
