// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexcorr/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vortexcorr/error.hpp"

namespace vortexcorr {
namespace {

// Eigenvalues of the symmetric tridiagonal Jacobi matrix with zero diagonal.
std::vector<double> jacobi_eigenvalues(const std::vector<double>& offdiag) {
  const auto n = static_cast<Eigen::Index>(offdiag.size() + 1);
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    jacobi(i, i + 1) = offdiag[static_cast<std::size_t>(i)];
    jacobi(i + 1, i) = offdiag[static_cast<std::size_t>(i)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

void check_order(int order) {
  if (order < 1 || order > 256) {
    throw BoundsError("quadrature order must lie in [1, 256]");
  }
}

}  // namespace

QuadratureRule gauss_legendre(int order, double a, double b) {
  check_order(order);
  std::vector<double> offdiag;
  for (int k = 1; k < order; ++k) {
    offdiag.push_back(k / std::sqrt(4.0 * k * k - 1.0));
  }
  std::vector<double> roots = order == 1 ? std::vector<double>{0.0} : jacobi_eigenvalues(offdiag);

  QuadratureRule rule;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (double x : roots) {
    double dp = 1.0;
    for (int iter = 0; iter < 6; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) {
        p0 = 1.0;
        p1 = x;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes.push_back(mid + half * x);
    rule.weights.push_back(half * 2.0 / ((1.0 - x * x) * dp * dp));
  }
  return rule;
}

QuadratureRule gauss_hermite(int order) {
  check_order(order);
  std::vector<double> offdiag;
  for (int k = 1; k < order; ++k) {
    offdiag.push_back(std::sqrt(0.5 * k));
  }
  std::vector<double> roots = order == 1 ? std::vector<double>{0.0} : jacobi_eigenvalues(offdiag);

  const double pim4 = std::pow(std::numbers::pi, -0.25);
  QuadratureRule rule;
  for (double x : roots) {
    double dp = 1.0;
    for (int iter = 0; iter < 6; ++iter) {
      // Orthonormal Hermite functions without the Gaussian factor.
      double p_prev = 0.0;
      double p = pim4;
      for (int j = 0; j < order; ++j) {
        const double next = x * std::sqrt(2.0 / (j + 1)) * p - std::sqrt(double(j) / (j + 1)) * p_prev;
        p_prev = p;
        p = next;
      }
      dp = std::sqrt(2.0 * order) * p_prev;
      const double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes.push_back(x);
    rule.weights.push_back(2.0 / (dp * dp));
  }
  return rule;
}

QuadratureRule periodic_trapezoid(int n, double period) {
  check_order(n);
  QuadratureRule rule;
  for (int k = 0; k < n; ++k) {
    rule.nodes.push_back(period * k / n);
    rule.weights.push_back(period / n);
  }
  return rule;
}

}  // namespace vortexcorr
