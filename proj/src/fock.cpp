// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexcorr/fock.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>
#include <fmt/format.h>

#include "vortexcorr/error.hpp"

namespace vortexcorr {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr Complex kI{0.0, 1.0};
constexpr int kMaxCutoff = 400;

using Triplet = Eigen::Triplet<Complex>;
using DenseMode = Eigen::MatrixXcd;

// ρ_a ⊗ ρ_b with per-mode matrices of equal size.
QuantumState::Matrix kron(const DenseMode& a, const DenseMode& b) {
  const auto n = a.rows();
  std::vector<Triplet> triplets;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (a(i, j) == 0.0) continue;
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) {
          const Complex v = a(i, j) * b(k, l);
          if (v != 0.0) triplets.emplace_back(int(i * n + k), int(j * n + l), v);
        }
    }
  QuantumState::Matrix out(int(n * n), int(n * n));
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

double poisson_tail(double mean, int cutoff) {
  if (mean == 0.0) return 0.0;
  // P(n > cutoff) for Poisson(mean) is the regularized lower gamma P(cutoff+1, mean).
  return boost::math::gamma_p(cutoff + 1.0, mean);
}

double geometric_tail(double nbar, int cutoff) {
  if (nbar == 0.0) return 0.0;
  const double tau = nbar / (1.0 + nbar);
  return std::pow(tau, cutoff + 1.0);
}

double joint_tail(double ta, double tb) { return ta + tb - ta * tb; }

DenseMode coherent_mode(Complex alpha, int cutoff) {
  Eigen::VectorXcd amp(cutoff + 1);
  amp(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n <= cutoff; ++n) amp(n) = amp(n - 1) * alpha / std::sqrt(double(n));
  return amp * amp.adjoint();
}

DenseMode thermal_mode(double nbar, int cutoff) {
  DenseMode rho = DenseMode::Zero(cutoff + 1, cutoff + 1);
  const double tau = nbar / (1.0 + nbar);
  double p = 1.0 - tau;
  for (int n = 0; n <= cutoff; ++n) {
    rho(n, n) = p;
    p *= tau;
  }
  return rho;
}

// Σ_k P(k) D(α)|k⟩⟨k|D(α)†. Uses D(α)|k⟩ = (a† - α*)^k/√k! |α⟩; the map is
// lower triangular in the number basis, so truncating at `cutoff` is exact
// for every retained component.
DenseMode displaced_thermal_mode(Complex alpha, double nbar, int cutoff) {
  if (nbar == 0.0) return coherent_mode(alpha, cutoff);
  const double tau = nbar / (1.0 + nbar);
  Eigen::VectorXcd v(cutoff + 1);
  v(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n <= cutoff; ++n) v(n) = v(n - 1) * alpha / std::sqrt(double(n));

  DenseMode rho = DenseMode::Zero(cutoff + 1, cutoff + 1);
  double p = 1.0 - tau;
  for (int k = 0; p > 1e-18 * (1.0 - tau); ++k) {
    rho.noalias() += p * (v * v.adjoint());
    Eigen::VectorXcd next(cutoff + 1);
    for (int m = 0; m <= cutoff; ++m) {
      Complex val = -std::conj(alpha) * v(m);
      if (m > 0) val += std::sqrt(double(m)) * v(m - 1);
      next(m) = val / std::sqrt(k + 1.0);
    }
    v = next;
    p *= tau;
  }
  return rho;
}

double displaced_thermal_tail(Complex alpha, double nbar, int cutoff) {
  return std::max(0.0, 1.0 - displaced_thermal_mode(alpha, nbar, cutoff).trace().real());
}

template <typename TailFn>
int smallest_cutoff(TailFn tail, int start = 0) {
  for (int c = start; c <= kMaxCutoff; ++c) {
    if (tail(c) < kTailTolerance) return c;
  }
  throw TruncationError("no cutoff up to the supported maximum meets the tail bound", kMaxCutoff + 1);
}

void check_tail(double tail, int cutoff, int required, const char* what) {
  if (tail >= kTailTolerance) {
    throw TruncationError(
        fmt::format("{} state: tail mass {:.3e} beyond cutoff {} exceeds {:.0e}; required cutoff {}", what, tail,
                    cutoff, kTailTolerance, required),
        required);
  }
}

QuantumState renormalized(Statistics stats, int cutoff, Basis basis, QuantumState::Matrix rho) {
  Complex tr = 0.0;
  for (int i = 0; i < rho.rows(); ++i) tr += rho.coeff(i, i);
  rho /= tr.real();
  return QuantumState(stats, cutoff, basis, std::move(rho));
}

// a† or a on mode `mode` of |na, nb⟩. Returns the squared coefficient times
// its sign, zero if the result vanishes. Occupations are updated in place.
double ladder(bool create, int mode, int& na, int& nb, Statistics stats) {
  int& n = mode == 0 ? na : nb;
  if (stats == Statistics::Bose) {
    if (create) return double(++n);
    if (n == 0) return 0.0;
    return double(n--);
  }
  const double sign = (mode == 1 && na == 1) ? -1.0 : 1.0;
  if (create) {
    if (n == 1) return 0.0;
    n = 1;
  } else {
    if (n == 0) return 0.0;
    n = 0;
  }
  return sign;
}

// tr(ρ X) for X a product of ladder operators applied right to left.
struct LadderOp {
  bool create;
  int mode;
};

Complex expectation(const QuantumState& state, std::initializer_list<LadderOp> ops_left_to_right) {
  std::vector<LadderOp> ops(ops_left_to_right);
  std::reverse(ops.begin(), ops.end());
  const auto& rho = state.matrix();
  const int cutoff = state.cutoff();
  Complex sum = 0.0;
  // tr(ρX) = Σ_{j,k} ρ(j,k) ⟨k|X|j⟩; visit nonzeros (j,k) of ρ.
  for (int k = 0; k < rho.outerSize(); ++k) {
    for (QuantumState::Matrix::InnerIterator it(rho, k); it; ++it) {
      const int j = int(it.row());
      auto [na, nb] = state.occupations(j);
      // Integer products under one square root keep ⟨a†a†aa⟩ on |2,0⟩ exact.
      double squared = 1.0;
      for (const auto& op : ops) {
        squared *= ladder(op.create, op.mode, na, nb, state.statistics());
        if (squared == 0.0) break;
      }
      if (squared == 0.0 || na > cutoff || nb > cutoff) continue;
      const double coef = std::copysign(std::sqrt(std::abs(squared)), squared);
      if (state.index(na, nb) == k) sum += it.value() * coef;
    }
  }
  return sum;
}

}  // namespace

std::string to_string(Statistics s) { return s == Statistics::Bose ? "bose" : "fermi"; }
std::string to_string(Basis b) { return b == Basis::Vortex ? "vortex" : "dipole"; }
Basis other(Basis b) { return b == Basis::Vortex ? Basis::Dipole : Basis::Vortex; }

std::array<ModeLabel, 2> basis_modes(Basis b) {
  if (b == Basis::Vortex) return {ModeLabel::left_vortex(), ModeLabel::right_vortex()};
  return {ModeLabel::dipole_x(), ModeLabel::dipole_y()};
}

Mat2c creation_transform(Basis from) {
  Mat2c u;
  if (from == Basis::Dipole) {
    // a†_→ = (a†_⟲ + a†_⟳)/√2,  a†_↑ = -i (a†_⟲ - a†_⟳)/√2
    u << kInvSqrt2, -kI * kInvSqrt2, kInvSqrt2, kI * kInvSqrt2;
  } else {
    // a†_⟲ = (a†_→ + i a†_↑)/√2,  a†_⟳ = (a†_→ - i a†_↑)/√2
    u << kInvSqrt2, kInvSqrt2, kI * kInvSqrt2, -kI * kInvSqrt2;
  }
  return u;
}

Mat2c to_vortex_annihilators(Basis from) {
  if (from == Basis::Vortex) return Mat2c::Identity();
  // a_⟲ = (a_→ - i a_↑)/√2,  a_⟳ = (a_→ + i a_↑)/√2
  Mat2c w;
  w << 1.0, -kI, 1.0, kI;
  return w * kInvSqrt2;
}

// ---------------------------------------------------------------------------
// QuantumState

QuantumState::QuantumState(Statistics stats, int cutoff, Basis basis, Matrix rho)
    : stats_(stats), cutoff_(cutoff), basis_(basis), rho_(std::move(rho)) {
  if (cutoff_ < 0) throw ConfigError("cutoff must be non-negative");
  if (stats_ == Statistics::Fermi && cutoff_ > 1) {
    throw PauliViolation("fermionic states admit occupations 0 and 1 only (cutoff must be <= 1)");
  }
  if (rho_.rows() != dim() || rho_.cols() != dim()) {
    throw ConfigError(fmt::format("density matrix is {}x{}, expected {}x{}", rho_.rows(), rho_.cols(), dim(), dim()));
  }
  rho_.makeCompressed();
}

Complex QuantumState::element(int na, int nb, int ma, int mb) const {
  if (std::min({na, nb, ma, mb}) < 0 || std::max({na, nb, ma, mb}) > cutoff_) return 0.0;
  return rho_.coeff(index(na, nb), index(ma, mb));
}

Complex QuantumState::trace() const {
  Complex tr = 0.0;
  for (int i = 0; i < dim(); ++i) tr += rho_.coeff(i, i);
  return tr;
}

int QuantumState::max_total_occupation() const {
  int best = 0;
  for (int i = 0; i < dim(); ++i) {
    if (rho_.coeff(i, i) != 0.0) {
      const auto [na, nb] = occupations(i);
      best = std::max(best, na + nb);
    }
  }
  return best;
}

void QuantumState::validate(double trace_tol) const {
  const Complex tr = trace();
  if (std::abs(tr - 1.0) > trace_tol) {
    throw NumericalError(fmt::format("trace {:.17g}{:+.3g}i differs from 1", tr.real(), tr.imag()));
  }
  const Matrix adj = rho_.adjoint();
  const double herm = Eigen::MatrixXcd(rho_ - adj).cwiseAbs().maxCoeff();
  if (herm > 1e-12) throw NumericalError(fmt::format("density matrix not Hermitian (deviation {:.3e})", herm));
  // ρ + εI admits a Cholesky factor iff every eigenvalue exceeds -ε.
  Eigen::MatrixXcd shifted = Eigen::MatrixXcd(rho_) + 1e-12 * Eigen::MatrixXcd::Identity(dim(), dim());
  Eigen::LLT<Eigen::MatrixXcd> llt(shifted);
  if (llt.info() != Eigen::Success) throw NumericalError("density matrix has an eigenvalue below -1e-12");
  for (int i = 0; i < dim(); ++i) {
    if (stats_ == Statistics::Fermi && rho_.coeff(i, i) != 0.0) {
      const auto [na, nb] = occupations(i);
      if (na > 1 || nb > 1) throw PauliViolation("fermionic occupation above one");
    }
  }
}

QuantumState QuantumState::with_cutoff(int new_cutoff) const {
  if (new_cutoff < 0) throw ConfigError("cutoff must be non-negative");
  const int n = new_cutoff + 1;
  std::vector<Triplet> triplets;
  for (int k = 0; k < rho_.outerSize(); ++k) {
    for (Matrix::InnerIterator it(rho_, k); it; ++it) {
      const auto [ia, ib] = occupations(int(it.row()));
      const auto [ja, jb] = occupations(int(it.col()));
      if (std::max({ia, ib, ja, jb}) > new_cutoff) {
        if (std::abs(it.value()) > 1e-15) {
          throw TruncationError("shrinking the cutoff would drop nonzero density-matrix entries", cutoff_);
        }
        continue;
      }
      triplets.emplace_back(ia * n + ib, ja * n + jb, it.value());
    }
  }
  Matrix out(n * n, n * n);
  out.setFromTriplets(triplets.begin(), triplets.end());
  QuantumState result(stats_, new_cutoff, basis_, std::move(out));
  result.flags_ = flags_;
  return result;
}

QuantumState& QuantumState::add_flag(std::string flag) {
  if (std::find(flags_.begin(), flags_.end(), flag) == flags_.end()) flags_.push_back(std::move(flag));
  return *this;
}

// ---------------------------------------------------------------------------
// Constructors

QuantumState make_fock(int n, int m, Statistics stats, Basis basis) {
  if (n < 0 || m < 0) throw ConfigError("occupations must be non-negative");
  if (stats == Statistics::Fermi && (n > 1 || m > 1)) {
    throw PauliViolation(fmt::format("fermionic occupation ({}, {}) violates exclusion", n, m));
  }
  const int cutoff = std::max({n, m, stats == Statistics::Fermi ? 1 : 0});
  const int dim = (cutoff + 1) * (cutoff + 1);
  QuantumState::Matrix rho(dim, dim);
  const int idx = n * (cutoff + 1) + m;
  rho.insert(idx, idx) = 1.0;
  return QuantumState(stats, cutoff, basis, std::move(rho));
}

int required_cutoff_coherent(Complex alpha_a, Complex alpha_b) {
  return smallest_cutoff([&](int c) {
    return joint_tail(poisson_tail(std::norm(alpha_a), c), poisson_tail(std::norm(alpha_b), c));
  });
}

int required_cutoff_thermal(double nbar_a, double nbar_b) {
  return smallest_cutoff(
      [&](int c) { return joint_tail(geometric_tail(nbar_a, c), geometric_tail(nbar_b, c)); });
}

QuantumState make_coherent(Complex alpha_a, Complex alpha_b, int cutoff, Basis basis) {
  const int required = required_cutoff_coherent(alpha_a, alpha_b);
  if (cutoff == kAutoCutoff) cutoff = required;
  if (cutoff < 0) throw ConfigError("cutoff must be non-negative");
  check_tail(joint_tail(poisson_tail(std::norm(alpha_a), cutoff), poisson_tail(std::norm(alpha_b), cutoff)), cutoff,
             required, "coherent");
  return renormalized(Statistics::Bose, cutoff, basis,
                      kron(coherent_mode(alpha_a, cutoff), coherent_mode(alpha_b, cutoff)));
}

QuantumState make_thermal(double nbar_a, double nbar_b, int cutoff, Basis basis) {
  if (!(nbar_a >= 0.0) || !(nbar_b >= 0.0)) throw ConfigError("thermal occupations must be >= 0");
  const int required = required_cutoff_thermal(nbar_a, nbar_b);
  if (cutoff == kAutoCutoff) cutoff = required;
  if (cutoff < 0) throw ConfigError("cutoff must be non-negative");
  check_tail(joint_tail(geometric_tail(nbar_a, cutoff), geometric_tail(nbar_b, cutoff)), cutoff, required, "thermal");
  return renormalized(Statistics::Bose, cutoff, basis,
                      kron(thermal_mode(nbar_a, cutoff), thermal_mode(nbar_b, cutoff)));
}

QuantumState make_cothermal(Complex alpha_a, Complex alpha_b, double nbar_a, double nbar_b, int cutoff, Basis basis) {
  if (!(nbar_a >= 0.0) || !(nbar_b >= 0.0)) throw ConfigError("thermal occupations must be >= 0");
  auto tail = [&](int c) {
    return joint_tail(displaced_thermal_tail(alpha_a, nbar_a, c), displaced_thermal_tail(alpha_b, nbar_b, c));
  };
  // Start the search near the mean to keep the scan short.
  const double mean = std::max(std::norm(alpha_a) + nbar_a, std::norm(alpha_b) + nbar_b);
  auto required = [&] { return smallest_cutoff(tail, std::max(0, int(mean) - 1)); };
  if (cutoff == kAutoCutoff) cutoff = required();
  if (cutoff < 0) throw ConfigError("cutoff must be non-negative");
  if (const double t = tail(cutoff); t >= kTailTolerance) check_tail(t, cutoff, required(), "cothermal");
  QuantumState state = renormalized(
      Statistics::Bose, cutoff, basis,
      kron(displaced_thermal_mode(alpha_a, nbar_a, cutoff), displaced_thermal_mode(alpha_b, nbar_b, cutoff)));
  state.add_flag("supplement-approximated");
  return state;
}

QuantumState make_cothermal(Complex alpha, double nbar, int cutoff, Basis basis) {
  return make_cothermal(alpha, alpha, nbar, nbar, cutoff, basis);
}

QuantumState make_noon() { return change_basis(make_fock(1, 1, Statistics::Bose, Basis::Dipole)); }

// ---------------------------------------------------------------------------
// Basis change

std::vector<Complex> transform_number_state(int n, int m, Statistics stats, Basis from) {
  if (n < 0 || m < 0) throw ConfigError("occupations must be non-negative");
  const Mat2c u = creation_transform(from);
  if (stats == Statistics::Fermi) {
    if (n > 1 || m > 1) throw PauliViolation("fermionic occupation above one");
    if (n + m == 0) return {1.0};
    if (n + m == 1) {
      // index = n_a' of |n_a', 1 - n_a'⟩
      const int j = n == 1 ? 0 : 1;
      return {u(1, j), u(0, j)};
    }
    // c†_0 c†_1 |0⟩ = det(u) b†_0 b†_1 |0⟩
    return {0.0, u.determinant(), 0.0};
  }
  // Apply c†_0 n times then c†_1 m times, dividing by √k each time so every
  // intermediate vector is a normalized number state of the old basis.
  std::vector<Complex> v{1.0};
  auto raise = [&](int j, int step) {
    const int total = int(v.size()) - 1;
    std::vector<Complex> w(total + 2, 0.0);
    for (int k = 0; k <= total + 1; ++k) {
      Complex val = 0.0;
      if (k >= 1) val += u(0, j) * std::sqrt(double(k)) * v[k - 1];
      if (k <= total) val += u(1, j) * std::sqrt(double(total + 1 - k)) * v[k];
      w[k] = val / std::sqrt(double(step));
    }
    v = std::move(w);
  };
  for (int s = 1; s <= n; ++s) raise(0, s);
  for (int s = 1; s <= m; ++s) raise(1, s);
  return v;
}

QuantumState change_basis(const QuantumState& state) {
  const Statistics stats = state.statistics();
  const int in_cutoff = state.cutoff();
  const int out_cutoff = stats == Statistics::Fermi ? 1 : std::max(state.max_total_occupation(), 0);
  const int out_n = out_cutoff + 1;

  std::vector<Triplet> triplets;
  for (int idx = 0; idx < state.dim(); ++idx) {
    const auto [n, m] = state.occupations(idx);
    if (stats == Statistics::Bose && n + m > out_cutoff) continue;
    const auto amps = transform_number_state(n, m, stats, state.basis());
    const int total = n + m;
    for (int k = 0; k <= total; ++k) {
      if (amps[k] == 0.0) continue;
      triplets.emplace_back(k * out_n + (total - k), idx, amps[k]);
    }
  }
  QuantumState::Matrix u(out_n * out_n, (in_cutoff + 1) * (in_cutoff + 1));
  u.setFromTriplets(triplets.begin(), triplets.end());
  QuantumState::Matrix rotated = u * state.matrix() * QuantumState::Matrix(u.adjoint());
  QuantumState out(stats, out_cutoff, other(state.basis()), std::move(rotated));
  for (const auto& f : state.flags()) out.add_flag(f);
  return out;
}

// ---------------------------------------------------------------------------
// Correlators

double CorrelatorSet::mean_number() const { return (first(0, 0) + first(1, 1)).real(); }

double CorrelatorSet::pair_weight() const {
  double sum = 0.0;
  for (int p = 0; p < 2; ++p)
    for (int pp = 0; pp < 2; ++pp) sum += second(p, pp, pp, p).real();
  return sum;
}

CorrelatorSet CorrelatorSet::transformed(const Mat2c& w) const {
  CorrelatorSet out;
  for (int v = 0; v < 2; ++v)
    for (int x = 0; x < 2; ++x) {
      Complex acc = 0.0;
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) acc += std::conj(w(v, c)) * w(x, d) * first(c, d);
      out.first(v, x) = acc;
    }
  for (int p = 0; p < 2; ++p)
    for (int pp = 0; pp < 2; ++pp)
      for (int qp = 0; qp < 2; ++qp)
        for (int q = 0; q < 2; ++q) {
          Complex acc = 0.0;
          for (int c = 0; c < 2; ++c)
            for (int cp = 0; cp < 2; ++cp)
              for (int dp = 0; dp < 2; ++dp)
                for (int d = 0; d < 2; ++d) {
                  acc += std::conj(w(p, c)) * std::conj(w(pp, cp)) * w(qp, dp) * w(q, d) * second(c, cp, dp, d);
                }
          out.second(p, pp, qp, q) = acc;
        }
  return out;
}

CorrelatorSet correlators(const QuantumState& state) {
  CorrelatorSet out;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) out.first(p, q) = expectation(state, {{true, p}, {false, q}});
  for (int p = 0; p < 2; ++p)
    for (int pp = 0; pp < 2; ++pp)
      for (int qp = 0; qp < 2; ++qp)
        for (int q = 0; q < 2; ++q) {
          out.second(p, pp, qp, q) = expectation(state, {{true, p}, {true, pp}, {false, qp}, {false, q}});
        }
  return out;
}

CorrelatorSet vortex_correlators(const QuantumState& state) {
  const CorrelatorSet c = correlators(state);
  if (state.basis() == Basis::Vortex) return c;
  return c.transformed(to_vortex_annihilators(state.basis()));
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const QuantumState& state) {
  const Eigen::MatrixXcd dense(state.matrix());
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < dense.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < dense.cols(); ++j) row.push_back({dense(i, j).real(), dense(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return {{"statistics", to_string(state.statistics())},
          {"cutoff", state.cutoff()},
          {"basis", to_string(state.basis())},
          {"flags", state.flags()},
          {"matrix", std::move(rows)}};
}

QuantumState state_from_json(const nlohmann::json& doc) {
  try {
    const std::string stats_name = doc.at("statistics").get<std::string>();
    const std::string basis_name = doc.at("basis").get<std::string>();
    if (stats_name != "bose" && stats_name != "fermi") throw ConfigError("statistics must be 'bose' or 'fermi'");
    if (basis_name != "vortex" && basis_name != "dipole") throw ConfigError("basis must be 'vortex' or 'dipole'");
    const int cutoff = doc.at("cutoff").get<int>();
    if (cutoff < 0 || cutoff > kMaxCutoff) throw ConfigError("cutoff out of range");
    const int dim = (cutoff + 1) * (cutoff + 1);
    const auto& rows = doc.at("matrix");
    if (!rows.is_array() || int(rows.size()) != dim) throw ConfigError("matrix row count does not match cutoff");
    std::vector<Triplet> triplets;
    for (int i = 0; i < dim; ++i) {
      const auto& row = rows[i];
      if (!row.is_array() || int(row.size()) != dim) throw ConfigError("matrix column count does not match cutoff");
      for (int j = 0; j < dim; ++j) {
        const auto& entry = row[j];
        if (!entry.is_array() || entry.size() != 2) throw ConfigError("matrix entries must be [re, im] pairs");
        const Complex v(entry[0].get<double>(), entry[1].get<double>());
        if (v != 0.0) triplets.emplace_back(i, j, v);
      }
    }
    QuantumState::Matrix rho(dim, dim);
    rho.setFromTriplets(triplets.begin(), triplets.end());
    QuantumState state(stats_name == "bose" ? Statistics::Bose : Statistics::Fermi, cutoff,
                       basis_name == "vortex" ? Basis::Vortex : Basis::Dipole, std::move(rho));
    if (doc.contains("flags")) {
      for (const auto& f : doc.at("flags")) state.add_flag(f.get<std::string>());
    }
    state.validate();
    return state;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("malformed state document: {}", e.what()));
  } catch (const NumericalError& e) {
    throw ConfigError(fmt::format("invalid state document: {}", e.what()));
  }
}

}  // namespace vortexcorr
