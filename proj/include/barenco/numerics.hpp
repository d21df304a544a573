// Copyright 2026 The Barenco Gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Small dense complex-matrix kernel: closed-form 2x2 spectra, Hermitian
// eigendecomposition, propagators exp(-iHt) and average gate fidelity.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "barenco/units.hpp"

namespace barenco {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

/// Eigenvalues and the (eta1, eta2) amplitudes of the upper eigenvector
/// |lambda+> = eta1|a> + eta2 e^{i beta0}|b> of a 2x2 Hermitian block
/// [[v1, ve e^{-i beta0}], [ve e^{i beta0}, v2]].
struct SpectralData {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double eta1 = 1.0;
  double eta2 = 0.0;

  /// Half splitting sqrt(ve^2 + (v1 - v2)^2 / 4).
  double half_gap() const { return 0.5 * (lambda_plus - lambda_minus); }
};

/// Closed-form spectrum for real (v1, v2) and signed coupling ve.
///
/// eta1 : eta2 = ve : (2 vbar + v2 - v1) / 2 with eta2 >= 0. The algebraically
/// equivalent ratio (2 vbar + v1 - v2) / 2 : ve is used when v1 > v2 to avoid
/// cancellation. At ve = 0 the vector is (0, 1) if v2 > v1, else (1, 0).
inline SpectralData eig2(double v1, double v2, double ve) {
  const double mean = 0.5 * (v1 + v2);
  const double half_diff = 0.5 * (v1 - v2);
  const double vbar = std::hypot(ve, half_diff);
  SpectralData s;
  s.lambda_plus = mean + vbar;
  s.lambda_minus = mean - vbar;
  if (ve == 0.0) {
    if (v2 > v1) {
      s.eta1 = 0.0;
      s.eta2 = 1.0;
    } else {
      s.eta1 = 1.0;
      s.eta2 = 0.0;
    }
    return s;
  }
  double x, y;
  if (half_diff > 0.0) {
    x = vbar + half_diff;
    y = ve;
  } else {
    x = ve;
    y = vbar - half_diff;
  }
  const double n = std::hypot(x, y);
  x /= n;
  y /= n;
  if (y < 0.0) {
    x = -x;
    y = -y;
  }
  s.eta1 = x;
  s.eta2 = y;
  return s;
}

/// Spectrum of an arbitrary 2x2 Hermitian block; ve = |H(1,0)|.
inline SpectralData eig2(const CMatrix& block) {
  require(block.rows() == 2 && block.cols() == 2, "eig2: block must be 2x2");
  return eig2(block(0, 0).real(), block(1, 1).real(), std::abs(block(1, 0)));
}

inline double hermiticity_defect(const CMatrix& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

inline double unitarity_defect(const CMatrix& u) {
  return (u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  CMatrix vectors;         // columns
};

inline HermitianEigen hermitian_eig(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  require(solver.info() == Eigen::Success, "hermitian_eig: no convergence");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

enum class Generator { hermitian, non_hermitian };

/// exp(-i h t). Hermitian generators go through the eigendecomposition and
/// the result is unitary; non-Hermitian generators (decay terms) use a
/// Pade scaling-and-squaring exponential.
inline CMatrix propagate(const CMatrix& h, double t,
                         Generator kind = Generator::hermitian) {
  require(h.rows() == h.cols(), "propagate: generator must be square");
  require(t >= 0.0, "propagate: duration must be non-negative");
  require(h.allFinite(), "propagate: generator has non-finite entries");
  if (kind == Generator::non_hermitian) {
    CMatrix a = (-kI * t) * h;
    return a.exp();
  }
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  require(hermiticity_defect(h) <= 1e-10 * scale,
          "propagate: generator is not Hermitian");
  const CMatrix hs = 0.5 * (h + h.adjoint());
  const auto eig = hermitian_eig(hs);
  Eigen::VectorXcd phases(eig.values.size());
  for (Index k = 0; k < eig.values.size(); ++k)
    phases(k) = std::exp(-kI * (eig.values(k) * t));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

/// Uniform (Haar) pure-state average fidelity on a subspace:
/// F = (Tr(M M^dag) + |Tr M|^2) / (d (d + 1)), M = (U_ideal^dag U_actual)
/// restricted to the subspace.
inline double avg_gate_fidelity(const CMatrix& actual, const CMatrix& ideal,
                                std::span<const Index> subspace) {
  require(!subspace.empty(), "avg_gate_fidelity: empty subspace");
  require(actual.rows() == ideal.rows() && actual.cols() == ideal.cols(),
          "avg_gate_fidelity: dimension mismatch");
  for (Index k : subspace)
    require(k >= 0 && k < actual.rows(), "avg_gate_fidelity: bad index");
  const CMatrix full = ideal.adjoint() * actual;
  const Index d = static_cast<Index>(subspace.size());
  CMatrix m(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) m(i, j) = full(subspace[i], subspace[j]);
  const double dd = static_cast<double>(d);
  const double f =
      ((m * m.adjoint()).trace().real() + std::norm(m.trace())) /
      (dd * (dd + 1.0));
  return std::clamp(f, 0.0, 1.0);
}

/// Fidelity over the full index range of the two matrices.
inline double avg_gate_fidelity(const CMatrix& actual, const CMatrix& ideal) {
  std::vector<Index> all(static_cast<std::size_t>(actual.rows()));
  for (Index k = 0; k < actual.rows(); ++k) all[static_cast<std::size_t>(k)] = k;
  return avg_gate_fidelity(actual, ideal, all);
}

/// Max elementwise |a - e^{ig} b| with g = arg Tr(b^dag a).
inline double phase_aligned_deviation(const CMatrix& a, const CMatrix& b) {
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  return (a - phase * b).cwiseAbs().maxCoeff();
}

/// min over g of ||a - e^{ig} b||_F.
inline double phase_aligned_frobenius(const CMatrix& a, const CMatrix& b) {
  const Complex tr = (b.adjoint() * a).trace();
  const Complex phase = std::abs(tr) > 0.0 ? tr / std::abs(tr) : Complex{1.0};
  return (a - phase * b).norm();
}

}  // namespace barenco
