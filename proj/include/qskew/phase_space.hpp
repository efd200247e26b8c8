// phase_space.hpp: truncated harmonic-oscillator realization of (x, p) and quantum gradients
//
// Per axis, x = sqrt(hbar/2)(a + a†) and p = i sqrt(hbar/2)(a† - a) in the
// number basis |0>, ..., |N-1>. Axes are combined by Kronecker products with
// axis 0 the most significant index.

#pragma once

#include "qskew/operator_core.hpp"

#include <vector>

namespace qskew {

inline constexpr Index kDefaultMaxRepDim = 4096;
inline constexpr double kEdgeMassThreshold = 1e-8;

class PhaseSpaceRep {
 public:
  int d() const noexcept { return d_; }
  int n_per_axis() const noexcept { return n_; }
  double hbar() const noexcept { return hbar_; }
  double h() const noexcept { return planck_h(hbar_); }
  Index dim() const noexcept { return dim_; }

  const HermitianOperator& x(int axis) const { return x_ops_.at(static_cast<std::size_t>(axis)); }
  const HermitianOperator& p(int axis) const { return p_ops_.at(static_cast<std::size_t>(axis)); }
  const std::vector<HermitianOperator>& x_ops() const noexcept { return x_ops_; }
  const std::vector<HermitianOperator>& p_ops() const noexcept { return p_ops_; }
  // Eigen-decomposition of x(axis), cached for spectral calculus u(x).
  const SpectralDecomposition& x_spectrum(int axis) const {
    return x_spectra_.at(static_cast<std::size_t>(axis));
  }
  // Number-basis occupation of each axis for a flat basis index.
  std::vector<int> levels(Index flat) const;

 private:
  friend PhaseSpaceRep build_harmonic_rep(int d, int n, double hbar, Index max_dim);

  int d_ = 0;
  int n_ = 0;
  double hbar_ = 0.0;
  Index dim_ = 0;
  std::vector<HermitianOperator> x_ops_;
  std::vector<HermitianOperator> p_ops_;
  std::vector<SpectralDecomposition> x_spectra_;
};

PhaseSpaceRep build_harmonic_rep(int d, int n, double hbar, Index max_dim = kDefaultMaxRepDim);

// Lowering operator on one axis of a single-mode basis of size n.
Matrix lowering_operator(int n);
// Kronecker embedding of a single-axis operator into the d-axis space.
Matrix embed_axis(const Matrix& single, int axis, int d, int n);

// dx_i = (1/(i hbar)) [x_i, A] and dv_i = (i/hbar) [p_i, A] = [grad_i, A].
// Under the Wigner transform dx_i corresponds to the v-derivative and dv_i to
// the x-derivative of the phase-space function.
struct QuantumGradient {
  std::vector<Matrix> dx;
  std::vector<Matrix> dv;

  // |grad A|^2 = sum_i (dx_i* dx_i + dv_i* dv_i).
  Matrix squared_magnitude() const;
  // Schatten norm of |grad A| = sqrt(|grad A|^2).
  double norm(SchattenExponent p) const;
};

QuantumGradient quantum_gradient(const Matrix& a, const PhaseSpaceRep& rep);

inline constexpr int kMaxGradientOrder = 4;

// All (2d)^k components of the k-fold quantum gradient, in nested order
// (outermost derivative index varies slowest).
std::vector<Matrix> iterated_gradient_components(const Matrix& a, const PhaseSpaceRep& rep, int order);
// Schatten-p norm of |grad^k A|, |grad^k A|^2 = sum over components C of C* C.
double iterated_gradient_norm(const Matrix& a, const PhaseSpaceRep& rep, int order,
                              SchattenExponent p);
// Schatten norm of sqrt(sum C* C) for an arbitrary component list.
double vector_operator_norm(const std::vector<Matrix>& components, SchattenExponent p);

// Fraction of squared Frobenius weight carried by rows or columns whose basis
// state has some axis at the top level N-1.
double edge_mass(const Matrix& a, const PhaseSpaceRep& rep);
// Throws TruncationError when edge_mass exceeds the threshold.
void require_small_edge_mass(const Matrix& a, const PhaseSpaceRep& rep,
                             double threshold = kEdgeMassThreshold);

// u(x_axis) by spectral calculus on the truncated position operator.
Matrix function_of_position(const PhaseSpaceRep& rep, int axis, const std::function<cplx(double)>& u);

}  // namespace qskew
