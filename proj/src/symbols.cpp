#include "qskew/symbols.hpp"

#include "qskew/wigner.hpp"

#include <cmath>
#include <sstream>

namespace qskew {

GaussianTrigSymbol::GaussianTrigSymbol(double width, std::vector<TrigMode> modes)
    : width_(width), modes_(std::move(modes)) {
  if (!(width > 0.0)) throw Error("GaussianTrigSymbol: width must be positive");
}

double GaussianTrigSymbol::value(double x, double v) const {
  const double env = std::exp(-(x * x + v * v) / (2.0 * width_ * width_));
  double s = 0.0;
  for (const auto& m : modes_) s += m.coeff * std::cos(m.k * x + m.l * v + m.phase);
  return env * s;
}

double GaussianTrigSymbol::d_x(double x, double v) const {
  const double w2 = width_ * width_;
  const double env = std::exp(-(x * x + v * v) / (2.0 * w2));
  double s = 0.0, ds = 0.0;
  for (const auto& m : modes_) {
    const double arg = m.k * x + m.l * v + m.phase;
    s += m.coeff * std::cos(arg);
    ds -= m.coeff * m.k * std::sin(arg);
  }
  return env * (ds - x / w2 * s);
}

double GaussianTrigSymbol::d_v(double x, double v) const {
  const double w2 = width_ * width_;
  const double env = std::exp(-(x * x + v * v) / (2.0 * w2));
  double s = 0.0, ds = 0.0;
  for (const auto& m : modes_) {
    const double arg = m.k * x + m.l * v + m.phase;
    s += m.coeff * std::cos(arg);
    ds -= m.coeff * m.l * std::sin(arg);
  }
  return env * (ds - v / w2 * s);
}

double GaussianTrigSymbol::max_wavenumber() const {
  double k = 0.0;
  for (const auto& m : modes_) k = std::max(k, std::abs(m.k) + std::abs(m.l));
  return k;
}

Matrix GaussianTrigSymbol::weyl_quantize(const PhaseSpaceRep& rep) const {
  if (rep.d() != 1) throw Error("GaussianTrigSymbol::weyl_quantize: requires d = 1");
  const double hb = rep.hbar();
  const double w = width_;
  const int n = rep.n_per_axis();

  // Quadrature grid: wide enough for the Hermite functions, fine enough for
  // their oscillation plus the kernel's y-profile of width hbar / w.
  const double turning = std::sqrt(hb * (2.0 * n + 1.0));
  const double half = turning + 8.0 * std::sqrt(hb);
  const double k_basis = turning / hb;
  const double k_kernel = 8.0 * w / hb + max_wavenumber() / hb * w * w + max_wavenumber();
  const double delta = kPi / (2.0 * k_basis + k_kernel + 12.0 / std::sqrt(hb));
  const Index nq = static_cast<Index>(std::ceil(2.0 * half / delta)) + 1;
  RealVector q(nq);
  for (Index i = 0; i < nq; ++i) q(i) = -half + static_cast<double>(i) * delta;

  RealMatrix phi(nq, n);
  for (Index i = 0; i < nq; ++i) phi.row(i) = hermite_functions(q(i), n, hb).transpose();

  const double pref = w * std::sqrt(2.0 * kPi) / planck_h(hb);
  // The midpoint factors depend on i + j and the v-integrals on i - j only.
  const Index nt = 2 * nq - 1;
  const std::size_t nm = modes_.size();
  Matrix by_sum(nt, static_cast<Index>(nm)), plus(nt, static_cast<Index>(nm)), minus(nt, static_cast<Index>(nm));
  for (Index t = 0; t < nt; ++t) {
    const double mid = -half + 0.5 * static_cast<double>(t) * delta;
    const double y = static_cast<double>(t - (nq - 1)) * delta / hb;
    const double env_x = std::exp(-mid * mid / (2.0 * w * w));
    for (std::size_t m = 0; m < nm; ++m) {
      const auto& md = modes_[m];
      const auto c = static_cast<Index>(m);
      by_sum(t, c) = 0.5 * md.coeff * env_x * std::exp(kI * (md.k * mid + md.phase));
      plus(t, c) = std::exp(-0.5 * w * w * (md.l + y) * (md.l + y));
      minus(t, c) = std::exp(-0.5 * w * w * (-md.l + y) * (-md.l + y));
    }
  }
  Matrix kernel(nq, nq);
  for (Index i = 0; i < nq; ++i) {
    for (Index j = 0; j < nq; ++j) {
      const Index sum = i + j, diff = i - j + nq - 1;
      cplx acc = 0.0;
      for (Index m = 0; m < static_cast<Index>(nm); ++m) {
        // cos(theta) = (e^{i theta} + e^{-i theta}) / 2, v-integral done per exponential.
        const cplx e = by_sum(sum, m);
        acc += e * plus(diff, m) + std::conj(e) * minus(diff, m);
      }
      kernel(i, j) = pref * acc;
    }
  }
  const Matrix phic = phi.cast<cplx>();
  Matrix a = (delta * delta) * (phic.transpose() * kernel * phic);
  return 0.5 * (a + a.adjoint());
}

GaussianTrigSymbol SymbolEnsemble::sample(PinnedRng& rng) const {
  if (modes_per_axis < 1 || modes_per_axis > 8) throw Error("SymbolEnsemble: modes_per_axis must be in [1, 8]");
  std::vector<TrigMode> modes;
  for (int mx = 0; mx < modes_per_axis; ++mx) {
    for (int mv = 0; mv < modes_per_axis; ++mv) {
      TrigMode m;
      m.k = fundamental * mx;
      m.l = fundamental * mv;
      m.coeff = std::pow(decay, mx + mv) * rng.normal();
      m.phase = 2.0 * kPi * rng.uniform();
      modes.push_back(m);
    }
  }
  return GaussianTrigSymbol(width, std::move(modes));
}

std::string SymbolEnsemble::describe() const {
  std::ostringstream os;
  os << "gaussian_trig(modes_per_axis=" << modes_per_axis << ";fundamental=" << fundamental
     << ";decay=" << decay << ";width=" << width << ")";
  return os.str();
}

}  // namespace qskew
