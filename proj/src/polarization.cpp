// Copyright 2026 The sl2pol Authors
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

#include "sl2pol/polarization.hpp"

#include <algorithm>
#include <cmath>

#include "sl2pol/errors.hpp"
#include "sl2pol/sl2c.hpp"

namespace sl2pol {

JonesBeam::JonesBeam(double a_, double b_, double phi1_, double phi2_,
                     double k_, double omega_)
    : a(a_), b(b_), phi1(phi1_), phi2(phi2_), k(k_), omega(omega_) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw Unphysical("JonesBeam: amplitudes must be nonnegative");
  }
}

CoherencePars::CoherencePars(double sigma_, double delta_)
    : sigma(sigma_), delta(delta_) {
  if (!(sigma >= 0.0)) {
    throw Unphysical("CoherencePars: sigma must be nonnegative");
  }
  chi = std::acos(std::clamp(std::exp(-sigma), 0.0, 1.0));
}

CoherencyMatrix::CoherencyMatrix(const Mat2C& m, double tol) : m_(m) {
  const double scale = std::max(1.0, frobenius_norm(m));
  if (!is_hermitian(m, tol * scale)) {
    throw Unphysical("CoherencyMatrix: not Hermitian");
  }
  // Canonicalize to an exactly Hermitian matrix.
  const Complex off = 0.5 * (m.a12 + std::conj(m.a21));
  m_ = {Complex(m.a11.real(), 0.0), off, std::conj(off),
        Complex(m.a22.real(), 0.0)};
  const double slack = 1e-9 * scale * scale;
  if (m_.a11.real() < -slack || m_.a22.real() < -slack) {
    throw Unphysical("CoherencyMatrix: negative intensity on diagonal");
  }
  if (std::norm(m_.a12) > m_.a11.real() * m_.a22.real() + slack) {
    throw Unphysical("CoherencyMatrix: Cauchy-Schwarz violated");
  }
}

SampleSeries::SampleSeries(std::vector<Complex> psi1_,
                           std::vector<Complex> psi2_, double dt_)
    : psi1(std::move(psi1_)), psi2(std::move(psi2_)), dt(dt_) {
  if (psi1.size() != psi2.size()) {
    throw TooFewSamples("SampleSeries: component lengths differ");
  }
  if (psi1.size() < 2) {
    throw TooFewSamples("SampleSeries: need at least two samples");
  }
}

Mat2C element_phase(double delta) {
  return generator({GeneratorKind::PhaseZ, delta});
}

Mat2C element_attenuator(double eta1, double eta2) {
  return Mat2C::diag(std::exp(-eta1), std::exp(-eta2));
}

Mat2C element_rotation(double theta) {
  return generator({GeneratorKind::RotY, theta});
}

Mat2C element_squeeze45(double lambda) {
  return generator({GeneratorKind::BoostX, lambda});
}

CoherencyMatrix coherency_from_params(double a, double b,
                                      const CoherencePars& pars) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw Unphysical("coherency_from_params: amplitudes must be nonnegative");
  }
  const Complex off = a * b * std::cos(pars.chi) *
                      std::polar(1.0, -pars.delta);
  return CoherencyMatrix({a * a, off, std::conj(off), b * b});
}

CoherencyMatrix estimate_coherency(const SampleSeries& s) {
  const std::size_t n = s.psi1.size();
  double s11 = 0.0, s22 = 0.0;
  Complex s12{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    s11 += std::norm(s.psi1[i]);
    s22 += std::norm(s.psi2[i]);
    s12 += std::conj(s.psi1[i]) * s.psi2[i];
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  s11 *= inv_n;
  s22 *= inv_n;
  s12 *= inv_n;
  return CoherencyMatrix({s11, s12, std::conj(s12), s22});
}

CoherencyMatrix transform_coherency(const Mat2C& g, const CoherencyMatrix& c) {
  return CoherencyMatrix(g * c.matrix() * dagger(g));
}

StokesVector stokes_from_coherency(const CoherencyMatrix& c) {
  return {(c.s11() + c.s22()) / 2.0, (c.s11() - c.s22()) / 2.0,
          c.s12().real(), c.s12().imag()};
}

CoherencyMatrix coherency_from_stokes(const StokesVector& s) {
  if (!(s.s0 >= 0.0)) {
    throw Unphysical("coherency_from_stokes: S0 must be nonnegative");
  }
  const double q = s.s0 * s.s0 - s.s3 * s.s3 - s.s1 * s.s1 - s.s2 * s.s2;
  if (q < -1e-9 * s.s0 * s.s0) {
    throw Unphysical("coherency_from_stokes: spacelike Stokes vector");
  }
  const Complex off(s.s1, s.s2);
  return CoherencyMatrix({s.s0 + s.s3, off, std::conj(off), s.s0 - s.s3});
}

double degree_of_polarization(const CoherencyMatrix& c) {
  const double tr = c.s11() + c.s22();
  if (!(tr > 0.0)) {
    throw ZeroIntensity("degree_of_polarization: zero-intensity beam");
  }
  const double d = det(c.matrix()).real();
  return std::sqrt(std::clamp(1.0 - 4.0 * d / (tr * tr), 0.0, 1.0));
}

SphereGeometry sphere_geometry(const CoherencyMatrix& c) {
  const StokesVector s = stokes_from_coherency(c);
  if (!(s.s0 > 0.0)) {
    throw ZeroIntensity("sphere_geometry: zero-intensity beam");
  }
  const double r = std::sqrt(s.s3 * s.s3 + s.s1 * s.s1 + s.s2 * s.s2);
  SphericalStokes sph;
  sph.radius = r;
  sph.xi = r > 0.0 ? std::acos(std::clamp(s.s3 / r, -1.0, 1.0)) : 0.0;
  sph.delta = (s.s1 != 0.0 || s.s2 != 0.0) ? std::atan2(s.s2, s.s1) : 0.0;
  return {s.s0, s, sph, r / s.s0};
}

CoherencyEigen diagonalize_coherency(const CoherencyMatrix& c) {
  const double p = c.s11();
  const double r = c.s22();
  const Complex q = c.s12();
  const double mid = (p + r) / 2.0;
  const double half_gap = (p - r) / 2.0;
  const double d = std::sqrt(half_gap * half_gap + std::norm(q));
  const double lo = mid - d;
  const double hi = mid + d;

  const double scale = std::max(1.0, frobenius_norm(c.matrix()));
  Mat2C u = Mat2C::identity();
  if (d > 1e-15 * scale) {
    if (std::abs(q) <= 1e-15 * scale) {
      // Diagonal already; descending order may need a swap.
      if (r > p) {
        u = {0.0, 1.0, 1.0, 0.0};
      }
    } else {
      // Eigenvector of the larger eigenvalue: (q, hi - p).
      const Complex v1 = q;
      const Complex v2 = hi - p;
      const double n = std::sqrt(std::norm(v1) + std::norm(v2));
      const Complex u1 = v1 / n;
      const Complex u2 = v2 / n;
      u = {u1, -std::conj(u2), u2, std::conj(u1)};
    }
  }
  return {{hi, lo}, u};
}

}  // namespace sl2pol
