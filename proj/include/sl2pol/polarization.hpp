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

#ifndef SL2POL_POLARIZATION_HPP
#define SL2POL_POLARIZATION_HPP

#include <utility>
#include <vector>

#include "sl2pol/mat2.hpp"

namespace sl2pol {

/// Two-component plane-wave beam: amplitudes a, b >= 0, phases phi1, phi2,
/// common wavenumber k and angular frequency omega.
struct JonesBeam {
  double a, b;
  double phi1, phi2;
  double k = 0.0;
  double omega = 0.0;

  JonesBeam(double a_, double b_, double phi1_, double phi2_, double k_ = 0.0,
            double omega_ = 0.0);
};

/// Decoherence parameters: sigma >= 0, chi = acos(e^-sigma), and the
/// relative phase delta between the two components.
struct CoherencePars {
  double sigma;
  double chi;
  double delta;

  CoherencePars(double sigma_, double delta_ = 0.0);
};

/// Hermitian matrix of time-averaged field correlations.  Construction
/// enforces Hermiticity, nonnegative intensities, and Cauchy-Schwarz on the
/// off-diagonal; violations raise Unphysical.
class CoherencyMatrix {
 public:
  explicit CoherencyMatrix(const Mat2C& m, double tol = kStructuralTol);

  const Mat2C& matrix() const { return m_; }
  double s11() const { return m_.a11.real(); }
  Complex s12() const { return m_.a12; }
  Complex s21() const { return m_.a21; }
  double s22() const { return m_.a22.real(); }

 private:
  Mat2C m_;
};

/// Stokes four-vector in (S0, S3, S1, S2) order, mirroring (t, z, x, y).
struct StokesVector {
  double s0, s3, s1, s2;
};

/// Spherical coordinates on the Stokes three-space:
///   S3 = R cos xi, S1 = R sin xi cos delta, S2 = R sin xi sin delta.
struct SphericalStokes {
  double radius;
  double xi;
  double delta;
};

struct SphereGeometry {
  double s0;
  StokesVector stokes;
  SphericalStokes spherical;
  double degree;  // R / S0
};

/// Equal-spaced time samples of the two field components.
struct SampleSeries {
  std::vector<Complex> psi1, psi2;
  double dt;

  SampleSeries(std::vector<Complex> psi1_, std::vector<Complex> psi2_,
               double dt_);
};

// Optical elements.  Phase shifter and rotator are unimodular; the
// attenuator carries the overall factor e^{-(eta1+eta2)/2} and is not.
Mat2C element_phase(double delta);
Mat2C element_attenuator(double eta1, double eta2);
Mat2C element_rotation(double theta);
Mat2C element_squeeze45(double lambda);

/// Partially coherent beam:
///   [[a^2, ab cos(chi) e^{-i delta}], [ab cos(chi) e^{i delta}, b^2]],
/// det = (ab)^2 sin^2(chi).
CoherencyMatrix coherency_from_params(double a, double b,
                                      const CoherencePars& pars);

/// Equal-time sample estimate of <psi_i^* psi_j>.  Hermitian by
/// construction; throws TooFewSamples below two samples.
CoherencyMatrix estimate_coherency(const SampleSeries& s);

/// C' = G C G dagger.
CoherencyMatrix transform_coherency(const Mat2C& g, const CoherencyMatrix& c);

/// S0 = (S11+S22)/2, S3 = (S11-S22)/2, S1 = (S12+S21)/2, S2 = (S12-S21)/2i.
StokesVector stokes_from_coherency(const CoherencyMatrix& c);

/// Inverse of the above; throws Unphysical when the Stokes vector violates
/// s0 >= 0 or s0^2 - s3^2 - s1^2 - s2^2 >= -1e-9 s0^2.
CoherencyMatrix coherency_from_stokes(const StokesVector& s);

/// f = sqrt(1 - 4 det C / tr(C)^2), in [0, 1].  Throws ZeroIntensity when
/// the trace vanishes.
double degree_of_polarization(const CoherencyMatrix& c);

/// Radius, angles, and degree of polarization of the state on the
/// two-radius sphere; S0^2 - R^2 = det C is the invariant.
SphereGeometry sphere_geometry(const CoherencyMatrix& c);

struct CoherencyEigen {
  std::pair<double, double> eigenvalues;  // descending
  Mat2C rotation;                         // unitary, C = U diag U_dagger
};

/// Closed-form 2x2 Hermitian eigendecomposition of the coherency matrix.
CoherencyEigen diagonalize_coherency(const CoherencyMatrix& c);

}  // namespace sl2pol

#endif  // SL2POL_POLARIZATION_HPP
