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

#ifndef SL2POL_LITTLE_GROUP_HPP
#define SL2POL_LITTLE_GROUP_HPP

#include <string_view>

#include "sl2pol/mat2.hpp"

namespace sl2pol {

/// Trichotomy of momentum matrices by determinant sign.  The tolerance band
/// used for the Massless branch is recorded alongside the verdict.
enum class MassTag { Massive, Massless, ImaginaryMass };

std::string_view to_string(MassTag tag);

struct LittleGroupClass {
  MassTag tag;
  double det_p;
  double tol;
};

/// Scale-aware default band: 1e-9 * (trace/2)^2.
double default_classify_tol(const Mat2C& p);

/// Classify a Hermitian momentum matrix:
///   det >  tol  -> Massive
///   |det| <= tol -> Massless
///   det < -tol  -> ImaginaryMass
/// Throws NotHermitian.
LittleGroupClass classify(const Mat2C& p, double tol);
LittleGroupClass classify(const Mat2C& p);

/// Frobenius norm of W P Wdagger - P; zero iff w is in the little group
/// of p.  Throws NotHermitian on p.
double wigner_residual(const Mat2C& w, const Mat2C& p,
                       double tol = kStructuralTol);

/// Little-group element of the boosted massive momentum diag(e^eta, e^-eta):
///   [[cos(theta/2), -e^eta sin(theta/2)], [e^-eta sin(theta/2), cos(theta/2)]]
/// i.e. B(eta) R(theta) B(-eta).
Mat2C boosted_rotation(double theta, double eta);

/// Little-group element of the boosted imaginary-mass momentum
/// diag(e^eta, -e^-eta):
///   [[cosh(l/2), e^eta sinh(l/2)], [e^-eta sinh(l/2), cosh(l/2)]]
Mat2C boosted_squeeze(double lambda, double eta);

/// [[1, gamma], [0, 1]]: the massless little-group element, fixing
/// [[1,0],[0,0]] exactly.
Mat2C triangular(double gamma);

/// The rotation angle whose boosted rotation has upper-right entry exactly
/// +gamma: theta = -2 asin(gamma e^-eta).  Throws OutOfRange when
/// |gamma| e^-eta > 1.
double theta_for_gamma(double gamma, double eta);

/// Frobenius distance between boosted_rotation(theta_for_gamma(g,eta), eta)
/// and triangular(g).  Decreases to zero as eta grows: the massive
/// little group contracts onto the massless one.
double limit_distance(double gamma, double eta);

/// Momentum of a fixed-energy particle parametrized by the mass angle chi:
/// p0 = E, pz = E cos(chi), mass^2 = E^2 sin^2(chi).  chi = 0 is the
/// genuinely massless case and is kept distinct from small positive chi.
struct MassAngle {
  double chi;     // in [0, pi/2]
  double energy;  // > 0

  MassAngle(double chi_, double energy_);
};

/// E * diag(1 + cos chi, 1 - cos chi).  For chi > 0 this equals
/// E sin(chi) * diag(e^eta, e^-eta) with e^eta = sqrt((1+cos chi)/(1-cos chi)).
Mat2C momentum_from_mass_angle(const MassAngle& m);

}  // namespace sl2pol

#endif  // SL2POL_LITTLE_GROUP_HPP
