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

#ifndef SL2POL_SL2C_HPP
#define SL2POL_SL2C_HPP

#include <span>
#include <vector>

#include "sl2pol/mat2.hpp"

namespace sl2pol {

/// Minkowski four-vector in (t, z, x, y) order, natural units.  The same
/// layout carries (E, p_z, p_x, p_y); the role tag records which.
enum class VectorRole { SpaceTime, EnergyMomentum };

struct FourVector {
  double t = 0.0, z = 0.0, x = 0.0, y = 0.0;
  VectorRole role = VectorRole::SpaceTime;
};

/// t^2 - z^2 - x^2 - y^2.
double interval(const FourVector& v);

/// The four one-parameter subgroups generating the whole group:
///   PhaseZ : Z(delta) = diag(e^{i delta/2}, e^{-i delta/2})    z-rotation
///   RotY   : R(theta), cos/sin of the half angle               y-rotation
///   BoostZ : B(eta)   = diag(e^{eta/2}, e^{-eta/2})            z-boost
///   BoostX : S(lambda), cosh/sinh of the half parameter        x-boost
/// All take the FULL parameter and halve it internally.
enum class GeneratorKind { PhaseZ, RotY, BoostZ, BoostX };

struct GeneratorParam {
  GeneratorKind kind;
  double value;  // radians for PhaseZ/RotY, rapidity for BoostZ/BoostX
};

Mat2C generator(const GeneratorParam& p);

/// Left-to-right product of generator matrices: the first element of the
/// sequence is the leftmost factor.  Empty sequence gives the identity.
Mat2C compose(std::span<const GeneratorParam> params);

/// Four-vector as a Hermitian matrix:
///   [[t+z, x-iy], [x+iy, t-z]],  det = interval(v).
Mat2C pack(const FourVector& v);

/// Inverse of pack.  Throws NotHermitian if m fails is_hermitian(m, tol).
FourVector unpack(const Mat2C& m, double tol = kStructuralTol,
                  VectorRole role = VectorRole::SpaceTime);

/// The congruence action X' = G X G dagger.  Requires Hermitian x (throws
/// NotHermitian).  g need not be unimodular: attenuators carry an overall
/// scale factor, so unimodularity is the caller's concern.
Mat2C naimark(const Mat2C& g, const Mat2C& x, double tol = kStructuralTol);

/// eta with e^eta = sqrt((p0+pz)/(p0-pz)); requires p0 > |pz|.
double rapidity_timelike(double p0, double pz);

/// eta with e^eta = sqrt((p0+pz)/(pz-p0)); requires pz > |p0|.
double rapidity_spacelike(double p0, double pz);

}  // namespace sl2pol

#endif  // SL2POL_SL2C_HPP
