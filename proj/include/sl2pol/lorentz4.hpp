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

#ifndef SL2POL_LORENTZ4_HPP
#define SL2POL_LORENTZ4_HPP

#include <array>

#include "sl2pol/mat2.hpp"
#include "sl2pol/polarization.hpp"
#include "sl2pol/sl2c.hpp"

namespace sl2pol {

/// Real 4x4 matrix acting on column (t, z, x, y) four-vectors.  The same
/// numbers act on (S0, S3, S1, S2) Stokes vectors, where it is conventionally
/// called a Mueller matrix.
struct Lorentz4 {
  std::array<double, 16> m{};  // row-major

  static Lorentz4 identity();

  double& at(int row, int col) { return m[row * 4 + col]; }
  double at(int row, int col) const { return m[row * 4 + col]; }
};

Lorentz4 operator*(const Lorentz4& l, const Lorentz4& r);

FourVector apply(const Lorentz4& l, const FourVector& v);
StokesVector apply(const Lorentz4& l, const StokesVector& s);

double frobenius_distance(const Lorentz4& l, const Lorentz4& r);

/// Residual of the Minkowski-form preservation check:
/// || L^T diag(1,-1,-1,-1) L - diag(1,-1,-1,-1) ||_F.
double minkowski_residual(const Lorentz4& l);

/// The two-to-one homomorphism: the induced real 4x4 action of the
/// congruence X -> g X g^dagger on (t, z, x, y) components.  Built from the
/// entry-product matrix on lightcone components (t+z, x-iy, x+iy, t-z)
/// conjugated back to Cartesian order.  g and -g map to the same matrix.
///
/// Throws NonRealResult if the imaginary residue of the conjugation exceeds
/// 1e-9 (an implementation fault, not a user error).
Lorentz4 sl2c_to_lorentz4(const Mat2C& g);

/// Mueller matrix of a Jones-space transformation g, acting on
/// (S0, S3, S1, S2).  Equals sl2c_to_lorentz4(conj(g)): S1 + i S2 sits in
/// the (1,2) coherency entry where the four-vector matrix keeps x - i y,
/// so the S2 axis has opposite handedness to y.  Pinned by the consistency
/// requirement mueller(g) * stokes(c) = stokes(g c g^dagger); under it the
/// phase shifter Z(delta) rotates the (S1, S2) plane by +delta.
Lorentz4 mueller_from_jones(const Mat2C& g);

/// Frobenius distance between the image of g1*g2 and the product of images.
double homomorphism_check(const Mat2C& g1, const Mat2C& g2);

}  // namespace sl2pol

#endif  // SL2POL_LORENTZ4_HPP
