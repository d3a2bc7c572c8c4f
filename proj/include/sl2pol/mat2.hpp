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

#ifndef SL2POL_MAT2_HPP
#define SL2POL_MAT2_HPP

#include <array>
#include <complex>

namespace sl2pol {

using Complex = std::complex<double>;

/// Default tolerance for structural predicates (Hermiticity, unimodularity).
inline constexpr double kStructuralTol = 1e-9;

/// Immutable complex 2x2 matrix, row-major.  The carrier type for group
/// elements, four-vector matrices, and coherency matrices.
///
/// Public constructors reject non-finite entries.
struct Mat2C {
  Complex a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

  Mat2C() = default;
  Mat2C(Complex m11, Complex m12, Complex m21, Complex m22);

  static Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2C diag(Complex d1, Complex d2) { return {d1, 0.0, 0.0, d2}; }

  /// Serialized form: [re11, im11, re12, im12, re21, im21, re22, im22].
  std::array<double, 8> to_array() const;
  static Mat2C from_array(const std::array<double, 8>& v);
};

Mat2C multiply(const Mat2C& l, const Mat2C& r);
inline Mat2C operator*(const Mat2C& l, const Mat2C& r) { return multiply(l, r); }
Mat2C operator+(const Mat2C& l, const Mat2C& r);
Mat2C operator-(const Mat2C& l, const Mat2C& r);
Mat2C operator*(Complex s, const Mat2C& m);

/// Conjugate transpose.  Exact involution: only conjugation and swaps.
Mat2C dagger(const Mat2C& m);

/// a11*a22 - a12*a21, accumulated in extended precision.
Complex det(const Mat2C& m);

Complex trace(const Mat2C& m);

double frobenius_norm(const Mat2C& m);
double frobenius_distance(const Mat2C& l, const Mat2C& r);

/// Inverse with a scale-aware singularity guard:
/// throws SingularMatrix when |det| < 1e-12 * max(1, ||m||_F^2).
Mat2C inverse(const Mat2C& m);

bool is_hermitian(const Mat2C& m, double tol = kStructuralTol);
bool is_unimodular(const Mat2C& m, double tol = kStructuralTol);

}  // namespace sl2pol

#endif  // SL2POL_MAT2_HPP
