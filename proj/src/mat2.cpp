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

#include "sl2pol/mat2.hpp"

#include <cmath>
#include <stdexcept>

#include "sl2pol/errors.hpp"

namespace sl2pol {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

Mat2C::Mat2C(Complex m11, Complex m12, Complex m21, Complex m22)
    : a11(m11), a12(m12), a21(m21), a22(m22) {
  if (!finite(a11) || !finite(a12) || !finite(a21) || !finite(a22)) {
    throw std::invalid_argument("Mat2C: non-finite entry");
  }
}

std::array<double, 8> Mat2C::to_array() const {
  return {a11.real(), a11.imag(), a12.real(), a12.imag(),
          a21.real(), a21.imag(), a22.real(), a22.imag()};
}

Mat2C Mat2C::from_array(const std::array<double, 8>& v) {
  return {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
}

Mat2C multiply(const Mat2C& l, const Mat2C& r) {
  return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
          l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
}

Mat2C operator+(const Mat2C& l, const Mat2C& r) {
  return {l.a11 + r.a11, l.a12 + r.a12, l.a21 + r.a21, l.a22 + r.a22};
}

Mat2C operator-(const Mat2C& l, const Mat2C& r) {
  return {l.a11 - r.a11, l.a12 - r.a12, l.a21 - r.a21, l.a22 - r.a22};
}

Mat2C operator*(Complex s, const Mat2C& m) {
  return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
}

Mat2C dagger(const Mat2C& m) {
  return {std::conj(m.a11), std::conj(m.a21), std::conj(m.a12), std::conj(m.a22)};
}

Complex det(const Mat2C& m) {
  // The a11*a22 - a12*a21 cancellation is the main precision sink of the
  // whole library; accumulate it in long double.
  using CL = std::complex<long double>;
  const CL d = CL(m.a11) * CL(m.a22) - CL(m.a12) * CL(m.a21);
  return {static_cast<double>(d.real()), static_cast<double>(d.imag())};
}

Complex trace(const Mat2C& m) { return m.a11 + m.a22; }

double frobenius_norm(const Mat2C& m) {
  return std::sqrt(std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) +
                   std::norm(m.a22));
}

double frobenius_distance(const Mat2C& l, const Mat2C& r) {
  return frobenius_norm(l - r);
}

Mat2C inverse(const Mat2C& m) {
  const Complex d = det(m);
  const double f2 = std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) +
                    std::norm(m.a22);
  if (std::abs(d) < 1e-12 * std::max(1.0, f2)) {
    throw SingularMatrix("inverse: |det| below singularity threshold");
  }
  const Complex inv_d = 1.0 / d;
  return {inv_d * m.a22, -inv_d * m.a12, -inv_d * m.a21, inv_d * m.a11};
}

bool is_hermitian(const Mat2C& m, double tol) {
  return std::abs(m.a11.imag()) <= tol && std::abs(m.a22.imag()) <= tol &&
         std::abs(m.a12 - std::conj(m.a21)) <= tol;
}

bool is_unimodular(const Mat2C& m, double tol) {
  return std::abs(det(m) - Complex(1.0)) <= tol;
}

}  // namespace sl2pol
