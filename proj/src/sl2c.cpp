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

#include "sl2pol/sl2c.hpp"

#include <cmath>

#include "sl2pol/errors.hpp"

namespace sl2pol {

double interval(const FourVector& v) {
  return v.t * v.t - v.z * v.z - v.x * v.x - v.y * v.y;
}

Mat2C generator(const GeneratorParam& p) {
  const double h = p.value / 2.0;
  switch (p.kind) {
    case GeneratorKind::PhaseZ:
      return Mat2C::diag(std::polar(1.0, h), std::polar(1.0, -h));
    case GeneratorKind::RotY:
      return {std::cos(h), -std::sin(h), std::sin(h), std::cos(h)};
    case GeneratorKind::BoostZ:
      return Mat2C::diag(std::exp(h), std::exp(-h));
    case GeneratorKind::BoostX:
      return {std::cosh(h), std::sinh(h), std::sinh(h), std::cosh(h)};
  }
  throw std::invalid_argument("generator: bad kind");
}

Mat2C compose(std::span<const GeneratorParam> params) {
  Mat2C g = Mat2C::identity();
  for (const auto& p : params) {
    g = g * generator(p);
  }
  return g;
}

Mat2C pack(const FourVector& v) {
  return {Complex(v.t + v.z, 0.0), Complex(v.x, -v.y),
          Complex(v.x, v.y), Complex(v.t - v.z, 0.0)};
}

FourVector unpack(const Mat2C& m, double tol, VectorRole role) {
  if (!is_hermitian(m, tol)) {
    throw NotHermitian("unpack: matrix is not Hermitian within tolerance");
  }
  FourVector v;
  v.t = (m.a11.real() + m.a22.real()) / 2.0;
  v.z = (m.a11.real() - m.a22.real()) / 2.0;
  v.x = m.a21.real();
  v.y = m.a21.imag();
  v.role = role;
  return v;
}

Mat2C naimark(const Mat2C& g, const Mat2C& x, double tol) {
  if (!is_hermitian(x, tol)) {
    throw NotHermitian("naimark: x is not Hermitian within tolerance");
  }
  return g * x * dagger(g);
}

double rapidity_timelike(double p0, double pz) {
  if (!(p0 > std::abs(pz))) {
    throw NotTimelike("rapidity_timelike: requires p0 > |pz|");
  }
  return 0.5 * std::log((p0 + pz) / (p0 - pz));
}

double rapidity_spacelike(double p0, double pz) {
  if (!(pz > std::abs(p0))) {
    throw NotSpacelike("rapidity_spacelike: requires pz > |p0|");
  }
  return 0.5 * std::log((p0 + pz) / (pz - p0));
}

}  // namespace sl2pol
