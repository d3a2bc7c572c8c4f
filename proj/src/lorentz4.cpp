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

#include "sl2pol/lorentz4.hpp"

#include <cmath>

#include "sl2pol/errors.hpp"

namespace sl2pol {

namespace {

using C4 = std::array<Complex, 16>;

C4 cmul(const C4& l, const C4& r) {
  C4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Complex acc{0.0, 0.0};
      for (int k = 0; k < 4; ++k) {
        acc += l[i * 4 + k] * r[k * 4 + j];
      }
      out[i * 4 + j] = acc;
    }
  }
  return out;
}

// (t, z, x, y) from lightcone components (t+z, x-iy, x+iy, t-z).
const C4 kFromLightcone = {
    0.5, 0.0,  0.0,  0.5,
    0.5, 0.0,  0.0, -0.5,
    0.0, 0.5,  0.5,  0.0,
    0.0, Complex(0.0, 0.5), Complex(0.0, -0.5), 0.0};

// Lightcone components from (t, z, x, y).
const C4 kToLightcone = {
    1.0, 1.0, 0.0, 0.0,
    0.0, 0.0, 1.0, Complex(0.0, -1.0),
    0.0, 0.0, 1.0, Complex(0.0, 1.0),
    1.0, -1.0, 0.0, 0.0};

}  // namespace

Lorentz4 Lorentz4::identity() {
  Lorentz4 l;
  for (int i = 0; i < 4; ++i) l.at(i, i) = 1.0;
  return l;
}

Lorentz4 operator*(const Lorentz4& l, const Lorentz4& r) {
  Lorentz4 out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) {
        acc += l.at(i, k) * r.at(k, j);
      }
      out.at(i, j) = acc;
    }
  }
  return out;
}

namespace {

std::array<double, 4> apply4(const Lorentz4& l, const std::array<double, 4>& v) {
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out[i] += l.at(i, j) * v[j];
    }
  }
  return out;
}

}  // namespace

FourVector apply(const Lorentz4& l, const FourVector& v) {
  const auto out = apply4(l, {v.t, v.z, v.x, v.y});
  return {out[0], out[1], out[2], out[3], v.role};
}

StokesVector apply(const Lorentz4& l, const StokesVector& s) {
  const auto out = apply4(l, {s.s0, s.s3, s.s1, s.s2});
  return {out[0], out[1], out[2], out[3]};
}

double frobenius_distance(const Lorentz4& l, const Lorentz4& r) {
  double acc = 0.0;
  for (int i = 0; i < 16; ++i) {
    const double d = l.m[i] - r.m[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

double minkowski_residual(const Lorentz4& l) {
  static const double eta[4] = {1.0, -1.0, -1.0, -1.0};
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) {
        s += l.at(k, i) * eta[k] * l.at(k, j);
      }
      const double target = (i == j) ? eta[i] : 0.0;
      const double d = s - target;
      acc += d * d;
    }
  }
  return std::sqrt(acc);
}

Lorentz4 sl2c_to_lorentz4(const Mat2C& g) {
  const Complex a = g.a11, b = g.a12, c = g.a21, d = g.a22;
  // Entry-product matrix on lightcone components: row (i,j), column (k,l)
  // holds g_ik * conj(g_jl) for the flattened index order 11, 12, 21, 22.
  const C4 kernel = {
      a * std::conj(a), a * std::conj(b), b * std::conj(a), b * std::conj(b),
      a * std::conj(c), a * std::conj(d), b * std::conj(c), b * std::conj(d),
      c * std::conj(a), c * std::conj(b), d * std::conj(a), d * std::conj(b),
      c * std::conj(c), c * std::conj(d), d * std::conj(c), d * std::conj(d)};

  const C4 full = cmul(kFromLightcone, cmul(kernel, kToLightcone));

  double residue = 0.0;
  Lorentz4 out;
  for (int i = 0; i < 16; ++i) {
    residue = std::max(residue, std::abs(full[i].imag()));
    out.m[i] = full[i].real();
  }
  if (residue > 1e-9 * std::max(1.0, frobenius_norm(g) * frobenius_norm(g))) {
    throw NonRealResult("sl2c_to_lorentz4: imaginary residue above threshold");
  }
  return out;
}

Lorentz4 mueller_from_jones(const Mat2C& g) {
  // S1 + i S2 is the (1,2) coherency entry, while x + i y is the (2,1)
  // entry of the four-vector matrix, so the S2 axis carries the opposite
  // handedness to y.  Conjugating g flips exactly that axis:
  // image(conj g) = D image(g) D with D = diag(1, 1, 1, -1).
  const Mat2C conj_g{std::conj(g.a11), std::conj(g.a12), std::conj(g.a21),
                     std::conj(g.a22)};
  return sl2c_to_lorentz4(conj_g);
}

double homomorphism_check(const Mat2C& g1, const Mat2C& g2) {
  return frobenius_distance(sl2c_to_lorentz4(g1 * g2),
                            sl2c_to_lorentz4(g1) * sl2c_to_lorentz4(g2));
}

}  // namespace sl2pol
