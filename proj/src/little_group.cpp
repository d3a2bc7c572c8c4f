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

#include "sl2pol/little_group.hpp"

#include <cmath>

#include "sl2pol/errors.hpp"
#include "sl2pol/sl2c.hpp"

namespace sl2pol {

std::string_view to_string(MassTag tag) {
  switch (tag) {
    case MassTag::Massive: return "Massive";
    case MassTag::Massless: return "Massless";
    case MassTag::ImaginaryMass: return "ImaginaryMass";
  }
  return "?";
}

double default_classify_tol(const Mat2C& p) {
  const double half_trace = trace(p).real() / 2.0;
  return 1e-9 * half_trace * half_trace;
}

LittleGroupClass classify(const Mat2C& p, double tol) {
  if (!is_hermitian(p)) {
    throw NotHermitian("classify: momentum matrix is not Hermitian");
  }
  const double d = det(p).real();
  MassTag tag = MassTag::Massless;
  if (d > tol) {
    tag = MassTag::Massive;
  } else if (d < -tol) {
    tag = MassTag::ImaginaryMass;
  }
  return {tag, d, tol};
}

LittleGroupClass classify(const Mat2C& p) {
  return classify(p, default_classify_tol(p));
}

double wigner_residual(const Mat2C& w, const Mat2C& p, double tol) {
  return frobenius_distance(naimark(w, p, tol), p);
}

Mat2C boosted_rotation(double theta, double eta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const double e = std::exp(eta);
  return {c, -e * s, s / e, c};
}

Mat2C boosted_squeeze(double lambda, double eta) {
  const double c = std::cosh(lambda / 2.0);
  const double s = std::sinh(lambda / 2.0);
  const double e = std::exp(eta);
  return {c, e * s, s / e, c};
}

Mat2C triangular(double gamma) { return {1.0, gamma, 0.0, 1.0}; }

double theta_for_gamma(double gamma, double eta) {
  const double s = gamma * std::exp(-eta);
  if (std::abs(s) > 1.0) {
    throw OutOfRange("theta_for_gamma: |gamma| e^-eta exceeds 1");
  }
  return -2.0 * std::asin(s);
}

double limit_distance(double gamma, double eta) {
  const Mat2C boosted = boosted_rotation(theta_for_gamma(gamma, eta), eta);
  return frobenius_distance(boosted, triangular(gamma));
}

MassAngle::MassAngle(double chi_, double energy_) : chi(chi_), energy(energy_) {
  if (!(chi >= 0.0 && chi <= M_PI / 2.0) || !std::isfinite(chi)) {
    throw OutOfRange("MassAngle: chi must lie in [0, pi/2]");
  }
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw OutOfRange("MassAngle: energy must be positive");
  }
}

Mat2C momentum_from_mass_angle(const MassAngle& m) {
  const double c = std::cos(m.chi);
  return Mat2C::diag(m.energy * (1.0 + c), m.energy * (1.0 - c));
}

}  // namespace sl2pol
