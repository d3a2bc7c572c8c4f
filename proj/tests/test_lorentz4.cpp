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

#include <doctest.h>

#include <cmath>

#include "sl2pol/lorentz4.hpp"
#include "test_support.hpp"

using namespace sl2pol;
using sl2pol::testing::Rng;

TEST_CASE("identity maps to identity") {
  CHECK(frobenius_distance(sl2c_to_lorentz4(Mat2C::identity()),
                           Lorentz4::identity()) == 0.0);
}

TEST_CASE("B(eta) gives the (t,z) boost block") {
  const double eta = 0.9;
  const Lorentz4 l = sl2c_to_lorentz4(generator({GeneratorKind::BoostZ, eta}));
  Lorentz4 expected = Lorentz4::identity();
  expected.at(0, 0) = expected.at(1, 1) = std::cosh(eta);
  expected.at(0, 1) = expected.at(1, 0) = std::sinh(eta);
  CHECK(frobenius_distance(l, expected) <= 1e-13);
}

TEST_CASE("S(lambda) boosts mixing t and x") {
  const double lambda = 1.3;
  const Lorentz4 l = sl2c_to_lorentz4(generator({GeneratorKind::BoostX, lambda}));
  Lorentz4 expected = Lorentz4::identity();
  expected.at(0, 0) = expected.at(2, 2) = std::cosh(lambda);
  expected.at(0, 2) = expected.at(2, 0) = std::sinh(lambda);
  CHECK(frobenius_distance(l, expected) <= 1e-13);
}

TEST_CASE("R(theta) rotates the (z,x) plane") {
  const double theta = 0.6;
  const Lorentz4 l = sl2c_to_lorentz4(generator({GeneratorKind::RotY, theta}));
  Lorentz4 expected = Lorentz4::identity();
  expected.at(1, 1) = expected.at(2, 2) = std::cos(theta);
  expected.at(1, 2) = -std::sin(theta);
  expected.at(2, 1) = std::sin(theta);
  CHECK(frobenius_distance(l, expected) <= 1e-13);
}

TEST_CASE("two-path consistency with pack -> naimark -> unpack") {
  Rng rng(11001);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const Mat2C g = testing::random_group_element(rng);
    const FourVector v{u(rng), u(rng), u(rng), u(rng)};
    const Lorentz4 l = sl2c_to_lorentz4(g);
    const FourVector via4 = apply(l, v);
    const FourVector via2 = unpack(naimark(g, pack(v)), 1e-6);
    const double scale = std::max({1.0, std::abs(via2.t), std::abs(via2.z),
                                   std::abs(via2.x), std::abs(via2.y)});
    CHECK(std::abs(via4.t - via2.t) <= 1e-10 * scale);
    CHECK(std::abs(via4.z - via2.z) <= 1e-10 * scale);
    CHECK(std::abs(via4.x - via2.x) <= 1e-10 * scale);
    CHECK(std::abs(via4.y - via2.y) <= 1e-10 * scale);
  }
}

TEST_CASE("Minkowski form preserved, determinant +1") {
  Rng rng(11002);
  for (int i = 0; i < 200; ++i) {
    const Mat2C g = testing::random_group_element(rng, 6);
    const Lorentz4 l = sl2c_to_lorentz4(g);
    const double scale = frobenius_norm(g);
    CHECK(minkowski_residual(l) <= 1e-9 * std::max(1.0, scale * scale * scale * scale));
  }
}

TEST_CASE("kernel: g and -g map to the same matrix exactly") {
  Rng rng(11003);
  for (int i = 0; i < 50; ++i) {
    const Mat2C g = testing::random_group_element(rng);
    const Mat2C neg = Complex(-1.0) * g;
    CHECK(frobenius_distance(sl2c_to_lorentz4(g), sl2c_to_lorentz4(neg)) == 0.0);
  }
}

TEST_CASE("homomorphism") {
  CHECK(homomorphism_check(Mat2C::identity(), Mat2C::identity()) == 0.0);

  const Mat2C r = generator({GeneratorKind::RotY, 0.8});
  const Mat2C rinv = generator({GeneratorKind::RotY, -0.8});
  CHECK(frobenius_distance(sl2c_to_lorentz4(r) * sl2c_to_lorentz4(rinv),
                           Lorentz4::identity()) <= 1e-12);

  Rng rng(11004);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const Mat2C g1 = testing::random_group_element(rng, 4);
    const Mat2C g2 = testing::random_group_element(rng, 4);
    worst = std::max(worst, homomorphism_check(g1, g2));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("Mueller action: phase shifter rotates (S1, S2) by +delta") {
  const double delta = 0.7;
  const Lorentz4 mueller = mueller_from_jones(element_phase(delta));
  const StokesVector s{1.0, 0.2, 0.5, -0.3};
  const StokesVector out = apply(mueller, s);
  CHECK(out.s0 == doctest::Approx(s.s0).epsilon(1e-13));
  CHECK(out.s3 == doctest::Approx(s.s3).epsilon(1e-13));
  CHECK(out.s1 ==
        doctest::Approx(s.s1 * std::cos(delta) - s.s2 * std::sin(delta))
            .epsilon(1e-12));
  CHECK(out.s2 ==
        doctest::Approx(s.s2 * std::cos(delta) + s.s1 * std::sin(delta))
            .epsilon(1e-12));
}

TEST_CASE("Mueller two-path consistency on coherency matrices") {
  Rng rng(11005);
  for (int i = 0; i < 300; ++i) {
    const Mat2C g = testing::random_group_element(rng, 6);
    const StokesVector s = testing::random_physical_stokes(rng);
    const CoherencyMatrix c = coherency_from_stokes(s);
    const StokesVector via_mueller = apply(mueller_from_jones(g), s);
    const StokesVector via_jones =
        stokes_from_coherency(transform_coherency(g, c));
    const double scale = std::max(1.0, std::abs(via_jones.s0));
    CHECK(std::abs(via_mueller.s0 - via_jones.s0) <= 1e-10 * scale);
    CHECK(std::abs(via_mueller.s3 - via_jones.s3) <= 1e-10 * scale);
    CHECK(std::abs(via_mueller.s1 - via_jones.s1) <= 1e-10 * scale);
    CHECK(std::abs(via_mueller.s2 - via_jones.s2) <= 1e-10 * scale);
  }
}
