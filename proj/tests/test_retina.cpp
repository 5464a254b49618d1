#include <doctest.h>

#include <cmath>
#include <random>

#include "dsnn/retina.hpp"

using namespace dsnn;

TEST_CASE("decay coefficient matches the closed form") {
  // a_i = (1 + e^(u*i))^-1, evaluated by hand.
  CHECK(decay_coefficient(1, 1.0) == doctest::Approx(0.26894).epsilon(1e-4));
  CHECK(decay_coefficient(2, 1.0) == doctest::Approx(0.11920).epsilon(1e-4));
  // increasing u decays faster: (1, 2) equals (2, 1)
  CHECK(decay_coefficient(1, 2.0) == doctest::Approx(0.11920).epsilon(1e-4));

  for (int i = 1; i < 6; ++i) CHECK(decay_coefficient(i, 1.0) > decay_coefficient(i + 1, 1.0));
  CHECK(decay_coefficient(3, 1.0) > decay_coefficient(3, 1.5));
}

TEST_CASE("identical frames with an empty buffer give a zero plane") {
  Params p = default_params(16, 16);
  Field a(16, 16, 37.0);
  ResidualBuffer buf(p.n_p);
  const Field out = high_pass(a, a, buf, p);
  for (double v : out.values()) CHECK(v == 0.0);
}

TEST_CASE("plain two-frame difference when n_p is zero") {
  Params p = default_params(9, 9);
  p.n_p = 0;
  Field prev(9, 9, 0.0), curr(9, 9, 0.0);
  prev(4, 4) = 100.0;
  curr(4, 4) = 200.0;
  ResidualBuffer buf(0);
  const Field out = high_pass(curr, prev, buf, p);
  CHECK(out(4, 4) == doctest::Approx(100.0));
  CHECK(out(0, 0) == 0.0);
  CHECK(out(4, 5) == 0.0);
}

TEST_CASE("residual history decays into the output") {
  // Static pixel with past outputs 100 and 50:
  // P = a_1*100 + a_2*50 = 26.894142 + 5.960146 = 32.854288
  Params p = default_params(9, 9);
  Field l(9, 9, 10.0);
  Field h1(9, 9, 0.0), h2(9, 9, 0.0);
  h1(2, 3) = 100.0;
  h2(2, 3) = 50.0;
  ResidualBuffer buf(2);
  buf.push(std::move(h2));
  buf.push(std::move(h1));
  const Field out = high_pass(l, l, buf, p);
  CHECK(out(2, 3) == doctest::Approx(32.85428823810539).epsilon(1e-9));
  CHECK(out(0, 0) == 0.0);
}

TEST_CASE("high pass is linear in its inputs") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  Params p = default_params(12, 12);

  auto random_field = [&] {
    Field f(12, 12);
    for (double& v : f.values()) v = dist(rng);
    return f;
  };

  const double a = 0.7, b = -1.3;
  for (int trial = 0; trial < 20; ++trial) {
    Field c1 = random_field(), c2 = random_field();
    Field q1 = random_field(), q2 = random_field();
    Field r1 = random_field(), r2 = random_field();

    ResidualBuffer b1(2), b2(2), bc(2);
    b1.push(r1);
    b2.push(r2);
    Field rc(12, 12);
    for (std::size_t i = 0; i < rc.size(); ++i)
      rc.values()[i] = a * r1.values()[i] + b * r2.values()[i];
    bc.push(std::move(rc));

    Field cc(12, 12), qc(12, 12);
    for (std::size_t i = 0; i < cc.size(); ++i) {
      cc.values()[i] = a * c1.values()[i] + b * c2.values()[i];
      qc.values()[i] = a * q1.values()[i] + b * q2.values()[i];
    }

    const Field o1 = high_pass(c1, q1, b1, p);
    const Field o2 = high_pass(c2, q2, b2, p);
    const Field oc = high_pass(cc, qc, bc, p);
    for (std::size_t i = 0; i < oc.size(); ++i)
      CHECK(oc.values()[i] ==
            doctest::Approx(a * o1.values()[i] + b * o2.values()[i]).epsilon(1e-12));
  }
}

TEST_CASE("a static scene stays silent for any history length") {
  for (int n_p : {0, 1, 3, 6}) {
    Params p = default_params(10, 14);
    p.n_p = n_p;
    Field frame(10, 14, 128.0);
    ResidualBuffer buf(n_p);
    Field prev = frame;
    for (int t = 0; t < 12; ++t) {
      Field out = high_pass(frame, prev, buf, p);
      for (double v : out.values()) CHECK(v == 0.0);
      buf.push(std::move(out));
      prev = frame;
    }
  }
}

TEST_CASE("residual buffer evicts the oldest entry") {
  ResidualBuffer buf(2);
  buf.push(Field(2, 2, 1.0));
  buf.push(Field(2, 2, 2.0));
  buf.push(Field(2, 2, 3.0));
  REQUIRE(buf.size() == 2);
  CHECK(buf[0](0, 0) == 3.0);
  CHECK(buf[1](0, 0) == 2.0);
}
