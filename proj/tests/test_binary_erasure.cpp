#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "reference_values.hpp"
#include "test_util.hpp"
#include "wzgain/binary_erasure.hpp"
#include "wzgain/entropy.hpp"

using namespace wzgain;
using testutil::abs_err;
using testutil::rel_err;

TEST_CASE("BinaryJoint validates full support and normalization") {
  CHECK_NOTHROW(BinaryJoint(0.25, 0.25, 0.25, 0.25));
  // Zero or negative entries are rejected: the exact solver needs full
  // support.
  CHECK_THROWS_AS(BinaryJoint(0.5, 0.0, 0.25, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(BinaryJoint(0.5, -0.1, 0.3, 0.3), std::invalid_argument);
  // Sums further than 1e-12 from 1 are rejected...
  CHECK_THROWS_AS(BinaryJoint(0.3, 0.3, 0.3, 0.3), std::invalid_argument);
  // ...while tiny drift is renormalized away.
  const BinaryJoint j(0.25 + 2e-13, 0.25, 0.25, 0.25);
  CHECK(abs_err(j.p00 + j.p01 + j.p10 + j.p11, 1.0) < 1e-15);
}

TEST_CASE("dsbs_joint and bsc_joint produce the advertised entries") {
  const BinaryJoint s = dsbs_joint(0.25);
  CHECK(s.p00 == 0.375);
  CHECK(s.p01 == 0.125);
  CHECK(s.p10 == 0.125);
  CHECK(s.p11 == 0.375);

  const BinaryJoint b = bsc_joint(0.2, 0.3);
  CHECK(rel_err(b.p00, 0.8 * 0.7) < 1e-15);
  CHECK(rel_err(b.p01, 0.2 * 0.3) < 1e-15);
  CHECK(rel_err(b.p10, 0.2 * 0.7) < 1e-15);
  CHECK(rel_err(b.p11, 0.8 * 0.3) < 1e-15);
  CHECK(rel_err(b.py1(), 0.3) < 1e-15);  // P(Y=1) = q

  CHECK_THROWS_AS(dsbs_joint(0.0), std::invalid_argument);
  CHECK_THROWS_AS(dsbs_joint(1.0), std::invalid_argument);
  CHECK_THROWS_AS(bsc_joint(0.2, 0.0), std::invalid_argument);
}

TEST_CASE("parameter structs validate their ranges") {
  CHECK_NOTHROW(ErasureAlphaPair(0.0, 1.0));
  CHECK_THROWS_AS(ErasureAlphaPair(-0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ErasureAlphaPair(0.5, 1.1), std::invalid_argument);
  CHECK_NOTHROW(DsbsParams(1e-300, 0.1, 1.0));
  CHECK_THROWS_AS(DsbsParams(0.0, 0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(DsbsParams(0.2, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(DsbsParams(0.2, 0.1, 1.5), std::invalid_argument);
}

TEST_CASE("binary_erasure_distortion has the standard shape") {
  const DistortionMatrix d = binary_erasure_distortion();
  REQUIRE(d.rows() == 2);
  REQUIRE(d.cols() == 3);
  CHECK(d.at(0, 0) == 0.0);
  CHECK(d.at(0, 1) == 1.0);
  CHECK(std::isinf(d.at(0, 2)));
  CHECK(std::isinf(d.at(1, 0)));
  CHECK(d.at(1, 1) == 1.0);
  CHECK(d.at(1, 2) == 0.0);
}

TEST_CASE("psi corner values reduce to conditional entropies") {
  auto rng = testutil::make_rng(201);
  for (int i = 0; i < 50; ++i) {
    const auto cells = testutil::random_pmf(rng, 4);
    const BinaryJoint j(cells[0], cells[1], cells[2], cells[3]);
    const JointPmf pmf = j.to_joint_pmf();
    const double h_x_given_y = conditional_entropy(pmf);
    const double h_y_given_x = conditional_entropy(pmf.transposed());
    // Full erasure: the auxiliary observation is useless.
    CHECK(rel_err(psi(j, ErasureAlphaPair(1.0, 1.0)),
                  h_x_given_y + h_y_given_x) < 1e-13);
    // No erasure: X is revealed, only H(Y|X) remains.
    CHECK(rel_err(psi(j, ErasureAlphaPair(0.0, 0.0)), h_y_given_x) < 1e-13);
  }
}

TEST_CASE("psi at the symmetric midpoint matches the frozen reference") {
  const double v = psi(dsbs_joint(0.25), ErasureAlphaPair(0.5, 0.5));
  CHECK(rel_err(v, refvals::psi_dsbs_quarter_half) < 1e-12);
  // (1 + phi) h(p) with phi = 0.5 here.
  CHECK(rel_err(v, 1.5 * binary_entropy(0.25)) < 1e-12);
}

TEST_CASE("psi on a symmetric joint is exactly symmetric in the alphas") {
  auto rng = testutil::make_rng(202);
  for (int i = 0; i < 200; ++i) {
    const BinaryJoint j = dsbs_joint(testutil::uniform(rng, 0.01, 0.49));
    const double a = testutil::uniform(rng, 0.0, 1.0);
    const double b = testutil::uniform(rng, 0.0, 1.0);
    // Bit-identical by construction (fixed term ordering), not just close.
    CHECK(psi(j, ErasureAlphaPair(a, b)) == psi(j, ErasureAlphaPair(b, a)));
  }
}

TEST_CASE("psi is nondecreasing and midpoint-concave in the alphas") {
  auto rng = testutil::make_rng(203);
  for (int i = 0; i < 1000; ++i) {
    const auto cells = testutil::random_pmf(rng, 4);
    const BinaryJoint j(cells[0], cells[1], cells[2], cells[3]);
    const double a0 = testutil::uniform(rng, 0.0, 1.0);
    const double a1 = testutil::uniform(rng, 0.0, 1.0);
    const double b0 = testutil::uniform(rng, 0.0, 1.0);
    const double b1 = testutil::uniform(rng, 0.0, 1.0);
    const double fa = psi(j, ErasureAlphaPair(a0, a1));
    const double fb = psi(j, ErasureAlphaPair(b0, b1));
    const double fmid =
        psi(j, ErasureAlphaPair(0.5 * (a0 + b0), 0.5 * (a1 + b1)));
    CHECK(fmid >= 0.5 * (fa + fb) - 1e-10);
    // Monotone: growing either coordinate cannot lose information content.
    const double step = testutil::uniform(rng, 0.0, 1.0 - std::max(a0, a1));
    CHECK(psi(j, ErasureAlphaPair(a0 + step * (1.0 - a0),
                                  a1 + step * (1.0 - a1))) >= fa - 1e-12);
  }
}

TEST_CASE("phi is the alpha-weighted X marginal") {
  const BinaryJoint s = dsbs_joint(0.25);
  CHECK(abs_err(phi(s, ErasureAlphaPair(0.3, 0.7)), 0.5) < 1e-15);
  const BinaryJoint b = bsc_joint(0.2, 0.3);
  CHECK(rel_err(phi(b, ErasureAlphaPair(0.25, 0.75)),
                0.62 * 0.25 + 0.38 * 0.75) < 1e-14);
}

TEST_CASE("rho1_exact reproduces the symmetric closed form (1+D) h(p)") {
  for (double p : {0.1, 0.25, 0.4}) {
    for (double D : {0.0, 0.25, 0.5, 0.75, 0.9}) {
      const double got = rho1_exact(dsbs_joint(p), D);
      CHECK(abs_err(got, (1.0 + D) * binary_entropy(p)) < 1e-9);
    }
  }
}

TEST_CASE("rho1_exact corner cases") {
  const BinaryJoint b = bsc_joint(0.2, 0.3);
  // D >= 1 makes the constraint vacuous: both letters fully erased.
  const double corner = psi(b, ErasureAlphaPair(1.0, 1.0));
  CHECK(rho1_exact(b, 1.0) == corner);
  CHECK(rho1_exact(b, 1.5) == corner);
  // D = 0 forbids all erasure: only H(Y|X) survives.
  CHECK(rel_err(rho1_exact(b, 0.0), c2_functional(0.2, 0.3)) < 1e-12);
  CHECK_THROWS_AS(rho1_exact(b, -0.1), std::invalid_argument);
}

TEST_CASE("rho1_exact matches the frozen asymmetric reference") {
  CHECK(rel_err(rho1_exact(bsc_joint(0.2, 0.3), 0.4),
                refvals::rho1_asym_p2_q3_d4) < 1e-12);
}

TEST_CASE("rho1_exact is invariant under mirroring the Y bias") {
  auto rng = testutil::make_rng(204);
  for (int i = 0; i < 20; ++i) {
    const double p = testutil::uniform(rng, 0.02, 0.45);
    const double q = testutil::uniform(rng, 0.05, 0.45);
    const double D = testutil::uniform(rng, 0.05, 0.95);
    CHECK(abs_err(rho1_exact(bsc_joint(p, q), D),
                  rho1_exact(bsc_joint(p, 1.0 - q), D)) < 1e-10);
  }
}

TEST_CASE("rho1_exact is nondecreasing in the distortion budget") {
  for (const BinaryJoint& j :
       {dsbs_joint(0.3), bsc_joint(0.15, 0.2), bsc_joint(0.4, 0.45)}) {
    double prev = rho1_exact(j, 0.0);
    for (double D = 0.1; D <= 1.05; D += 0.1) {
      const double cur = rho1_exact(j, D);
      CHECK(cur >= prev - 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("rho1_exact dominates psi at every feasible point") {
  auto rng = testutil::make_rng(205);
  for (int i = 0; i < 200; ++i) {
    const double p = testutil::uniform(rng, 0.02, 0.48);
    const double q = testutil::uniform(rng, 0.05, 0.95);
    const BinaryJoint j = bsc_joint(p, q);
    const double a0 = testutil::uniform(rng, 0.0, 1.0);
    const double a1 = testutil::uniform(rng, 0.0, 1.0);
    const ErasureAlphaPair alphas(a0, a1);
    const double D = phi(j, alphas);  // this point is feasible by definition
    CHECK(rho1_exact(j, D) >= psi(j, alphas) - 1e-9);
  }
}

TEST_CASE("rho1_box_search brackets the exact solver from below") {
  auto rng = testutil::make_rng(206);
  for (int i = 0; i < 5; ++i) {
    const double p = testutil::uniform(rng, 0.05, 0.45);
    const double q = testutil::uniform(rng, 0.1, 0.9);
    const double D = testutil::uniform(rng, 0.1, 0.9);
    const BinaryJoint j = bsc_joint(p, q);
    const double exact = rho1_exact(j, D);
    const double box = rho1_box_search(j, D, 256, 3);
    CHECK(box <= exact + 1e-9);
    CHECK(box >= exact - 2e-3);
  }
  CHECK_THROWS_AS(rho1_box_search(dsbs_joint(0.25), 0.5, 1, 3),
                  std::invalid_argument);
}

TEST_CASE("c_functional equals psi on the matching joint") {
  auto rng = testutil::make_rng(207);
  for (int i = 0; i < 200; ++i) {
    const double p = testutil::log_uniform(rng, 1e-12, 0.49);
    const double q = testutil::uniform(rng, 0.05, 0.95);
    const double a0 = testutil::uniform(rng, 0.0, 1.0);
    const double a1 = testutil::uniform(rng, 0.0, 1.0);
    CHECK(rel_err(c_functional(DsbsParams(p, q, a0), a1),
                  psi(bsc_joint(p, q), ErasureAlphaPair(a0, a1))) < 1e-12);
  }
}

TEST_CASE("c_functional, c2_functional, eta_functional frozen references") {
  CHECK(rel_err(c_functional(DsbsParams(0.2, 0.3, 0.4), 0.7),
                refvals::c_moderate) < 1e-13);
  CHECK(rel_err(c2_functional(0.25, 0.2), refvals::c2_quarter_fifth) <
        1e-13);
  CHECK(rel_err(eta_functional(DsbsParams(0.2, 0.3, 0.4), 0.7),
                refvals::eta_moderate) < 1e-14);
}

TEST_CASE("c_functional over h(p) approaches its small-p limit") {
  const double at_1e12 =
      c_functional(DsbsParams(1e-12, 0.1, 0.5), 1.0) / binary_entropy(1e-12);
  const double at_1e100 = c_functional(DsbsParams(1e-100, 0.1, 0.5), 1.0) /
                          binary_entropy(1e-100);
  CHECK(rel_err(at_1e12, refvals::c_over_h_1e12) < 1e-12);
  CHECK(rel_err(at_1e100, refvals::c_over_h_1e100) < 1e-12);
  // Limit value 2 - q(1 - alpha0e) = 1.95 at q = 0.1, alpha0e = 0.5.
  CHECK(std::fabs(at_1e12 - 1.95) < 0.1);
  CHECK(std::fabs(at_1e100 - 1.95) < 0.05);
}

TEST_CASE("c2_functional is symmetric in the Y bias") {
  auto rng = testutil::make_rng(208);
  for (int i = 0; i < 200; ++i) {
    const double p = testutil::log_uniform(rng, 1e-9, 0.49);
    const double q = testutil::uniform(rng, 0.02, 0.98);
    CHECK(abs_err(c2_functional(p, q), c2_functional(p, 1.0 - q)) < 1e-14);
  }
}

TEST_CASE("c_functional and eta_functional mirror under q <-> 1-q with "
          "alphas swapped") {
  auto rng = testutil::make_rng(209);
  for (int i = 0; i < 300; ++i) {
    const double p = testutil::log_uniform(rng, 1e-9, 0.49);
    const double q = testutil::uniform(rng, 0.02, 0.98);
    const double a0 = testutil::uniform(rng, 0.0, 1.0);
    const double a1 = testutil::uniform(rng, 0.0, 1.0);
    CHECK(abs_err(c_functional(DsbsParams(p, q, a0), a1),
                  c_functional(DsbsParams(p, 1.0 - q, a1), a0)) < 1e-10);
    CHECK(abs_err(eta_functional(DsbsParams(p, q, a0), a1),
                  eta_functional(DsbsParams(p, 1.0 - q, a1), a0)) < 1e-10);
  }
}

TEST_CASE("rsum1_dsbs evaluates (1-D) h(p) without cancellation") {
  CHECK(rel_err(rsum1_dsbs(0.25, 0.5), 0.5 * refvals::h_quarter) < 1e-14);
  CHECK(rsum1_dsbs(0.25, 1.0) == 0.0);
  // Stays fully accurate at p = 1e-200, where the magnitude is ~3e-198.
  CHECK(rel_err(rsum1_dsbs(1e-200, 0.55), 0.45 * refvals::h_1e200) < 1e-12);
  CHECK(rsum1_dsbs(1e-200, 0.55) > 0.0);
  CHECK_THROWS_AS(rsum1_dsbs(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(rsum1_dsbs(0.25, 1.2), std::invalid_argument);
  CHECK_THROWS_AS(rsum1_dsbs(0.25, -0.1), std::invalid_argument);
}
