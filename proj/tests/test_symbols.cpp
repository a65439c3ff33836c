#include "fracscatter/fracscatter.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace fracscatter;

namespace
{
// Indicator-weighted modifier integral by adaptive Gauss-Kronrod, in the
// variable u = log tau so the power-law integrand becomes smooth.
double quad_phase(double t, double xi, PhysicsParams const &p)
{
  double const speed = std::pow(xi, 2 * p.rho - 1);
  double const start = 1.0 / speed;
  if (t <= start)
    return 0.0;
  auto f = [&](double u) {
    double const tau = std::exp(u);
    return speed * tau >= 1.0 ? p.lambda * std::pow(speed * tau, -p.gamma) * tau : 0.0;
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, std::log(start), std::log(t), 15, 1e-13);
}

double quad_power(double a, double b, double gamma)
{
  auto f = [&](double u) { return std::exp((1 - gamma) * u); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, std::log(a), std::log(b),
                                                                        15, 1e-13);
}
} // namespace

TEST(Omega, Examples)
{
  EXPECT_DOUBLE_EQ(omega_symbol(1.0, 1.0), 0.5);
  EXPECT_EQ(omega_symbol(0.0, 0.75), 0.0);
  EXPECT_EQ(omega_symbol(0.0, 0.5), 0.0);
  EXPECT_NEAR(omega_symbol(2.0, 0.75), 1.88561808316412673, 1e-15);
  std::vector<double> xi{0.6, 0.8};
  EXPECT_NEAR(omega_symbol(std::span<double const>(xi), 1.0), 0.5, 1e-15);
}

TEST(GroupVelocity, Examples)
{
  std::vector<double> a{3.0, -4.0};
  auto v = group_velocity(a, 1.0);
  EXPECT_EQ(v, a);
  auto u = group_velocity(a, 0.5);
  EXPECT_NEAR(u[0], 0.6, 1e-15);
  EXPECT_NEAR(u[1], -0.8, 1e-15);
  std::vector<double> four{4.0};
  EXPECT_NEAR(group_velocity(four, 0.75)[0], 2.0, 1e-15);
  std::vector<double> zero{0.0};
  EXPECT_THROW(group_velocity(zero, 0.75), singular_input_error);
  EXPECT_EQ(group_velocity(zero, 1.0)[0], 0.0);
  EXPECT_NEAR(group_speed(4.0, 0.75), 2.0, 1e-15);
}

TEST(GroupVelocity, IsGradientOfOmega)
{
  for (double rho : {0.55, 0.75, 0.9})
    for (double k : {0.4, 1.0, 2.7})
    {
      double const h  = 1e-5;
      double const fd = (omega_symbol(k + h, rho) - omega_symbol(k - h, rho)) / (2 * h);
      std::vector<double> xi{k};
      EXPECT_NEAR(group_velocity(xi, rho)[0], fd, 1e-8);
    }
}

TEST(Potential, Examples)
{
  PhysicsParams p{0.75, 1.0, 1.0, 0.5};
  EXPECT_EQ(potential_at(0.9, p), 0.0);
  EXPECT_EQ(potential_at(1.0, p), 1.0);
  PhysicsParams q{0.75, 1.0, 2.0, 0.5};
  EXPECT_DOUBLE_EQ(potential_at(4.0, q), 0.5);
  std::vector<double> x{0.6, 0.8};
  EXPECT_EQ(potential_at(std::span<double const>(x), q), 2.0);
}

TEST(DollardPhase, Examples)
{
  PhysicsParams p{1.0, 1.0, 1.0, 0.5};
  auto r = dollard_phase(2.0, 2.0, p);
  EXPECT_NEAR(r.phase, 0.693147180559945309, 1e-15);
  EXPECT_DOUBLE_EQ(r.threshold_time, 0.5);
  EXPECT_EQ(dollard_phase(0.25, 2.0, p).phase, 0.0);

  PhysicsParams q{1.0, 0.5, 1.0, 0.5};
  EXPECT_NEAR(dollard_phase(4.0, 1.0, q).phase, 2.0, 1e-14);

  EXPECT_THROW(dollard_phase(1.0, 0.0, p), singular_input_error);
  EXPECT_THROW(dollard_phase(-1.0, 1.0, p), domain_error);
}

TEST(DollardPhase, FrozenHighPrecisionValues)
{
  // 30-digit references
  EXPECT_NEAR(dollard_phase(800, 1.3, {0.75, 1.0, 1.0, 0.5}).phase, 5.977846662770372537, 1e-13);
  EXPECT_NEAR(dollard_phase(123.45, 0.7, {0.6, 0.5, -2.0, 0.5}).phase, -41.76124568086469380,
              1e-12);
  EXPECT_NEAR(dollard_phase(50, 1.1, {0.75, 2.0, 1.0, 0.5}).phase, 0.9352807710637741336, 1e-14);
}

TEST(DollardPhase, ThresholdIsHalfTimeZero)
{
  PhysicsParams p{0.8, 0.7, 1.3, 0.5};
  for (double xi : {0.5, 1.0, 3.0})
  {
    auto r = dollard_phase(1.0, xi, p);
    EXPECT_EQ(dollard_phase(r.threshold_time / 2, xi, p).phase, 0.0);
    EXPECT_EQ(dollard_phase(r.threshold_time, xi, p).phase, 0.0);
  }
}

TEST(DollardPhase, AgreesWithQuadratureOnRandomDraws)
{
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i)
  {
    PhysicsParams p{0.5 + 0.5 * u(rng), 0.05 + 2.95 * u(rng), -3.0 + 6.0 * u(rng),
                    0.1 + 0.9 * u(rng)};
    double const xi = 0.05 + 4.95 * u(rng);
    double const t  = 2000.0 * u(rng) * u(rng);
    double const value = dollard_phase(t, xi, p).phase;
    double const ref   = quad_phase(t, xi, p);
    worst = std::max(worst, std::abs(value - ref) / (1.0 + std::abs(ref)));
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(DollardPhase, MonotoneWithSignOfLambda)
{
  for (double lam : {-1.5, 2.0})
  {
    PhysicsParams p{0.7, 0.8, lam, 0.5};
    double prev = 0.0;
    for (double t = 0.0; t < 200; t += 0.37)
    {
      double const v = dollard_phase(t, 0.9, p).phase;
      EXPECT_GE(lam * (v - prev), -1e-15);
      prev = v;
    }
  }
}

TEST(DollardPhase, ContinuousAcrossThreshold)
{
  PhysicsParams p{0.75, 0.5, 1.0, 0.5};
  double const tx = dollard_phase(1.0, 1.7, p).threshold_time;
  EXPECT_LT(std::abs(dollard_phase(tx * (1 + 1e-12), 1.7, p).phase), 1e-11);
}

TEST(DollardPhase, LinearInLambda)
{
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i)
  {
    PhysicsParams p{0.5 + 0.5 * u(rng), 0.1 + 2.0 * u(rng), 1.0, 0.5};
    double const xi = 0.2 + 3 * u(rng), t = 500 * u(rng), s = -4 + 8 * u(rng);
    PhysicsParams q = p;
    q.lambda        = s;
    double const a  = dollard_phase(t, xi, p).phase;
    EXPECT_NEAR(dollard_phase(t, xi, q).phase, s * a, 1e-13 * (1 + std::abs(s * a)));
  }
}

TEST(DollardPhase, HalfRhoDegeneracy)
{
  PhysicsParams p{0.5, 0.8, 1.2, 0.5};
  for (double t : {0.5, 3.0, 1e3, 1e9})
  {
    double const ref = dollard_phase(t, 0.5, p).phase;
    for (double xi : {0.7, 1.0, 13.0, 1e4})
      EXPECT_EQ(dollard_phase(t, xi, p).phase, ref);
  }
}

TEST(TFactor, Examples)
{
  PhysicsParams p{0.75, 1.0, 1.0, 0.5};
  EXPECT_EQ(t_factor(support_threshold_time(p), p), 0.0);
  EXPECT_THROW(t_factor(0.9 * support_threshold_time(p), p), domain_error);

  PhysicsParams q{1.0, 1.0, 1.0, 1.0};
  EXPECT_NEAR(t_factor(std::numbers::e, q), 1.0, 1e-15);
  PhysicsParams h{1.0, 0.5, 1.0, 1.0};
  EXPECT_NEAR(t_factor(4.0, h), 2.0, 1e-15);
}

TEST(TFactor, DivergesAndDecadeStepIsLog10)
{
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i)
  {
    PhysicsParams p{0.5 + 0.5 * u(rng), 0.05 + 0.95 * u(rng), 1.0, 0.1 + u(rng)};
    double const t = support_threshold_time(p) * (1 + 1e4 * u(rng));
    EXPECT_GT(t_factor(10 * t, p), t_factor(t, p));
    p.gamma = 1.0;
    EXPECT_NEAR(t_factor(10 * t, p) - t_factor(t, p), std::log(10.0), 1e-12);
  }
}

TEST(TFactor, MatchesQuadrature)
{
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i)
  {
    PhysicsParams p{0.5 + 0.5 * u(rng), 0.05 + 2.0 * u(rng), 1.0, 0.1 + u(rng)};
    double const t0 = support_threshold_time(p);
    double const t  = t0 * (1 + 1e3 * u(rng));
    double const ref = quad_power(t0, t, p.gamma);
    EXPECT_NEAR(t_factor(t, p), ref, 1e-10 * (1 + std::abs(ref)));
  }
}

TEST(RSymbol, Examples)
{
  PhysicsParams p{1.0, 1.0, 1.0, 0.5};
  EXPECT_NEAR(r_symbol_phase(1.0, p), std::log(2.0), 1e-15);
  EXPECT_EQ(r_symbol_phase(0.5, p), 0.0);
  PhysicsParams z{0.75, 1.0, 0.0, 0.5};
  EXPECT_EQ(r_symbol_phase(3.0, z), 0.0);
  EXPECT_THROW(r_symbol_phase(0.4, p), domain_error);
}

TEST(RSymbol, MatchesQuadrature)
{
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i)
  {
    PhysicsParams p{0.5 + 0.5 * u(rng), 0.05 + 2.0 * u(rng), -2 + 4 * u(rng), 0.1 + u(rng)};
    double const xi  = p.epsilon * (1 + 5 * u(rng));
    double const ref = quad_phase(support_threshold_time(p), xi, p);
    EXPECT_NEAR(r_symbol_phase(xi, p), ref, 1e-10 * (1 + std::abs(ref)));
  }
}

TEST(Splice, PhaseEqualsRateTimesTPlusR)
{
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i)
  {
    PhysicsParams p{0.5 + 0.5 * u(rng), 0.05 + 2.95 * u(rng), -3 + 6 * u(rng), 0.05 + u(rng)};
    double const xi = p.epsilon * (1 + 10 * u(rng));
    double const t  = support_threshold_time(p) * (1 + 1e4 * u(rng) * u(rng));
    double const lhs = dollard_phase(t, xi, p).phase;
    double const rhs = modifier_rate(xi, p) * t_factor(t, p) + r_symbol_phase(xi, p);
    EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST(PowerIntegral, NearGammaOne)
{
  // expm1 keeps precision where (b^{1-g} - a^{1-g})/(1-g) cancels
  double const g = 1.0 - 1e-12;
  EXPECT_NEAR(power_integral(1.0, 100.0, g), std::log(100.0), 1e-10);
  double const b = 2.0 + 1e-9, h = b - 2.0; // h exact
  EXPECT_NEAR(power_integral(2.0, b, 0.5), 2.0 * h / (std::sqrt(b) + std::sqrt(2.0)), 1e-24);
}
