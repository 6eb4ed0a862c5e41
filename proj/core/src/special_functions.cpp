#include "sedcore/special_functions.hpp"

#include <cmath>

#include "sedcore/errors.hpp"

namespace sedcore {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Modified Lentz continued fraction for the incomplete beta.
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIter = 400;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

// 16-point Gauss-Legendre abscissas/weights on [-1, 1] (positive half).
constexpr double kGl16X[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                              0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                              0.9445750230732326, 0.9894009349916499};
constexpr double kGl16W[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                              0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                              0.0622535239386479, 0.0271524594117541};

// Fixed-cost composite Gauss-Legendre over `panels` equal panels. Used for
// the studentized range, where nested adaptive refinement is both slow and
// fragile; the integrands here are smooth at panel scale.
template <typename F>
double gauss_composite(F&& f, double a, double b, int panels) {
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    const double half = 0.5 * width;
    double sum = 0.0;
    for (int i = 0; i < 8; ++i)
      sum += kGl16W[i] * (f(mid - half * kGl16X[i]) + f(mid + half * kGl16X[i]));
    total += sum * half;
  }
  return total;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  require(a > 0.0 && b > 0.0, "incomplete beta needs a, b > 0");
  require(x >= 0.0 && x <= 1.0, "incomplete beta needs x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double f_distribution_sf(double f, double df1, double df2) {
  require(df1 > 0.0 && df2 > 0.0, "F distribution needs positive degrees of freedom");
  if (!(f > 0.0)) return 1.0;
  if (std::isinf(f)) return 0.0;
  const double x = df2 / (df2 + df1 * f);
  return regularized_incomplete_beta(0.5 * df2, 0.5 * df1, x);
}

double normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi); }

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_range_cdf(double w, int k) {
  require(k >= 2, "range distribution needs k >= 2");
  if (!(w > 0.0)) return 0.0;
  // The integrand is bounded by phi(z), so the tails beyond |z| = 8.5
  // contribute < 1e-16 regardless of w.
  const auto integrand = [w, k](double z) {
    return normal_pdf(z) * std::pow(normal_cdf(z) - normal_cdf(z - w), k - 1);
  };
  return std::min(1.0, k * gauss_composite(integrand, -8.5, 8.5, 24));
}

namespace {

// Studentized range CDF with a caller-supplied evaluation of the plain
// normal range CDF (exact or tabulated).
template <typename RangeCdf>
double studentized_range_cdf_impl(RangeCdf&& range_cdf, double q, double df) {
  if (!(q > 0.0)) return 0.0;

  // Integrate the range CDF against the density of u = s/sigma, where
  // s^2 ~ sigma^2 chi^2_df / df.
  const double half_df = 0.5 * df;
  const double log_norm = std::log(2.0) + half_df * (std::log(df) - std::log(2.0)) -
                          std::lgamma(half_df);
  const auto scale_pdf = [&](double u) {
    if (u <= 0.0) return 0.0;
    return std::exp(log_norm + (df - 1.0) * std::log(u) - 0.5 * df * u * u);
  };
  const auto integrand = [&](double u) { return scale_pdf(u) * range_cdf(q * u); };

  // The scale density concentrates around u = 1 with spread ~ 1/sqrt(2 df).
  // Integrate the two halves split at the peak with composite panels sized
  // well below a spread each, so the spike can never fall between nodes.
  const double half_width = 12.0 / std::sqrt(df);
  const double lo = std::max(0.0, 1.0 - half_width);
  const double hi = std::min(8.0, 1.0 + half_width);
  return std::min(1.0, gauss_composite(integrand, lo, 1.0, 24) +
                           gauss_composite(integrand, 1.0, hi, 24));
}

}  // namespace

double studentized_range_cdf(double q, int k, double df) {
  require(k >= 2, "studentized range needs k >= 2");
  require(df > 0.0, "studentized range needs df > 0");
  if (df > 1e5) return normal_range_cdf(q, k);
  return studentized_range_cdf_impl([k](double w) { return normal_range_cdf(w, k); }, q, df);
}

double studentized_range_sf(double q, int k, double df) {
  return 1.0 - studentized_range_cdf(q, k, df);
}

std::vector<double> studentized_range_sf_batch(std::span<const double> q_values, int k,
                                               double df) {
  require(k >= 2, "studentized range needs k >= 2");
  require(df > 0.0, "studentized range needs df > 0");

  // Tabulate the range CDF once on a uniform grid and evaluate it by cubic
  // (Catmull-Rom) interpolation; beyond the grid the CDF is 1 to machine
  // precision for any practical k.
  constexpr int kTableSize = 1024;
  constexpr double kTableMax = 30.0;
  const double step = kTableMax / (kTableSize - 1);
  std::vector<double> table(kTableSize);
  for (int i = 0; i < kTableSize; ++i)
    table[i] = normal_range_cdf(static_cast<double>(i) * step, k);

  const auto tabulated = [&](double w) {
    if (w <= 0.0) return 0.0;
    const double x = w / step;
    if (x >= kTableSize - 2) return table[kTableSize - 1];
    const int i = static_cast<int>(x);
    const double t = x - i;
    const double y0 = table[i > 0 ? i - 1 : 0];
    const double y1 = table[i];
    const double y2 = table[i + 1];
    const double y3 = table[i + 2];
    return y1 + 0.5 * t * (y2 - y0 +
                           t * (2.0 * y0 - 5.0 * y1 + 4.0 * y2 - y3 +
                                t * (3.0 * (y1 - y2) + y3 - y0)));
  };

  std::vector<double> out;
  out.reserve(q_values.size());
  for (double q : q_values) {
    const double cdf = df > 1e5 ? tabulated(q) : studentized_range_cdf_impl(tabulated, q, df);
    out.push_back(1.0 - cdf);
  }
  return out;
}

}  // namespace sedcore
