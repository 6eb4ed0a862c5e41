#pragma once

#include <span>
#include <vector>

namespace sedcore {

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

/// Survival function of the F(df1, df2) distribution (the ANOVA p-value).
double f_distribution_sf(double f, double df1, double df2);

double normal_pdf(double z);
double normal_cdf(double z);

/// CDF of the range of k iid standard normals.
double normal_range_cdf(double w, int k);

/// Studentized range distribution Q(k, df): CDF and survival. df is the
/// error degrees of freedom of the pooled variance estimate.
double studentized_range_cdf(double q, int k, double df);
double studentized_range_sf(double q, int k, double df);

/// Survival values for many quantiles at one (k, df), sharing one tabulated
/// range CDF; this is what an all-pairs comparison wants (k(k-1)/2 calls).
std::vector<double> studentized_range_sf_batch(std::span<const double> q_values, int k,
                                               double df);

}  // namespace sedcore
