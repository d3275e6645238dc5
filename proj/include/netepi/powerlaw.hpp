#pragma once
// Discrete power-law tail fitting (Clauset-style): zeta-normalised MLE,
// KS distance, and a semi-parametric KS bootstrap goodness-of-fit.

#include "netepi/degree_data.hpp"
#include "netepi/rng.hpp"

#include <vector>

namespace netepi {

struct PowerLawFit {
    double alpha = 0.0;
    int xmin = 1;
    std::size_t n_tail = 0;
    double ks_statistic = 0.0;
};

// Hurwitz zeta(s, q) for s > 1, q >= 1: direct sum plus Euler-Maclaurin tail.
double hurwitz_zeta(double s, double q);

// Tail log-likelihood of alpha for observations >= xmin.
double powerlaw_loglik(const std::vector<int>& tail, int xmin, double alpha);

// MLE over alpha in (1, alpha_max]; tail = entries of seq >= xmin.
PowerLawFit fit_power_law_tail(const DegreeSequence& seq, int xmin);

// Max absolute gap between the empirical tail CDF and the fitted model CDF.
double powerlaw_ks(const std::vector<int>& tail, int xmin, double alpha);

// Inverse-CDF sampler for the discrete power law on {xmin, xmin+1, ...}.
int sample_powerlaw(Rng& rng, double alpha, int xmin);

// Semi-parametric bootstrap p-value: fraction of synthetic datasets (same n,
// body resampled, tail sampled from the fitted model, then refitted) whose KS
// statistic exceeds the observed one. Replicate streams are index-derived so
// the result is independent of evaluation order.
double power_law_gof(const DegreeSequence& seq, const PowerLawFit& fit,
                     int replicates, std::uint64_t seed, int threads = 1);

} // namespace netepi
