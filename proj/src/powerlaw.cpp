#include "netepi/powerlaw.hpp"
#include "netepi/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace netepi {

double hurwitz_zeta(double s, double q) {
    if (s <= 1.0) throw std::invalid_argument("hurwitz_zeta requires s > 1");
    // Direct sum over the first terms, Euler-Maclaurin for the remainder.
    const int N = 25;
    double sum = 0.0;
    for (int k = 0; k < N; ++k) sum += std::pow(q + k, -s);
    const double a = q + N;
    sum += std::pow(a, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(a, -s);
    sum += s * std::pow(a, -s - 1.0) / 12.0;
    sum -= s * (s + 1.0) * (s + 2.0) * std::pow(a, -s - 3.0) / 720.0;
    return sum;
}

double powerlaw_loglik(const std::vector<int>& tail, int xmin, double alpha) {
    double sum_log = 0.0;
    for (int x : tail) sum_log += std::log(static_cast<double>(x));
    return -static_cast<double>(tail.size()) * std::log(hurwitz_zeta(alpha, xmin)) - alpha * sum_log;
}

namespace {

std::vector<int> extract_tail(const DegreeSequence& seq, int xmin) {
    std::vector<int> tail;
    for (int v : seq) if (v >= xmin) tail.push_back(v);
    return tail;
}

// Golden-section maximisation of the tail log-likelihood (unimodal in alpha).
double mle_alpha(const std::vector<int>& tail, int xmin) {
    double mean_log = 0.0;
    for (int x : tail) mean_log += std::log(static_cast<double>(x));
    mean_log /= static_cast<double>(tail.size());
    auto f = [&](double a) {
        return -std::log(hurwitz_zeta(a, xmin)) - a * mean_log;
    };
    double lo = 1.0 + 1e-6, hi = 25.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = f(c), fd = f(d);
    while (hi - lo > 1e-9) {
        if (fc > fd) { hi = d; d = c; fd = fc; c = hi - gr * (hi - lo); fc = f(c); }
        else         { lo = c; c = d; fc = fd; d = lo + gr * (hi - lo); fd = f(d); }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double powerlaw_ks(const std::vector<int>& tail, int xmin, double alpha) {
    if (tail.empty()) return 0.0;
    std::vector<int> sorted = tail;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    const double z_min = hurwitz_zeta(alpha, xmin);
    double d = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        int x = sorted[i];
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == x) ++j;
        double f_emp_hi = static_cast<double>(j) / n;        // F(x)
        double f_emp_lo = static_cast<double>(i) / n;        // F(x-)
        double f_mod = 1.0 - hurwitz_zeta(alpha, x + 1) / z_min;
        d = std::max(d, std::max(std::abs(f_emp_hi - f_mod), std::abs(f_emp_lo - f_mod)));
        i = j;
    }
    return d;
}

PowerLawFit fit_power_law_tail(const DegreeSequence& seq, int xmin) {
    if (xmin < 1) throw DataError("fit_power_law_tail: xmin must be >= 1");
    std::vector<int> tail = extract_tail(seq, xmin);
    if (tail.size() < 2) {
        throw DataError("fit_power_law_tail: fewer than 2 observations >= xmin=" + std::to_string(xmin));
    }
    PowerLawFit fit;
    fit.xmin = xmin;
    fit.n_tail = tail.size();
    fit.alpha = mle_alpha(tail, xmin);
    fit.ks_statistic = powerlaw_ks(tail, xmin, fit.alpha);
    return fit;
}

int sample_powerlaw(Rng& rng, double alpha, int xmin) {
    // Inverse CDF: smallest x with survival S(x+1) <= 1-u, S(x) = zeta(a,x)/zeta(a,xmin).
    const double z_min = hurwitz_zeta(alpha, xmin);
    double u = rng.uniform();
    double target = 1.0 - u;  // in (0, 1]
    auto survival = [&](long x) { return hurwitz_zeta(alpha, static_cast<double>(x)) / z_min; };
    // Bracket by doubling.
    long lo = xmin, hi = xmin + 1;
    while (survival(hi) > target) {
        lo = hi;
        hi *= 2;
        if (hi > (1L << 40)) break;
    }
    // Smallest x in (lo, hi] with survival(x+1) <= target is found by bisection
    // over candidate values; invariant: survival(lo) > target >= survival(hi).
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (survival(mid) > target) lo = mid; else hi = mid;
    }
    // survival(hi) <= target < survival(lo): the sampled value is lo.
    return static_cast<int>(lo);
}

double power_law_gof(const DegreeSequence& seq, const PowerLawFit& fit,
                     int replicates, std::uint64_t seed, int threads) {
    if (replicates < 100) throw DataError("power_law_gof: need at least 100 replicates");
    std::vector<int> body, tail;
    for (int v : seq) (v >= fit.xmin ? tail : body).push_back(v);
    const std::size_t n = seq.size();
    const double p_tail = static_cast<double>(tail.size()) / static_cast<double>(n);
    std::vector<char> exceeds(replicates, 0);

    auto worker = [&](int first, int step) {
        for (int rep = first; rep < replicates; rep += step) {
            Rng rng(mix_seed(seed, "gof-replicate", static_cast<std::uint64_t>(rep)));
            DegreeSequence synth;
            synth.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (body.empty() || rng.bernoulli(p_tail)) {
                    synth.push_back(sample_powerlaw(rng, fit.alpha, fit.xmin));
                } else {
                    synth.push_back(body[rng.uniform_index(body.size())]);
                }
            }
            PowerLawFit refit = fit_power_law_tail(synth, fit.xmin);
            exceeds[rep] = refit.ks_statistic >= fit.ks_statistic ? 1 : 0;
        }
    };
    if (threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
        for (auto& th : pool) th.join();
    }
    int count = 0;
    for (char c : exceeds) count += c;
    return static_cast<double>(count) / static_cast<double>(replicates);
}

} // namespace netepi
