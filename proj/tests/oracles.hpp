#pragma once

// Independent reference computations for the test suites. Nothing here
// calls into the library: entropies are evaluated directly in long double,
// integrals by fixed-panel composite Simpson, Dirichlet expectations by
// sampling with the standard library's gamma distribution.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

inline long double entropy_bits(const std::vector<long double>& p) {
    long double h = 0.0L;
    for (const long double pk : p) {
        if (pk > 0.0L) h -= pk * std::log2(pk);
    }
    return h;
}

inline long double binary_entropy_bits(long double t) {
    return entropy_bits({t, 1.0L - t});
}

inline long double kl_bits(const std::vector<long double>& p, const std::vector<long double>& q) {
    long double d = 0.0L;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] > 0.0L) d += p[k] * std::log2(p[k] / q[k]);
    }
    return d;
}

/// Composite Simpson with a fixed, even number of panels.
template <class F>
long double simpson(F&& f, long double a, long double b, std::size_t panels) {
    if (panels % 2 != 0) ++panels;
    const long double h = (b - a) / static_cast<long double>(panels);
    long double sum = f(a) + f(b);
    for (std::size_t i = 1; i < panels; ++i) {
        sum += (i % 2 == 1 ? 4.0L : 2.0L) * f(a + h * static_cast<long double>(i));
    }
    return sum * h / 3.0L;
}

struct McEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
};

/// E[f(theta)] for theta ~ Dirichlet(alpha) using std::gamma_distribution.
template <class F>
McEstimate dirichlet_mc(const std::vector<double>& alpha, F&& f, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::vector<std::gamma_distribution<double>> gammas;
    for (const double a : alpha) gammas.emplace_back(a, 1.0);
    double sum = 0.0;
    double sum_sq = 0.0;
    std::vector<double> theta(alpha.size());
    for (std::size_t i = 0; i < n; ++i) {
        double total = 0.0;
        for (std::size_t k = 0; k < alpha.size(); ++k) {
            theta[k] = gammas[k](engine);
            total += theta[k];
        }
        if (total <= 0.0) {
            --i;
            continue;
        }
        for (double& t : theta) t /= total;
        const double v = f(theta);
        sum += v;
        sum_sq += v * v;
    }
    const double mean = sum / static_cast<double>(n);
    const double var = (sum_sq - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1);
    return {mean, std::sqrt(std::max(var, 0.0) / static_cast<double>(n))};
}

inline double entropy_bits_d(const std::vector<double>& p) {
    double h = 0.0;
    for (const double pk : p) {
        if (pk > 0.0) h -= pk * std::log2(pk);
    }
    return h;
}

}  // namespace oracle
