#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

#include "uqd/categorical.hpp"
#include "uqd/distribution.hpp"
#include "uqd/units.hpp"

namespace uqd {

enum class Method { exact, closed_form, quadrature, monte_carlo };

std::string_view to_string(Method method);

/// An expectation together with how it was obtained. error_bound is an
/// absolute bound: zero for exact and closed-form results, the embedded
/// Simpson estimate for quadrature, three standard errors for Monte Carlo.
struct ExpectationResult {
    double value = 0.0;
    double error_bound = 0.0;
    Method method = Method::exact;
    std::size_t evaluations = 0;
};

struct EngineConfig {
    double tolerance = 1e-10;          // absolute, on the expectation
    std::size_t max_evals = 2'000'000;  // integrand calls per quadrature
    std::size_t mc_samples = 100'000;
    std::uint64_t seed = 42;
    /// Run the direct expected-KL route next to the residual epistemic term
    /// and throw ConsistencyFailure on disagreement.
    bool verify_epistemic = true;
};

/// Function of a level-1 distribution. Integrands built by
/// shannon_entropy() are recognised by the engine so Dirichlet expectations
/// can use the closed form instead of sampling.
class Integrand {
  public:
    using Fn = std::function<double(const Categorical&)>;

    explicit Integrand(Fn fn) : fn_(std::move(fn)) {}

    /// -sum theta_k ln theta_k, in nats.
    static Integrand shannon_entropy();

    double operator()(const Categorical& theta) const { return fn_(theta); }
    bool is_shannon_entropy() const noexcept { return entropy_; }

  private:
    Fn fn_;
    bool entropy_ = false;
};

/// E_{theta ~ Q}[f(theta)].
///
/// Dispatch: point masses and ensembles are exact weighted sums; Dirichlet
/// with the entropy integrand uses the digamma closed form; interval
/// uniforms use adaptive Simpson quadrature; anything else falls back to
/// Monte Carlo. Mixtures are split over their components and the error
/// bounds add up with the mixture weights.
///
/// Throws IntegrationFailure when quadrature cannot reach config.tolerance.
ExpectationResult expect(const SecondOrderDistribution& q, const Integrand& f, const EngineConfig& config = {});

/// E[H(theta)] for theta ~ Dirichlet(alpha):
/// psi(a0 + 1) - sum_k (a_k / a0) psi(a_k + 1), converted to `unit`.
double dirichlet_expected_entropy(std::span<const double> alpha, Unit unit = Unit::bits);

/// Adaptive Simpson integral of f over [a, b] with absolute tolerance.
/// Returns value, summed panel error estimates and the number of calls.
ExpectationResult quadrature_1d(const std::function<double(double)>& f, double a, double b, double tolerance,
                                std::size_t max_evals = 2'000'000);

/// Plain Monte Carlo mean of f over n draws with error_bound = 3 * stderr.
ExpectationResult mc_expect(const SecondOrderDistribution& q, const Integrand& f, std::size_t n,
                            std::uint64_t seed);

}  // namespace uqd
