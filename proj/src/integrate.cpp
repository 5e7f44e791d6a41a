#include "uqd/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "uqd/error.hpp"
#include "uqd/information.hpp"
#include "uqd/special.hpp"

namespace uqd {

std::string_view to_string(Method method) {
    switch (method) {
        case Method::exact: return "exact";
        case Method::closed_form: return "closed_form";
        case Method::quadrature: return "quadrature";
        case Method::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

Integrand Integrand::shannon_entropy() {
    Integrand f([](const Categorical& theta) { return entropy_nats(theta.probs()); });
    f.entropy_ = true;
    return f;
}

namespace {

constexpr int kMaxDepth = 60;
constexpr int kMinDepth = 3;

/// Weighted mean clamped to the range of its inputs. The clamp only removes
/// rounding: a convex combination can never leave [min, max].
double convex_combination(std::span<const double> weights, std::span<const double> values) {
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) acc += weights[i] * values[i];
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return std::clamp(acc, *lo, *hi);
}

class AdaptiveSimpson {
  public:
    AdaptiveSimpson(const std::function<double(double)>& f, std::size_t max_evals)
        : f_(f), max_evals_(max_evals) {}

    double eval(double x) {
        if (++evaluations_ > max_evals_) {
            std::ostringstream os;
            os << "quadrature exceeded " << max_evals_ << " integrand evaluations";
            throw IntegrationFailure(os.str());
        }
        return f_(x);
    }

    void integrate(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        const bool converged = depth >= kMinDepth && std::abs(delta) <= 15.0 * tol;
        if (converged || depth >= kMaxDepth) {
            value_ += left + right + delta / 15.0;
            error_ += std::abs(delta) / 15.0;
            return;
        }
        integrate(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
        integrate(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }

    double value() const { return value_; }
    double error() const { return error_; }
    std::size_t evaluations() const { return evaluations_; }

  private:
    const std::function<double(double)>& f_;
    std::size_t max_evals_;
    std::size_t evaluations_ = 0;
    double value_ = 0.0;
    double error_ = 0.0;
};

template <class Draw>
ExpectationResult monte_carlo(Draw&& draw_one, const Integrand& f, std::size_t n, std::uint64_t seed) {
    if (n < 2) {
        throw ValidationError(ValidationKind::InvalidParameter, "Monte Carlo needs at least 2 samples");
    }
    Rng rng(seed);
    // Welford: a constant integrand yields exactly that constant and zero spread.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double x = f(draw_one(rng));
        const double d = x - mean;
        mean += d / static_cast<double>(i);
        m2 += d * (x - mean);
    }
    const double variance = m2 / static_cast<double>(n - 1);
    const double stderr_ = std::sqrt(variance / static_cast<double>(n));
    return {mean, 3.0 * stderr_, Method::monte_carlo, n};
}

ExpectationResult expect_interval(const IntervalUniform& u, const Integrand& f, const EngineConfig& config) {
    const double width = u.hi - u.lo;
    if (width == 0.0) {
        return {f(Categorical({u.lo, 1.0 - u.lo})), 0.0, Method::exact, 1};
    }
    const std::function<double(double)> g = [&](double t) { return f(Categorical({t, 1.0 - t})); };
    auto r = quadrature_1d(g, u.lo, u.hi, config.tolerance * width, config.max_evals);
    r.value /= width;
    r.error_bound /= width;
    return r;
}

ExpectationResult expect_leaf(const PointMass& p, const Integrand& f, const EngineConfig&, std::uint64_t) {
    return {f(p.theta), 0.0, Method::exact, 1};
}

ExpectationResult expect_leaf(const EmpiricalEnsemble& e, const Integrand& f, const EngineConfig&,
                              std::uint64_t) {
    std::vector<double> values;
    values.reserve(e.members.size());
    for (const auto& m : e.members) values.push_back(f(m));
    const std::vector<double> weights(values.size(), 1.0 / static_cast<double>(values.size()));
    return {convex_combination(weights, values), 0.0, Method::exact, values.size()};
}

ExpectationResult expect_leaf(const Dirichlet& d, const Integrand& f, const EngineConfig& config,
                              std::uint64_t seed) {
    if (f.is_shannon_entropy()) {
        return {dirichlet_expected_entropy(d.alpha, Unit::nats), 0.0, Method::closed_form, 0};
    }
    const MixtureComponent component{d};
    return monte_carlo([&](Rng& rng) { return draw(component, rng); }, f, config.mc_samples, seed);
}

ExpectationResult expect_leaf(const IntervalUniform& u, const Integrand& f, const EngineConfig& config,
                              std::uint64_t) {
    return expect_interval(u, f, config);
}

ExpectationResult expect_mixture(const Mixture& mixture, const Integrand& f, const EngineConfig& config) {
    std::vector<double> values;
    values.reserve(mixture.weights.size());
    ExpectationResult out{0.0, 0.0, Method::exact, 0};
    for (std::size_t i = 0; i < mixture.components.size(); ++i) {
        const auto r = std::visit(
            [&](const auto& leaf) { return expect_leaf(leaf, f, config, derive_seed(config.seed, i)); },
            mixture.components[i]);
        values.push_back(r.value);
        out.error_bound += mixture.weights[i] * r.error_bound;
        out.method = std::max(out.method, r.method);
        out.evaluations += r.evaluations;
    }
    out.value = convex_combination(mixture.weights, values);
    return out;
}

}  // namespace

ExpectationResult expect(const SecondOrderDistribution& q, const Integrand& f, const EngineConfig& config) {
    if (!(config.tolerance > 0.0)) {
        throw ValidationError(ValidationKind::InvalidParameter, "tolerance must be > 0");
    }
    return std::visit(
        [&](const auto& part) {
            if constexpr (std::is_same_v<std::decay_t<decltype(part)>, Mixture>) {
                return expect_mixture(part, f, config);
            } else {
                return expect_leaf(part, f, config, config.seed);
            }
        },
        q.variant());
}

double dirichlet_expected_entropy(std::span<const double> alpha, Unit unit) {
    double a0 = 0.0;
    for (const double a : alpha) a0 += a;
    double nats = digamma(a0 + 1.0);
    for (const double a : alpha) nats -= (a / a0) * digamma(a + 1.0);
    nats = std::clamp(nats, 0.0, std::log(static_cast<double>(alpha.size())));
    return unit == Unit::bits ? nats / std::numbers::ln2 : nats;
}

ExpectationResult quadrature_1d(const std::function<double(double)>& f, double a, double b, double tolerance,
                                std::size_t max_evals) {
    if (!(a <= b)) {
        throw ValidationError(ValidationKind::InvalidParameter, "quadrature requires a <= b");
    }
    if (!(tolerance > 0.0)) {
        throw ValidationError(ValidationKind::InvalidParameter, "tolerance must be > 0");
    }
    if (a == b) return {0.0, 0.0, Method::exact, 0};

    AdaptiveSimpson simpson(f, max_evals);
    const double fa = simpson.eval(a);
    const double fm = simpson.eval(0.5 * (a + b));
    const double fb = simpson.eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson.integrate(a, b, fa, fm, fb, whole, tolerance, 0);
    if (!std::isfinite(simpson.value())) {
        throw IntegrationFailure("integrand produced a non-finite value");
    }
    if (simpson.error() > tolerance) {
        std::ostringstream os;
        os << "quadrature error estimate " << simpson.error() << " exceeds tolerance " << tolerance;
        throw IntegrationFailure(os.str());
    }
    return {simpson.value(), simpson.error(), Method::quadrature, simpson.evaluations()};
}

ExpectationResult mc_expect(const SecondOrderDistribution& q, const Integrand& f, std::size_t n,
                            std::uint64_t seed) {
    return monte_carlo([&](Rng& rng) { return draw(q, rng); }, f, n, seed);
}

}  // namespace uqd
