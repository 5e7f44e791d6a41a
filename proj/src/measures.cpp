#include "uqd/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "uqd/error.hpp"
#include "uqd/information.hpp"

namespace uqd {

namespace {

constexpr double kConsistencyFactor = 10.0;
constexpr double kConsistencyFloor = 1e-9;

double to_unit(double nats, Unit unit) {
    return unit == Unit::bits ? nats / std::numbers::ln2 : nats;
}

ExpectationResult converted(ExpectationResult r, std::size_t k, MeasureOptions options) {
    r.value = convert_nats(r.value, k, options);
    r.error_bound = convert_nats(r.error_bound, k, options);
    return r;
}

double binary_entropy_nats(double t) {
    const double p[2] = {t, 1.0 - t};
    return entropy_nats(p);
}

struct Range {
    double lo;
    double hi;
};

Range entropy_range(const PointMass& p) {
    const double h = entropy_nats(p.theta.probs());
    return {h, h};
}

Range entropy_range(const EmpiricalEnsemble& e) {
    Range r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& m : e.members) {
        const double h = entropy_nats(m.probs());
        r.lo = std::min(r.lo, h);
        r.hi = std::max(r.hi, h);
    }
    return r;
}

Range entropy_range(const IntervalUniform& u) {
    const double at_lo = binary_entropy_nats(u.lo);
    const double at_hi = binary_entropy_nats(u.hi);
    // Binary entropy is unimodal with its peak at 1/2.
    const double top = (u.lo <= 0.5 && 0.5 <= u.hi) ? std::numbers::ln2 : std::max(at_lo, at_hi);
    return {std::min(at_lo, at_hi), top};
}

Range entropy_range(const Dirichlet& d) {
    return {0.0, std::log(static_cast<double>(d.alpha.size()))};
}

Range entropy_range(const Mixture& m) {
    Range r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& c : m.components) {
        const Range part = std::visit([](const auto& leaf) { return entropy_range(leaf); }, c);
        r.lo = std::min(r.lo, part.lo);
        r.hi = std::max(r.hi, part.hi);
    }
    return r;
}

ExpectationResult expected_kl_nats(const SecondOrderDistribution& q, const Categorical& mean,
                                   const EngineConfig& config) {
    const Integrand kl([&mean](const Categorical& theta) { return kl_nats(theta.probs(), mean.probs()); });
    return expect(q, kl, config);
}

}  // namespace

double shannon_entropy(const Categorical& theta, Unit unit) {
    return to_unit(entropy_nats(theta.probs()), unit);
}

double kl_divergence(const Categorical& p, const Categorical& q, Unit unit) {
    if (p.size() != q.size()) {
        std::ostringstream os;
        os << "KL divergence between K=" << p.size() << " and K=" << q.size();
        throw ValidationError(ValidationKind::DimensionMismatch, os.str());
    }
    return to_unit(kl_nats(p.probs(), q.probs()), unit);
}

double total_uncertainty(const SecondOrderDistribution& q, MeasureOptions options) {
    return convert_nats(entropy_nats(predictive_mean(q).probs()), q.dimension(), options);
}

ExpectationResult aleatoric_uncertainty(const SecondOrderDistribution& q, MeasureOptions options,
                                        const EngineConfig& config) {
    return converted(expect(q, Integrand::shannon_entropy(), config), q.dimension(), options);
}

ExpectationResult epistemic_mutual_information(const SecondOrderDistribution& q, MeasureOptions options,
                                               EpistemicMethod method, const EngineConfig& config) {
    const Categorical mean = predictive_mean(q);
    if (method == EpistemicMethod::expected_kl) {
        return converted(expected_kl_nats(q, mean, config), q.dimension(), options);
    }
    auto r = expect(q, Integrand::shannon_entropy(), config);
    r.value = std::max(0.0, entropy_nats(mean.probs()) - r.value);
    return converted(r, q.dimension(), options);
}

UncertaintyTriple decompose(const SecondOrderDistribution& q, MeasureOptions options, const EngineConfig& config) {
    const std::size_t k = q.dimension();
    const Categorical mean = predictive_mean(q);
    const double total = entropy_nats(mean.probs());
    const auto aleatoric = expect(q, Integrand::shannon_entropy(), config);
    const double residual = total - aleatoric.value;

    if (config.verify_epistemic) {
        const auto direct = expected_kl_nats(q, mean, config);
        const double gap = std::abs(residual - direct.value);
        const double allowed =
            std::max(kConsistencyFactor * (aleatoric.error_bound + direct.error_bound), kConsistencyFloor);
        if (gap > allowed) {
            std::ostringstream os;
            os.precision(12);
            os << "epistemic residual " << residual << " nats disagrees with expected KL " << direct.value
               << " nats (gap " << gap << " > " << allowed << ")";
            throw ConsistencyFailure(os.str());
        }
    }

    UncertaintyTriple out;
    out.total = convert_nats(total, k, options);
    out.aleatoric = convert_nats(aleatoric.value, k, options);
    out.epistemic = convert_nats(std::max(0.0, residual), k, options);
    out.unit = options.unit;
    out.normalized = options.normalized;
    out.error_bound = convert_nats(aleatoric.error_bound, k, options);
    return out;
}

EntropyBounds aleatoric_bounds(const SecondOrderDistribution& q, MeasureOptions options) {
    const Range r = std::visit([](const auto& part) { return entropy_range(part); }, q.variant());
    return {convert_nats(r.lo, q.dimension(), options), convert_nats(r.hi, q.dimension(), options), options.unit,
            options.normalized};
}

}  // namespace uqd
