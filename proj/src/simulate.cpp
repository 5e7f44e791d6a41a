#include "uqd/simulate.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "uqd/error.hpp"
#include "uqd/random.hpp"

namespace uqd {

BayesState::BayesState(std::vector<double> counts) : counts_(std::move(counts)) {
    if (counts_.size() < 2) {
        throw ValidationError(ValidationKind::InvalidParameter, "Bayes state needs K >= 2 counts");
    }
    for (std::size_t k = 0; k < counts_.size(); ++k) {
        if (!std::isfinite(counts_[k]) || counts_[k] <= 0.0) {
            std::ostringstream os;
            os << "count " << k << " = " << counts_[k] << " must be finite and > 0";
            throw ValidationError(ValidationKind::InvalidParameter, os.str());
        }
    }
}

BayesState BayesState::uniform_prior(std::size_t k) {
    return BayesState(std::vector<double>(k, 1.0));
}

double BayesState::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0.0);
}

SecondOrderDistribution BayesState::posterior() const {
    return SecondOrderDistribution::dirichlet(counts_);
}

BayesState bayes_update(const BayesState& state, std::size_t outcome) {
    if (outcome >= state.dimension()) {
        throw IndexOutOfRange("outcome " + std::to_string(outcome) + " outside 0.." +
                              std::to_string(state.dimension() - 1));
    }
    std::vector<double> counts(state.counts().begin(), state.counts().end());
    counts[outcome] += 1.0;
    return BayesState(std::move(counts));
}

namespace {

void check_schedule(std::span<const std::size_t> schedule) {
    if (schedule.empty() || schedule.front() != 0) {
        throw ValidationError(ValidationKind::InvalidParameter, "schedule must start at n = 0");
    }
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        if (schedule[i] <= schedule[i - 1]) {
            std::ostringstream os;
            os << "schedule must be strictly increasing (" << schedule[i - 1] << " then " << schedule[i] << ")";
            throw ValidationError(ValidationKind::InvalidParameter, os.str());
        }
    }
}

std::size_t draw_outcome(std::span<const double> probs, Rng& rng) {
    const double u = rng.uniform01();
    double cumulative = 0.0;
    for (std::size_t k = 0; k + 1 < probs.size(); ++k) {
        cumulative += probs[k];
        if (u < cumulative) return k;
    }
    return probs.size() - 1;
}

}  // namespace

std::vector<CurvePoint> learning_curve(const Categorical& theta_star, const BayesState& prior,
                                       const CurveConfig& config) {
    check_schedule(config.schedule);
    if (config.replications == 0) {
        throw ValidationError(ValidationKind::InvalidParameter, "replications must be >= 1");
    }
    if (theta_star.size() != prior.dimension()) {
        std::ostringstream os;
        os << "ground truth has K=" << theta_star.size() << ", prior has K=" << prior.dimension();
        throw ValidationError(ValidationKind::DimensionMismatch, os.str());
    }

    std::vector<CurvePoint> curve(config.schedule.size());
    for (std::size_t i = 0; i < curve.size(); ++i) {
        curve[i].n = config.schedule[i];
        curve[i].triple.unit = config.options.unit;
        curve[i].triple.normalized = config.options.normalized;
        curve[i].replications = config.replications;
    }

    for (std::size_t r = 0; r < config.replications; ++r) {
        Rng rng(derive_seed(config.seed, r));
        std::vector<double> counts(prior.counts().begin(), prior.counts().end());
        std::size_t seen = 0;
        for (auto& point : curve) {
            for (; seen < point.n; ++seen) counts[draw_outcome(theta_star.probs(), rng)] += 1.0;
            const auto t = decompose(SecondOrderDistribution::dirichlet(counts), config.options, config.engine);
            point.triple.total += t.total;
            point.triple.aleatoric += t.aleatoric;
            point.triple.epistemic += t.epistemic;
            point.triple.error_bound += t.error_bound;
        }
    }

    const double scale = 1.0 / static_cast<double>(config.replications);
    for (auto& point : curve) {
        point.triple.total *= scale;
        point.triple.aleatoric *= scale;
        point.triple.epistemic *= scale;
        point.triple.error_bound *= scale;
    }
    return curve;
}

}  // namespace uqd
