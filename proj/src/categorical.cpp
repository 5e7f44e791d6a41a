#include "uqd/categorical.hpp"

#include <cmath>
#include <sstream>

#include "uqd/error.hpp"

namespace uqd {

Categorical::Categorical(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.size() < 2) {
        throw ValidationError(ValidationKind::InvalidParameter,
                              "categorical distribution needs K >= 2 outcomes, got " +
                                  std::to_string(probs_.size()));
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < probs_.size(); ++k) {
        const double p = probs_[k];
        if (!std::isfinite(p)) {
            throw ValidationError(ValidationKind::InvalidParameter,
                                  "probability at index " + std::to_string(k) + " is not finite");
        }
        if (p < 0.0) {
            std::ostringstream os;
            os << "probability at index " << k << " is negative (" << p << ")";
            throw ValidationError(ValidationKind::NegativeProbability, os.str());
        }
        sum += p;
    }
    const double gap = std::abs(sum - 1.0);
    if (gap > kRenormalizeTolerance) {
        std::ostringstream os;
        os.precision(12);
        os << "probabilities sum to " << sum << ", expected 1";
        throw ValidationError(ValidationKind::SumNotOne, os.str());
    }
    if (gap > kSimplexTolerance) {
        for (double& p : probs_) p /= sum;
    }
}

void normalize_weights(std::vector<double>& weights, std::string_view what) {
    const std::string name(what);
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double w = weights[i];
        if (!std::isfinite(w)) {
            throw ValidationError(ValidationKind::InvalidParameter, name + " " + std::to_string(i) + " is not finite");
        }
        if (w < 0.0) {
            throw ValidationError(ValidationKind::NegativeProbability, name + " " + std::to_string(i) + " is negative");
        }
        if (w == 0.0) {
            throw ValidationError(ValidationKind::InvalidParameter,
                                  name + " " + std::to_string(i) + " must be positive");
        }
        sum += w;
    }
    const double gap = std::abs(sum - 1.0);
    if (gap > kRenormalizeTolerance) {
        std::ostringstream os;
        os.precision(12);
        os << name << "s sum to " << sum << ", expected 1";
        throw ValidationError(ValidationKind::SumNotOne, os.str());
    }
    if (gap > kSimplexTolerance) {
        for (double& w : weights) w /= sum;
    }
}

Categorical Categorical::uniform(std::size_t k) {
    return Categorical(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

}  // namespace uqd
