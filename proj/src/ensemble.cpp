#include "uqd/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "uqd/error.hpp"
#include "uqd/information.hpp"

namespace uqd {

EnsemblePrediction::EnsemblePrediction(std::vector<Categorical> members, std::vector<double> weights)
    : members_(std::move(members)), weights_(std::move(weights)) {
    if (members_.empty()) {
        throw ValidationError(ValidationKind::EmptyEnsemble, "ensemble needs at least one member");
    }
    const std::size_t k = members_.front().size();
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].size() != k) {
            std::ostringstream os;
            os << "member " << i << " has K=" << members_[i].size() << ", expected K=" << k;
            throw ValidationError(ValidationKind::DimensionMismatch, os.str());
        }
    }
    if (weights_.empty()) {
        weights_.assign(members_.size(), 1.0 / static_cast<double>(members_.size()));
        return;
    }
    if (weights_.size() != members_.size()) {
        std::ostringstream os;
        os << weights_.size() << " weights for " << members_.size() << " members";
        throw ValidationError(ValidationKind::DimensionMismatch, os.str());
    }
    normalize_weights(weights_, "member weight");
    uniform_ = std::all_of(weights_.begin(), weights_.end(),
                           [&](double w) { return w == weights_.front(); });
}

SecondOrderDistribution EnsemblePrediction::as_distribution() const {
    if (uniform_) return SecondOrderDistribution::ensemble(members_);
    std::vector<SecondOrderDistribution> points;
    points.reserve(members_.size());
    for (const auto& m : members_) points.push_back(SecondOrderDistribution::point(m));
    return SecondOrderDistribution::mixture(weights_, std::move(points));
}

namespace {

std::vector<double> weighted_mean(const EnsemblePrediction& e) {
    std::vector<double> mean(e.dimension(), 0.0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t k = 0; k < mean.size(); ++k) mean[k] += e.weights()[i] * e.members()[i][k];
    }
    return mean;
}

double js_nats(const EnsemblePrediction& e, std::span<const double> mean) {
    double js = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) js += e.weights()[i] * kl_nats(e.members()[i].probs(), mean);
    return js;
}

}  // namespace

UncertaintyTriple ensemble_decompose(const EnsemblePrediction& e, MeasureOptions options) {
    const std::vector<double> mean = weighted_mean(e);
    double aleatoric = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const double h = entropy_nats(e.members()[i].probs());
        aleatoric += e.weights()[i] * h;
        lo = std::min(lo, h);
        hi = std::max(hi, h);
    }
    aleatoric = std::clamp(aleatoric, lo, hi);

    const std::size_t k = e.dimension();
    UncertaintyTriple out;
    out.total = convert_nats(entropy_nats(mean), k, options);
    out.aleatoric = convert_nats(aleatoric, k, options);
    out.epistemic = convert_nats(js_nats(e, mean), k, options);
    out.unit = options.unit;
    out.normalized = options.normalized;
    out.error_bound = 0.0;
    return out;
}

double js_divergence(const EnsemblePrediction& e, Unit unit) {
    const double nats = js_nats(e, weighted_mean(e));
    return unit == Unit::bits ? nats / std::numbers::ln2 : nats;
}

EnsemblePrediction parse_member_matrix(std::istream& in) {
    std::vector<Categorical> members;
    std::string line;
    std::size_t line_no = 0;
    std::size_t first_row_line = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::vector<double> probs;
        std::string token;
        while (row >> token) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size()) throw ParseError("not a number: '" + token + "'", line_no);
            probs.push_back(v);
        }
        if (probs.empty()) continue;
        if (!members.empty() && probs.size() != members.front().size()) {
            std::ostringstream os;
            os << "row has " << probs.size() << " entries, line " << first_row_line << " has "
               << members.front().size();
            throw ParseError(os.str(), line_no);
        }
        try {
            members.emplace_back(std::move(probs));
        } catch (const ValidationError& err) {
            throw ParseError(err.what(), line_no);
        }
        if (members.size() == 1) first_row_line = line_no;
    }
    if (members.empty()) throw ParseError("no ensemble members found");
    return EnsemblePrediction(std::move(members));
}

}  // namespace uqd
