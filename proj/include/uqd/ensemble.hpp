#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <vector>

#include "uqd/categorical.hpp"
#include "uqd/distribution.hpp"
#include "uqd/measures.hpp"

namespace uqd {

/// Predictions theta^(1..M) of M ensemble members for one query, with
/// optional member weights (uniform 1/M when omitted).
class EnsemblePrediction {
  public:
    /// Throws ValidationError: EmptyEnsemble, DimensionMismatch, or a weight
    /// violation (non-positive, SumNotOne).
    explicit EnsemblePrediction(std::vector<Categorical> members, std::vector<double> weights = {});

    std::size_t size() const noexcept { return members_.size(); }
    std::size_t dimension() const noexcept { return members_.front().size(); }
    const std::vector<Categorical>& members() const noexcept { return members_; }
    std::span<const double> weights() const noexcept { return weights_; }
    bool uniform_weights() const noexcept { return uniform_; }

    /// The level-2 distribution these members represent: an empirical
    /// ensemble for uniform weights, otherwise a mixture of point masses.
    SecondOrderDistribution as_distribution() const;

  private:
    std::vector<Categorical> members_;
    std::vector<double> weights_;
    bool uniform_ = true;
};

/// total = H(sum_i w_i theta_i), aleatoric = sum_i w_i H(theta_i),
/// epistemic = weighted Jensen-Shannon divergence. Every term is a finite
/// sum, so error_bound is 0.
UncertaintyTriple ensemble_decompose(const EnsemblePrediction& e, MeasureOptions options = {});

/// sum_i w_i KL(theta_i || sum_j w_j theta_j). Finite: the mean puts mass
/// wherever any member does.
double js_divergence(const EnsemblePrediction& e, Unit unit = Unit::bits);

/// Reads one member per line, whitespace-separated probabilities. Blank
/// lines and text after '#' are ignored. Throws ParseError carrying the
/// 1-based line number of the offending row.
EnsemblePrediction parse_member_matrix(std::istream& in);

}  // namespace uqd
