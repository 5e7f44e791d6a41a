#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace uqd {

/// Absolute slack on the sum of a probability vector that is silently
/// renormalized away. Anything further from 1 is rejected.
inline constexpr double kRenormalizeTolerance = 1e-9;

/// Sum tolerance guaranteed after construction.
inline constexpr double kSimplexTolerance = 1e-12;

/// A categorical (level-1) distribution over K >= 2 outcomes, i.e. a point
/// on the probability simplex. Immutable once constructed.
class Categorical {
  public:
    /// Throws ValidationError (NegativeProbability, SumNotOne,
    /// InvalidParameter) when `probs` is not on the simplex.
    explicit Categorical(std::vector<double> probs);

    static Categorical uniform(std::size_t k);

    std::size_t size() const noexcept { return probs_.size(); }
    std::span<const double> probs() const noexcept { return probs_; }
    double operator[](std::size_t k) const { return probs_[k]; }

    friend bool operator==(const Categorical&, const Categorical&) = default;

  private:
    std::vector<double> probs_;
};

/// Checks that `weights` are strictly positive and sum to one, renormalizing
/// in place within kRenormalizeTolerance. `what` names the weights in errors.
void normalize_weights(std::vector<double>& weights, std::string_view what);

}  // namespace uqd
