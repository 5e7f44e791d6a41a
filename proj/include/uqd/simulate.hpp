#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "uqd/categorical.hpp"
#include "uqd/integrate.hpp"
#include "uqd/measures.hpp"

namespace uqd {

/// Dirichlet posterior parameters of a conjugate categorical learner:
/// prior pseudo-counts plus observed outcome counts.
class BayesState {
  public:
    /// Throws ValidationError unless K >= 2 and every count is finite and > 0.
    explicit BayesState(std::vector<double> counts);

    /// Dirichlet(1, ..., 1), the uniform prior.
    static BayesState uniform_prior(std::size_t k);

    std::size_t dimension() const noexcept { return counts_.size(); }
    std::span<const double> counts() const noexcept { return counts_; }
    double total() const;

    SecondOrderDistribution posterior() const;

  private:
    std::vector<double> counts_;
};

/// Returns the state after observing `outcome` (0-based class index).
/// Throws IndexOutOfRange for outcome >= K.
BayesState bayes_update(const BayesState& state, std::size_t outcome);

struct CurvePoint {
    std::size_t n = 0;
    UncertaintyTriple triple;  // averaged over replications
    std::size_t replications = 0;
};

struct CurveConfig {
    std::vector<std::size_t> schedule{0, 1, 2, 5, 10, 20, 50, 100, 200, 500, 1000, 5000, 10000};
    std::size_t replications = 200;
    std::uint64_t seed = 42;
    MeasureOptions options{};
    /// Engine settings for each decomposition. The closed form handles every
    /// Dirichlet posterior; the expected-KL cross-check costs a Monte Carlo
    /// run per point and is off unless requested.
    EngineConfig engine{.verify_epistemic = false};
};

/// Replication r draws i.i.d. outcomes from Cat(theta_star) using the stream
/// derive_seed(seed, r), updates the posterior and decomposes it at every
/// scheduled n. Triples are averaged in replication order, so the curve is
/// bit-identical for a fixed seed.
///
/// Throws ValidationError when the schedule is empty, does not start at 0 or
/// is not strictly increasing, when replications == 0, or when K differs
/// between theta_star and the prior.
std::vector<CurvePoint> learning_curve(const Categorical& theta_star, const BayesState& prior,
                                       const CurveConfig& config = {});

}  // namespace uqd
