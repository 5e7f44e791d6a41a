#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "uqd/categorical.hpp"
#include "uqd/random.hpp"

namespace uqd {

/// Maximum mixture nesting accepted on input. Mixtures are flattened when
/// built, so the stored form always has depth one.
inline constexpr int kMaxMixtureDepth = 8;

/// All mass on a single level-1 distribution.
struct PointMass {
    Categorical theta;
};

struct Dirichlet {
    std::vector<double> alpha;

    double concentration() const;
};

/// Binary only: theta_1 uniform on [lo, hi], theta_2 = 1 - theta_1.
struct IntervalUniform {
    double lo = 0.0;
    double hi = 1.0;
};

/// M level-1 predictions with weight 1/M each.
struct EmpiricalEnsemble {
    std::vector<Categorical> members;
};

using MixtureComponent = std::variant<PointMass, Dirichlet, IntervalUniform, EmpiricalEnsemble>;

/// Flat finite mixture. Components are never mixtures themselves.
struct Mixture {
    std::vector<double> weights;
    std::vector<MixtureComponent> components;
};

/// A second-order (level-2) distribution Q over the K-simplex.
///
/// Instances only come out of the validating factories below, so every
/// value of this type satisfies its invariants: a shared K across all parts,
/// strictly positive Dirichlet parameters, 0 <= lo <= hi <= 1 for interval
/// uniforms, mixture weights positive and summing to one.
class SecondOrderDistribution {
  public:
    using Variant = std::variant<PointMass, Dirichlet, IntervalUniform, EmpiricalEnsemble, Mixture>;

    static SecondOrderDistribution point(Categorical theta);
    static SecondOrderDistribution dirichlet(std::vector<double> alpha);
    static SecondOrderDistribution interval_uniform(double lo, double hi);
    static SecondOrderDistribution ensemble(std::vector<Categorical> members);
    /// Nested mixtures are flattened; weights multiply through.
    static SecondOrderDistribution mixture(std::vector<double> weights,
                                           std::vector<SecondOrderDistribution> components);

    std::size_t dimension() const noexcept { return dimension_; }
    /// Nesting depth of the mixture that produced this value (0 if not a mixture).
    int nesting_depth() const noexcept { return depth_; }
    const Variant& variant() const noexcept { return value_; }

    /// True when the support is finite (point masses, ensembles, mixtures of those).
    bool is_discrete() const;

  private:
    SecondOrderDistribution(Variant value, std::size_t dimension, int depth)
        : value_(std::move(value)), dimension_(dimension), depth_(depth) {}

    Variant value_;
    std::size_t dimension_;
    int depth_;
};

std::size_t dimension(const MixtureComponent& c);

/// Exact mean of theta under Q, i.e. the marginal distribution of the outcome.
Categorical predictive_mean(const SecondOrderDistribution& q);
Categorical predictive_mean(const MixtureComponent& c);

/// n independent draws theta ~ Q. Deterministic for a given rng state.
std::vector<Categorical> sample(const SecondOrderDistribution& q, std::size_t n, Rng& rng);

Categorical draw(const SecondOrderDistribution& q, Rng& rng);
Categorical draw(const MixtureComponent& c, Rng& rng);

}  // namespace uqd
