#pragma once

#include "uqd/categorical.hpp"
#include "uqd/distribution.hpp"
#include "uqd/integrate.hpp"
#include "uqd/units.hpp"

namespace uqd {

/// total = H(E_Q[theta]), aleatoric = E_Q[H(theta)], epistemic = I(Y; Theta).
/// error_bound is an absolute bound that applies to each entry.
struct UncertaintyTriple {
    double total = 0.0;
    double aleatoric = 0.0;
    double epistemic = 0.0;
    Unit unit = Unit::bits;
    bool normalized = true;
    double error_bound = 0.0;
};

/// total - epistemic: the aleatoric part implied by an additive
/// decomposition (the dotted curve of a learning-curve plot).
inline double total_minus_epistemic(const UncertaintyTriple& t) { return t.total - t.epistemic; }

/// Range of H(theta) over the support of Q.
struct EntropyBounds {
    double lower = 0.0;
    double upper = 0.0;
    Unit unit = Unit::bits;
    bool normalized = true;
};

enum class EpistemicMethod {
    residual,     // total - aleatoric
    expected_kl,  // E_Q[KL(theta || E_Q[theta])], evaluated directly
};

/// Raw (never normalized) Shannon entropy, 0 log 0 = 0.
double shannon_entropy(const Categorical& theta, Unit unit = Unit::bits);

/// KL(p || q). Returns +infinity when p puts mass where q has none.
/// Throws ValidationError(DimensionMismatch) when K differs.
double kl_divergence(const Categorical& p, const Categorical& q, Unit unit = Unit::bits);

double total_uncertainty(const SecondOrderDistribution& q, MeasureOptions options = {});

ExpectationResult aleatoric_uncertainty(const SecondOrderDistribution& q, MeasureOptions options = {},
                                        const EngineConfig& config = {});

ExpectationResult epistemic_mutual_information(const SecondOrderDistribution& q, MeasureOptions options = {},
                                               EpistemicMethod method = EpistemicMethod::residual,
                                               const EngineConfig& config = {});

/// All three measures. Epistemic is the residual total - aleatoric; when
/// config.verify_epistemic is set, the expected-KL form is evaluated as
/// well and a disagreement beyond ten times the combined error bounds
/// (floor 1e-9 nats) throws ConsistencyFailure.
UncertaintyTriple decompose(const SecondOrderDistribution& q, MeasureOptions options = {},
                            const EngineConfig& config = {});

/// Support-based bound on the ground-truth aleatoric uncertainty: the
/// minimum and maximum of H(theta) over every theta Q can produce.
/// Dirichlet support is the whole simplex, so its bound is [0, log K].
EntropyBounds aleatoric_bounds(const SecondOrderDistribution& q, MeasureOptions options = {});

}  // namespace uqd
