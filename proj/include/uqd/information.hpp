#pragma once

#include <span>

namespace uqd {

// Raw information quantities in nats over plain probability vectors.
// Both use 0 * log(0) = 0 and 0 * log(0 / q) = 0.

double entropy_nats(std::span<const double> p);

/// +infinity when some p_k > 0 meets q_k == 0. Sizes must match (unchecked).
double kl_nats(std::span<const double> p, std::span<const double> q);

}  // namespace uqd
