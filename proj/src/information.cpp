#include "uqd/information.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "uqd/units.hpp"

namespace uqd {

double entropy_nats(std::span<const double> p) {
    double h = 0.0;
    for (const double pk : p) {
        if (pk > 0.0) h -= pk * std::log(pk);
    }
    return h;
}

double kl_nats(std::span<const double> p, std::span<const double> q) {
    double d = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] <= 0.0) continue;
        if (q[k] <= 0.0) return std::numeric_limits<double>::infinity();
        d += p[k] * std::log(p[k] / q[k]);
    }
    // Rounding can leave a tiny negative value when p == q.
    return d < 0.0 ? 0.0 : d;
}

std::string_view to_string(Unit unit) {
    return unit == Unit::bits ? "bits" : "nats";
}

double convert_nats(double nats, std::size_t k, MeasureOptions options) {
    if (options.normalized) return nats / std::log(static_cast<double>(k));
    return options.unit == Unit::bits ? nats / std::numbers::ln2 : nats;
}

double max_entropy(std::size_t k, MeasureOptions options) {
    if (options.normalized) return 1.0;
    const double nats = std::log(static_cast<double>(k));
    return options.unit == Unit::bits ? nats / std::numbers::ln2 : nats;
}

}  // namespace uqd
