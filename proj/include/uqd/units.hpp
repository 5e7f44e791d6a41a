#pragma once

#include <cstddef>
#include <string_view>

namespace uqd {

enum class Unit { bits, nats };

std::string_view to_string(Unit unit);

/// How a measure is reported. Defaults match the usual plotting convention:
/// bits, normalized so the maximum (log K) maps to 1.
struct MeasureOptions {
    Unit unit = Unit::bits;
    bool normalized = true;
};

/// Converts a value computed in nats to the requested unit. Normalization
/// divides by log K, which makes the unit irrelevant.
double convert_nats(double nats, std::size_t k, MeasureOptions options);

/// log K expressed in the requested unit (1 when normalized).
double max_entropy(std::size_t k, MeasureOptions options);

}  // namespace uqd
