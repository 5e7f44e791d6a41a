#include "uqd/special.hpp"

#include <cmath>
#include <limits>

namespace uqd {

double digamma(double x) {
    if (!(x > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(x)) return x;

    double shift = 0.0;
    while (x < 10.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    // B_2n / (2n) for n = 1..7
    constexpr double kCoeffs[] = {
        1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    const double inv2 = 1.0 / (x * x);
    double series = 0.0;
    for (int n = 6; n >= 0; --n) series = (series + kCoeffs[n]) * inv2;
    return shift + std::log(x) - 0.5 / x - series;
}

}  // namespace uqd
