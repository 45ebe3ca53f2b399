#pragma once

#include <cmath>

namespace entropygraph::detail {

inline double sigmoid(double s) {
    if (s >= 0)
        return 1 / (1 + std::exp(-s));
    const double e = std::exp(s);
    return e / (1 + e);
}

// log(1 + e^s)
inline double softplus(double s) {
    return s > 0 ? s + std::log1p(std::exp(-s)) : std::log1p(std::exp(s));
}

} // namespace entropygraph::detail
