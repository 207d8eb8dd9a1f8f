#pragma once

#include "errors.hpp"

#include <algorithm>

namespace interf {

/// A pair is complementary when its joint score strictly beats both
/// individual scores.
inline bool is_complementary(double t1, double t2, double t12) {
    return t12 > std::max(t1, t2);
}

/// Ratio of the pair score to the triple score; > 1 means the third feature
/// interferes. Undefined for a non-positive denominator.
inline double interference_coefficient(double t12, double t12s) {
    if (t12s <= 0.0)
        throw DataError("interference_coefficient: non-positive denominator");
    return t12 / t12s;
}

} // namespace interf
