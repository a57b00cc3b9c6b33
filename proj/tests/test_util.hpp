#pragma once

#include <cmath>

#include <doctest.h>

namespace cosec::testutil {

// |a - b| <= abs + rel * max(|a|, |b|)
inline bool close(double a, double b, double rel = 1e-12, double abs = 1e-14) {
    return std::fabs(a - b) <= abs + rel * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace cosec::testutil

#define CHECK_CLOSE(a, b, rel) CHECK_MESSAGE(cosec::testutil::close((a), (b), (rel)), \
                                             (a), " vs ", (b))
