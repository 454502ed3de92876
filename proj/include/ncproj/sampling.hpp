#pragma once

#include <cstdint>

#include "ncproj/complex.hpp"
#include "ncproj/mat_scalar.hpp"
#include "ncproj/quaternion.hpp"
#include "ncproj/rational.hpp"

namespace ncproj {

struct Seed {
    std::uint64_t seed = 0;
    std::uint64_t counter = 0;
};

inline constexpr int resample_limit = 1000;
inline constexpr double sample_min_norm = 0.1;
inline constexpr double sample_max_cond = 1e4;

double uniform(Seed& s, double lo = -1.0, double hi = 1.0);

// Guarded samples shaped like `like` (dimension taken from it).
Quaternion sample(const Quaternion& like, Seed& s);
Complex sample(const Complex& like, Seed& s);
Rational sample(const Rational& like, Seed& s);
MatScalar sample(const MatScalar& like, Seed& s);

}  // namespace ncproj
