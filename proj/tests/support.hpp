#pragma once

#include <doctest.h>

#include "ncproj/complex.hpp"
#include "ncproj/mat_scalar.hpp"
#include "ncproj/quaternion.hpp"
#include "ncproj/rational.hpp"
#include "ncproj/sampling.hpp"
#include "ncproj/vec2.hpp"

namespace testing {

using namespace ncproj;

inline const Quaternion qi{0, 1, 0, 0};
inline const Quaternion qj{0, 0, 1, 0};
inline const Quaternion qk{0, 0, 0, 1};
inline const Quaternion q1{1, 0, 0, 0};

template <class T>
Vec2<T> rand_vec2(const T& like, Seed& s) {
    return {sample(like, s), sample(like, s)};
}

// Runs body(seed) for n trials; degenerate samples are skipped and counted.
template <class F>
int for_trials(int n, std::uint64_t seed, F&& body) {
    int skipped = 0;
    for (int t = 0; t < n; ++t) {
        Seed s{seed, static_cast<std::uint64_t>(t) << 20};
        try {
            body(s);
        } catch (const Error& e) {
            if (!e.is_undefined()) throw;
            ++skipped;
        }
    }
    return skipped;
}

inline Rational rat(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace testing
