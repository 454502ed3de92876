#pragma once

#include <vector>

#include "ncproj/scalar.hpp"

namespace ncproj {

template <Scalar T>
struct Vec2 {
    T x1;
    T x2;
};

template <Scalar T>
using ColumnTuple = std::vector<Vec2<T>>;

}  // namespace ncproj
