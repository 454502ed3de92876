#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ncproj/geometry.hpp"
#include "ncproj/jet.hpp"
#include "ncproj/quasidet.hpp"
#include "ncproj/sampling.hpp"
#include "ncproj/vec2.hpp"

namespace ncproj::harness {

using json = nlohmann::json;

enum class Ring { Quaternion, Matrix, Complex, Rational };

struct RingSpec {
    Ring ring = Ring::Quaternion;
    int dim = 0;  // matrix only
};

// "quaternion", "complex", "rational", "matrix" or "matrix(d)".
RingSpec parse_ring(const std::string& name, int dim = 3);
std::string ring_label(const RingSpec& r);

// Numbers at 17 significant digits; non-finite doubles become null.
std::string dump(const json& j, int indent = 2);

json encode(const Quaternion& q);
json encode(const Complex& c);
json encode(const Rational& r);
json encode(const MatScalar& m);

template <Scalar T>
json encode(const Vec2<T>& v) {
    return {{"x1", encode(v.x1)}, {"x2", encode(v.x2)}};
}
template <Scalar T>
json encode(const Point2<T>& p) {
    return {{"x1", encode(p.x1)}, {"x2", encode(p.x2)}};
}
template <Scalar T>
json encode(const Jet<T>& f) {
    json c = json::array();
    for (const auto& x : f.coeffs()) c.push_back(encode(x));
    return {{"order", f.order()}, {"coeffs", c}};
}
template <Scalar T>
json encode(const RingMatrix<T>& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
        rows.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}
template <class V>
json encode_all(const V& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(encode(x));
    return a;
}

// Scalar decoding against a prototype of the target ring. Bare JSON numbers
// are accepted in any ring.
Quaternion decode(const json& j, const Quaternion& like);
Complex decode(const json& j, const Complex& like);
Rational decode(const json& j, const Rational& like);
MatScalar decode(const json& j, const MatScalar& like);

template <Scalar T>
Vec2<T> decode_vec2(const json& j, const T& like) {
    return {decode(j.at("x1"), like), decode(j.at("x2"), like)};
}
template <Scalar T>
Point2<T> decode_point(const json& j, const T& like) {
    return {decode(j.at("x1"), like), decode(j.at("x2"), like)};
}
template <Scalar T>
Jet<T> decode_jet(const json& j, const T& like) {
    std::vector<T> c;
    for (const auto& x : j.at("coeffs")) c.push_back(decode(x, like));
    if (j.contains("order") && j.at("order").get<int>() + 1 != static_cast<int>(c.size()))
        throw Error(ErrorKind::ParseError, "jet order does not match the coefficient count");
    return Jet<T>(std::move(c));
}
template <Scalar T>
RingMatrix<T> decode_matrix(const json& j, const T& like) {
    const auto& e = j.at("entries");
    const int rows = j.contains("rows") ? j.at("rows").get<int>() : static_cast<int>(e.size());
    const int cols = j.contains("cols") ? j.at("cols").get<int>() : (e.empty() ? 0 : static_cast<int>(e.at(0).size()));
    if (rows < 1 || cols < 1 || static_cast<int>(e.size()) != rows)
        throw Error(ErrorKind::ParseError, "matrix rows do not match 'entries'");
    RingMatrix<T> m(rows, cols, zero_like(like));
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(e.at(r).size()) != cols) throw Error(ErrorKind::ParseError, "ragged matrix entries");
        for (int c = 0; c < cols; ++c) m(r, c) = decode(e.at(r).at(c), like);
    }
    return m;
}

// Ring of the tagged scalars in a document; rational when nothing is tagged.
// Mixed rings or matrix dimensions are a ParseError.
RingSpec detect_ring(const json& doc);

}  // namespace ncproj::harness
