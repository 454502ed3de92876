#include "ncproj/harness/codec.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <regex>

namespace ncproj::harness {

RingSpec parse_ring(const std::string& name, int dim) {
    static const std::regex matrix_dim(R"(matrix\((\d+)\))");
    std::smatch m;
    if (name == "quaternion") return {Ring::Quaternion, 0};
    if (name == "complex") return {Ring::Complex, 0};
    if (name == "rational") return {Ring::Rational, 0};
    if (name == "matrix") {
        if (dim < 1) throw Error(ErrorKind::ParseError, "matrix dimension must be positive");
        return {Ring::Matrix, dim};
    }
    if (std::regex_match(name, m, matrix_dim)) return parse_ring("matrix", std::stoi(m[1].str()));
    throw Error(ErrorKind::ParseError, "unknown ring '" + name + "'");
}

std::string ring_label(const RingSpec& r) {
    switch (r.ring) {
    case Ring::Quaternion: return "quaternion";
    case Ring::Complex: return "complex";
    case Ring::Rational: return "rational";
    case Ring::Matrix: return "matrix(" + std::to_string(r.dim) + ")";
    }
    return "?";
}

namespace {

void write(const json& j, std::string& out, int indent, int depth) {
    const std::string pad = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
    switch (j.type()) {
    case json::value_t::number_float: {
        const double v = j.get<double>();
        if (!std::isfinite(v)) {
            out += "null";
        } else {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
        }
        break;
    }
    case json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            break;
        }
        out += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ',';
            first = false;
            out += pad + json(it.key()).dump() + (indent > 0 ? ": " : ":");
            write(it.value(), out, indent, depth + 1);
        }
        out += close + '}';
        break;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            break;
        }
        out += '[';
        bool first = true;
        for (const auto& x : j) {
            if (!first) out += ',';
            first = false;
            out += pad;
            write(x, out, indent, depth + 1);
        }
        out += close + ']';
        break;
    }
    default:
        out += j.dump();
    }
}

void expect_ring(const json& j, std::string_view name) {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "expected a scalar object or number");
    const auto ring = j.at("ring").get<std::string>();
    if (ring != name)
        throw Error(ErrorKind::ParseError, "scalar of ring '" + ring + "' where '" + std::string(name) + "' was expected");
}

template <class T>
std::optional<T> bare_number(const json& j, const T& like) {
    if (j.is_number_integer()) return from_ratio(like, j.get<std::int64_t>(), 1);
    if (j.is_number()) return scaled(one_like(like), j.get<double>());
    return std::nullopt;
}

json big_int(const boost::multiprecision::cpp_int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

boost::multiprecision::cpp_int read_big_int(const json& j) {
    if (j.is_number_integer()) return boost::multiprecision::cpp_int(j.get<std::int64_t>());
    if (j.is_string()) {
        static const std::regex digits(R"(-?\d+)");
        const auto s = j.get<std::string>();
        if (!std::regex_match(s, digits)) throw Error(ErrorKind::ParseError, "bad integer string '" + s + "'");
        return boost::multiprecision::cpp_int(s);
    }
    throw Error(ErrorKind::ParseError, "rational num/den must be integers");
}

std::complex<double> read_entry(const json& e) {
    if (e.is_number()) return {e.get<double>(), 0.0};
    return {e.at("re").get<double>(), e.value("im", 0.0)};
}

void scan_rings(const json& j, std::optional<RingSpec>& found) {
    if (j.is_object()) {
        if (j.contains("ring") && j.at("ring").is_string()) {
            RingSpec r = parse_ring(j.at("ring").get<std::string>(), j.value("dim", 0) > 0 ? j.value("dim", 0) : 1);
            if (found && (found->ring != r.ring || found->dim != r.dim))
                throw Error(ErrorKind::ParseError, "input mixes rings " + ring_label(*found) + " and " + ring_label(r));
            found = r;
            return;
        }
        for (const auto& [k, v] : j.items()) scan_rings(v, found);
    } else if (j.is_array()) {
        for (const auto& v : j) scan_rings(v, found);
    }
}

}  // namespace

std::string dump(const json& j, int indent) {
    std::string out;
    write(j, out, indent, 0);
    return out;
}

json encode(const Quaternion& q) { return {{"ring", "quaternion"}, {"coeffs", {q.w, q.x, q.y, q.z}}}; }

json encode(const Complex& c) { return {{"ring", "complex"}, {"re", c.v.real()}, {"im", c.v.imag()}}; }

json encode(const Rational& r) {
    return {{"ring", "rational"},
            {"num", big_int(boost::multiprecision::numerator(r.v))},
            {"den", big_int(boost::multiprecision::denominator(r.v))}};
}

json encode(const MatScalar& m) {
    json rows = json::array();
    for (int r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.dim(); ++c) {
            const auto z = m.matrix()(r, c);
            if (z.imag() == 0.0)
                row.push_back(z.real());
            else
                row.push_back({{"re", z.real()}, {"im", z.imag()}});
        }
        rows.push_back(row);
    }
    return {{"ring", "matrix"}, {"dim", m.dim()}, {"entries", rows}};
}

Quaternion decode(const json& j, const Quaternion& like) {
    if (auto b = bare_number(j, like)) return *b;
    expect_ring(j, "quaternion");
    const auto& c = j.at("coeffs");
    if (!c.is_array() || c.size() != 4) throw Error(ErrorKind::ParseError, "quaternion needs four coeffs");
    return {c[0].get<double>(), c[1].get<double>(), c[2].get<double>(), c[3].get<double>()};
}

Complex decode(const json& j, const Complex& like) {
    if (auto b = bare_number(j, like)) return *b;
    expect_ring(j, "complex");
    return Complex(j.at("re").get<double>(), j.value("im", 0.0));
}

Rational decode(const json& j, const Rational& like) {
    if (auto b = bare_number(j, like)) return *b;
    expect_ring(j, "rational");
    const auto num = read_big_int(j.at("num"));
    const auto den = j.contains("den") ? read_big_int(j.at("den")) : boost::multiprecision::cpp_int(1);
    if (den == 0) throw Error(ErrorKind::ParseError, "rational with zero denominator");
    return Rational(BigRational(num, den));
}

MatScalar decode(const json& j, const MatScalar& like) {
    if (auto b = bare_number(j, like)) return *b;
    expect_ring(j, "matrix");
    const int d = j.at("dim").get<int>();
    if (d != like.dim())
        throw Error(ErrorKind::ParseError, "matrix scalar of dim " + std::to_string(d) + ", expected " +
                                               std::to_string(like.dim()));
    const auto& e = j.at("entries");
    if (!e.is_array() || static_cast<int>(e.size()) != d) throw Error(ErrorKind::ParseError, "matrix entries shape");
    MatScalar::Matrix m(d, d);
    for (int r = 0; r < d; ++r) {
        if (!e[r].is_array() || static_cast<int>(e[r].size()) != d)
            throw Error(ErrorKind::ParseError, "matrix entries shape");
        for (int c = 0; c < d; ++c) m(r, c) = read_entry(e[r][c]);
    }
    return MatScalar(m);
}

RingSpec detect_ring(const json& doc) {
    std::optional<RingSpec> found;
    scan_rings(doc, found);
    return found.value_or(RingSpec{Ring::Rational, 0});
}

}  // namespace ncproj::harness
