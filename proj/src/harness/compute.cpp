#include "ncproj/harness/compute.hpp"

#include <algorithm>

#include "ncproj/crossratio.hpp"
#include "ncproj/geometry.hpp"
#include "ncproj/infinitesimal_ceva.hpp"
#include "ncproj/pentagramma.hpp"
#include "ncproj/schwarzian.hpp"

namespace ncproj::harness {

const std::vector<OpInfo>& op_list() {
    static const std::vector<OpInfo> ops{
        {"invert", "a"},
        {"conjugate_by", "a, mu"},
        {"similar", "a, b, [tol]"},
        {"sample", "ring, [dim], seed, [counter]"},
        {"quasidet", "A, p, q"},
        {"quasidet_2x2_all", "A"},
        {"qp_left", "columns, i, j, k"},
        {"qp_right", "B, i, j, k"},
        {"cross_ratio", "x, y, z, t"},
        {"cross_ratio_bar", "i, j, k, l"},
        {"nc_angle", "ai, aj, ak"},
        {"triple_ratio", "x, y, a1, b, c"},
        {"dv", "P1, P2, Q1, Q2"},
        {"collinear", "X, Y, Z, [tol]"},
        {"menelaus_commutative", "A, B, C, D, E, F"},
        {"ceva_commutative", "A, B, C, D, E, F"},
        {"barycentric", "P, A, B, C"},
        {"barycentric_collinear", "A, B, C, P1, P2, P3, [tol]"},
        {"menelaus_nc", "A, B, C, t, u, v"},
        {"konopelchenko", "F1, F2, F3, f12, f23, f31, [tol]"},
        {"jet_inv", "f"},
        {"nc_schwarzian", "z"},
        {"ncsch", "h"},
        {"expansion_check", "z, t, t1, t2, t3"},
        {"recover_ode_coeffs", "f1, f2"},
        {"gauge_transform_a", "a, h"},
        {"gauge_theorem_check", "f1, f2, a"},
        {"schwarzian_equation_check", "g, f0, f1"},
        {"moebius", "h, a, b, c, d"},
        {"infinitesimal_ceva", "kappa, xi, eta, x, eps"},
        {"classical_pentagram", "points"},
        {"pentagram_invariants", "vectors"},
        {"pentagram_relations_check", "vectors"},
        {"multiplicative_relations_check", "vectors"},
        {"leapfrog_compatible", "points, [tol]"},
    };
    return ops;
}

namespace {

int index1(const json& in, const char* key) {
    const int v = in.at(key).get<int>();
    if (v < 1) throw Error(ErrorKind::IndexOutOfRange, std::string(key) + " is 1-based");
    return v - 1;
}

double tol_of(const json& in) { return in.value("tol", 1e-9); }

json encode_opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

template <Scalar T>
void need_commutative(const std::string& op) {
    if constexpr (!is_commutative_v<T>)
        throw Error(ErrorKind::ParseError, op + " needs commutative (complex or rational) scalars");
}

template <Scalar T>
json run(const std::string& op, const json& in, const T& like) {
    auto S = [&](const char* key) { return decode(in.at(key), like); };
    auto V = [&](const char* key) { return decode_vec2(in.at(key), like); };
    auto P = [&](const char* key) { return decode_point(in.at(key), like); };
    auto J = [&](const char* key) { return decode_jet(in.at(key), like); };
    auto list = [&](const char* key, std::size_t n) {
        const auto& a = in.at(key);
        if (!a.is_array() || (n && a.size() != n))
            throw Error(ErrorKind::ParseError, std::string(key) + " must be an array of " + std::to_string(n));
        return a;
    };
    auto pentad = [&] {
        Pentad<T> v;
        const auto a = list("vectors", 5);
        for (std::size_t i = 0; i < 5; ++i) v[i] = decode_vec2(a[i], like);
        return v;
    };

    if (op == "invert") return encode(inverse(S("a")));
    if (op == "conjugate_by") return encode(conjugate_by(S("a"), S("mu")));
    if (op == "similar") return {{"similar", similar(S("a"), S("b"), tol_of(in))}};
    if (op == "sample") {
        Seed s{in.at("seed").get<std::uint64_t>(), in.value("counter", std::uint64_t{0})};
        const T x = sample(like, s);
        return {{"value", encode(x)}, {"next_counter", s.counter}};
    }
    if (op == "quasidet") return encode(quasidet(decode_matrix(in.at("A"), like), index1(in, "p"), index1(in, "q")));
    if (op == "quasidet_2x2_all") {
        const auto all = quasidet_2x2_all(decode_matrix(in.at("A"), like));
        json out = json::array();
        for (int n = 0; n < 4; ++n) {
            json e{{"position", {n / 2 + 1, n % 2 + 1}}};
            if (all[n].value)
                e["value"] = encode(*all[n].value);
            else
                e["error"] = all[n].error;
            out.push_back(e);
        }
        return {{"entries", out}};
    }
    if (op == "qp_left") {
        ColumnTuple<T> cols;
        for (const auto& c : list("columns", 0)) cols.push_back(decode_vec2(c, like));
        return encode(qp_left(cols, index1(in, "i"), index1(in, "j"), index1(in, "k")));
    }
    if (op == "qp_right")
        return encode(qp_right(decode_matrix(in.at("B"), like), index1(in, "i"), index1(in, "j"), index1(in, "k")));
    if (op == "cross_ratio") return encode(cross_ratio(V("x"), V("y"), V("z"), V("t")));
    if (op == "cross_ratio_bar") return encode(cross_ratio_bar(V("i"), V("j"), V("k"), V("l")));
    if (op == "nc_angle") return encode(nc_angle(V("ai"), V("aj"), V("ak")));
    if (op == "triple_ratio") {
        const auto r = triple_ratio(S("x"), S("y"), S("a1"), S("b"), S("c"));
        return {{"value", encode(r.value)}, {"negated", encode(r.negated)}, {"a2", encode(r.a2)},
                {"p1", encode(r.p1)}, {"p2", encode(r.p2)}};
    }
    if (op == "dv") return encode(dv(PolarizationQuad<T>{S("P1"), S("P2"), S("Q1"), S("Q2")}));
    if (op == "collinear") {
        const auto c = collinearity(P("X"), P("Y"), P("Z"), tol_of(in));
        return {{"collinear", c.collinear}, {"quasidet", encode(c.quasidet)}, {"ratio_gap", encode_opt(c.ratio_gap)},
                {"criteria_agree", c.criteria_agree}};
    }
    if (op == "menelaus_commutative" || op == "ceva_commutative") {
        need_commutative<T>(op);
        if constexpr (is_commutative_v<T>) {
            if (op == "menelaus_commutative")
                return encode(menelaus_commutative(P("A"), P("B"), P("C"), P("D"), P("E"), P("F"), tol_of(in)));
            return encode(ceva_commutative(P("A"), P("B"), P("C"), P("D"), P("E"), P("F"), tol_of(in)));
        }
    }
    if (op == "barycentric") {
        const auto w = barycentric(P("P"), P("A"), P("B"), P("C"));
        return {{"t", encode(w.t)}, {"u", encode(w.u)}, {"v", encode(w.v)}};
    }
    if (op == "barycentric_collinear") {
        auto W = [&](const char* key) {
            const auto& j = in.at(key);
            return Barycentric<T>{decode(j.at("t"), like), decode(j.at("u"), like), decode(j.at("v"), like)};
        };
        const auto r = barycentric_collinear(P("A"), P("B"), P("C"), W("P1"), W("P2"), W("P3"), tol_of(in));
        json out{{"collinear", r.collinear},
                 {"criterion", r.criterion == CollinearityCriterion::Quasidet ? "quasidet" : "points"}};
        out["cross_check_agrees"] = r.cross_check_agrees ? json(*r.cross_check_agrees) : json(nullptr);
        return out;
    }
    if (op == "menelaus_nc") {
        const auto r = menelaus_nc(P("A"), P("B"), P("C"), S("t"), S("u"), S("v"));
        return {{"product", encode(r.product)}, {"kaplansky", encode(r.kaplansky)}, {"P", encode(r.P)},
                {"Q", encode(r.Q)}, {"R", encode(r.R)}};
    }
    if (op == "konopelchenko") {
        const auto k = konopelchenko(P("F1"), P("F2"), P("F3"), S("f12"), S("f23"), S("f31"), tol_of(in));
        return {{"theta", encode(k.theta)}, {"collinear", k.collinear}, {"points_collinear", k.points_collinear}};
    }
    if (op == "jet_inv") return encode(jet_inv(J("f")));
    if (op == "nc_schwarzian") return encode(nc_schwarzian(J("z")));
    if (op == "ncsch") return encode(ncsch(J("h")));
    if (op == "expansion_check") {
        const auto e = expansion_check(J("z"), in.at("t").get<double>(), in.at("t1").get<double>(),
                                       in.at("t2").get<double>(), in.at("t3").get<double>());
        return {{"lhs", encode(e.lhs)}, {"rhs", encode(e.rhs)}, {"residual", e.residual}};
    }
    if (op == "recover_ode_coeffs") {
        const auto r = recover_ode_coeffs(J("f1"), J("f2"));
        return {{"a", encode(r.a)}, {"b", encode(r.b)}};
    }
    if (op == "gauge_transform_a") {
        const auto at = gauge_transform_a(J("a"), J("h"));
        return {{"a_tilde", encode(at)}, {"head", encode(at.head())}};
    }
    if (op == "gauge_theorem_check") {
        const auto r = gauge_theorem_check(J("f1"), J("f2"), J("a"));
        return {{"a_tilde_residual", r.a_tilde_residual},
                {"prop63_residual", r.prop63_residual},
                {"b_direct", encode(r.b_direct)},
                {"b_candidate_a", encode(r.b_candidate_a)},
                {"b_candidate_b", encode(r.b_candidate_b)},
                {"residual_a", r.residual_a},
                {"residual_b", r.residual_b},
                {"matches_a", r.matches_a},
                {"matches_b", r.matches_b}};
    }
    if (op == "schwarzian_equation_check") {
        const auto r = schwarzian_equation_check(J("g"), S("f0"), S("f1"));
        return {{"residual", r.residual}, {"max_residual", r.max_residual}, {"ncsch_h", encode(r.ncsch_h)},
                {"F", encode(r.F)}};
    }
    if (op == "moebius") return encode(moebius(J("h"), S("a"), S("b"), S("c"), S("d")));
    if (op == "classical_pentagram") {
        need_commutative<T>(op);
        if constexpr (is_commutative_v<T>) {
            std::array<T, 5> p;
            const auto a = list("points", 5);
            for (std::size_t i = 0; i < 5; ++i) p[i] = decode(a[i], like);
            const auto c = classical_pentagram(p);
            return {{"y", encode_all(c.y)}, {"residuals", c.residuals}};
        }
    }
    if (op == "pentagram_invariants") return {{"x", encode_all(pentagram_invariants(pentad()))}};
    if (op == "pentagram_relations_check") {
        const auto r = pentagram_relations_check(pentad());
        return {{"x", encode_all(r.x)},          {"residuals", r.residuals},     {"odd_max", r.odd_max},
                {"even_max", r.even_max},        {"single_swap", r.single_swap}, {"relation4_alt", r.relation4_alt}};
    }
    if (op == "multiplicative_relations_check") {
        const auto v = pentad();
        const auto r = multiplicative_relations_check(v[0], v[1], v[2], v[3], v[4]);
        return {{"residuals", r.residuals}, {"single_swap", r.single_swap}};
    }
    if (op == "leapfrog_compatible") {
        const auto a = list("points", 5);
        std::array<T, 5> p;
        for (std::size_t i = 0; i < 5; ++i) p[i] = decode(a[i], like);
        const auto r = leapfrog_compatible(p[0], p[1], p[2], p[3], p[4], tol_of(in));
        return {{"compatible", r.compatible}, {"L", encode(r.L)}, {"R", encode(r.R)}};
    }
    throw Error(ErrorKind::UnknownOperation, "no operation named '" + op + "'");
}

Vec2d read_vec2d(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::ParseError, "expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json run_ceva(const json& in) {
    const VectorFieldPair vf{read_vec2d(in.at("xi")), read_vec2d(in.at("eta")),
                             kappa_field(in.at("kappa").get<std::string>())};
    const auto r = infinitesimal_ceva(vf, read_vec2d(in.at("x")), in.at("eps").get<double>());
    const auto& g = r.segments;
    return {{"c_minus_1", r.c_minus_1},
            {"s3", r.s3},
            {"segments", {{"AK", g.ak}, {"KB", g.kb}, {"BL", g.bl}, {"LC", g.lc}, {"CM", g.cm}, {"MA", g.ma}}}};
}

}  // namespace

json compute(const std::string& op, const json& input) {
    const auto& ops = op_list();
    if (std::none_of(ops.begin(), ops.end(), [&](const OpInfo& o) { return o.name == op; }))
        throw Error(ErrorKind::UnknownOperation, "no operation named '" + op + "'");
    if (!input.is_object()) throw Error(ErrorKind::ParseError, "input must be a JSON object");
    if (op == "infinitesimal_ceva") return run_ceva(input);

    const RingSpec ring = detect_ring(input);
    switch (ring.ring) {
    case Ring::Quaternion: return run(op, input, Quaternion{1, 0, 0, 0});
    case Ring::Matrix: return run(op, input, MatScalar::identity(ring.dim));
    case Ring::Complex: return run(op, input, Complex(1.0));
    case Ring::Rational: return run(op, input, Rational(1));
    }
    throw Error(ErrorKind::ParseError, "unknown ring");
}

}  // namespace ncproj::harness
