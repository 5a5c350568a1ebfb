#include <cmath>
#include <string>

#include "surf4/error.hpp"
#include "surf4/surfaces.hpp"

namespace surf4 {

using expr::ConstantBindings;
using expr::Expression;

RotationalParams RotationalParams::create(std::string_view f_text, std::string_view g_text, double alpha,
                                          double beta, ConstantBindings constants, double u_min, double u_max) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw InputError("rotational surface: alpha and beta must be positive");
    if (!(u_min < u_max)) throw InputError("rotational surface: u range must satisfy min < max");

    RotationalParams p{expr::parse_expression(f_text, constants), expr::parse_expression(g_text, constants),
                       alpha, beta, std::move(constants), u_min, u_max};

    constexpr int kSamples = 65;
    for (int i = 0; i < kSamples; ++i) {
        const double u = u_min + (u_max - u_min) * i / (kSamples - 1);
        const auto f = expr::evaluate_jet(p.f, u, 0.0, p.constants);
        const auto g = expr::evaluate_jet(p.g, u, 0.0, p.constants);
        if (f.dv != 0.0 || g.dv != 0.0) throw InputError("rotational surface: f and g must depend on u only");
        if (!(alpha * alpha * f.val * f.val + beta * beta * g.val * g.val > 0.0)) {
            throw InputError("rotational surface: alpha^2 f^2 + beta^2 g^2 vanishes at u = " + std::to_string(u));
        }
        if (!(f.du * f.du + g.du * g.du > 0.0)) {
            throw InputError("rotational surface: f'^2 + g'^2 vanishes at u = " + std::to_string(u));
        }
    }
    return p;
}

SurfaceDefinition make_rotational(const RotationalParams& params, double v_min, double v_max, std::string name) {
    using expr::Function;
    const auto v = expr::variable(expr::Variable::V);
    const auto av = expr::number(params.alpha) * v;
    const auto bv = expr::number(params.beta) * v;
    std::array<Expression, 4> comps{params.f * expr::call(Function::Cos, {av}),
                                    params.f * expr::call(Function::Sin, {av}),
                                    params.g * expr::call(Function::Cos, {bv}),
                                    params.g * expr::call(Function::Sin, {bv})};
    return {std::move(name), std::move(comps), params.constants, {params.u_min, params.u_max, v_min, v_max}};
}

RotationalParams rotational_case(int case_number, const std::map<std::string, double>& values) {
    auto get = [&values](const char* key, double fallback) {
        const auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    };
    const double alpha = get("alpha", 1.0);
    const double beta = get("beta", case_number == 3 ? 2.0 : 1.0);
    const double umin = get("umin", 0.5);
    const double umax = get("umax", 2.0);

    switch (case_number) {
        case 1: {
            const double a = get("a", 2.0);
            if (a == 0.0) throw InputError("rotational case 1 needs a != 0");
            return RotationalParams::create("u", "a*u", alpha, beta, {{"a", a}}, umin, umax);
        }
        case 2: {
            const double a = get("a", 2.0);
            const double b = get("b", 1.0);
            if (a == 0.0 || b == 0.0) throw InputError("rotational case 2 needs a != 0 and b != 0");
            return RotationalParams::create("u", "a*u + b", alpha, beta, {{"a", a}, {"b", b}}, umin, umax);
        }
        case 3: {
            const double c = get("c", 1.0);
            if (c == 0.0) throw InputError("rotational case 3 needs c != 0");
            if (!(umin > 0.0)) throw InputError("rotational case 3 is defined for u > 0 only");
            return RotationalParams::create("u", "c*u^(beta^2/alpha^2)", alpha, beta,
                                            {{"c", c}, {"alpha", alpha}, {"beta", beta}}, umin, umax);
        }
        default: throw InputError("rotational case must be 1, 2 or 3");
    }
}

ClosedFormReport rotational_closed_form(const RotationalParams& params, double u) {
    const auto fj = expr::evaluate_jet(params.f, u, 0.0, params.constants);
    const auto gj = expr::evaluate_jet(params.g, u, 0.0, params.constants);
    const double f = fj.val, f1 = fj.du, f2 = fj.duu;
    const double g = gj.val, g1 = gj.du, g2 = gj.duu;
    const double al = params.alpha, be = params.beta;
    const double al2 = al * al, be2 = be * be;

    const double A = al2 * f * f + be2 * g * g;  // G
    const double B = f1 * f1 + g1 * g1;          // E
    if (!(B > 0.0) || !(A > 0.0)) throw DegenerateError("rotational closed form: degenerate meridian point");
    const double P = g * f1 - f * g1;
    const double Q = g1 * f2 - f1 * g2;
    const double R = be2 * g * f1 - al2 * f * g1;

    ClosedFormReport r;
    r.E = B;
    r.F = 0.0;
    r.G = A;
    r.L = 2.0 * al * be * P * Q / (A * B);
    r.M = 0.0;
    r.N = -2.0 * al * be * P * R / (A * B);
    r.k = -4.0 * al2 * be2 * P * P * Q * R / (A * A * A * B * B * B);
    r.kappa = al * be * P * (A * Q - B * R) / (A * A * B * B);
    r.K = (A * R * Q - al2 * be2 * B * P * P) / (A * A * B * B);
    return r;
}

FrenetTriple helix_frenet_closed_form(double a, double b, double alpha, double beta) {
    const double s2 = a * a * alpha * alpha + b * b * beta * beta;
    const double q2 = a * a * std::pow(alpha, 4) + b * b * std::pow(beta, 4);
    if (!(s2 > 0.0)) throw DegenerateError("helix: a^2 alpha^2 + b^2 beta^2 must be positive");
    if (!(q2 > 0.0)) throw DegenerateError("helix: a^2 alpha^4 + b^2 beta^4 must be positive");
    const double s = std::sqrt(s2), q = std::sqrt(q2);
    return {q / s, a * b * alpha * beta * (alpha * alpha - beta * beta) / (q * s), alpha * beta * s / q};
}

FrenetTriple helix_frenet_arc_length(double a, double b, double alpha, double beta) {
    const auto per_v = helix_frenet_closed_form(a, b, alpha, beta);
    const double speed = std::sqrt(a * a * alpha * alpha + b * b * beta * beta);
    return {per_v.kappa1 / speed, per_v.kappa2 / speed, per_v.kappa3 / speed};
}

}  // namespace surf4
