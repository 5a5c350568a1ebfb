#pragma once

namespace surf4::expr {

/// Second-order truncated Taylor jet of a scalar function of (u, v).
///
/// Holds the value and every partial derivative through order two. Arithmetic
/// follows the product, quotient and chain rules exactly, so evaluating an
/// expression tree on jets yields its exact second-order derivatives.
struct Jet2 {
    double val = 0.0;
    double du = 0.0;
    double dv = 0.0;
    double duu = 0.0;
    double duv = 0.0;
    double dvv = 0.0;

    static constexpr Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
    static constexpr Jet2 variable_u(double u) { return {u, 1, 0, 0, 0, 0}; }
    static constexpr Jet2 variable_v(double v) { return {v, 0, 1, 0, 0, 0}; }

    /// True when every derivative vanishes, i.e. the jet is locally constant.
    [[nodiscard]] constexpr bool is_constant() const {
        return du == 0 && dv == 0 && duu == 0 && duv == 0 && dvv == 0;
    }

    friend bool operator==(const Jet2&, const Jet2&) = default;
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a);

/// Applies a scalar function given its value, first and second derivative at a.val.
Jet2 compose(const Jet2& a, double f, double df, double d2f);

Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 tan(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 log(const Jet2& a);
Jet2 sqrt(const Jet2& a);
Jet2 sinh(const Jet2& a);
Jet2 cosh(const Jet2& a);
Jet2 abs(const Jet2& a);

/// Integer power by repeated squaring; valid for negative bases.
Jet2 pow_int(const Jet2& base, long long n);

/// General power. Integral constant exponents (within 1e-12) go through
/// pow_int; otherwise the base must be positive.
Jet2 pow(const Jet2& base, const Jet2& exponent);

}  // namespace surf4::expr
