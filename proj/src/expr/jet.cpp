#include "surf4/expr/jet.hpp"

#include <cmath>
#include <string>

#include "surf4/error.hpp"

namespace surf4::expr {

Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.val + b.val, a.du + b.du, a.dv + b.dv, a.duu + b.duu, a.duv + b.duv, a.dvv + b.dvv};
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.val - b.val, a.du - b.du, a.dv - b.dv, a.duu - b.duu, a.duv - b.duv, a.dvv - b.dvv};
}

Jet2 operator-(const Jet2& a) { return {-a.val, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv}; }

Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.val * b.val,
            a.du * b.val + a.val * b.du,
            a.dv * b.val + a.val * b.dv,
            a.duu * b.val + 2.0 * a.du * b.du + a.val * b.duu,
            a.duv * b.val + a.du * b.dv + a.dv * b.du + a.val * b.duv,
            a.dvv * b.val + 2.0 * a.dv * b.dv + a.val * b.dvv};
}

Jet2 compose(const Jet2& a, double f, double df, double d2f) {
    return {f,
            df * a.du,
            df * a.dv,
            d2f * a.du * a.du + df * a.duu,
            d2f * a.du * a.dv + df * a.duv,
            d2f * a.dv * a.dv + df * a.dvv};
}

namespace {

Jet2 reciprocal(const Jet2& a) {
    if (a.val == 0.0) throw DomainError("division by zero");
    const double r = 1.0 / a.val;
    return compose(a, r, -r * r, 2.0 * r * r * r);
}

}  // namespace

Jet2 operator/(const Jet2& a, const Jet2& b) {
    if (b.is_constant()) {
        if (b.val == 0.0) throw DomainError("division by zero");
        const double r = 1.0 / b.val;
        return {a.val * r, a.du * r, a.dv * r, a.duu * r, a.duv * r, a.dvv * r};
    }
    return a * reciprocal(b);
}

Jet2 sin(const Jet2& a) {
    const double s = std::sin(a.val), c = std::cos(a.val);
    return compose(a, s, c, -s);
}

Jet2 cos(const Jet2& a) {
    const double s = std::sin(a.val), c = std::cos(a.val);
    return compose(a, c, -s, -c);
}

Jet2 tan(const Jet2& a) {
    const double c = std::cos(a.val);
    if (c == 0.0) throw DomainError("tan at a pole");
    const double t = std::tan(a.val);
    const double sec2 = 1.0 + t * t;
    return compose(a, t, sec2, 2.0 * t * sec2);
}

Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.val);
    if (!std::isfinite(e)) throw DomainError("exp overflow");
    return compose(a, e, e, e);
}

Jet2 log(const Jet2& a) {
    if (!(a.val > 0.0)) throw DomainError("ln of non-positive value " + std::to_string(a.val));
    const double r = 1.0 / a.val;
    return compose(a, std::log(a.val), r, -r * r);
}

Jet2 sqrt(const Jet2& a) {
    // At 0 the value exists but the derivative does not; jets need both.
    if (!(a.val > 0.0)) throw DomainError("sqrt of non-positive value " + std::to_string(a.val));
    const double s = std::sqrt(a.val);
    return compose(a, s, 0.5 / s, -0.25 / (s * a.val));
}

Jet2 sinh(const Jet2& a) {
    const double s = std::sinh(a.val), c = std::cosh(a.val);
    return compose(a, s, c, s);
}

Jet2 cosh(const Jet2& a) {
    const double s = std::sinh(a.val), c = std::cosh(a.val);
    return compose(a, c, s, c);
}

Jet2 abs(const Jet2& a) {
    if (a.val == 0.0) throw DomainError("abs is not differentiable at 0");
    return a.val > 0.0 ? a : -a;
}

Jet2 pow_int(const Jet2& base, long long n) {
    if (n == 0) return Jet2::constant(1.0);
    if (n < 0) {
        if (base.val == 0.0) throw DomainError("0 raised to a negative power");
        return reciprocal(pow_int(base, -n));
    }
    Jet2 result = Jet2::constant(1.0);
    Jet2 square = base;
    bool first = true;
    while (n > 0) {
        if (n & 1) {
            result = first ? square : result * square;
            first = false;
        }
        n >>= 1;
        if (n > 0) square = square * square;
    }
    return result;
}

Jet2 pow(const Jet2& base, const Jet2& exponent) {
    if (exponent.is_constant()) {
        const double p = exponent.val;
        const double rounded = std::round(p);
        if (std::abs(p - rounded) < 1e-12 && std::abs(rounded) < 1e15) {
            return pow_int(base, static_cast<long long>(rounded));
        }
        if (!(base.val > 0.0)) {
            throw DomainError("non-integer power of non-positive base " + std::to_string(base.val));
        }
        const double f = std::pow(base.val, p);
        return compose(base, f, p * f / base.val, p * (p - 1.0) * f / (base.val * base.val));
    }
    if (!(base.val > 0.0)) {
        throw DomainError("variable exponent requires positive base, got " +
                          std::to_string(base.val));
    }
    return exp(exponent * log(base));
}

}  // namespace surf4::expr
