#ifndef CURVEBASIS_RATFUN_HPP
#define CURVEBASIS_RATFUN_HPP

#include "curvebasis/unipoly.hpp"

namespace curvebasis {

/// Rational function over K(x) as a numerator/denominator pair. Pairs are
/// reduced lazily; call reduce() before inspecting degrees or comparing.
struct RatFun {
    UniPoly num;
    UniPoly den;

    static RatFun of(UniPoly n, UniPoly d) {
        check(!d.is_zero(), ErrorCode::Singular, "zero denominator");
        return RatFun{std::move(n), std::move(d)};
    }
    static RatFun poly(UniPoly n) {
        auto ctx = n.ctx();
        return RatFun{std::move(n), UniPoly::constant(ctx, ctx->one())};
    }
    static RatFun zero(const FqCtxPtr& ctx) {
        return RatFun{UniPoly::zero(ctx), UniPoly::constant(ctx, ctx->one())};
    }

    bool is_zero() const { return num.is_zero(); }

    void reduce() {
        if (num.is_zero()) {
            den = UniPoly::constant(den.ctx(), den.ctx()->one());
            return;
        }
        UniPoly g = uni_gcd(num, den);
        if (g.degree() > 0) {
            num = num.exact_div(g);
            den = den.exact_div(g);
        }
        if (!(den.lc() == den.ctx()->one())) {
            Fq li = den.ctx()->inv(den.lc());
            num = num.mul_scalar(li);
            den = den.mul_scalar(li);
        }
    }

    bool is_polynomial() const {
        RatFun r = *this;
        r.reduce();
        return r.den.is_one();
    }

    /// The polynomial value; raises unless the reduced denominator is 1.
    UniPoly as_polynomial() const {
        RatFun r = *this;
        r.reduce();
        check(r.den.is_one(), ErrorCode::InternalInvariantBroken, "rational value is not polynomial");
        return r.num;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return of(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return of(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return of(a.num * b.num, a.den * b.den);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        check(!b.num.is_zero(), ErrorCode::Singular, "division by zero rational");
        return of(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return (a.num * b.den) == (b.num * a.den);
    }
};

} // namespace curvebasis

#endif
