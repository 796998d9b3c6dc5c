#ifndef CURVEBASIS_UNIPOLY_HPP
#define CURVEBASIS_UNIPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvebasis/fq.hpp"

namespace curvebasis {

/// Dense univariate polynomial over an FqCtx. Coefficients are stored lowest
/// degree first with no trailing zeros; the zero polynomial has an empty
/// coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(FqCtxPtr ctx) : ctx_(std::move(ctx)) {}
    UniPoly(FqCtxPtr ctx, std::vector<Fq> coeffs);

    static UniPoly zero(const FqCtxPtr& ctx) { return UniPoly(ctx); }
    static UniPoly constant(const FqCtxPtr& ctx, const Fq& c);
    static UniPoly from_int_coeffs(const FqCtxPtr& ctx, const std::vector<std::int64_t>& coeffs);
    /// c * x^k
    static UniPoly monomial(const FqCtxPtr& ctx, const Fq& c, std::size_t k);

    const FqCtxPtr& ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const { return c_.size() <= 1; }
    const Fq& operator[](std::size_t i) const { return c_[i]; }
    Fq coeff(std::size_t i) const;
    const std::vector<Fq>& coeffs() const { return c_; }
    const Fq& lc() const { return c_.back(); }
    void set_coeff(std::size_t i, const Fq& v);

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(c_ == o.c_); }

    UniPoly mul_scalar(const Fq& s) const;
    UniPoly mul_xk(std::size_t k) const;

    /// Euclidean division; divisor may be non-monic (leading coefficient is
    /// inverted once).
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
    UniPoly operator/(const UniPoly& d) const { return divrem(d).first; }
    UniPoly operator%(const UniPoly& d) const { return divrem(d).second; }
    /// Division that must be exact; raises InternalInvariantBroken otherwise.
    UniPoly exact_div(const UniPoly& d) const;

    UniPoly monic() const;
    UniPoly derivative() const;
    Fq eval(const Fq& x) const;
    /// p(x + a)
    UniPoly taylor_shift(const Fq& a) const;
    /// p(c * x)
    UniPoly scale_arg(const Fq& c) const;
    UniPoly pow(u64 e) const;
    UniPoly pow_mod(u64 e, const UniPoly& mod) const;
    /// Composition p(q(x)), truncated to x^trunc if trunc >= 0.
    UniPoly compose(const UniPoly& q, int trunc = -1) const;

    // power series helpers (exponent cutoffs are exclusive)
    UniPoly truncated(std::size_t n) const;
    UniPoly mul_trunc(const UniPoly& o, std::size_t n) const;
    /// Inverse modulo x^n; constant term must be a unit.
    UniPoly inv_series(std::size_t n) const;
    /// x-adic valuation; SIZE_MAX for the zero polynomial.
    std::size_t valuation() const;
    /// Exact division by x^k.
    UniPoly shift_down(std::size_t k) const;

    std::string to_string(const std::string& var = "x") const;
    u64 hash(u64 seed = 1469598103934665603ULL) const;

private:
    void trim();
    FqCtxPtr ctx_;
    std::vector<Fq> c_;
};

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
struct XgcdResult {
    UniPoly g, u, v;
};
XgcdResult uni_xgcd(const UniPoly& a, const UniPoly& b);

/// Chinese remainder combination for pairwise coprime moduli.
UniPoly crt_combine(const std::vector<UniPoly>& residues, const std::vector<UniPoly>& moduli);

} // namespace curvebasis

#endif
