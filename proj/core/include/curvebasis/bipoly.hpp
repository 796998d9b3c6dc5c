#ifndef CURVEBASIS_BIPOLY_HPP
#define CURVEBASIS_BIPOLY_HPP

#include <string>
#include <vector>

#include "curvebasis/fieldtower.hpp"
#include "curvebasis/ratfun.hpp"
#include "curvebasis/unipoly.hpp"

namespace curvebasis {

/// Element of K[x][y]: dense in y with UniPoly coefficients, trailing zero
/// coefficients trimmed. "Monic in y" means the leading coefficient is the
/// constant polynomial 1.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(FqCtxPtr ctx) : ctx_(std::move(ctx)) {}
    BiPoly(FqCtxPtr ctx, std::vector<UniPoly> coeffs);

    static BiPoly zero(const FqCtxPtr& ctx) { return BiPoly(ctx); }
    static BiPoly from_unipoly(const UniPoly& p);
    /// c(x) * y^j
    static BiPoly term(const UniPoly& c, std::size_t j);
    static BiPoly y_power(const FqCtxPtr& ctx, std::size_t j);

    const FqCtxPtr& ctx() const { return ctx_; }
    int ydeg() const { return static_cast<int>(c_.size()) - 1; }
    int xdeg() const;
    bool is_zero() const { return c_.empty(); }
    bool monic_in_y() const;
    UniPoly coeff(std::size_t j) const;
    const std::vector<UniPoly>& coeffs() const { return c_; }
    void set_coeff(std::size_t j, const UniPoly& v);

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const { return c_ == o.c_; }
    bool operator!=(const BiPoly& o) const { return !(c_ == o.c_); }

    BiPoly mul_scalar(const Fq& s) const;
    BiPoly mul_unipoly(const UniPoly& u) const;
    /// Product with every x-degree capped below xcut.
    BiPoly mul_trunc_x(const BiPoly& o, std::size_t xcut) const;

    /// Division by a divisor monic in y.
    std::pair<BiPoly, BiPoly> divrem_y(const BiPoly& d) const;

    BiPoly derivative_y() const;
    /// Discard every x-power >= xcut in all coefficients.
    BiPoly truncate_x(std::size_t xcut) const;
    /// x -> x + a
    BiPoly shift_x(const Fq& a) const;
    /// y -> y + a
    BiPoly shift_y(const Fq& a) const;
    /// Substitute y := g(x), plain polynomial composition.
    UniPoly eval_y(const UniPoly& g) const;
    Fq eval(const Fq& x0, const Fq& y0) const;
    BiPoly map(const FieldEmbedding& emb) const;

    std::string to_string() const;
    u64 hash(u64 seed = 1469598103934665603ULL) const;

private:
    void trim();
    FqCtxPtr ctx_;
    std::vector<UniPoly> c_;
};

/// Res_y(f, g) by the subresultant pseudo-remainder sequence over K[x].
UniPoly resultant_y(const BiPoly& f, const BiPoly& g);

/// Disc(f) = (-1)^(n(n-1)/2) Res_y(f, df/dy) for f monic in y. Raises
/// SquarefreeViolation if the result is zero.
UniPoly discriminant_y(const BiPoly& f);

/// Remainder of g modulo f (f monic in y); the y-degree drops below deg_y f.
BiPoly reduce_mod_f(const BiPoly& g, const BiPoly& f);

/// Function-field element p(x,y)/d(x); representation need not be reduced.
struct FieldElement {
    BiPoly num;
    UniPoly den;
};

/// Monic degree-n characteristic polynomial of b over K(x), as coefficients
/// of T^0..T^n. Computed as Res_y(f, den*T - num) / den^n via interpolation
/// on scalar T-nodes.
std::vector<RatFun> charpoly_of_element(const FieldElement& b, const BiPoly& f);

/// Trace of b, i.e. minus the T^(n-1) charpoly coefficient; computed from
/// power sums of f (Newton identities).
RatFun trace_of(const FieldElement& b, const BiPoly& f);

/// Traces of 1, y, ..., y^(n-1), reusable across trace computations.
std::vector<UniPoly> power_sums(const BiPoly& f);

/// f(x + alpha, y) over the codomain of emb.
BiPoly shift_origin(const BiPoly& f, const FieldEmbedding& emb, const Fq& alpha);

} // namespace curvebasis

#endif
