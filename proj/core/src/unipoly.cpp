#include "curvebasis/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace curvebasis {

namespace {
constexpr std::size_t kKaratsubaThreshold = 32;
}

UniPoly::UniPoly(FqCtxPtr ctx, std::vector<Fq> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && ctx_->is_zero(c_.back())) c_.pop_back();
}

UniPoly UniPoly::constant(const FqCtxPtr& ctx, const Fq& c) {
    UniPoly r(ctx);
    if (!ctx->is_zero(c)) r.c_.push_back(c);
    return r;
}

UniPoly UniPoly::from_int_coeffs(const FqCtxPtr& ctx, const std::vector<std::int64_t>& coeffs) {
    std::vector<Fq> v;
    v.reserve(coeffs.size());
    for (auto x : coeffs) v.push_back(ctx->from_int(x));
    return UniPoly(ctx, std::move(v));
}

UniPoly UniPoly::monomial(const FqCtxPtr& ctx, const Fq& c, std::size_t k) {
    UniPoly r(ctx);
    if (ctx->is_zero(c)) return r;
    r.c_.assign(k + 1, ctx->zero());
    r.c_[k] = c;
    return r;
}

bool UniPoly::is_one() const {
    return c_.size() == 1 && c_[0] == ctx_->one();
}

Fq UniPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : ctx_->zero();
}

void UniPoly::set_coeff(std::size_t i, const Fq& v) {
    if (i >= c_.size()) {
        if (ctx_->is_zero(v)) return;
        c_.resize(i + 1, ctx_->zero());
    }
    c_[i] = v;
    trim();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    check(ctx_->same(*o.ctx_), ErrorCode::ContextMismatch, "polynomial addition");
    std::vector<Fq> r(std::max(c_.size(), o.c_.size()), ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = ctx_->add(r[i], o.c_[i]);
    return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    check(ctx_->same(*o.ctx_), ErrorCode::ContextMismatch, "polynomial subtraction");
    std::vector<Fq> r(std::max(c_.size(), o.c_.size()), ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = ctx_->sub(r[i], o.c_[i]);
    return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::operator-() const {
    std::vector<Fq> r(c_);
    for (auto& x : r) x = ctx_->neg(x);
    return UniPoly(ctx_, std::move(r));
}

namespace {

void mul_schoolbook(const FqCtx& F, const std::vector<Fq>& a, const std::vector<Fq>& b,
                    std::vector<Fq>& out) {
    out.assign(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (F.is_zero(b[j])) continue;
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
        }
    }
}

void mul_rec(const FqCtx& F, const Fq* a, std::size_t na, const Fq* b, std::size_t nb,
             std::vector<Fq>& out) {
    if (na == 0 || nb == 0) {
        out.clear();
        return;
    }
    if (std::min(na, nb) <= kKaratsubaThreshold) {
        out.assign(na + nb - 1, F.zero());
        for (std::size_t i = 0; i < na; ++i) {
            if (F.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < nb; ++j) {
                if (F.is_zero(b[j])) continue;
                out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
            }
        }
        return;
    }
    std::size_t m = (std::max(na, nb) + 1) / 2;
    std::size_t na0 = std::min(na, m), nb0 = std::min(nb, m);
    std::size_t na1 = na - na0, nb1 = nb - nb0;
    std::vector<Fq> z0, z2, z1;
    mul_rec(F, a, na0, b, nb0, z0);
    if (na1 && nb1)
        mul_rec(F, a + na0, na1, b + nb0, nb1, z2);
    std::vector<Fq> asum(std::max(na0, na1), F.zero()), bsum(std::max(nb0, nb1), F.zero());
    for (std::size_t i = 0; i < na0; ++i) asum[i] = a[i];
    for (std::size_t i = 0; i < na1; ++i) asum[i] = F.add(asum[i], a[na0 + i]);
    for (std::size_t i = 0; i < nb0; ++i) bsum[i] = b[i];
    for (std::size_t i = 0; i < nb1; ++i) bsum[i] = F.add(bsum[i], b[nb0 + i]);
    mul_rec(F, asum.data(), asum.size(), bsum.data(), bsum.size(), z1);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = F.sub(z1[i], z0[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = F.sub(z1[i], z2[i]);
    out.assign(na + nb - 1, F.zero());
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i)
        if (i + m < out.size()) out[i + m] = F.add(out[i + m], z1[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * m] = F.add(out[i + 2 * m], z2[i]);
}

} // namespace

UniPoly UniPoly::operator*(const UniPoly& o) const {
    check(ctx_->same(*o.ctx_), ErrorCode::ContextMismatch, "polynomial multiplication");
    if (is_zero() || o.is_zero()) return UniPoly(ctx_);
    std::vector<Fq> r;
    if (std::min(c_.size(), o.c_.size()) <= kKaratsubaThreshold)
        mul_schoolbook(*ctx_, c_, o.c_, r);
    else
        mul_rec(*ctx_, c_.data(), c_.size(), o.c_.data(), o.c_.size(), r);
    return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::mul_scalar(const Fq& s) const {
    if (ctx_->is_zero(s)) return UniPoly(ctx_);
    std::vector<Fq> r(c_);
    for (auto& x : r) x = ctx_->mul(x, s);
    return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::mul_xk(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Fq> r(c_.size() + k, ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UniPoly(ctx_, std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    check(ctx_->same(*d.ctx_), ErrorCode::ContextMismatch, "polynomial division");
    check(!d.is_zero(), ErrorCode::Singular, "division by zero polynomial");
    if (degree() < d.degree()) return {UniPoly(ctx_), *this};
    const bool monic = d.lc() == ctx_->one();
    Fq li = monic ? ctx_->one() : ctx_->inv(d.lc());
    std::vector<Fq> rem(c_);
    std::vector<Fq> q(degree() - d.degree() + 1, ctx_->zero());
    for (int k = degree(); k >= d.degree(); --k) {
        Fq c = rem[k];
        if (ctx_->is_zero(c)) continue;
        if (!monic) c = ctx_->mul(c, li);
        q[k - d.degree()] = c;
        for (int j = 0; j <= d.degree(); ++j)
            rem[k - d.degree() + j] = ctx_->sub(rem[k - d.degree() + j], ctx_->mul(c, d.c_[j]));
    }
    return {UniPoly(ctx_, std::move(q)), UniPoly(ctx_, std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
    auto [q, r] = divrem(d);
    check(r.is_zero(), ErrorCode::InternalInvariantBroken, "inexact polynomial division");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero() || lc() == ctx_->one()) return *this;
    return mul_scalar(ctx_->inv(lc()));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(ctx_);
    std::vector<Fq> r(c_.size() - 1, ctx_->zero());
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = ctx_->mul_scalar(c_[i], i % ctx_->p());
    return UniPoly(ctx_, std::move(r));
}

Fq UniPoly::eval(const Fq& x) const {
    Fq r = ctx_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = ctx_->add(ctx_->mul(r, x), c_[i]);
    return r;
}

UniPoly UniPoly::taylor_shift(const Fq& a) const {
    if (ctx_->is_zero(a) || is_zero()) return *this;
    // Horner: p(x+a) built from the top coefficient down
    UniPoly shift = UniPoly(ctx_, {a, ctx_->one()});
    UniPoly r(ctx_);
    for (std::size_t i = c_.size(); i-- > 0;) {
        r = r * shift;
        r = r + constant(ctx_, c_[i]);
    }
    return r;
}

UniPoly UniPoly::scale_arg(const Fq& c) const {
    std::vector<Fq> r(c_);
    Fq pw = ctx_->one();
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = ctx_->mul(r[i], pw);
        if (i + 1 < r.size()) pw = ctx_->mul(pw, c);
    }
    return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::pow(u64 e) const {
    UniPoly r = constant(ctx_, ctx_->one());
    UniPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

UniPoly UniPoly::pow_mod(u64 e, const UniPoly& mod) const {
    UniPoly r = constant(ctx_, ctx_->one());
    UniPoly b = *this % mod;
    while (e) {
        if (e & 1) r = (r * b) % mod;
        if (e >>= 1) b = (b * b) % mod;
    }
    return r;
}

UniPoly UniPoly::compose(const UniPoly& q, int trunc) const {
    UniPoly r(ctx_);
    for (std::size_t i = c_.size(); i-- > 0;) {
        r = trunc >= 0 ? r.mul_trunc(q, trunc) : r * q;
        r = r + constant(ctx_, c_[i]);
    }
    if (trunc >= 0) r = r.truncated(trunc);
    return r;
}

UniPoly UniPoly::truncated(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return UniPoly(ctx_, std::vector<Fq>(c_.begin(), c_.begin() + n));
}

UniPoly UniPoly::mul_trunc(const UniPoly& o, std::size_t n) const {
    if (is_zero() || o.is_zero() || n == 0) return UniPoly(ctx_);
    std::vector<Fq> r(std::min(n, c_.size() + o.c_.size() - 1), ctx_->zero());
    for (std::size_t i = 0; i < c_.size() && i < n; ++i) {
        if (ctx_->is_zero(c_[i])) continue;
        std::size_t jmax = std::min(o.c_.size(), n - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (ctx_->is_zero(o.c_[j])) continue;
            r[i + j] = ctx_->add(r[i + j], ctx_->mul(c_[i], o.c_[j]));
        }
    }
    return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::inv_series(std::size_t n) const {
    check(!is_zero() && !ctx_->is_zero(c_[0]), ErrorCode::Singular,
          "series inverse needs a unit constant term");
    UniPoly r = constant(ctx_, ctx_->inv(c_[0]));
    std::size_t prec = 1;
    while (prec < n) {
        prec = std::min(2 * prec, n);
        // r <- r*(2 - f*r) mod x^prec
        UniPoly t = mul_trunc(r, prec);
        UniPoly two = constant(ctx_, ctx_->from_int(2));
        r = r.mul_trunc(two - t, prec);
    }
    return r.truncated(n);
}

std::size_t UniPoly::valuation() const {
    if (is_zero()) return static_cast<std::size_t>(-1);
    std::size_t v = 0;
    while (ctx_->is_zero(c_[v])) ++v;
    return v;
}

UniPoly UniPoly::shift_down(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    check(valuation() >= k, ErrorCode::InternalInvariantBroken, "inexact division by x^k");
    return UniPoly(ctx_, std::vector<Fq>(c_.begin() + k, c_.end()));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (ctx_->is_zero(c_[i])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(";
        for (std::size_t j = 0; j < c_[i].c.size(); ++j) {
            if (j) os << ",";
            os << c_[i].c[j];
        }
        os << ")";
        if (i) os << var << "^" << i;
    }
    return os.str();
}

u64 UniPoly::hash(u64 seed) const {
    u64 h = seed;
    for (const auto& x : c_)
        h = fnv1a(x.c.data(), x.c.size() * sizeof(u64), h);
    u64 n = c_.size();
    return fnv1a(&n, sizeof(n), h);
}

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
    check(a.ctx()->same(*b.ctx()), ErrorCode::ContextMismatch, "gcd");
    UniPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        UniPoly r2 = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

XgcdResult uni_xgcd(const UniPoly& a, const UniPoly& b) {
    auto ctx = a.ctx();
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(ctx, ctx->one()), s1 = UniPoly::zero(ctx);
    UniPoly t0 = UniPoly::zero(ctx), t1 = UniPoly::constant(ctx, ctx->one());
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divrem(r1);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Fq li = ctx->inv(r0.lc());
    return {r0.mul_scalar(li), s0.mul_scalar(li), t0.mul_scalar(li)};
}

UniPoly crt_combine(const std::vector<UniPoly>& residues, const std::vector<UniPoly>& moduli) {
    check(residues.size() == moduli.size() && !moduli.empty(), ErrorCode::ContextMismatch,
          "crt argument mismatch");
    UniPoly acc = residues[0] % moduli[0];
    UniPoly mod = moduli[0];
    for (std::size_t i = 1; i < moduli.size(); ++i) {
        auto x = uni_xgcd(mod, moduli[i]);
        check(x.g.is_one(), ErrorCode::NotCoprime, "crt moduli share a factor");
        // acc + mod * u * (r_i - acc) mod (mod * m_i)
        UniPoly nmod = mod * moduli[i];
        UniPoly delta = (residues[i] - acc) % moduli[i];
        UniPoly lift = (x.u * delta) % moduli[i];
        acc = (acc + mod * lift) % nmod;
        mod = std::move(nmod);
    }
    return acc;
}

} // namespace curvebasis
