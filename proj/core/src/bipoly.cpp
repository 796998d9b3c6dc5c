#include "curvebasis/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace curvebasis {

BiPoly::BiPoly(FqCtxPtr ctx, std::vector<UniPoly> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (auto& u : c_)
        check(u.ctx() == nullptr || u.ctx()->same(*ctx_), ErrorCode::ContextMismatch, "bipoly coeff ctx");
    trim();
}

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::from_unipoly(const UniPoly& p) {
    BiPoly r(p.ctx());
    if (!p.is_zero()) r.c_.push_back(p);
    return r;
}

BiPoly BiPoly::term(const UniPoly& c, std::size_t j) {
    BiPoly r(c.ctx());
    if (c.is_zero()) return r;
    r.c_.assign(j + 1, UniPoly::zero(c.ctx()));
    r.c_[j] = c;
    return r;
}

BiPoly BiPoly::y_power(const FqCtxPtr& ctx, std::size_t j) {
    return term(UniPoly::constant(ctx, ctx->one()), j);
}

int BiPoly::xdeg() const {
    int d = -1;
    for (const auto& u : c_) d = std::max(d, u.degree());
    return d;
}

bool BiPoly::monic_in_y() const {
    return !c_.empty() && c_.back().is_one();
}

UniPoly BiPoly::coeff(std::size_t j) const {
    return j < c_.size() ? c_[j] : UniPoly::zero(ctx_);
}

void BiPoly::set_coeff(std::size_t j, const UniPoly& v) {
    if (j >= c_.size()) {
        if (v.is_zero()) return;
        c_.resize(j + 1, UniPoly::zero(ctx_));
    }
    c_[j] = v;
    trim();
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    std::vector<UniPoly> r(std::max(c_.size(), o.c_.size()), UniPoly::zero(ctx_));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return BiPoly(ctx_, std::move(r));
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    std::vector<UniPoly> r(std::max(c_.size(), o.c_.size()), UniPoly::zero(ctx_));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return BiPoly(ctx_, std::move(r));
}

BiPoly BiPoly::operator-() const {
    std::vector<UniPoly> r(c_);
    for (auto& u : r) u = -u;
    return BiPoly(ctx_, std::move(r));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return BiPoly(ctx_);
    std::vector<UniPoly> r(c_.size() + o.c_.size() - 1, UniPoly::zero(ctx_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
    }
    return BiPoly(ctx_, std::move(r));
}

BiPoly BiPoly::mul_trunc_x(const BiPoly& o, std::size_t xcut) const {
    if (is_zero() || o.is_zero()) return BiPoly(ctx_);
    std::vector<UniPoly> r(c_.size() + o.c_.size() - 1, UniPoly::zero(ctx_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] = (r[i + j] + c_[i].mul_trunc(o.c_[j], xcut)).truncated(xcut);
        }
    }
    return BiPoly(ctx_, std::move(r));
}

BiPoly BiPoly::mul_scalar(const Fq& s) const {
    std::vector<UniPoly> r(c_);
    for (auto& u : r) u = u.mul_scalar(s);
    return BiPoly(ctx_, std::move(r));
}

BiPoly BiPoly::mul_unipoly(const UniPoly& u) const {
    std::vector<UniPoly> r(c_);
    for (auto& w : r) w = w * u;
    return BiPoly(ctx_, std::move(r));
}

std::pair<BiPoly, BiPoly> BiPoly::divrem_y(const BiPoly& d) const {
    check(d.monic_in_y(), ErrorCode::InternalInvariantBroken, "divrem_y divisor must be monic in y");
    if (ydeg() < d.ydeg()) return {BiPoly(ctx_), *this};
    std::vector<UniPoly> rem(c_);
    std::vector<UniPoly> q(ydeg() - d.ydeg() + 1, UniPoly::zero(ctx_));
    for (int k = ydeg(); k >= d.ydeg(); --k) {
        UniPoly c = rem[k];
        if (c.is_zero()) continue;
        q[k - d.ydeg()] = c;
        for (int j = 0; j <= d.ydeg(); ++j)
            rem[k - d.ydeg() + j] = rem[k - d.ydeg() + j] - c * d.c_[j];
    }
    return {BiPoly(ctx_, std::move(q)), BiPoly(ctx_, std::move(rem))};
}

BiPoly BiPoly::derivative_y() const {
    if (c_.size() <= 1) return BiPoly(ctx_);
    std::vector<UniPoly> r(c_.size() - 1, UniPoly::zero(ctx_));
    for (std::size_t j = 1; j < c_.size(); ++j)
        r[j - 1] = c_[j].mul_scalar(ctx_->from_int(static_cast<std::int64_t>(j % ctx_->p())));
    return BiPoly(ctx_, std::move(r));
}

BiPoly BiPoly::truncate_x(std::size_t xcut) const {
    std::vector<UniPoly> r(c_);
    for (auto& u : r) u = u.truncated(xcut);
    return BiPoly(ctx_, std::move(r));
}

BiPoly BiPoly::shift_x(const Fq& a) const {
    std::vector<UniPoly> r(c_);
    for (auto& u : r) u = u.taylor_shift(a);
    return BiPoly(ctx_, std::move(r));
}

BiPoly BiPoly::shift_y(const Fq& a) const {
    // Horner in y on the shifted variable
    BiPoly yplus = y_power(ctx_, 1) + from_unipoly(UniPoly::constant(ctx_, a));
    BiPoly r(ctx_);
    for (std::size_t j = c_.size(); j-- > 0;) {
        r = r * yplus;
        r = r + from_unipoly(c_[j]);
    }
    return r;
}

UniPoly BiPoly::eval_y(const UniPoly& g) const {
    UniPoly r = UniPoly::zero(ctx_);
    for (std::size_t j = c_.size(); j-- > 0;) {
        r = r * g;
        r = r + c_[j];
    }
    return r;
}

Fq BiPoly::eval(const Fq& x0, const Fq& y0) const {
    Fq r = ctx_->zero();
    for (std::size_t j = c_.size(); j-- > 0;) {
        r = ctx_->mul(r, y0);
        r = ctx_->add(r, c_[j].eval(x0));
    }
    return r;
}

BiPoly BiPoly::map(const FieldEmbedding& emb) const {
    std::vector<UniPoly> r;
    r.reserve(c_.size());
    for (const auto& u : c_) r.push_back(emb.apply(u));
    return BiPoly(emb.to, std::move(r));
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        if (os.tellp() > 0) os << " + ";
        os << "[" << c_[j].to_string() << "]";
        if (j) os << "*y^" << j;
    }
    return os.str();
}

u64 BiPoly::hash(u64 seed) const {
    u64 h = seed;
    for (const auto& u : c_) h = u.hash(h);
    return h;
}

namespace {

/// Pseudo-remainder: lc(B)^(degA-degB+1) * A mod B, computed incrementally.
BiPoly pseudo_rem(const BiPoly& A, const BiPoly& B) {
    auto ctx = A.ctx();
    const UniPoly lcB = B.coeff(B.ydeg());
    BiPoly rem = A;
    int e = A.ydeg() - B.ydeg() + 1;
    while (!rem.is_zero() && rem.ydeg() >= B.ydeg()) {
        UniPoly t = rem.coeff(rem.ydeg());
        int shift = rem.ydeg() - B.ydeg();
        rem = rem.mul_unipoly(lcB) - (B * BiPoly::term(t, shift));
        --e;
    }
    // pad so the full lc(B)^(delta+1) factor is present
    UniPoly pad = UniPoly::constant(ctx, ctx->one());
    for (int i = 0; i < e; ++i) pad = pad * lcB;
    return rem.mul_unipoly(pad);
}

BiPoly divide_coeffs(const BiPoly& A, const UniPoly& d) {
    std::vector<UniPoly> r;
    r.reserve(A.ydeg() + 1);
    for (int j = 0; j <= A.ydeg(); ++j) r.push_back(A.coeff(j).exact_div(d));
    return BiPoly(A.ctx(), std::move(r));
}

} // namespace

UniPoly resultant_y(const BiPoly& f, const BiPoly& g) {
    auto ctx = f.ctx();
    if (f.is_zero() || g.is_zero()) return UniPoly::zero(ctx);
    BiPoly A = f, B = g;
    bool negate = false;
    if (A.ydeg() < B.ydeg()) {
        if ((A.ydeg() & 1) && (B.ydeg() & 1)) negate = !negate;
        std::swap(A, B);
    }
    if (B.ydeg() == 0) {
        UniPoly r = B.coeff(0).pow(static_cast<u64>(A.ydeg()));
        return negate ? -r : r;
    }
    // subresultant PRS (Cohen, Alg. 3.3.7)
    UniPoly gg = UniPoly::constant(ctx, ctx->one());
    UniPoly hh = gg;
    while (true) {
        int dA = A.ydeg(), dB = B.ydeg();
        if ((dA & 1) && (dB & 1)) negate = !negate;
        int delta = dA - dB;
        BiPoly R = pseudo_rem(A, B);
        if (R.is_zero()) return UniPoly::zero(ctx);
        A = B;
        UniPoly hd = hh.pow(static_cast<u64>(delta));
        B = divide_coeffs(R, gg * hd);
        gg = A.coeff(A.ydeg());
        if (delta > 0) {
            // h <- g^delta / h^(delta-1)
            hh = gg.pow(static_cast<u64>(delta)).exact_div(hh.pow(static_cast<u64>(delta - 1)));
        }
        if (B.ydeg() <= 0) break;
    }
    if (B.is_zero()) return UniPoly::zero(ctx);
    int dA = A.ydeg();
    UniPoly res = B.coeff(0).pow(static_cast<u64>(dA)).exact_div(hh.pow(static_cast<u64>(dA - 1)));
    return negate ? -res : res;
}

UniPoly discriminant_y(const BiPoly& f) {
    check(f.monic_in_y() && f.ydeg() >= 1, ErrorCode::NotMonic, "discriminant needs monic f");
    UniPoly res = resultant_y(f, f.derivative_y());
    const int n = f.ydeg();
    if ((n * (n - 1) / 2) % 2) res = -res;
    check(!res.is_zero(), ErrorCode::SquarefreeViolation, "discriminant vanishes; f is not squarefree");
    return res;
}

BiPoly reduce_mod_f(const BiPoly& g, const BiPoly& f) {
    return g.divrem_y(f).second;
}

std::vector<RatFun> charpoly_of_element(const FieldElement& b, const BiPoly& f) {
    auto ctx = f.ctx();
    const int n = f.ydeg();
    check(f.monic_in_y() && n >= 1, ErrorCode::NotMonic, "charpoly needs monic f");
    check(b.num.ydeg() < n, ErrorCode::InternalInvariantBroken, "element numerator not reduced");
    check(static_cast<u64>(n) < ctx->p(), ErrorCode::TooSmall, "need p > n for interpolation");
    // R(T) = Res_y(f, den*T - num) has degree n with leading coefficient den^n
    std::vector<UniPoly> values;
    values.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        BiPoly G = BiPoly::from_unipoly(b.den.mul_scalar(ctx->from_int(k))) - b.num;
        values.push_back(resultant_y(f, G));
    }
    // Lagrange interpolation on scalar nodes 0..n
    std::vector<UniPoly> r(n + 1, UniPoly::zero(ctx));
    for (int k = 0; k <= n; ++k) {
        // expand L_k(T) = prod_{j != k} (T - j) / (k - j)
        std::vector<Fq> lk{ctx->one()};
        Fq denom = ctx->one();
        for (int j = 0; j <= n; ++j) {
            if (j == k) continue;
            std::vector<Fq> next(lk.size() + 1, ctx->zero());
            Fq mj = ctx->from_int(-j);
            for (std::size_t i = 0; i < lk.size(); ++i) {
                next[i] = ctx->add(next[i], ctx->mul(lk[i], mj));
                next[i + 1] = ctx->add(next[i + 1], lk[i]);
            }
            lk = std::move(next);
            denom = ctx->mul(denom, ctx->from_int(k - j));
        }
        Fq scale = ctx->inv(denom);
        for (std::size_t i = 0; i < lk.size(); ++i)
            r[i] = r[i] + values[k].mul_scalar(ctx->mul(lk[i], scale));
    }
    UniPoly denn = b.den.pow(static_cast<u64>(n));
    check(r[n] == denn, ErrorCode::InternalInvariantBroken, "charpoly leading coefficient");
    std::vector<RatFun> chi;
    chi.reserve(n + 1);
    for (int i = 0; i < n; ++i) chi.push_back(RatFun::of(r[i], denn));
    chi.push_back(RatFun::of(UniPoly::constant(ctx, ctx->one()), UniPoly::constant(ctx, ctx->one())));
    return chi;
}

std::vector<UniPoly> power_sums(const BiPoly& f) {
    auto ctx = f.ctx();
    const int n = f.ydeg();
    check(f.monic_in_y(), ErrorCode::NotMonic, "power sums need monic f");
    std::vector<UniPoly> s(n, UniPoly::zero(ctx));
    s[0] = UniPoly::constant(ctx, ctx->from_int(n));
    for (int k = 1; k < n; ++k) {
        UniPoly acc = f.coeff(n - k).mul_scalar(ctx->from_int(k));
        for (int i = 1; i < k; ++i) acc = acc + f.coeff(n - i) * s[k - i];
        s[k] = -acc;
    }
    return s;
}

RatFun trace_of(const FieldElement& b, const BiPoly& f) {
    auto s = power_sums(f);
    BiPoly red = reduce_mod_f(b.num, f);
    UniPoly acc = UniPoly::zero(f.ctx());
    for (int j = 0; j <= red.ydeg(); ++j) acc = acc + red.coeff(j) * s[j];
    return RatFun::of(acc, b.den);
}

BiPoly shift_origin(const BiPoly& f, const FieldEmbedding& emb, const Fq& alpha) {
    return f.map(emb).shift_x(alpha);
}

} // namespace curvebasis
