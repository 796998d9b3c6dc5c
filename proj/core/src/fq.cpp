#include "curvebasis/fq.hpp"

#include <algorithm>
#include <cassert>

#include "curvebasis/opcount.hpp"

namespace curvebasis {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 g_seed = 0;

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

u64 fnv1a(const void* data, std::size_t len, u64 seed) {
    const unsigned char* b = static_cast<const unsigned char*>(data);
    u64 h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= b[i];
        h *= 1099511628211ULL;
    }
    return h;
}

void set_global_seed(u64 seed) { g_seed = seed; }
u64 global_seed() { return g_seed; }

FqCtxPtr FqCtx::prime(u64 p) {
    check(is_prime_u64(p), ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not prime");
    auto ctx = std::shared_ptr<FqCtx>(new FqCtx());
    ctx->p_ = p;
    ctx->deg_ = 1;
    return ctx;
}

FqCtxPtr FqCtx::extension(const FqCtxPtr& base, std::vector<u64> min_poly) {
    check(base && base->is_prime_field(), ErrorCode::ContextMismatch,
          "extension base must be a prime field");
    check(min_poly.size() >= 2 && min_poly.back() == 1, ErrorCode::ContextMismatch,
          "minimal polynomial must be monic of degree >= 1");
    if (min_poly.size() == 2) {
        // z - c collapses to the base field itself
        return base;
    }
    auto ctx = std::shared_ptr<FqCtx>(new FqCtx());
    ctx->p_ = base->p();
    ctx->deg_ = static_cast<int>(min_poly.size()) - 1;
    ctx->min_poly_ = std::move(min_poly);
    ctx->base_ = base;
    return ctx;
}

bool FqCtx::same(const FqCtx& o) const {
    return p_ == o.p_ && deg_ == o.deg_ && min_poly_ == o.min_poly_;
}

Fq FqCtx::zero() const {
    Fq a;
    a.c.assign(deg_, 0);
    return a;
}

Fq FqCtx::one() const { return from_int(1); }

Fq FqCtx::from_int(std::int64_t v) const {
    Fq a = zero();
    std::int64_t m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    a.c[0] = static_cast<u64>(r);
    return a;
}

Fq FqCtx::from_coeffs(const std::vector<u64>& coeffs) const {
    check(coeffs.size() <= static_cast<std::size_t>(deg_), ErrorCode::ContextMismatch,
          "coefficient vector longer than field degree");
    Fq a = zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i) a.c[i] = coeffs[i] % p_;
    return a;
}

Fq FqCtx::gen() const {
    Fq a = zero();
    if (deg_ == 1)
        a.c[0] = 1;
    else
        a.c[1] = 1;
    return a;
}

bool FqCtx::is_zero(const Fq& a) const {
    for (u64 x : a.c)
        if (x) return false;
    return true;
}

Fq FqCtx::add(const Fq& a, const Fq& b) const {
    Fq r = a;
    for (int i = 0; i < deg_; ++i) r.c[i] = padd(r.c[i], b.c[i]);
    return r;
}

Fq FqCtx::sub(const Fq& a, const Fq& b) const {
    Fq r = a;
    for (int i = 0; i < deg_; ++i) r.c[i] = psub(r.c[i], b.c[i]);
    return r;
}

Fq FqCtx::neg(const Fq& a) const {
    Fq r = a;
    for (int i = 0; i < deg_; ++i) r.c[i] = r.c[i] ? p_ - r.c[i] : 0;
    return r;
}

Fq FqCtx::mul(const Fq& a, const Fq& b) const {
    opcount::count_mul();
    if (deg_ == 1) {
        Fq r;
        r.c.assign(1, mulmod(a.c[0], b.c[0], p_));
        return r;
    }
    // schoolbook product, then reduction by the monic minimal polynomial
    std::vector<u64> prod(2 * deg_ - 1, 0);
    for (int i = 0; i < deg_; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j < deg_; ++j) {
            if (!b.c[j]) continue;
            prod[i + j] = padd(prod[i + j], mulmod(a.c[i], b.c[j], p_));
        }
    }
    for (int k = 2 * deg_ - 2; k >= deg_; --k) {
        u64 t = prod[k];
        if (!t) continue;
        prod[k] = 0;
        for (int j = 0; j < deg_; ++j) {
            if (!min_poly_[j]) continue;
            prod[k - deg_ + j] = psub(prod[k - deg_ + j], mulmod(t, min_poly_[j], p_));
        }
    }
    Fq r;
    r.c.assign(prod.begin(), prod.begin() + deg_);
    return r;
}

Fq FqCtx::mul_scalar(const Fq& a, u64 s) const {
    s %= p_;
    Fq r = a;
    for (int i = 0; i < deg_; ++i) r.c[i] = mulmod(r.c[i], s, p_);
    return r;
}

Fq FqCtx::inv(const Fq& a) const {
    check(!is_zero(a), ErrorCode::Singular, "inversion of zero");
    opcount::count_inv();
    if (deg_ == 1) {
        Fq r;
        r.c.assign(1, powmod(a.c[0], p_ - 2, p_));
        return r;
    }
    // extended Euclid in F_p[z] against the minimal polynomial
    std::vector<u64> r0(min_poly_), r1(a.c.begin(), a.c.end());
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<u64> t0, t1{1};
    auto deg_of = [](const std::vector<u64>& v) { return static_cast<int>(v.size()) - 1; };
    while (r1.size() > 1) {
        // divide r0 by r1
        std::vector<u64> q(deg_of(r0) - deg_of(r1) + 1, 0);
        std::vector<u64> rem = r0;
        u64 lead_inv = powmod(r1.back(), p_ - 2, p_);
        for (int k = deg_of(rem); k >= deg_of(r1); --k) {
            u64 c = mulmod(rem[k], lead_inv, p_);
            if (!c) continue;
            q[k - deg_of(r1)] = c;
            for (int j = 0; j <= deg_of(r1); ++j)
                rem[k - deg_of(r1) + j] = psub(rem[k - deg_of(r1) + j], mulmod(c, r1[j], p_));
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // t-update: t2 = t0 - q*t1
        std::vector<u64> t2 = t0;
        t2.resize(std::max(t0.size(), q.size() + t1.size()), 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (!q[i]) continue;
            for (std::size_t j = 0; j < t1.size(); ++j)
                t2[i + j] = psub(t2[i + j], mulmod(q[i], t1[j], p_));
        }
        while (!t2.empty() && t2.back() == 0) t2.pop_back();
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
        check(!r1.empty(), ErrorCode::Singular, "non-invertible element (reducible modulus?)");
    }
    u64 scale = powmod(r1[0], p_ - 2, p_);
    Fq out = zero();
    for (std::size_t i = 0; i < t1.size(); ++i) out.c[i] = mulmod(t1[i], scale, p_);
    return out;
}

Fq FqCtx::pow(Fq a, u64 e) const {
    Fq r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

void FqCtx::ensure_frobenius() const {
    if (!frob_.empty() || deg_ == 1) return;
    // z^p mod m, then its powers give the images of the basis
    Fq zp = pow(gen(), p_);
    std::vector<std::vector<u64>> cols(deg_);
    Fq cur = one();
    for (int i = 0; i < deg_; ++i) {
        cols[i].assign(cur.c.begin(), cur.c.end());
        if (i + 1 < deg_) cur = mul(cur, zp);
    }
    frob_ = std::move(cols);
}

Fq FqCtx::pow_p(const Fq& a, u64 k) const {
    if (deg_ == 1) return a;
    ensure_frobenius();
    Fq r = a;
    for (u64 step = 0; step < k; ++step) {
        Fq next = zero();
        for (int i = 0; i < deg_; ++i) {
            if (!r.c[i]) continue;
            for (int j = 0; j < deg_; ++j)
                next.c[j] = padd(next.c[j], mulmod(r.c[i], frob_[i][j], p_));
        }
        opcount::count_mul();
        r = next;
    }
    return r;
}

Fq FqCtx::pow_q_minus_1_over(const Fq& a, u64 d) const {
    // digits of (p^deg - 1)/d in base p, most significant first
    int r = deg_;
    std::vector<u64> digits(r);
    u128 rem = 0;
    for (int i = 0; i < r; ++i) {
        u128 cur = rem * p_ + (p_ - 1);
        digits[i] = static_cast<u64>(cur / d);
        rem = cur % d;
    }
    check(rem == 0, ErrorCode::InternalInvariantBroken, "d does not divide p^deg - 1");
    // a^E = prod_i (a^(p^(r-1-i)))^digits[i]
    Fq acc = one();
    std::vector<Fq> fp(r);
    fp[0] = a;
    for (int j = 1; j < r; ++j) fp[j] = pow_p(fp[j - 1]);
    for (int i = 0; i < r; ++i) {
        if (digits[i]) acc = mul(acc, pow(fp[r - 1 - i], digits[i]));
    }
    return acc;
}

u64 FqCtx::padd(u64 a, u64 b) const {
    u64 s = a + b;
    if (s >= p_) s -= p_;
    return s;
}

u64 FqCtx::psub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }

u64 FqCtx::pmul(u64 a, u64 b) const { return mulmod(a, b, p_); }

u64 FqCtx::pinv(u64 a) const {
    check(a % p_ != 0, ErrorCode::Singular, "inversion of zero scalar");
    return powmod(a, p_ - 2, p_);
}

u64 FqCtx::ppow(u64 a, u64 e) const { return powmod(a, e, p_); }

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::SquarefreeViolation: return "SquarefreeViolation";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
        case ErrorCode::WildRamification: return "WildRamification";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::NonIntegralTrace: return "NonIntegralTrace";
        case ErrorCode::InternalInvariantBroken: return "InternalInvariantBroken";
        case ErrorCode::VerificationFailure: return "VerificationFailure";
    }
    return "Unknown";
}

} // namespace curvebasis
