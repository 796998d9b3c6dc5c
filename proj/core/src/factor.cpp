#include "curvebasis/factor.hpp"

#include <algorithm>

#include "curvebasis/opcount.hpp"

namespace curvebasis {

namespace {

struct SplitMix {
    u64 s;
    explicit SplitMix(u64 seed) : s(seed) {}
    u64 next() {
        u64 z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

Fq random_fq(const FqCtxPtr& ctx, SplitMix& rng) {
    Fq a = ctx->zero();
    for (int i = 0; i < ctx->degree(); ++i) a.c[i] = rng.next() % ctx->p();
    return a;
}

UniPoly random_poly(const FqCtxPtr& ctx, int deg, SplitMix& rng) {
    std::vector<Fq> c(deg + 1, ctx->zero());
    for (int i = 0; i <= deg; ++i) c[i] = random_fq(ctx, rng);
    return UniPoly(ctx, std::move(c));
}

/// p-th root of a polynomial whose support lies in p-multiples.
UniPoly pth_root(const UniPoly& a) {
    auto ctx = a.ctx();
    u64 p = ctx->p();
    std::vector<Fq> r(a.degree() / p + 1, ctx->zero());
    for (int i = 0; i <= a.degree(); ++i) {
        Fq c = a.coeff(i);
        if (ctx->is_zero(c)) continue;
        check(i % p == 0, ErrorCode::InternalInvariantBroken, "pth_root support");
        r[i / p] = ctx->degree() == 1 ? c : ctx->pow_p(c, ctx->degree() - 1);
    }
    return UniPoly(ctx, std::move(r));
}

/// h^p mod f via Frobenius on coefficients and composition with x^p mod f.
UniPoly poly_pow_p_mod(const UniPoly& h, const UniPoly& f, const UniPoly& xp) {
    auto ctx = h.ctx();
    UniPoly r = UniPoly::zero(ctx);
    for (int i = h.degree(); i >= 0; --i) {
        r = (r * xp) % f;
        Fq c = h.coeff(i);
        if (!ctx->is_zero(c)) r = r + UniPoly::constant(ctx, ctx->pow_p(c));
    }
    return r;
}

/// x^(q^steps) starting from h = x^(q^0); q = p^ctxdeg applied per step.
UniPoly frobenius_q_step(const UniPoly& h, const UniPoly& f, const UniPoly& xp) {
    UniPoly r = h;
    for (int i = 0; i < h.ctx()->degree(); ++i) r = poly_pow_p_mod(r, f, xp);
    return r;
}

void edf(const UniPoly& f, int d, SplitMix& rng, const UniPoly& xp, std::vector<UniPoly>& out) {
    auto ctx = f.ctx();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const u64 p = ctx->p();
    const int m = ctx->degree() * d; // q^d = p^m
    while (true) {
        UniPoly h = random_poly(ctx, f.degree() - 1, rng);
        if (h.is_zero()) continue;
        UniPoly g0 = uni_gcd(h, f);
        if (!g0.is_constant()) {
            edf(g0, d, rng, xp, out);
            edf(f.exact_div(g0), d, rng, xp, out);
            return;
        }
        // t = h^((q^d-1)/2) = (h^(1+p+...+p^(m-1)))^((p-1)/2) mod f
        UniPoly s = h % f;
        for (int i = 1; i < m; ++i) s = (poly_pow_p_mod(s, f, xp) * h) % f;
        UniPoly t = s.pow_mod((p - 1) / 2, f);
        UniPoly g = uni_gcd(t - UniPoly::constant(ctx, ctx->one()), f);
        if (g.is_constant() || g.degree() == f.degree()) continue;
        edf(g, d, rng, xp, out);
        edf(f.exact_div(g), d, rng, xp, out);
        return;
    }
}

} // namespace

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& a) {
    check(!a.is_zero(), ErrorCode::Singular, "squarefree decomposition of zero");
    std::vector<std::pair<UniPoly, int>> result;
    UniPoly f = a.monic();
    if (f.degree() == 0) return result;
    UniPoly fp = f.derivative();
    if (fp.is_zero()) {
        for (auto& [h, m] : squarefree_decomposition(pth_root(f)))
            result.emplace_back(h, m * static_cast<int>(f.ctx()->p()));
        return result;
    }
    UniPoly c = uni_gcd(f, fp);
    UniPoly w = f.exact_div(c);
    int i = 1;
    while (w.degree() > 0) {
        UniPoly y = uni_gcd(w, c);
        UniPoly z = w.exact_div(y);
        if (z.degree() > 0) result.emplace_back(z.monic(), i);
        w = std::move(y);
        c = c.exact_div(w);
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [h, m] : squarefree_decomposition(pth_root(c)))
            result.emplace_back(h, m * static_cast<int>(f.ctx()->p()));
    }
    return result;
}

bool poly_canonical_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const Fq& x = a.coeff(i);
        const Fq& y = b.coeff(i);
        if (x.c != y.c) return std::lexicographical_compare(x.c.begin(), x.c.end(), y.c.begin(), y.c.end());
    }
    return false;
}

std::vector<std::pair<UniPoly, int>> factor_univariate(const UniPoly& a) {
    opcount::PhaseScope phase(Phase::Factorization);
    check(!a.is_zero(), ErrorCode::Singular, "factorization of zero");
    std::vector<std::pair<UniPoly, int>> result;
    if (a.degree() == 0) return result;
    auto ctx = a.ctx();
    SplitMix rng(global_seed() ^ a.hash() ^ fnv1a(ctx->min_poly().data(),
                                                 ctx->min_poly().size() * sizeof(u64), ctx->p()));
    for (auto& [part, mult] : squarefree_decomposition(a)) {
        // distinct-degree split of the squarefree part
        UniPoly f = part;
        UniPoly x = UniPoly(ctx, {ctx->zero(), ctx->one()});
        UniPoly xp = x.pow_mod(ctx->p(), f);
        UniPoly h = x % f;
        for (int d = 1; f.degree() > 0 && 2 * d <= f.degree(); ++d) {
            h = frobenius_q_step(h, f, xp);
            UniPoly g = uni_gcd(h - x, f);
            if (g.degree() > 0) {
                std::vector<UniPoly> irr;
                edf(g, d, rng, xp, irr);
                for (auto& q : irr) result.emplace_back(q, mult);
                f = f.exact_div(g);
                if (f.degree() > 0) {
                    xp = x.pow_mod(ctx->p(), f);
                    h = h % f;
                }
            }
        }
        if (f.degree() > 0) result.emplace_back(f.monic(), mult);
    }
    std::sort(result.begin(), result.end(),
              [](const auto& l, const auto& r) { return poly_canonical_less(l.first, r.first); });
    return result;
}

std::vector<std::pair<UniPoly, int>> square_multiplicity_factors(const UniPoly& D) {
    check(!D.is_zero(), ErrorCode::Singular, "square factors of zero");
    std::vector<std::pair<UniPoly, int>> result;
    for (auto& [part, mult] : squarefree_decomposition(D)) {
        if (mult < 2) continue;
        for (auto& [phi, one] : factor_univariate(part)) {
            (void)one;
            result.emplace_back(phi, mult);
        }
    }
    std::sort(result.begin(), result.end(),
              [](const auto& l, const auto& r) { return poly_canonical_less(l.first, r.first); });
    return result;
}

bool is_irreducible(const UniPoly& f) {
    opcount::PhaseScope phase(Phase::Factorization);
    auto ctx = f.ctx();
    int m = f.degree();
    if (m <= 0) return false;
    if (m == 1) return true;
    UniPoly x = UniPoly(ctx, {ctx->zero(), ctx->one()});
    UniPoly xp = x.pow_mod(ctx->p(), f);
    // x^(q^m) must reduce to x, and gcd probes at maximal proper divisors must be trivial
    std::vector<int> prime_divs;
    int mm = m;
    for (int t = 2; t * t <= mm; ++t)
        while (mm % t == 0) {
            if (prime_divs.empty() || prime_divs.back() != t) prime_divs.push_back(t);
            mm /= t;
        }
    if (mm > 1) prime_divs.push_back(mm);
    std::vector<UniPoly> frob(m + 1, UniPoly::zero(ctx));
    frob[0] = x % f;
    for (int i = 1; i <= m; ++i) frob[i] = frobenius_q_step(frob[i - 1], f, xp);
    if (frob[m] != x % f) return false;
    for (int t : prime_divs) {
        UniPoly g = uni_gcd(frob[m / t] - x, f);
        if (!g.is_constant()) return false;
    }
    return true;
}

UniPoly random_irreducible(const FqCtxPtr& ctx, int deg, u64 seed_mix) {
    check(deg >= 1, ErrorCode::ContextMismatch, "irreducible degree must be positive");
    SplitMix rng(global_seed() ^ seed_mix ^ (0xabcdULL + deg) * 0x9e3779b97f4a7c15ULL);
    for (int attempt = 0; attempt < 1 << 20; ++attempt) {
        UniPoly cand = random_poly(ctx, deg - 1, rng) +
                       UniPoly::monomial(ctx, ctx->one(), deg);
        if (is_irreducible(cand)) return cand;
    }
    raise(ErrorCode::InternalInvariantBroken, "random irreducible search exhausted");
}

std::vector<Fq> poly_roots(const UniPoly& f) {
    std::vector<Fq> roots;
    for (auto& [q, mult] : factor_univariate(f)) {
        (void)mult;
        if (q.degree() == 1) roots.push_back(f.ctx()->neg(q.coeff(0)));
    }
    return roots;
}

} // namespace curvebasis
