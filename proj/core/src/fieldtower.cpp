#include "curvebasis/fieldtower.hpp"

#include <algorithm>

#include "curvebasis/factor.hpp"
#include "curvebasis/opcount.hpp"

namespace curvebasis {

FieldEmbedding FieldEmbedding::identity(const FqCtxPtr& ctx) {
    return FieldEmbedding{ctx, ctx, ctx->gen()};
}

Fq FieldEmbedding::apply(const Fq& a) const {
    if (from->same(*to)) return a;
    // Horner over `to` in the generator image
    Fq r = to->zero();
    for (std::size_t i = a.c.size(); i-- > 0;) {
        r = to->mul(r, gen_image);
        r = to->add(r, to->from_int(static_cast<std::int64_t>(a.c[i])));
    }
    return r;
}

UniPoly FieldEmbedding::apply(const UniPoly& f) const {
    std::vector<Fq> c;
    c.reserve(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) c.push_back(apply(f.coeff(i)));
    return UniPoly(to, std::move(c));
}

FieldEmbedding FieldEmbedding::compose(const FieldEmbedding& f, const FieldEmbedding& g) {
    check(f.to->same(*g.from), ErrorCode::ContextMismatch, "embedding composition");
    return FieldEmbedding{f.from, g.to, g.apply(f.gen_image)};
}

namespace {

Fq smallest_root(const UniPoly& f) {
    auto roots = poly_roots(f);
    check(!roots.empty(), ErrorCode::InternalInvariantBroken, "expected a root in extension");
    auto less = [](const Fq& a, const Fq& b) {
        return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
    };
    return *std::min_element(roots.begin(), roots.end(), less);
}

} // namespace

ExtensionStep extend_by_factor(const FqCtxPtr& cur, const UniPoly& psi, u64 seed_mix) {
    check(psi.ctx()->same(*cur), ErrorCode::ContextMismatch, "extend_by_factor");
    check(psi.degree() >= 1, ErrorCode::ContextMismatch, "extend_by_factor needs deg >= 1");
    if (psi.degree() == 1) {
        Fq root = cur->neg(cur->mul(psi.coeff(0), cur->inv(psi.coeff(1))));
        return {cur, FieldEmbedding::identity(cur), root};
    }
    const int new_deg = cur->degree() * psi.degree();
    auto base = FqCtx::prime(cur->p());
    UniPoly M = random_irreducible(base, new_deg, seed_mix ^ psi.hash());
    std::vector<u64> mp;
    for (int i = 0; i <= M.degree(); ++i) mp.push_back(M.coeff(i).c[0]);
    FqCtxPtr next = FqCtx::extension(base, mp);

    FieldEmbedding emb;
    if (cur->is_prime_field()) {
        emb = FieldEmbedding{cur, next, next->one()};
    } else {
        // embed via a root of cur's minimal polynomial
        std::vector<Fq> mc;
        for (u64 c : cur->min_poly()) mc.push_back(next->from_int(static_cast<std::int64_t>(c)));
        UniPoly minpoly_in_next(next, std::move(mc));
        emb = FieldEmbedding{cur, next, smallest_root(minpoly_in_next)};
    }
    Fq root = smallest_root(emb.apply(psi));
    return {next, emb, root};
}

namespace {

/// Gaussian inverse of a square matrix over F_p; raises if singular.
std::vector<std::vector<u64>> invert_fp(const FqCtxPtr& prime_like, std::vector<std::vector<u64>> a) {
    const std::size_t n = a.size();
    const u64 p = prime_like->p();
    std::vector<std::vector<u64>> inv(n, std::vector<u64>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        check(piv < n, ErrorCode::Singular, "basis matrix singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        u64 d = prime_like->pinv(a[col][col]);
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = prime_like->pmul(a[col][j], d);
            inv[col][j] = prime_like->pmul(inv[col][j], d);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            u64 f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = prime_like->psub(a[r][j], prime_like->pmul(f, a[col][j]));
                inv[r][j] = prime_like->psub(inv[r][j], prime_like->pmul(f, inv[col][j]));
            }
        }
    }
    return inv;
}

} // namespace

SubfieldDecomposer::SubfieldDecomposer(const FieldEmbedding& emb) : emb_(emb) {
    const int l = emb.to->degree();
    const int k = emb.from->degree();
    check(l % k == 0, ErrorCode::ContextMismatch, "subfield degree must divide");
    rel_deg_ = l / k;
    // columns: theta^t * v^i as F_p vectors
    std::vector<std::vector<u64>> cols(l, std::vector<u64>(l, 0));
    Fq vpow = emb.to->one();
    for (int i = 0; i < rel_deg_; ++i) {
        Fq tp = vpow;
        for (int t = 0; t < k; ++t) {
            for (int r = 0; r < l; ++r) cols[i * k + t][r] = tp.c[r];
            if (t + 1 < k) tp = emb.to->mul(tp, emb.gen_image);
        }
        if (i + 1 < rel_deg_) vpow = emb.to->mul(vpow, emb.to->gen());
    }
    // transpose to row-major matrix whose columns are the basis vectors
    std::vector<std::vector<u64>> m(l, std::vector<u64>(l, 0));
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < l; ++c) m[r][c] = cols[c][r];
    inv_ = invert_fp(emb.to, std::move(m));
}

std::vector<Fq> SubfieldDecomposer::decompose(const Fq& a) const {
    const int l = emb_.to->degree();
    const int k = emb_.from->degree();
    std::vector<u64> x(l, 0);
    for (int r = 0; r < l; ++r) {
        u64 acc = 0;
        for (int c = 0; c < l; ++c)
            acc = emb_.to->padd(acc, emb_.to->pmul(inv_[r][c], c < static_cast<int>(a.c.size()) ? a.c[c] : 0));
        x[r] = acc;
    }
    std::vector<Fq> out(rel_deg_, emb_.from->zero());
    for (int i = 0; i < rel_deg_; ++i)
        for (int t = 0; t < k; ++t) out[i].c[t] = x[i * k + t];
    return out;
}

Fq SubfieldDecomposer::recompose(const std::vector<Fq>& coeffs) const {
    Fq acc = emb_.to->zero();
    Fq vpow = emb_.to->one();
    for (int i = 0; i < rel_deg_; ++i) {
        if (i) vpow = emb_.to->mul(vpow, emb_.to->gen());
        if (i < static_cast<int>(coeffs.size()))
            acc = emb_.to->add(acc, emb_.to->mul(emb_.apply(coeffs[i]), vpow));
    }
    return acc;
}

UniPoly SubfieldDecomposer::minpoly(const Fq& a) const {
    auto K = emb_.from;
    const int B = rel_deg_;
    // K-coordinate vectors of 1, a, a^2, ...
    std::vector<std::vector<Fq>> pows;
    Fq cur = emb_.to->one();
    for (int s = 0; s <= B; ++s) {
        pows.push_back(decompose(cur));
        if (s < B) cur = emb_.to->mul(cur, a);
    }
    for (int s = 1; s <= B; ++s) {
        std::vector<std::vector<Fq>> rows(B, std::vector<Fq>(s, K->zero()));
        std::vector<Fq> rhs(B, K->zero());
        for (int r = 0; r < B; ++r) {
            for (int i = 0; i < s; ++i) rows[r][i] = pows[i][r];
            rhs[r] = K->neg(pows[s][r]);
        }
        std::vector<Fq> sol;
        if (solve_field_system(K, rows, rhs, sol) != SolveOutcome::Inconsistent) {
            std::vector<Fq> c(sol);
            c.push_back(K->one());
            return UniPoly(K, std::move(c));
        }
    }
    raise(ErrorCode::InternalInvariantBroken, "minpoly search failed");
}

SolveOutcome solve_field_system(const FqCtxPtr& ctx, std::vector<std::vector<Fq>> rows,
                                std::vector<Fq> rhs, std::vector<Fq>& solution) {
    opcount::PhaseScope phase(Phase::LinearAlgebra);
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && ctx->is_zero(rows[piv][c])) ++piv;
        if (piv == m) continue;
        std::swap(rows[piv], rows[r]);
        std::swap(rhs[piv], rhs[r]);
        Fq d = ctx->inv(rows[r][c]);
        for (std::size_t j = c; j < n; ++j) rows[r][j] = ctx->mul(rows[r][j], d);
        rhs[r] = ctx->mul(rhs[r], d);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || ctx->is_zero(rows[i][c])) continue;
            Fq f = rows[i][c];
            for (std::size_t j = c; j < n; ++j)
                rows[i][j] = ctx->sub(rows[i][j], ctx->mul(f, rows[r][j]));
            rhs[i] = ctx->sub(rhs[i], ctx->mul(f, rhs[r]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (!ctx->is_zero(rhs[i])) return SolveOutcome::Inconsistent;
    solution.assign(n, ctx->zero());
    for (std::size_t i = 0; i < pivot_col.size(); ++i) solution[pivot_col[i]] = rhs[i];
    return pivot_col.size() == n ? SolveOutcome::Unique : SolveOutcome::Underdetermined;
}

} // namespace curvebasis
