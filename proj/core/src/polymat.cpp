#include "curvebasis/polymat.hpp"

#include <algorithm>

#include "curvebasis/opcount.hpp"
#include "curvebasis/ratfun.hpp"

namespace curvebasis {

PolyMatrix::PolyMatrix(FqCtxPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), cols_(cols), r_(rows, std::vector<UniPoly>(cols, UniPoly::zero(ctx_))) {
    for (auto& row : r_)
        for (auto& e : row) e = UniPoly::zero(ctx_);
}

PolyMatrix PolyMatrix::identity(const FqCtxPtr& ctx, std::size_t n) {
    PolyMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = UniPoly::constant(ctx, ctx->one());
    return m;
}

PolyMatrix PolyMatrix::from_rows(FqCtxPtr ctx, std::vector<std::vector<UniPoly>> rows) {
    PolyMatrix m;
    m.ctx_ = std::move(ctx);
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    for (auto& r : rows)
        check(r.size() == m.cols_, ErrorCode::ContextMismatch, "ragged matrix rows");
    m.r_ = std::move(rows);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    check(cols_ == o.rows(), ErrorCode::ContextMismatch, "matrix product shape");
    PolyMatrix out(ctx_, rows(), o.cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (r_[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < o.cols(); ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + r_[i][k] * o.at(k, j);
            }
        }
    return out;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(ctx_, cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = r_[i][j];
    return out;
}

namespace {

struct Eliminator {
    PolyMatrix m;
    PolyMatrix u;
    bool track;
    const UniPoly* modq = nullptr; // reduce entries of columns < qcols mod Q
    std::size_t qcols = 0;

    void addmul(std::size_t dst, std::size_t src, const UniPoly& f) {
        if (f.is_zero()) return;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            m.at(dst, j) = m.at(dst, j) - f * m.at(src, j);
            if (modq && j < qcols) m.at(dst, j) = m.at(dst, j) % *modq;
        }
        if (track)
            for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) = u.at(dst, j) - f * u.at(src, j);
    }

    /// Unimodular 2x2 transform putting gcd at (a,c) and zero at (b,c).
    void combine(std::size_t a, std::size_t b, std::size_t c) {
        const UniPoly &pa = m.at(a, c), &pb = m.at(b, c);
        if (pb.is_zero()) return;
        if (pa.is_zero()) {
            std::swap(m.row_ref(a), m.row_ref(b));
            if (track) std::swap(u.row_ref(a), u.row_ref(b));
            return;
        }
        auto x = uni_xgcd(pa, pb);
        UniPoly qa = pa.exact_div(x.g), qb = pb.exact_div(x.g);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            UniPoly na = x.u * m.at(a, j) + x.v * m.at(b, j);
            UniPoly nb = qa * m.at(b, j) - qb * m.at(a, j);
            if (modq && j < qcols) {
                na = na % *modq;
                nb = nb % *modq;
            }
            m.at(a, j) = std::move(na);
            m.at(b, j) = std::move(nb);
        }
        if (track)
            for (std::size_t j = 0; j < u.cols(); ++j) {
                UniPoly na = x.u * u.at(a, j) + x.v * u.at(b, j);
                UniPoly nb = qa * u.at(b, j) - qb * u.at(a, j);
                u.at(a, j) = std::move(na);
                u.at(b, j) = std::move(nb);
            }
    }

    void scale(std::size_t i, const Fq& s) {
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j).mul_scalar(s);
        if (track)
            for (std::size_t j = 0; j < u.cols(); ++j) u.at(i, j) = u.at(i, j).mul_scalar(s);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(m.row_ref(a), m.row_ref(b));
        if (track) std::swap(u.row_ref(a), u.row_ref(b));
    }
};

} // namespace

HnfResult hermite_normal_form(const PolyMatrix& min) {
    opcount::PhaseScope phase(Phase::LinearAlgebra);
    auto ctx = min.ctx();
    Eliminator e{min, PolyMatrix::identity(ctx, min.rows()), true};
    std::size_t pr = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < min.cols() && pr < min.rows(); ++c) {
        // gather column entries into one gcd at row pr
        for (std::size_t i = pr + 1; i < e.m.rows(); ++i) e.combine(pr, i, c);
        if (e.m.at(pr, c).is_zero()) continue;
        if (!(e.m.at(pr, c).lc() == ctx->one())) e.scale(pr, ctx->inv(e.m.at(pr, c).lc()));
        for (std::size_t i = 0; i < pr; ++i) {
            UniPoly q = e.m.at(i, c) / e.m.at(pr, c);
            e.addmul(i, pr, q);
        }
        pivots.push_back(c);
        ++pr;
    }
    // drop all-zero tail rows from h (u keeps full size)
    std::vector<std::vector<UniPoly>> hr;
    for (std::size_t i = 0; i < pr; ++i) {
        std::vector<UniPoly> row;
        for (std::size_t j = 0; j < e.m.cols(); ++j) row.push_back(e.m.at(i, j));
        hr.push_back(std::move(row));
    }
    return {PolyMatrix::from_rows(ctx, std::move(hr)), e.u};
}

PolyMatrix hnf_basis(const PolyMatrix& m) { return hermite_normal_form(m).h; }

PolyMatrix kernel_mod_Q(const PolyMatrix& min, const UniPoly& Q) {
    opcount::PhaseScope phase(Phase::LinearAlgebra);
    auto ctx = min.ctx();
    check(!Q.is_zero(), ErrorCode::ContextMismatch, "kernel_mod_Q needs Q != 0");
    const std::size_t n = min.rows(), w = min.cols();
    if (Q.degree() == 0)
        return PolyMatrix::identity(ctx, n);
    // rows [M_i | e_i] and [Q e_j | 0]; eliminating the first block mod Q
    // leaves kernel generators in the second block.
    std::vector<std::vector<UniPoly>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<UniPoly> r;
        for (std::size_t j = 0; j < w; ++j) r.push_back(min.at(i, j) % Q);
        for (std::size_t j = 0; j < n; ++j)
            r.push_back(i == j ? UniPoly::constant(ctx, ctx->one()) : UniPoly::zero(ctx));
        rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < w; ++j) {
        std::vector<UniPoly> r(w + n, UniPoly::zero(ctx));
        r[j] = Q;
        rows.push_back(std::move(r));
    }
    Eliminator e{PolyMatrix::from_rows(ctx, std::move(rows)), PolyMatrix(), false};
    e.modq = &Q;
    e.qcols = w;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < w && pr < e.m.rows(); ++c) {
        for (std::size_t i = pr + 1; i < e.m.rows(); ++i) e.combine(pr, i, c);
        if (!e.m.at(pr, c).is_zero()) ++pr;
    }
    std::vector<std::vector<UniPoly>> ker;
    for (std::size_t i = pr; i < e.m.rows(); ++i) {
        bool zero_first = true;
        for (std::size_t j = 0; j < w; ++j)
            if (!e.m.at(i, j).is_zero()) { zero_first = false; break; }
        check(zero_first, ErrorCode::InternalInvariantBroken, "kernel elimination left first block");
        std::vector<UniPoly> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(e.m.at(i, w + j));
        ker.push_back(std::move(row));
    }
    PolyMatrix basis = hnf_basis(PolyMatrix::from_rows(ctx, std::move(ker)));
    check(basis.rows() == n, ErrorCode::InternalInvariantBroken, "kernel module rank");
    return basis;
}

PolyMatrix row_reduce_fractions(const PolyMatrix& m) {
    PolyMatrix h = hnf_basis(m);
    check(h.rows() == m.cols(), ErrorCode::RankDeficient, "row reduction lost rank");
    return h;
}

UniPoly determinant(const PolyMatrix& min) {
    opcount::PhaseScope phase(Phase::LinearAlgebra);
    auto ctx = min.ctx();
    check(min.rows() == min.cols(), ErrorCode::ContextMismatch, "determinant of non-square matrix");
    const std::size_t n = min.rows();
    if (n == 0) return UniPoly::constant(ctx, ctx->one());
    PolyMatrix a = min;
    UniPoly prev = UniPoly::constant(ctx, ctx->one());
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t s = k + 1;
            while (s < n && a.at(s, k).is_zero()) ++s;
            if (s == n) return UniPoly::zero(ctx);
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(s, j));
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)).exact_div(prev);
            a.at(i, k) = UniPoly::zero(ctx);
        }
        prev = a.at(k, k);
    }
    UniPoly det = a.at(n - 1, n - 1);
    return neg ? -det : det;
}

bool hnf_member(const PolyMatrix& h, const std::vector<UniPoly>& v, std::vector<UniPoly>* coords) {
    auto ctx = h.ctx();
    std::vector<UniPoly> w = v;
    if (coords) coords->assign(h.rows(), UniPoly::zero(ctx));
    for (std::size_t i = 0; i < h.rows(); ++i) {
        // pivot column of row i
        std::size_t c = 0;
        while (c < h.cols() && h.at(i, c).is_zero()) ++c;
        if (c == h.cols()) continue;
        UniPoly q = w[c] / h.at(i, c);
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < h.cols(); ++j) w[j] = w[j] - q * h.at(i, j);
        if (coords) (*coords)[i] = q;
    }
    for (auto& e : w)
        if (!e.is_zero()) return false;
    return true;
}

MatrixInverse inverse(const PolyMatrix& min) {
    opcount::PhaseScope phase(Phase::LinearAlgebra);
    auto ctx = min.ctx();
    check(min.rows() == min.cols(), ErrorCode::ContextMismatch, "inverse of non-square matrix");
    const std::size_t n = min.rows();
    // Gauss-Jordan over K(x) with lazy reduction
    std::vector<std::vector<RatFun>> a(n), inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i].push_back(RatFun::poly(min.at(i, j)));
            inv[i].push_back(i == j ? RatFun::poly(UniPoly::constant(ctx, ctx->one()))
                                    : RatFun::zero(ctx));
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        check(piv < n, ErrorCode::Singular, "matrix not invertible");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        RatFun d = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] = a[c][j] / d;
            a[c][j].reduce();
            inv[c][j] = inv[c][j] / d;
            inv[c][j].reduce();
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            RatFun f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - f * a[c][j];
                a[i][j].reduce();
                inv[i][j] = inv[i][j] - f * inv[c][j];
                inv[i][j].reduce();
            }
        }
    }
    // clear to a single denominator
    UniPoly den = UniPoly::constant(ctx, ctx->one());
    for (auto& row : inv)
        for (auto& e : row) {
            e.reduce();
            UniPoly g = uni_gcd(den, e.den);
            den = den * e.den.exact_div(g);
        }
    PolyMatrix num(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            num.at(i, j) = inv[i][j].num * den.exact_div(inv[i][j].den);
    return {num, den};
}

} // namespace curvebasis
