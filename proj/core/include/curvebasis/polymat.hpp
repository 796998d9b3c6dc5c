#ifndef CURVEBASIS_POLYMAT_HPP
#define CURVEBASIS_POLYMAT_HPP

#include <vector>

#include "curvebasis/unipoly.hpp"

namespace curvebasis {

/// Dense matrix over K[x]. Rows are the module generators throughout; all
/// canonical-form and membership questions reduce to the Hermite normal form
/// of the row module.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(FqCtxPtr ctx, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(const FqCtxPtr& ctx, std::size_t n);
    static PolyMatrix from_rows(FqCtxPtr ctx, std::vector<std::vector<UniPoly>> rows);

    const FqCtxPtr& ctx() const { return ctx_; }
    std::size_t rows() const { return r_.size(); }
    std::size_t cols() const { return cols_; }
    UniPoly& at(std::size_t i, std::size_t j) { return r_[i][j]; }
    const UniPoly& at(std::size_t i, std::size_t j) const { return r_[i][j]; }
    const std::vector<UniPoly>& row(std::size_t i) const { return r_[i]; }
    std::vector<UniPoly>& row_ref(std::size_t i) { return r_[i]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const { return r_ == o.r_; }

    PolyMatrix transpose() const;

private:
    FqCtxPtr ctx_;
    std::size_t cols_ = 0;
    std::vector<std::vector<UniPoly>> r_;
};

struct HnfResult {
    PolyMatrix h; ///< canonical triangular form, zero rows dropped
    PolyMatrix u; ///< unimodular transform with u * m = h (padded rows kept)
};

/// Row-module Hermite normal form: pivots monic, entries above each pivot of
/// strictly smaller degree, zero rows removed. The form is the canonical
/// representative of the row module and doubles as the module-equality test.
HnfResult hermite_normal_form(const PolyMatrix& m);

/// HNF without the transform (cheaper).
PolyMatrix hnf_basis(const PolyMatrix& m);

/// Basis of {v in K[x]^n : v * M = 0 mod Q}, canonical triangular form.
/// Entries of M are reduced mod Q throughout; the result contains Q*K[x]^n.
PolyMatrix kernel_mod_Q(const PolyMatrix& m, const UniPoly& Q);

/// Row reduction used by the idealizer: a module-preserving triangular
/// echelon form of a tall polynomial matrix; the top block is the square
/// lattice basis. Raises RankDeficient if the column rank is deficient.
PolyMatrix row_reduce_fractions(const PolyMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
UniPoly determinant(const PolyMatrix& m);

/// Membership of v in the row module of a triangular HNF basis h; on success
/// fills coords with the K[x] coordinates.
bool hnf_member(const PolyMatrix& h, const std::vector<UniPoly>& v, std::vector<UniPoly>* coords = nullptr);

/// Inverse of a square nonsingular matrix, as the pair (adjugate-like
/// numerator matrix N, denominator d) with inverse = N / d.
struct MatrixInverse {
    PolyMatrix num;
    UniPoly den;
};
MatrixInverse inverse(const PolyMatrix& m);

} // namespace curvebasis

#endif
