#ifndef CURVEBASIS_FIELDTOWER_HPP
#define CURVEBASIS_FIELDTOWER_HPP

#include <optional>
#include <vector>

#include "curvebasis/unipoly.hpp"

namespace curvebasis {

/// Field homomorphism determined by the image of the source generator.
/// Prime-field sources embed canonically (constants map to constants).
struct FieldEmbedding {
    FqCtxPtr from;
    FqCtxPtr to;
    Fq gen_image;

    static FieldEmbedding identity(const FqCtxPtr& ctx);

    Fq apply(const Fq& a) const;
    UniPoly apply(const UniPoly& f) const;
    /// Composition: (g after f).
    static FieldEmbedding compose(const FieldEmbedding& f, const FieldEmbedding& g);
};

/// Extension of `cur` by one irreducible polynomial psi over it. The result
/// is flattened over the prime field; `emb` maps cur into the new context and
/// `root` is a root of psi there. Everything is deterministic given the
/// global seed.
struct ExtensionStep {
    FqCtxPtr field;
    FieldEmbedding emb;
    Fq root;
};
ExtensionStep extend_by_factor(const FqCtxPtr& cur, const UniPoly& psi, u64 seed_mix = 0);

/// Expresses elements of L in a K-basis of L, where K embeds into L via
/// `emb`. The basis is {theta^t * v^i} with theta the K-generator image and
/// v the generator of L.
class SubfieldDecomposer {
public:
    SubfieldDecomposer(const FieldEmbedding& emb);

    int relative_degree() const { return rel_deg_; }
    /// K-coefficients c_0..c_{B-1} with a = sum c_i v^i (K-semantics).
    std::vector<Fq> decompose(const Fq& a) const;
    Fq recompose(const std::vector<Fq>& coeffs) const;
    /// Minimal polynomial over K of an element of L.
    UniPoly minpoly(const Fq& a) const;

    const FqCtxPtr& sub() const { return emb_.from; }
    const FqCtxPtr& big() const { return emb_.to; }

private:
    FieldEmbedding emb_;
    int rel_deg_;
    std::vector<std::vector<u64>> inv_; // inverse basis matrix over F_p
};

enum class SolveOutcome { Inconsistent, Unique, Underdetermined };

/// Dense Gaussian elimination over a field context. `rows` is m x n
/// row-major, `rhs` length m. On Unique the solution (length n) is written
/// to `solution`; on Underdetermined one valid solution is provided.
SolveOutcome solve_field_system(const FqCtxPtr& ctx, std::vector<std::vector<Fq>> rows,
                                std::vector<Fq> rhs, std::vector<Fq>& solution);

} // namespace curvebasis

#endif
