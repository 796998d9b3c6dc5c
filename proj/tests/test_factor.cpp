#include "doctest.h"

#include "curvebasis/factor.hpp"
#include "curvebasis/fieldtower.hpp"

using namespace curvebasis;

namespace {
auto F7 = FqCtx::prime(7);
auto F = FqCtx::prime(10007);
UniPoly P(const FqCtxPtr& c, std::vector<std::int64_t> v) { return UniPoly::from_int_coeffs(c, v); }

UniPoly reassemble(const FqCtxPtr& ctx, const std::vector<std::pair<UniPoly, int>>& fac, const Fq& lead) {
    UniPoly prod = UniPoly::constant(ctx, lead);
    for (auto& [f, m] : fac)
        for (int i = 0; i < m; ++i) prod = prod * f;
    return prod;
}
} // namespace

TEST_CASE("factorization of x^2 - 1 over F_7") {
    auto fac = factor_univariate(P(F7, {-1, 0, 1}));
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].second == 1);
    CHECK(fac[1].second == 1);
    // factors are x-1 and x+1 in canonical order
    bool found_m1 = false, found_p1 = false;
    for (auto& [f, m] : fac) {
        if (f == P(F7, {6, 1})) found_m1 = true;
        if (f == P(F7, {1, 1})) found_p1 = true;
    }
    CHECK(found_m1);
    CHECK(found_p1);
}

TEST_CASE("irreducible quadratic stays whole") {
    // x^2 + 1 over F_10007 (p = 3 mod 4) has no roots
    UniPoly q = P(F, {1, 0, 1});
    CHECK(poly_roots(q).empty());
    CHECK(is_irreducible(q));
    auto fac = factor_univariate(q);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == q);
    CHECK(fac[0].second == 1);
}

TEST_CASE("pure power x^3") {
    auto fac = factor_univariate(P(F, {0, 0, 0, 1}));
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == P(F, {0, 1}));
    CHECK(fac[0].second == 3);
}

TEST_CASE("product reassembles and factors pass irreducibility") {
    UniPoly a = P(F, {1, 1}) * P(F, {1, 1}) * P(F, {3, 0, 1}) * P(F, {5, 2, 0, 1});
    a = a.mul_scalar(F->from_int(42));
    auto fac = factor_univariate(a);
    CHECK(reassemble(F, fac, a.lc()) == a);
    for (auto& [f, m] : fac) {
        CHECK(is_irreducible(f));
        CHECK(f.lc() == F->one());
        (void)m;
    }
}

TEST_CASE("squarefree decomposition handles p-th powers") {
    auto F5 = FqCtx::prime(5);
    // (x+1)^5 * (x^2+2) over F_5; derivative of the first part vanishes
    UniPoly a = P(F5, {1, 1}).pow(5) * P(F5, {2, 0, 1});
    auto sf = squarefree_decomposition(a);
    UniPoly prod = UniPoly::constant(F5, F5->one());
    for (auto& [part, mult] : sf) prod = prod * part.pow(static_cast<u64>(mult));
    CHECK(prod == a.monic());
    bool saw5 = false;
    for (auto& [part, mult] : sf)
        if (mult == 5) { saw5 = true; CHECK(part == P(F5, {1, 1})); }
    CHECK(saw5);
}

TEST_CASE("square multiplicity factors") {
    // D = 4x^3 -> [(x, 3)]
    auto s1 = square_multiplicity_factors(P(F, {0, 0, 0, 4}));
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].first == P(F, {0, 1}));
    CHECK(s1[0].second == 3);
    // squarefree D -> empty
    CHECK(square_multiplicity_factors(P(F, {1, 1}) * P(F, {3, 1})).empty());
    // x^2 (x+1)^2 -> [(x,2), (x+1,2)]
    auto s3 = square_multiplicity_factors(P(F, {0, 1}).pow(2) * P(F, {1, 1}).pow(2));
    REQUIRE(s3.size() == 2);
    CHECK(s3[0].first == P(F, {0, 1}));
    CHECK(s3[0].second == 2);
    CHECK(s3[1].first == P(F, {1, 1}));
    CHECK(s3[1].second == 2);
    // verification by trial division: phi^2 | D
    UniPoly D = P(F, {0, 1}).pow(2) * P(F, {1, 1}).pow(2);
    for (auto& [phi, m] : s3) {
        CHECK(D.divrem(phi.pow(static_cast<u64>(m))).second.is_zero());
        CHECK_FALSE(D.divrem(phi.pow(static_cast<u64>(m) + 1)).second.is_zero());
    }
}

TEST_CASE("factorization over extension fields") {
    auto E = FqCtx::extension(F, {1, 0, 1}); // F_p(i)
    // x^2 + 1 splits over E
    std::vector<Fq> c{E->one(), E->zero(), E->one()};
    UniPoly q(E, c);
    auto fac = factor_univariate(q);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first.degree() == 1);
    CHECK(fac[1].first.degree() == 1);
    auto roots = poly_roots(q);
    REQUIRE(roots.size() == 2);
    CHECK(E->mul(roots[0], roots[0]) == E->from_int(-1));
}

TEST_CASE("factorization is deterministic given the seed") {
    set_global_seed(0);
    UniPoly a = P(F, {1, 2, 3, 4, 5, 1});
    auto f1 = factor_univariate(a);
    auto f2 = factor_univariate(a);
    REQUIRE(f1.size() == f2.size());
    for (std::size_t i = 0; i < f1.size(); ++i) CHECK(f1[i].first == f2[i].first);
}

TEST_CASE("random irreducible and extension step") {
    UniPoly m = random_irreducible(F, 4, 99);
    CHECK(m.degree() == 4);
    CHECK(is_irreducible(m));

    auto E = FqCtx::extension(F, {1, 0, 1});
    // extend E by an irreducible quadratic over E
    std::vector<Fq> c{E->gen(), E->zero(), E->one()}; // x^2 + i
    UniPoly psi(E, c);
    if (is_irreducible(psi)) {
        auto step = extend_by_factor(E, psi, 7);
        CHECK(step.field->degree() == 4);
        // the root satisfies psi
        UniPoly mapped = step.emb.apply(psi);
        CHECK(step.field->is_zero(mapped.eval(step.root)));
        // embedding is a homomorphism
        Fq a = E->from_coeffs({3, 5});
        Fq b = E->from_coeffs({2, 9});
        CHECK(step.emb.apply(E->mul(a, b)) == step.field->mul(step.emb.apply(a), step.emb.apply(b)));
    }
}

TEST_CASE("subfield decomposition round-trips") {
    auto E = FqCtx::extension(F, {1, 0, 1});
    std::vector<Fq> c{E->gen(), E->zero(), E->one()}; // x^2 + i over E
    UniPoly psi(E, c);
    REQUIRE(is_irreducible(psi));
    auto step = extend_by_factor(E, psi, 7);
    SubfieldDecomposer dec(step.emb);
    CHECK(dec.relative_degree() == 2);
    Fq a = step.field->from_coeffs({1, 2, 3, 4});
    auto coords = dec.decompose(a);
    CHECK(coords.size() == 2);
    CHECK(dec.recompose(coords) == a);
    // minpoly of the adjoined root over E is psi itself
    UniPoly mp = dec.minpoly(step.root);
    CHECK(mp == psi);
}
