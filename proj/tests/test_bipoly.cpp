#include "doctest.h"

#include "curvebasis/bipoly.hpp"

using namespace curvebasis;

namespace {
auto F = FqCtx::prime(10007);
UniPoly U(std::vector<std::int64_t> v) { return UniPoly::from_int_coeffs(F, v); }

// f = y^2 - x^3
BiPoly cusp() {
    BiPoly f(F);
    f.set_coeff(2, U({1}));
    f.set_coeff(0, U({0, 0, 0, -1}));
    return f;
}

// Sylvester-matrix resultant oracle via cofactor expansion (small sizes only)
UniPoly sylvester_det(std::vector<std::vector<UniPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return UniPoly::constant(F, F->one());
    if (n == 1) return m[0][0];
    UniPoly acc = UniPoly::zero(F);
    for (std::size_t k = 0; k < n; ++k) {
        if (m[0][k].is_zero()) continue;
        std::vector<std::vector<UniPoly>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<UniPoly> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) row.push_back(m[i][j]);
            sub.push_back(std::move(row));
        }
        UniPoly term = m[0][k] * sylvester_det(std::move(sub));
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

UniPoly sylvester_resultant(const BiPoly& f, const BiPoly& g) {
    const int n = f.ydeg(), m = g.ydeg();
    std::vector<std::vector<UniPoly>> s(n + m, std::vector<UniPoly>(n + m, UniPoly::zero(F)));
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s[r][r + j] = f.coeff(n - j);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s[m + r][r + j] = g.coeff(m - j);
    return sylvester_det(std::move(s));
}
} // namespace

TEST_CASE("resultant examples") {
    // Res_y(y^2 - x^3, 2y): Sylvester oracle fixes the sign
    BiPoly dy(F);
    dy.set_coeff(1, U({2}));
    UniPoly r = resultant_y(cusp(), dy);
    CHECK(r == sylvester_resultant(cusp(), dy));
    CHECK(r == U({0, 0, 0, -4}));

    // Res_y(y - a(x), g) = g(x, a(x))
    UniPoly a = U({3, 1, 2});
    BiPoly lin(F);
    lin.set_coeff(1, U({1}));
    lin.set_coeff(0, -a);
    BiPoly g(F);
    g.set_coeff(2, U({5, 1}));
    g.set_coeff(1, U({0, 2}));
    g.set_coeff(0, U({7}));
    CHECK(resultant_y(lin, g) == g.eval_y(a));

    // equal arguments share roots: resultant vanishes
    BiPoly ymx(F);
    ymx.set_coeff(1, U({1}));
    ymx.set_coeff(0, U({0, -1}));
    CHECK(resultant_y(ymx, ymx).is_zero());
}

TEST_CASE("resultant matches the Sylvester oracle on random inputs") {
    u64 state = 12345;
    auto rnd = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::int64_t>((state >> 33) % 19) - 9;
    };
    for (int trial = 0; trial < 8; ++trial) {
        BiPoly f(F), g(F);
        for (int j = 0; j <= 2; ++j) f.set_coeff(j, U({rnd(), rnd(), rnd()}));
        for (int j = 0; j <= 3; ++j) g.set_coeff(j, U({rnd(), rnd()}));
        if (f.ydeg() < 1 || g.ydeg() < 1) continue;
        CHECK(resultant_y(f, g) == sylvester_resultant(f, g));
    }
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant_y(cusp()) == U({0, 0, 0, 4}));
    // y^2 - x: disc = 4x
    BiPoly f(F);
    f.set_coeff(2, U({1}));
    f.set_coeff(0, U({0, -1}));
    CHECK(discriminant_y(f) == U({0, 4}));
    // (y - x)^2 is not squarefree
    BiPoly ymx(F);
    ymx.set_coeff(1, U({1}));
    ymx.set_coeff(0, U({0, -1}));
    CHECK_THROWS_AS(discriminant_y(ymx * ymx), Error);
}

TEST_CASE("reduce_mod_f") {
    BiPoly f = cusp();
    CHECK(reduce_mod_f(f, f).is_zero());
    // y^2 mod (y^2 - x^3) = x^3
    CHECK(reduce_mod_f(BiPoly::y_power(F, 2), f) == BiPoly::from_unipoly(U({0, 0, 0, 1})));
    // y^3 mod -> x^3 y
    BiPoly r = reduce_mod_f(BiPoly::y_power(F, 3), f);
    CHECK(r.ydeg() == 1);
    CHECK(r.coeff(1) == U({0, 0, 0, 1}));
    CHECK(r.coeff(0).is_zero());
}

TEST_CASE("charpoly examples") {
    BiPoly f = cusp();
    UniPoly one = U({1});
    // b = y: chi = T^2 - x^3
    FieldElement by{BiPoly::y_power(F, 1), one};
    auto chi = charpoly_of_element(by, f);
    REQUIRE(chi.size() == 3);
    CHECK(chi[2].num.is_one());
    CHECK(chi[1].is_zero());
    CHECK(chi[0].num == U({0, 0, 0, -1}));
    CHECK(chi[0].den.is_one());

    // b = y/x: chi = T^2 - x
    FieldElement byx{BiPoly::y_power(F, 1), U({0, 1})};
    auto chi2 = charpoly_of_element(byx, f);
    CHECK(chi2[1].is_zero());
    RatFun c0 = chi2[0];
    c0.reduce();
    CHECK(c0.num == U({0, -1}));
    CHECK(c0.den.is_one());

    // constant element: (T - c)^n
    FieldElement bc{BiPoly::from_unipoly(U({5})), one};
    auto chi3 = charpoly_of_element(bc, f);
    RatFun lin = chi3[1];
    lin.reduce();
    CHECK(lin.num == U({-10})); // -2c
    RatFun cst = chi3[0];
    cst.reduce();
    CHECK(cst.num == U({25})); // c^2
}

TEST_CASE("cayley-hamilton for random elements") {
    BiPoly f = cusp();
    FieldElement b{BiPoly::y_power(F, 1) * BiPoly::from_unipoly(U({2, 1})) +
                       BiPoly::from_unipoly(U({3, 0, 1})),
                   U({1})};
    auto chi = charpoly_of_element(b, f);
    // evaluate chi at b over K(x)[y]/f: sum chi_i * b^i = 0
    BiPoly num_acc(F);
    UniPoly den_acc = U({1});
    // common denominator is den^n with den = 1 here, so all chi_i are polynomial
    BiPoly bpow = BiPoly::from_unipoly(U({1}));
    for (std::size_t i = 0; i < chi.size(); ++i) {
        RatFun c = chi[i];
        c.reduce();
        REQUIRE(c.den.is_one());
        num_acc = num_acc + bpow.mul_unipoly(c.num);
        bpow = reduce_mod_f(bpow * b.num, f);
    }
    CHECK(reduce_mod_f(num_acc, f).is_zero());
    (void)den_acc;
}

TEST_CASE("trace examples and linearity") {
    BiPoly f = cusp();
    UniPoly one = U({1});
    FieldElement e1{BiPoly::from_unipoly(one), one};
    RatFun t1 = trace_of(e1, f);
    t1.reduce();
    CHECK(t1.num == U({2}));
    FieldElement ey{BiPoly::y_power(F, 1), one};
    CHECK(trace_of(ey, f).is_zero());
    FieldElement ey2{BiPoly::y_power(F, 2), one};
    RatFun t3 = trace_of(ey2, f);
    t3.reduce();
    CHECK(t3.num == U({0, 0, 0, 2}));

    // linearity: tr(lambda*a + b) = lambda*tr(a) + tr(b)
    UniPoly lam = U({4, 7});
    FieldElement a{BiPoly::y_power(F, 1) + BiPoly::from_unipoly(U({1, 2})), one};
    FieldElement b{BiPoly::y_power(F, 1).mul_unipoly(U({0, 3})) + BiPoly::from_unipoly(U({5})), one};
    FieldElement comb{a.num.mul_unipoly(lam) + b.num, one};
    RatFun lhs = trace_of(comb, f);
    RatFun rhs = RatFun::poly(lam) * trace_of(a, f) + trace_of(b, f);
    CHECK(lhs == rhs);

    // trace agrees with the charpoly coefficient
    auto chi = charpoly_of_element(a, f);
    RatFun neg = RatFun::zero(F) - chi[1];
    CHECK(trace_of(a, f) == neg);
}

TEST_CASE("shift_origin") {
    auto id = FieldEmbedding::identity(F);
    // f = y^2 - (x-1)^3 shifted by alpha=1 gives the cusp
    BiPoly f(F);
    f.set_coeff(2, U({1}));
    UniPoly xm1 = U({-1, 1});
    f.set_coeff(0, -(xm1 * xm1 * xm1));
    BiPoly shifted = shift_origin(f, id, F->one());
    CHECK(shifted == cusp());
    // alpha = 0 identity, shift then unshift round-trips
    CHECK(shift_origin(f, id, F->zero()) == f);
    BiPoly back = shift_origin(shifted, id, F->from_int(-1));
    CHECK(back == f);
    // discriminant commutes with the shift
    CHECK(discriminant_y(shifted) == discriminant_y(f).taylor_shift(F->one()));
}
