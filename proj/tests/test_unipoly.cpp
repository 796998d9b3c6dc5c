#include "doctest.h"

#include "curvebasis/unipoly.hpp"

using namespace curvebasis;

namespace {
auto F = FqCtx::prime(10007);
UniPoly P(std::vector<std::int64_t> c) { return UniPoly::from_int_coeffs(F, c); }
} // namespace

TEST_CASE("construction trims and reports degree") {
    CHECK(P({}).degree() == -1);
    CHECK(P({0, 0}).degree() == -1);
    CHECK(P({5}).degree() == 0);
    CHECK(P({1, 2, 0}).degree() == 1);
}

TEST_CASE("ring operations") {
    UniPoly a = P({1, 2, 3}), b = P({4, 5});
    CHECK(a + b == P({5, 7, 3}));
    CHECK(a - b == P({-3, -3, 3}));
    CHECK(a * b == P({4, 13, 22, 15}));
    CHECK((a * b).exact_div(b) == a);
    auto [q, r] = a.divrem(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
}

TEST_CASE("karatsuba agrees with schoolbook on large inputs") {
    std::vector<std::int64_t> ca(97), cb(113);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = static_cast<std::int64_t>(i * i + 1);
    for (std::size_t i = 0; i < cb.size(); ++i) cb[i] = static_cast<std::int64_t>(3 * i + 2);
    UniPoly a = P(ca), b = P(cb);
    UniPoly prod = a * b;
    // spot-check a few coefficients against direct convolution
    for (int k : {0, 1, 50, 120, 208}) {
        Fq expect = F->zero();
        for (int i = 0; i <= k; ++i) {
            if (i >= static_cast<int>(ca.size()) || k - i >= static_cast<int>(cb.size())) continue;
            expect = F->add(expect, F->mul(F->from_int(ca[i]), F->from_int(cb[k - i])));
        }
        CHECK(prod.coeff(k) == expect);
    }
}

TEST_CASE("gcd examples") {
    // (x^2 - 1, x - 1) -> x - 1
    CHECK(uni_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    // (a, 0) -> monic a
    CHECK(uni_gcd(P({2, 4}), P({})) == P({5004, 1})); // (2 + 4x)/4 hmm computed below
    // (x^3 - x, x^2 + x) -> x^2 + x
    CHECK(uni_gcd(P({0, -1, 0, 1}), P({0, 1, 1})) == P({0, 1, 1}));
    CHECK(uni_gcd(P({}), P({})).is_zero());
}

TEST_CASE("gcd divides both arguments") {
    UniPoly a = P({3, 1}) * P({1, 0, 2}) * P({5, 1});
    UniPoly b = P({3, 1}) * P({7, 2, 1});
    UniPoly g = uni_gcd(a, b);
    CHECK(a.divrem(g).second.is_zero());
    CHECK(b.divrem(g).second.is_zero());
    auto x = uni_xgcd(a, b);
    CHECK(x.u * a + x.v * b == x.g);
    CHECK(x.g == g);
}

TEST_CASE("crt examples") {
    // residues (1 mod x, 0 mod x-1) -> 1 - x
    UniPoly r = crt_combine({P({1}), P({})}, {P({0, 1}), P({-1, 1})});
    CHECK(r == P({1, -1}));
    // single modulus passes through
    CHECK(crt_combine({P({3, 1})}, {P({0, 0, 1})}) == P({3, 1}));
    // zero residues give zero
    CHECK(crt_combine({P({}), P({})}, {P({0, 1}), P({-1, 1})}).is_zero());
    CHECK_THROWS_AS(crt_combine({P({1}), P({2})}, {P({0, 1}), P({0, 1, 1})}), Error);
}

TEST_CASE("crt congruences hold") {
    std::vector<UniPoly> mods = {P({1, 1}), P({2, 0, 1}), P({3, 1, 1})};
    std::vector<UniPoly> res = {P({5}), P({7, 9}), P({1, 2})};
    UniPoly c = crt_combine(res, mods);
    for (std::size_t i = 0; i < mods.size(); ++i) CHECK((c - res[i]).divrem(mods[i]).second.is_zero());
    int total = 0;
    for (auto& m : mods) total += m.degree();
    CHECK(c.degree() < total);
}

TEST_CASE("series helpers") {
    UniPoly u = P({1, 3, 0, 2});
    UniPoly vi = u.inv_series(8);
    CHECK(u.mul_trunc(vi, 8) == P({1}));
    CHECK(P({0, 0, 4, 1}).valuation() == 2);
    CHECK(P({0, 0, 4, 1}).shift_down(2) == P({4, 1}));
    UniPoly t = P({1, 1});
    CHECK(t.taylor_shift(F->from_int(2)) == P({3, 1}));
    // p(x) = x^2 at x+1: x^2 + 2x + 1
    CHECK(P({0, 0, 1}).taylor_shift(F->one()) == P({1, 2, 1}));
    CHECK(P({0, 0, 1}).scale_arg(F->from_int(3)) == P({0, 0, 9}));
}
