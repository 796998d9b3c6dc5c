#include "doctest.h"

#include "curvebasis/fq.hpp"
#include "curvebasis/opcount.hpp"

using namespace curvebasis;

TEST_CASE("prime field construction") {
    auto F = FqCtx::prime(10007);
    CHECK(F->p() == 10007);
    CHECK(F->degree() == 1);
    CHECK_THROWS_AS(FqCtx::prime(10), Error);
    CHECK_THROWS_AS(FqCtx::prime(1), Error);
    // large prime accepted by the deterministic test
    CHECK(FqCtx::prime((1ULL << 61) - 1)->p() == (1ULL << 61) - 1);
}

TEST_CASE("prime field arithmetic") {
    auto F = FqCtx::prime(7);
    Fq a = F->from_int(5), b = F->from_int(4);
    CHECK(F->add(a, b) == F->from_int(2));
    CHECK(F->sub(a, b) == F->from_int(1));
    CHECK(F->mul(a, b) == F->from_int(6));
    CHECK(F->mul(a, F->inv(a)) == F->one());
    CHECK(F->from_int(-3) == F->from_int(4));
    CHECK(F->pow(a, 6) == F->one()); // Fermat
}

TEST_CASE("extension field arithmetic") {
    auto P = FqCtx::prime(10007);
    // z^2 + 1 irreducible since 10007 = 3 mod 4
    auto E = FqCtx::extension(P, {1, 0, 1});
    CHECK(E->degree() == 2);
    Fq z = E->gen();
    CHECK(E->mul(z, z) == E->from_int(-1));
    Fq a = E->add(z, E->one()); // 1 + z
    Fq ai = E->inv(a);
    CHECK(E->mul(a, ai) == E->one());
    // Frobenius has order 2 and fixes the prime subfield
    CHECK(E->pow_p(E->pow_p(z)) == z);
    CHECK(E->pow_p(E->from_int(1234)) == E->from_int(1234));
    CHECK(E->pow_p(z) == E->pow(z, E->p()));
}

TEST_CASE("pow_q_minus_1_over matches exhaustive order checks") {
    auto P = FqCtx::prime(13);
    auto E = FqCtx::extension(P, {2, 1, 1}); // z^2 + z + 2, irreducible mod 13
    // q - 1 = 168; a^((q-1)/d) for d | q-1
    Fq z = E->gen();
    Fq full = E->pow_q_minus_1_over(z, 1);
    CHECK(full == E->one());
    Fq half = E->pow_q_minus_1_over(z, 2);
    CHECK(E->mul(half, half) == E->one());
    bool plus = half == E->one();
    Fq brute = E->pow(z, 84);
    CHECK(half == brute);
    (void)plus;
}

TEST_CASE("op counters accumulate") {
    auto F = FqCtx::prime(101);
    opcount::reset();
    auto before = opcount::snapshot();
    Fq a = F->from_int(3);
    {
        opcount::PhaseScope s(Phase::LinearAlgebra);
        (void)F->mul(a, a);
        (void)F->inv(a);
    }
    auto after = opcount::snapshot();
    CHECK(after[1].mul - before[1].mul == 1);
    CHECK(after[1].inv - before[1].inv == 1);
}
