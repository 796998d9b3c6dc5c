#ifndef CURVEBASIS_FQ_HPP
#define CURVEBASIS_FQ_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "curvebasis/error.hpp"

namespace curvebasis {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

class FqCtx;
using FqCtxPtr = std::shared_ptr<const FqCtx>;

/// Element of F_p or of F_p[z]/(m(z)). Coefficient vector of the canonical
/// representative, lowest degree first, with length exactly ctx->degree().
struct Fq {
    boost::container::small_vector<u64, 2> c;

    bool operator==(const Fq& o) const { return c == o.c; }
    bool operator!=(const Fq& o) const { return !(c == o.c); }
};

/// Arithmetic context for a prime field F_p or a single extension
/// F_p[z]/(m(z)) with m monic irreducible. Extensions are always flattened
/// over the prime field; towers never nest.
class FqCtx : public std::enable_shared_from_this<FqCtx> {
public:
    /// Prime field context. Raises NotPrime unless p is prime (deterministic
    /// Miller-Rabin, valid for all 64-bit inputs).
    static FqCtxPtr prime(u64 p);

    /// Extension of a prime context by a monic irreducible polynomial given
    /// as its coefficient vector (lowest degree first, leading coefficient 1).
    /// Irreducibility is the caller's responsibility (checked in debug).
    static FqCtxPtr extension(const FqCtxPtr& base, std::vector<u64> min_poly);

    u64 p() const { return p_; }
    int degree() const { return deg_; }
    bool is_prime_field() const { return deg_ == 1; }
    const std::vector<u64>& min_poly() const { return min_poly_; }
    FqCtxPtr base() const { return base_; }

    Fq zero() const;
    Fq one() const;
    Fq from_int(std::int64_t v) const;
    /// Element from base-field coefficients (length <= degree).
    Fq from_coeffs(const std::vector<u64>& coeffs) const;
    /// The residue class of z (the adjoined generator); equals 1 for degree 1.
    Fq gen() const;

    bool is_zero(const Fq& a) const;
    Fq add(const Fq& a, const Fq& b) const;
    Fq sub(const Fq& a, const Fq& b) const;
    Fq neg(const Fq& a) const;
    Fq mul(const Fq& a, const Fq& b) const;
    Fq inv(const Fq& a) const;
    Fq pow(Fq a, u64 e) const;
    /// Frobenius x -> x^(p^k), via a cached matrix of the p-power map.
    Fq pow_p(const Fq& a, u64 k = 1) const;
    /// a^((p^r - 1) / d) for d | p^r - 1, r = degree(). Exponent handled in
    /// base-p digits so no big-integer arithmetic is needed.
    Fq pow_q_minus_1_over(const Fq& a, u64 d) const;

    Fq mul_scalar(const Fq& a, u64 s) const;

    /// Scalar arithmetic in F_p (shared by the polynomial layers).
    u64 padd(u64 a, u64 b) const;
    u64 psub(u64 a, u64 b) const;
    u64 pmul(u64 a, u64 b) const;
    u64 pinv(u64 a) const;
    u64 ppow(u64 a, u64 e) const;

    bool same(const FqCtx& o) const;

private:
    FqCtx() = default;

    void ensure_frobenius() const;

    u64 p_ = 0;
    int deg_ = 1;
    std::vector<u64> min_poly_; // empty for prime fields
    FqCtxPtr base_;             // null for prime fields
    mutable std::vector<std::vector<u64>> frob_; // columns: images of z^i under x->x^p
};

/// 64-bit deterministic primality test.
bool is_prime_u64(u64 n);

/// Seed material for reproducible Las Vegas subroutines.
u64 fnv1a(const void* data, std::size_t len, u64 seed = 1469598103934665603ULL);

/// Global RNG seed for Cantor-Zassenhaus style randomness (CLI --seed).
void set_global_seed(u64 seed);
u64 global_seed();

} // namespace curvebasis

#endif
