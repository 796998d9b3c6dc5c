#ifndef CURVEBASIS_FACTOR_HPP
#define CURVEBASIS_FACTOR_HPP

#include <vector>

#include "curvebasis/unipoly.hpp"

namespace curvebasis {

/// Squarefree decomposition over F_q, p-th powers handled via Frobenius
/// roots. Returns monic pairwise coprime parts with their multiplicities.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& a);

/// Complete factorization into monic irreducibles with multiplicities,
/// Las Vegas (Cantor-Zassenhaus equal-degree splitting, seeded by the global
/// seed and the input polynomial so runs are reproducible). Factors are
/// returned in a canonical order.
std::vector<std::pair<UniPoly, int>> factor_univariate(const UniPoly& a);

/// The irreducible factors phi with phi^2 | D, each with its multiplicity in
/// D. Squarefree decomposition first, full factorization only of the
/// repeated part.
std::vector<std::pair<UniPoly, int>> square_multiplicity_factors(const UniPoly& D);

/// Rabin irreducibility test via gcd(x^(q^(m/t)) - x, f) probes.
bool is_irreducible(const UniPoly& f);

/// Deterministic-given-seed search for a monic irreducible of given degree.
UniPoly random_irreducible(const FqCtxPtr& ctx, int deg, u64 seed_mix = 0);

/// All roots in the coefficient field, in canonical order.
std::vector<Fq> poly_roots(const UniPoly& f);

/// Canonical ordering used everywhere factors are listed.
bool poly_canonical_less(const UniPoly& a, const UniPoly& b);

} // namespace curvebasis

#endif
