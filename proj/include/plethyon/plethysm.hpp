#pragma once

#include <vector>

#include "plethyon/expansion.hpp"
#include "plethyon/partition.hpp"

namespace plethyon {

// Stabilized coefficient of s_mu in p_ell o s_lambda for the orthogonal
// (resp. symplectic) universal characters; valid at every rank n >= ell|lambda|
// and identical for both orthogonal series.
long long a_so(const Partition& lambda, const Partition& mu, int ell);
long long a_sp(const Partition& lambda, const Partition& mu, int ell);

// Full stabilized expansions of p_ell o s_lambda.  Results are memoized.
Expansion psi_so(const Partition& lambda, int ell);
Expansion psi_sp(const Partition& lambda, int ell);
// Dispatch over the three families (gl goes through the type-A quotient).
Expansion psi_universal(Family family, const Partition& lambda, int ell);

// Same coefficient through the rank-n Levi branching route: the sign and
// dominant weight come from the type-B quotient algorithm; the multiplicity
// is the Littlewood-Richardson closed form for ell = 2 and the character
// oracle otherwise.  Requires n >= ell|lambda| and n >= length(mu).
long long a_so_via_levi(const Partition& lambda, const Partition& mu, int ell, int n);

// Symmetric/antisymmetric split of the tensor square: plus holds the
// multiplicities of the symmetric part, minus the antisymmetric part.
struct SplitResult {
    Expansion plus;
    Expansion minus;
};

// Computed both from the half-sum formulas (tensor square +- psi_2) and from
// the literal branching expressions; a disagreement or a non-integral half
// throws std::logic_error.
SplitResult split_square(const Partition& lambda, Family family);

// Universal basis conversions.  gl_to_* have nonnegative coefficients b;
// *_to_gl carry the alternating signs (-1)^{(|lambda|-|nu|)/2} r.
Expansion gl_to_so(const Partition& nu);
Expansion gl_to_sp(const Partition& nu);
Expansion so_to_gl(const Partition& lambda);
Expansion sp_to_gl(const Partition& lambda);

// Conjugates every indexing partition (exchanges the so and sp bases).
Expansion omega_dual(const Expansion& e);

// Product of two expansions on the same family basis (Schur product for gl,
// stable tensor coefficients for so/sp).
Expansion basis_product(const Expansion& a, const Expansion& b, Family family);

// Stabilized expansion of (p_{beta_1} ... p_{beta_k}) o s_lambda.
// All beta_i must be >= 1.
Expansion plethysm_power_monomial(const Partition& lambda, Family family,
                                  const std::vector<int>& beta);

}  // namespace plethyon
