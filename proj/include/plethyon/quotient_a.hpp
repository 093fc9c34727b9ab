#pragma once

#include <vector>

#include "plethyon/expansion.hpp"
#include "plethyon/partition.hpp"

namespace plethyon {

// Sign and quotient tuple of a partition with respect to ell.  quotient[k]
// holds the component of residue class k (k = 0 standing for residue ell);
// it is empty when sign == 0.
struct QuotientA {
    int sign = 0;
    std::vector<Partition> quotient;
};

// Computes the ell-sign and ell-quotient of mu from the beta-numbers
// mu_i + i of the length-n increasing view.  Requires ell >= 1 and
// n >= length(mu).  For ell = 1 the result is sign +1, quotient (mu).
QuotientA ell_quotient_a(const Partition& mu, int ell, int n);

// True when padding mu with one more zero part (rank n -> n+1) keeps the sign
// and cyclically relabels the quotient: new[0] = old[ell-1], new[1] = old[0]
// plus a zero part, new[k] = old[k-1] otherwise.
bool pad_stability_check(const Partition& mu, int ell, int n);

// Stabilized coefficient of s_mu in p_ell applied to s_lambda:
// sign(mu) * (coefficient of s_lambda in the product of the quotient parts).
// Zero unless |mu| = ell * |lambda|.
long long a_gl(const Partition& lambda, const Partition& mu, int ell);

// Full expansion mu -> a_gl(lambda, mu, ell) over partitions of ell*|lambda|.
Expansion psi_gl(const Partition& lambda, int ell);

}  // namespace plethyon
