#pragma once

#include <optional>
#include <vector>

#include "plethyon/partition.hpp"
#include "plethyon/signed_perm.hpp"

namespace plethyon {

// Index sequences attached to (mu, ell, n) in the odd-orthogonal quotient
// algorithm.  All outer vectors are indexed by k-1 for k = 1..ell (I, J) or
// k = 1..ceil(ell/2) (X).  J[k-1] lives in L_n = {-(n-1),...,n}; class ell
// stands for residue 0.
struct BSequences {
    int ell = 0;
    int n = 0;
    std::vector<std::vector<int>> I;
    std::vector<std::vector<int>> J;
    std::vector<std::vector<int>> X;
    std::vector<long long> alpha;  // alpha_k = floor((n-k)/ell), k = 1..p
    std::vector<int> s;            // s_k = card I^(k), k = 1..p
    std::vector<int> r;            // r_k = card I^(k) + card I^(ell-k+1), k = 1..p
    int r_so = 0;                  // card I^(p+1), odd ell only
};

// Requires ell >= 2 and n >= length(mu) (ell = 1 is the identity plethysm
// and is handled by callers directly).
BSequences build_sequences(const Partition& mu, int ell, int n);

// Closed form for card(J^(k)) with n = q*ell + r:
// 2q + 1 + [k >= ell+1-r] - [k > r].
int card_J_closed_form(int n, int ell, int k);

// Sign, Levi block structure and dominant weight attached to (mu, ell, n).
// For sign 0 only the sign field is meaningful.
struct LeviDatum {
    int sign = 0;
    std::vector<int> gl_blocks;                       // r_1..r_p
    std::optional<int> so_block;                      // 2 r_{p+1} + 1, odd ell
    std::vector<std::vector<int>> gl_weight_raw;      // weakly increasing vectors
    std::vector<RationalGLWeight> gl_weights;
    std::vector<int> so_weight_raw;                   // weakly increasing, odd ell
    Partition so_weight;
    std::vector<long long> alpha;
    std::vector<int> s;
    std::optional<SignedPermutation> w0;

    // Sum of |entry| over all block weights.
    long long weight_norm() const;
};

LeviDatum sign_levi_weight(const Partition& mu, int ell, int n);

// True iff s_k = alpha_k + 1 for every GL block.  Throws std::domain_error
// when the sign at (mu, ell, n) is zero.
bool is_stable(const Partition& mu, int ell, int n);

// Levi datum for mu padded with ell extra zero parts (rank n -> n + ell).
LeviDatum pad_levi(const Partition& mu, int ell, int n);

}  // namespace plethyon
