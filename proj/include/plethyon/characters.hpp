#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plethyon/expansion.hpp"
#include "plethyon/laurent.hpp"
#include "plethyon/partition.hpp"

namespace plethyon {

// Concrete classical groups at a fixed rank (the character oracle side).
enum class GroupFamily { gl, so_odd, sp, so_even };

std::string group_family_name(GroupFamily f);
GroupFamily parse_group_family(const std::string& name);

struct GroupLabel {
    GroupFamily family;
    int rank;  // n >= 1
};

using WeightVec = std::vector<int>;
using WeightTable = std::map<WeightVec, long long>;

// Multiplicities of the dominant weights of the irreducible module with the
// given highest weight (Freudenthal recursion; exact).  The highest weight is
// any dominant integer vector of length rank: arbitrary decreasing for gl,
// partitions for so_odd/sp, and for so_even the last entry may be negative.
// Results are memoized process-wide.
const WeightTable& weight_multiplicities(const GroupLabel& g, const WeightVec& highest);

// All distinct vectors in the Weyl-group orbit of a dominant weight.
std::vector<WeightVec> weyl_orbit(GroupFamily f, const WeightVec& dominant);

// Exact character as a sparse Laurent polynomial.  For so_even with
// length(lambda) = rank the result is the sum of the two mirror characters
// (the full-orthogonal-group character).  Rejects length(lambda) > rank.
LaurentPoly weyl_character(const GroupLabel& g, const Partition& lambda);

// Character of the rational GL_n module with the given weakly decreasing
// highest weight vector.
LaurentPoly gl_character(int n, const WeightVec& decreasing);

// Unique expansion P = sum c_mu s_mu^g of a Weyl-invariant Laurent polynomial
// on the Weyl-character basis (O-characters for so_even).  Throws
// std::invalid_argument when P is not invariant.
Expansion expand_in_characters(const LaurentPoly& P, const GroupLabel& g);

// Rational-weight variant for gl: keys are decreasing weight vectors.
std::map<WeightVec, long long> expand_gl_laurent(const LaurentPoly& P, int n);

// Expansion of the power-sum plethysm p_ell o s_lambda^g at this rank,
// computed from the scaled weight table of the character.
Expansion psi_oracle(const GroupLabel& g, const Partition& lambda, int ell);

// Weyl dimension formula (so_even with length(lambda) = rank: the dimension
// of the two-summand module, i.e. twice one factor).
BigInt weyl_dimension(const GroupLabel& g, const Partition& lambda);

// Restriction map on GL_N characters: substitutes the variables
// (x_1,...,x_n,x_n^{-1},...,x_1^{-1}) (N = 2n) or with an extra 1 in the
// middle (N = 2n+1).  P must be a polynomial in N variables.
LaurentPoly restrict_gl_character(const LaurentPoly& P, const GroupLabel& g);

// Levi subgroup shape inside SO_{2n+1}: GL blocks followed by an odd
// orthogonal block of rank so_rank (0 = absent).
struct LeviShape {
    std::vector<int> gl_blocks;
    int so_rank = 0;
};

// Branching multiplicity [V^{so_{2n+1}}(lambda) : V^L(gamma)] where gamma is
// given per block: a decreasing weight vector for each GL block and a
// partition for the orthogonal block.  Block sizes must sum to n.
long long levi_branch_multiplicity(const Partition& lambda, int n, const LeviShape& shape,
                                   const std::vector<WeightVec>& gl_targets,
                                   const Partition& so_target);

}  // namespace plethyon
