#pragma once

#include <string>
#include <vector>

#include "plethyon/expansion.hpp"
#include "plethyon/partition.hpp"

namespace plethyon {

// Littlewood-Richardson coefficient c^nu_{lambda,mu}: multiplicity of s_nu in
// s_lambda * s_mu.  Zero when |nu| != |lambda| + |mu| or lambda is not
// contained in nu.  Results are memoized process-wide (thread safe).
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Full product expansion: nu -> c^nu_{lambda,mu}.
Expansion schur_product(const Partition& lambda, const Partition& mu);

// Skew expansion of nu/lambda: sigma -> c^nu_{lambda,sigma}.
Expansion skew_expansion(const Partition& nu, const Partition& lambda);

// Coefficient of s_nu in the product of all shapes.
long long multi_lr(const std::vector<Partition>& shapes, const Partition& nu);

// Product of the whole list as an expansion, optionally pruned to shapes
// contained in `within` (pass nullptr to disable pruning).
Expansion multi_schur_product(const std::vector<Partition>& shapes, const Partition* within);

// Stable so/sp tensor multiplicity d^nu_{lambda,mu} =
// sum_{xi,sigma,tau} c^lambda_{xi,sigma} c^mu_{xi,tau} c^nu_{sigma,tau}.
long long stable_tensor_coefficient(const Partition& lambda, const Partition& mu,
                                    const Partition& nu);

// Branching coefficient b_{nu,lambda}: sum of c^nu_{lambda,gamma} over gamma
// with even rows (so) resp. even columns (sp).  Family gl is rejected.
long long littlewood_b(const Partition& nu, const Partition& lambda, Family family);

// Inverse-side coefficient r_{lambda,nu}: sum over strict alpha with
// 2*sum(alpha) = |lambda| - |nu| of c^lambda_{nu,G(alpha)} where G is
// frobenius_gamma (sp) resp. frobenius_gamma_prime (so).  The empty alpha is
// included, so r_{lambda,lambda} = 1.
long long littlewood_r(const Partition& lambda, const Partition& nu, Family family);

// Optional on-disk memo (one JSON record per line: lambda, mu, nu, c).
// load merges records into the in-memory cache; flush appends entries
// computed since the last load/flush.
void load_lr_cache(const std::string& path);
void flush_lr_cache(const std::string& path);

}  // namespace plethyon
