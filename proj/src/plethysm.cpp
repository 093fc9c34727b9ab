#include "plethyon/plethysm.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "plethyon/characters.hpp"
#include "plethyon/lr.hpp"
#include "plethyon/quotient_a.hpp"
#include "plethyon/quotient_b.hpp"

namespace plethyon {

namespace {

Expansion gl_to_family(const Partition& nu, Family family) {
    Expansion out;
    for (int m = static_cast<int>(nu.weight()); m >= 0; m -= 2)
        for (const Partition& lam : enumerate_subpartitions(nu, m)) {
            long long b = littlewood_b(nu, lam, family);
            if (b) out.add(lam, b);
        }
    return out;
}

Expansion family_to_gl(const Partition& lambda, Family family) {
    Expansion out;
    const int w = static_cast<int>(lambda.weight());
    for (int m = w; m >= 0; m -= 2) {
        const long long sign = ((w - m) / 2) % 2 == 0 ? 1 : -1;
        for (const Partition& nu : enumerate_subpartitions(lambda, m)) {
            long long r = littlewood_r(lambda, nu, family);
            if (r) out.add(nu, sign * r);
        }
    }
    return out;
}

Expansion psi_composed(const Partition& lambda, int ell, Family family) {
    Expansion out;
    const int w = static_cast<int>(lambda.weight());
    for (int m = w; m >= 0; m -= 2) {
        const long long sign = ((w - m) / 2) % 2 == 0 ? 1 : -1;
        for (const Partition& nu : enumerate_subpartitions(lambda, m)) {
            const long long r = littlewood_r(lambda, nu, family);
            if (!r) continue;
            for (const auto& [delta, a] : psi_gl(nu, ell).entries())
                out += gl_to_family(delta, family) * (sign * r * a);
        }
    }
    return out;
}

struct PsiCache {
    std::mutex mutex;
    std::map<std::tuple<Family, Partition, int>, Expansion> memo;
};

PsiCache& psi_cache() {
    static PsiCache c;
    return c;
}

const Expansion& psi_cached(Family family, const Partition& lambda, int ell) {
    auto& cache = psi_cache();
    const auto key = std::make_tuple(family, lambda, ell);
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.memo.find(key);
        if (it != cache.memo.end()) return it->second;
    }
    Expansion value = family == Family::gl ? psi_gl(lambda, ell)
                                           : psi_composed(lambda, ell, family);
    std::lock_guard<std::mutex> lock(cache.mutex);
    return cache.memo.emplace(key, std::move(value)).first->second;
}

}  // namespace

Expansion psi_so(const Partition& lambda, int ell) {
    if (ell < 1) throw std::invalid_argument("psi_so: ell must be >= 1");
    return psi_cached(Family::so, lambda, ell);
}

Expansion psi_sp(const Partition& lambda, int ell) {
    if (ell < 1) throw std::invalid_argument("psi_sp: ell must be >= 1");
    return psi_cached(Family::sp, lambda, ell);
}

Expansion psi_universal(Family family, const Partition& lambda, int ell) {
    if (ell < 1) throw std::invalid_argument("psi_universal: ell must be >= 1");
    return psi_cached(family, lambda, ell);
}

long long a_so(const Partition& lambda, const Partition& mu, int ell) {
    if (ell < 1) throw std::invalid_argument("a_so: ell must be >= 1");
    return psi_cached(Family::so, lambda, ell).at(mu);
}

long long a_sp(const Partition& lambda, const Partition& mu, int ell) {
    if (ell < 1) throw std::invalid_argument("a_sp: ell must be >= 1");
    return psi_cached(Family::sp, lambda, ell).at(mu);
}

long long a_so_via_levi(const Partition& lambda, const Partition& mu, int ell, int n) {
    if (ell < 1) throw std::invalid_argument("a_so_via_levi: ell must be >= 1");
    if (n < ell * lambda.weight())
        throw std::invalid_argument("a_so_via_levi: rank too small (need n >= ell*|lambda|)");
    if (n < mu.length())
        throw std::invalid_argument("a_so_via_levi: rank too small (need n >= length(mu))");
    if (ell == 1) return lambda == mu ? 1 : 0;

    const LeviDatum datum = sign_levi_weight(mu, ell, n);
    if (datum.sign == 0) return 0;

    if (ell == 2) {
        const RationalGLWeight& gamma = datum.gl_weights[0];
        long long mult = 0;
        for (const Partition& xi :
             enumerate_subpartitions(lambda, static_cast<int>(gamma.weight()))) {
            const long long inner = lr_coefficient(gamma.neg, gamma.pos, xi);
            if (!inner) continue;
            long long outer = 0;
            for (const auto& [delta, c] : skew_expansion(lambda, xi).entries()) outer += c;
            mult += inner * outer;
        }
        return datum.sign * mult;
    }

    LeviShape shape;
    shape.gl_blocks = datum.gl_blocks;
    shape.so_rank = datum.so_block ? (*datum.so_block - 1) / 2 : 0;
    std::vector<WeightVec> targets;
    for (std::size_t k = 0; k < datum.gl_weights.size(); ++k)
        targets.push_back(datum.gl_weights[k].to_vector(datum.gl_blocks[k]));
    const long long mult =
        levi_branch_multiplicity(lambda, n, shape, targets, datum.so_weight);
    return datum.sign * mult;
}

Expansion gl_to_so(const Partition& nu) { return gl_to_family(nu, Family::so); }
Expansion gl_to_sp(const Partition& nu) { return gl_to_family(nu, Family::sp); }
Expansion so_to_gl(const Partition& lambda) { return family_to_gl(lambda, Family::so); }
Expansion sp_to_gl(const Partition& lambda) { return family_to_gl(lambda, Family::sp); }

Expansion omega_dual(const Expansion& e) { return e.conjugated(); }

Expansion basis_product(const Expansion& a, const Expansion& b, Family family) {
    Expansion out;
    for (const auto& [ka, ca] : a.entries())
        for (const auto& [kb, cb] : b.entries()) {
            if (family == Family::gl) {
                out += schur_product(ka, kb) * (ca * cb);
                continue;
            }
            const int top = static_cast<int>(ka.weight() + kb.weight());
            for (int m = top; m >= 0; m -= 2)
                for (const Partition& nu : enumerate_partitions(m, ka.length() + kb.length())) {
                    long long d = stable_tensor_coefficient(ka, kb, nu);
                    if (d) out.add(nu, ca * cb * d);
                }
        }
    return out;
}

namespace {

// Rank used to evaluate the quotient-side data in the split formulas; any
// n >= 2|lambda| (and >= 1) gives the same stable answer.
int split_rank(const Partition& lambda) {
    return std::max(2 * static_cast<int>(lambda.weight()), 1);
}

SplitResult assemble_split(const Expansion& tensor, const Expansion& psi2,
                           const Expansion& literal_signed) {
    // The branching side must agree with psi_2 coefficient by coefficient.
    if (!(literal_signed == psi2))
        throw std::logic_error("split_square: branching formulas disagree with psi_2");
    SplitResult out;
    for (const auto& [mu, d] : tensor.entries()) {
        const long long a = psi2.at(mu);
        if ((d + a) % 2 != 0 || (d - a) % 2 != 0)
            throw std::logic_error("split_square: non-integral half");
        if (d + a < 0 || d - a < 0) throw std::logic_error("split_square: negative half");
        out.plus.add(mu, (d + a) / 2);
        out.minus.add(mu, (d - a) / 2);
    }
    for (const auto& [mu, a] : psi2.entries())
        if (tensor.at(mu) == 0)
            throw std::logic_error("split_square: psi_2 support outside the tensor square");
    return out;
}

}  // namespace

SplitResult split_square(const Partition& lambda, Family family) {
    const Expansion one{Expansion::Map{{lambda, 1}}};
    const Expansion tensor = basis_product(one, one, family);
    const Expansion psi2 = psi_universal(family, lambda, 2);
    const int n = split_rank(lambda);

    Expansion literal;
    if (family == Family::gl) {
        for (const Partition& mu :
             enumerate_partitions(static_cast<int>(2 * lambda.weight()),
                                  static_cast<int>(2 * lambda.weight()))) {
            const QuotientA q = ell_quotient_a(mu, 2, std::max(n, mu.length()));
            if (q.sign == 0) continue;
            literal.add(mu, q.sign * multi_lr(q.quotient, lambda));
        }
    } else {
        const Partition& base = family == Family::so ? lambda : lambda.conjugate();
        const long long twist = family == Family::sp && lambda.weight() % 2 != 0 ? -1 : 1;
        for (const auto& [mu, d] : tensor.entries()) {
            (void)d;
            const Partition side = family == Family::so ? mu : mu.conjugate();
            const int rank = std::max(n, side.length());
            literal.add(mu, twist * a_so_via_levi(base, side, 2, rank));
        }
        // Coefficients supported outside the tensor square must vanish; check
        // over the full candidate set.
        for (int m = static_cast<int>(2 * lambda.weight()); m >= 0; m -= 2)
            for (const Partition& mu : enumerate_partitions(m, static_cast<int>(2 * lambda.weight()))) {
                if (tensor.at(mu) != 0) continue;
                const Partition side = family == Family::so ? mu : mu.conjugate();
                const int rank = std::max(n, side.length());
                if (a_so_via_levi(base, side, 2, rank) != 0)
                    throw std::logic_error("split_square: branching support escapes tensor square");
            }
    }
    return assemble_split(tensor, psi2, literal);
}

Expansion plethysm_power_monomial(const Partition& lambda, Family family,
                                  const std::vector<int>& beta) {
    for (int b : beta)
        if (b < 1) throw std::invalid_argument("plethysm_power_monomial: exponents must be >= 1");
    Expansion acc;
    acc.add(Partition{}, 1);
    for (int b : beta) acc = basis_product(acc, psi_universal(family, lambda, b), family);
    return acc;
}

}  // namespace plethyon
