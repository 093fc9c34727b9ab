#include "plethyon/quotient_a.hpp"

#include <algorithm>
#include <stdexcept>

#include "plethyon/lr.hpp"

namespace plethyon {

namespace {

// Parity of the permutation sending the j-th element of from[k] to the j-th
// element of to[k], for every class k.
int matching_sign(const std::vector<std::vector<int>>& from,
                  const std::vector<std::vector<int>>& to, int n) {
    std::vector<int> image(n + 1, 0);
    for (std::size_t k = 0; k < from.size(); ++k)
        for (std::size_t j = 0; j < from[k].size(); ++j) image[from[k][j]] = to[k][j];
    long long inversions = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (image[i] > image[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

QuotientA ell_quotient_a(const Partition& mu, int ell, int n) {
    if (ell < 1) throw std::invalid_argument("ell_quotient_a: ell must be >= 1");
    if (n < mu.length())
        throw std::invalid_argument("ell_quotient_a: n smaller than length(mu)");

    const std::vector<int> view = mu.increasing_view(n);
    // Residue classes k = 0..ell-1; class 0 uses representative ell in the
    // division below.
    std::vector<std::vector<int>> I(ell), J(ell);
    for (int i = 1; i <= n; ++i) {
        I[(view[i - 1] + i) % ell].push_back(i);
        J[i % ell].push_back(i);
    }

    QuotientA result;
    for (int k = 0; k < ell; ++k)
        if (I[k].size() != J[k].size()) return result;  // sign 0

    result.sign = matching_sign(I, J, n);
    result.quotient.reserve(ell);
    for (int k = 0; k < ell; ++k) {
        const int rep = k == 0 ? ell : k;
        std::vector<int> comp;
        comp.reserve(I[k].size());
        for (std::size_t j = 0; j < I[k].size(); ++j) {
            const int i = I[k][j];
            comp.push_back((view[i - 1] + i + ell - rep) / ell - static_cast<int>(j + 1));
        }
        // comp is weakly increasing with possible leading zeros.
        std::reverse(comp.begin(), comp.end());
        result.quotient.push_back(Partition(std::move(comp)));
    }
    return result;
}

bool pad_stability_check(const Partition& mu, int ell, int n) {
    const QuotientA a = ell_quotient_a(mu, ell, n);
    const QuotientA b = ell_quotient_a(mu, ell, n + 1);
    if (a.sign != b.sign) return false;
    if (a.sign == 0) return true;
    if (b.quotient[0] != a.quotient[ell - 1]) return false;
    for (int k = 1; k < ell; ++k)
        if (b.quotient[k] != a.quotient[k - 1]) return false;
    return true;
}

long long a_gl(const Partition& lambda, const Partition& mu, int ell) {
    if (ell < 1) throw std::invalid_argument("a_gl: ell must be >= 1");
    if (mu.weight() != ell * lambda.weight()) return 0;
    const int n = ell * lambda.length() + mu.length() + 1;  // safely pad-stable
    const QuotientA q = ell_quotient_a(mu, ell, n);
    if (q.sign == 0) return 0;
    return q.sign * multi_lr(q.quotient, lambda);
}

Expansion psi_gl(const Partition& lambda, int ell) {
    Expansion out;
    const int total = static_cast<int>(ell * lambda.weight());
    for (const Partition& mu : enumerate_partitions(total, total)) {
        long long a = a_gl(lambda, mu, ell);
        if (a) out.add(mu, a);
    }
    return out;
}

}  // namespace plethyon
