#include "plethyon/quotient_b.hpp"

#include <algorithm>
#include <stdexcept>

namespace plethyon {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b, rem = a % b;
    return rem != 0 && ((rem < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

int card_J_closed_form(int n, int ell, int k) {
    const int q = n / ell, r = n % ell;
    return 2 * q + 1 + (k >= ell + 1 - r ? 1 : 0) - (k > r ? 1 : 0);
}

BSequences build_sequences(const Partition& mu, int ell, int n) {
    if (ell < 2) throw std::invalid_argument("build_sequences: ell must be >= 2");
    if (n < 1) throw std::invalid_argument("build_sequences: rank must be >= 1");
    if (n < mu.length())
        throw std::invalid_argument("build_sequences: n smaller than length(mu)");

    BSequences seq;
    seq.ell = ell;
    seq.n = n;
    seq.I.assign(ell, {});
    seq.J.assign(ell, {});

    const std::vector<int> view = mu.increasing_view(n);
    for (int i = 1; i <= n; ++i) {
        int res = (view[i - 1] + i) % ell;
        seq.I[res == 0 ? ell - 1 : res - 1].push_back(i);
    }
    for (int x = -(n - 1); x <= n; ++x) {
        int res = ((x % ell) + ell) % ell;
        seq.J[res == 0 ? ell - 1 : res - 1].push_back(x);
    }

    const int p = ell / 2;
    const bool odd = ell % 2 != 0;
    for (int k = 1; k <= p; ++k) {
        std::vector<int> x;
        for (int i : seq.I[k - 1]) x.push_back(-i);
        for (int i : seq.I[ell - k]) x.push_back(i);
        std::sort(x.begin(), x.end());
        seq.X.push_back(std::move(x));
        seq.alpha.push_back(floor_div(n - k, ell));
        seq.s.push_back(static_cast<int>(seq.I[k - 1].size()));
        seq.r.push_back(static_cast<int>(seq.I[k - 1].size() + seq.I[ell - k].size()));
    }
    if (odd) {
        seq.r_so = static_cast<int>(seq.I[p].size());
        std::vector<int> x;
        for (int i : seq.I[p]) {
            x.push_back(-i);
            x.push_back(i);
        }
        std::sort(x.begin(), x.end());
        seq.X.push_back(std::move(x));
    }
    return seq;
}

LeviDatum sign_levi_weight(const Partition& mu, int ell, int n) {
    const BSequences seq = build_sequences(mu, ell, n);
    const int p = ell / 2;
    const bool odd = ell % 2 != 0;

    LeviDatum out;
    for (int k = 1; k <= p; ++k)
        if (seq.X[k - 1].size() != seq.J[k - 1].size()) return out;  // sign 0
    if (odd && 2 * seq.r_so != static_cast<int>(seq.J[p].size())) return out;

    // Images of eta . w on J_n, indexed by x + n (skipping 0).
    constexpr int kUnset = INT32_MIN;
    std::vector<int> wtilde(2 * n + 1, kUnset);
    auto assign = [&](int x, int y) {
        int& slot = wtilde[x + n];
        if (slot != kUnset && slot != y)
            throw std::logic_error("sign_levi_weight: inconsistent images for w0");
        slot = y;
    };
    for (int k = 1; k <= p; ++k)
        for (std::size_t j = 0; j < seq.X[k - 1].size(); ++j)
            assign(seq.X[k - 1][j], seq.J[ell - k][j]);
    if (odd)
        for (std::size_t j = 0; j < seq.X[p].size(); ++j) assign(seq.X[p][j], seq.J[p][j]);
    for (int x = 1; x <= n; ++x) {
        int& pos = wtilde[x + n];
        int& neg = wtilde[-x + n];
        if (pos == kUnset && neg == kUnset)
            throw std::logic_error("sign_levi_weight: uncovered index");
        if (pos == kUnset) pos = -neg + 1;  // y* = -y + 1
        if (neg == kUnset) neg = -pos + 1;
        if (neg != -pos + 1)
            throw std::logic_error("sign_levi_weight: images violate oddness");
    }

    std::vector<int> window(n);
    for (int x = 1; x <= n; ++x) {
        int y = wtilde[x + n];
        window[x - 1] = y > 0 ? y : y - 1;
    }
    out.w0 = SignedPermutation(std::move(window));  // throws if not bijective
    out.sign = out.w0->det_sign();
    out.alpha = seq.alpha;
    out.s = seq.s;
    out.gl_blocks = seq.r;

    const std::vector<int> view = mu.increasing_view(n);
    auto beta = [&](int i) { return view[i - 1] + i; };

    for (int k = 1; k <= p; ++k) {
        std::vector<int> w;
        const long long shift = seq.alpha[k - 1] + 1;
        for (std::size_t j = 0; j < seq.X[k - 1].size(); ++j) {
            const int i = seq.X[k - 1][j];
            long long num = i > 0 ? beta(i) + k - 1 : -(beta(-i) - k);
            if (num % ell != 0)
                throw std::logic_error("sign_levi_weight: non-integral weight entry");
            w.push_back(static_cast<int>(num / ell - static_cast<long long>(j + 1) + shift));
        }
        for (std::size_t j = 1; j < w.size(); ++j)
            if (w[j] < w[j - 1])
                throw std::logic_error("sign_levi_weight: block weight not increasing");
        std::vector<int> decreasing(w.rbegin(), w.rend());
        out.gl_weights.push_back(RationalGLWeight::from_vector(decreasing));
        out.gl_weight_raw.push_back(std::move(w));
    }
    if (odd) {
        out.so_block = 2 * seq.r_so + 1;
        std::vector<int> w;
        for (std::size_t j = 0; j < seq.I[p].size(); ++j) {
            const int i = seq.I[p][j];
            long long num = beta(i) + p;
            if (num % ell != 0)
                throw std::logic_error("sign_levi_weight: non-integral so-weight entry");
            w.push_back(static_cast<int>(num / ell - static_cast<long long>(j + 1)));
        }
        out.so_weight = Partition::from_unsorted(w);
        out.so_weight_raw = std::move(w);
    }
    return out;
}

long long LeviDatum::weight_norm() const {
    long long total = 0;
    for (const auto& w : gl_weight_raw)
        for (int v : w) total += v < 0 ? -v : v;
    total += so_weight.weight();
    return total;
}

bool is_stable(const Partition& mu, int ell, int n) {
    const LeviDatum d = sign_levi_weight(mu, ell, n);
    if (d.sign == 0)
        throw std::domain_error("is_stable: undefined when the sign vanishes");
    for (std::size_t k = 0; k < d.s.size(); ++k)
        if (d.s[k] != d.alpha[k] + 1) return false;
    return true;
}

LeviDatum pad_levi(const Partition& mu, int ell, int n) {
    const LeviDatum base = sign_levi_weight(mu, ell, n);
    if (base.sign == 0)
        throw std::domain_error("pad_levi: undefined when the sign vanishes");
    return sign_levi_weight(mu, ell, n + ell);
}

}  // namespace plethyon
