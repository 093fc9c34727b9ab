#include "plethyon/characters.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace plethyon {

std::string group_family_name(GroupFamily f) {
    switch (f) {
        case GroupFamily::gl: return "gl";
        case GroupFamily::so_odd: return "so_odd";
        case GroupFamily::sp: return "sp";
        case GroupFamily::so_even: return "so_even";
    }
    throw std::logic_error("unknown group family");
}

GroupFamily parse_group_family(const std::string& name) {
    if (name == "gl") return GroupFamily::gl;
    if (name == "so_odd" || name == "so-odd" || name == "b") return GroupFamily::so_odd;
    if (name == "sp" || name == "c") return GroupFamily::sp;
    if (name == "so_even" || name == "so-even" || name == "d") return GroupFamily::so_even;
    throw std::invalid_argument("unknown group family '" + name +
                                "' (expected gl, so_odd, sp or so_even)");
}

namespace {

long long dot(const WeightVec& a, const WeightVec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

std::vector<WeightVec> positive_roots(GroupFamily f, int n) {
    std::vector<WeightVec> roots;
    auto root = [n](int i, int j, int ci, int cj) {
        WeightVec v(n, 0);
        v[i] = ci;
        if (j >= 0) v[j] += cj;
        return v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) roots.push_back(root(i, j, 1, -1));
    if (f != GroupFamily::gl)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) roots.push_back(root(i, j, 1, 1));
    if (f == GroupFamily::so_odd)
        for (int i = 0; i < n; ++i) roots.push_back(root(i, -1, 1, 0));
    if (f == GroupFamily::sp)
        for (int i = 0; i < n; ++i) roots.push_back(root(i, -1, 2, 0));
    return roots;
}

// Twice the half-sum of positive roots; integral for every family.
WeightVec rho2(GroupFamily f, int n) {
    WeightVec r(n, 0);
    for (int i = 0; i < n; ++i) {
        switch (f) {
            case GroupFamily::gl: r[i] = 2 * (n - 1 - i); break;
            case GroupFamily::so_odd: r[i] = 2 * (n - i) - 1; break;
            case GroupFamily::sp: r[i] = 2 * (n - i); break;
            case GroupFamily::so_even: r[i] = 2 * (n - 1 - i); break;
        }
    }
    return r;
}

bool is_dominant(GroupFamily f, const WeightVec& v) {
    const int n = static_cast<int>(v.size());
    for (int i = 0; i + 1 < n; ++i)
        if (v[i] < v[i + 1]) return false;
    switch (f) {
        case GroupFamily::gl: return true;
        case GroupFamily::so_odd:
        case GroupFamily::sp: return n == 0 || v[n - 1] >= 0;
        case GroupFamily::so_even: return n <= 1 || v[n - 2] >= std::abs(v[n - 1]);
    }
    return false;
}

WeightVec dominant_rep(GroupFamily f, const WeightVec& in) {
    WeightVec v = in;
    if (f == GroupFamily::gl) {
        std::sort(v.begin(), v.end(), std::greater<int>());
        return v;
    }
    int negatives = 0;
    bool has_zero = false;
    for (int& x : v) {
        if (x < 0) {
            x = -x;
            ++negatives;
        }
        if (x == 0) has_zero = true;
    }
    std::sort(v.begin(), v.end(), std::greater<int>());
    if (f == GroupFamily::so_even && !has_zero && negatives % 2 != 0) v.back() = -v.back();
    return v;
}

// lambda - mu in the nonnegative span of positive roots (both dominant).
bool below(GroupFamily f, const WeightVec& lambda, const WeightVec& mu) {
    const int n = static_cast<int>(lambda.size());
    long long s = 0;
    std::vector<long long> partial(n, 0);
    for (int i = 0; i < n; ++i) {
        s += lambda[i] - mu[i];
        partial[i] = s;
    }
    switch (f) {
        case GroupFamily::gl:
            for (int i = 0; i + 1 < n; ++i)
                if (partial[i] < 0) return false;
            return partial[n - 1] == 0;
        case GroupFamily::so_odd:
            for (int i = 0; i < n; ++i)
                if (partial[i] < 0) return false;
            return true;
        case GroupFamily::sp:
            for (int i = 0; i < n; ++i)
                if (partial[i] < 0) return false;
            return partial[n - 1] % 2 == 0;
        case GroupFamily::so_even: {
            if (n == 1) return partial[0] == 0;  // no roots at rank 1
            for (int i = 0; i + 2 < n; ++i)
                if (partial[i] < 0) return false;
            const long long last = partial[n - 1];
            if (last < 0 || last % 2 != 0) return false;
            if (partial[n - 2] < last / 2) return false;
            return true;
        }
    }
    return false;
}

// All dominant weights that can appear in the module with highest weight
// lambda: dominant and below lambda in the root order (the saturation
// property makes this set exact).
std::vector<WeightVec> dominant_candidates(const GroupLabel& g, const WeightVec& lambda) {
    const int n = g.rank;
    std::vector<WeightVec> out;
    if (g.family == GroupFamily::gl) {
        const int shift = *std::min_element(lambda.begin(), lambda.end());
        long long total = 0;
        for (int v : lambda) total += v - shift;
        for (const Partition& pi : enumerate_partitions(static_cast<int>(total), n)) {
            WeightVec mu(n, shift);
            for (int i = 0; i < pi.length(); ++i) mu[i] += pi.part(i);
            if (below(g.family, lambda, mu)) out.push_back(std::move(mu));
        }
        return out;
    }
    long long norm = 0;
    for (int v : lambda) norm += std::abs(v);
    for (int size = static_cast<int>(norm); size >= 0; --size) {
        for (const Partition& pi : enumerate_partitions(size, n)) {
            WeightVec mu(n, 0);
            for (int i = 0; i < pi.length(); ++i) mu[i] = pi.part(i);
            if (below(g.family, lambda, mu)) out.push_back(mu);
            if (g.family == GroupFamily::so_even && pi.length() == n && mu[n - 1] > 0) {
                mu[n - 1] = -mu[n - 1];
                if (below(g.family, lambda, mu)) out.push_back(std::move(mu));
            }
        }
    }
    return out;
}

// Linearization of the root order: strictly positive on every positive root.
long long order_key(const WeightVec& v) {
    const int n = static_cast<int>(v.size());
    long long key = 0;
    for (int i = 0; i < n; ++i) key += static_cast<long long>(v[i]) * (n - i);
    return key;
}

struct TableCache {
    std::mutex mutex;
    std::map<std::pair<std::pair<GroupFamily, int>, WeightVec>, WeightTable> tables;
};

TableCache& table_cache() {
    static TableCache c;
    return c;
}

WeightTable compute_weight_multiplicities(const GroupLabel& g, const WeightVec& lambda) {
    const auto roots = positive_roots(g.family, g.rank);
    const WeightVec r2 = rho2(g.family, g.rank);

    auto norm2 = [&](const WeightVec& v) {
        long long s = 0;
        for (int i = 0; i < g.rank; ++i) {
            long long x = 2LL * v[i] + r2[i];
            s += x * x;
        }
        return s;
    };
    const long long top_norm = norm2(lambda);

    std::vector<WeightVec> cands = dominant_candidates(g, lambda);
    std::sort(cands.begin(), cands.end(), [](const WeightVec& a, const WeightVec& b) {
        long long ka = order_key(a), kb = order_key(b);
        if (ka != kb) return ka > kb;
        return a > b;
    });

    WeightTable table;
    WeightVec w(g.rank);
    for (const WeightVec& mu : cands) {
        if (mu == lambda) {
            table[mu] = 1;
            continue;
        }
        long long num = 0;
        for (const WeightVec& alpha : roots) {
            w = mu;
            while (true) {
                for (int i = 0; i < g.rank; ++i) w[i] += alpha[i];
                auto it = table.find(dominant_rep(g.family, w));
                if (it == table.end()) break;
                num += it->second * dot(w, alpha);
            }
        }
        const long long denom = top_norm - norm2(mu);
        if (denom <= 0 || (8 * num) % denom != 0)
            throw std::logic_error("Freudenthal recursion failed (non-integral step)");
        const long long m = 8 * num / denom;
        if (m > 0) table[mu] = m;
    }
    return table;
}

void check_highest(const GroupLabel& g, const WeightVec& highest) {
    if (g.rank < 1) throw std::invalid_argument("group rank must be >= 1");
    if (static_cast<int>(highest.size()) != g.rank)
        throw std::invalid_argument("highest weight must have length = rank");
    if (!is_dominant(g.family, highest))
        throw std::invalid_argument("highest weight is not dominant");
}

WeightVec partition_vec(const Partition& p, int n) {
    WeightVec v(n, 0);
    for (int i = 0; i < p.length(); ++i) v[i] = p.part(i);
    return v;
}

}  // namespace

const WeightTable& weight_multiplicities(const GroupLabel& g, const WeightVec& highest) {
    check_highest(g, highest);
    auto& cache = table_cache();
    const auto key = std::make_pair(std::make_pair(g.family, g.rank), highest);
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.tables.find(key);
        if (it != cache.tables.end()) return it->second;
    }
    WeightTable table = compute_weight_multiplicities(g, highest);
    std::lock_guard<std::mutex> lock(cache.mutex);
    return cache.tables.emplace(key, std::move(table)).first->second;
}

std::vector<WeightVec> weyl_orbit(GroupFamily f, const WeightVec& dominant) {
    if (!is_dominant(f, dominant)) throw std::invalid_argument("weyl_orbit: not dominant");
    const int n = static_cast<int>(dominant.size());
    std::vector<WeightVec> signed_multisets;
    if (f == GroupFamily::gl) {
        signed_multisets.push_back(dominant);
    } else {
        std::map<int, int> count;
        int zeros = 0, base_negs = 0;
        for (int v : dominant) {
            if (v == 0)
                ++zeros;
            else {
                ++count[std::abs(v)];
                if (v < 0) ++base_negs;
            }
        }
        std::vector<std::pair<int, int>> groups(count.begin(), count.end());
        WeightVec chosen;
        auto rec = [&](auto&& self, std::size_t gi, int negs) -> void {
            if (gi == groups.size()) {
                // so_even without zeros only reaches sign patterns of the
                // same flip parity as the input.
                if (f == GroupFamily::so_even && zeros == 0 && (negs - base_negs) % 2 != 0)
                    return;
                WeightVec v = chosen;
                v.resize(n, 0);
                signed_multisets.push_back(std::move(v));
                return;
            }
            auto [mag, c] = groups[gi];
            for (int t = 0; t <= c; ++t) {
                for (int i = 0; i < c - t; ++i) chosen.push_back(mag);
                for (int i = 0; i < t; ++i) chosen.push_back(-mag);
                self(self, gi + 1, negs + t);
                chosen.resize(chosen.size() - c);
            }
        };
        rec(rec, 0, 0);
    }
    std::vector<WeightVec> orbit;
    for (WeightVec v : signed_multisets) {
        std::sort(v.begin(), v.end());
        do {
            orbit.push_back(v);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    return orbit;
}

namespace {

LaurentPoly table_to_poly(GroupFamily f, int n, const WeightTable& table) {
    LaurentPoly p(n);
    for (const auto& [mu, m] : table)
        for (const WeightVec& v : weyl_orbit(f, mu)) p.add_term(v, m);
    return p;
}

bool mirror_pair_needed(const GroupLabel& g, const WeightVec& v) {
    return g.family == GroupFamily::so_even && v[g.rank - 1] != 0;
}

WeightVec mirror_last(WeightVec v) {
    v.back() = -v.back();
    return v;
}

// Expands a dominant-coefficient table on the character basis, consuming it.
// Keys must be dominant; for so_even a key with nonzero last entry stands for
// the two-summand orthogonal character and its mirror key is consumed along
// with it.
std::map<WeightVec, long long> peel_table(std::map<WeightVec, long long> table,
                                          const GroupLabel& g) {
    std::map<WeightVec, long long> result;
    while (!table.empty()) {
        auto best = table.begin();
        long long best_key = order_key(best->first);
        for (auto it = std::next(table.begin()); it != table.end(); ++it) {
            long long k = order_key(it->first);
            if (k > best_key || (k == best_key && it->first > best->first)) {
                best = it;
                best_key = k;
            }
        }
        const WeightVec top = best->first;
        const long long coeff = best->second;
        auto subtract = [&](const WeightVec& highest) {
            for (const auto& [mu, m] : weight_multiplicities(g, highest)) {
                auto [it, inserted] = table.emplace(mu, -coeff * m);
                if (!inserted) {
                    it->second -= coeff * m;
                    if (it->second == 0) table.erase(it);
                }
            }
        };
        subtract(top);
        if (mirror_pair_needed(g, top)) subtract(mirror_last(top));
        result[top] += coeff;
    }
    return result;
}

Expansion peel_to_expansion(std::map<WeightVec, long long> table, const GroupLabel& g) {
    Expansion out;
    for (auto& [vec, c] : peel_table(std::move(table), g)) {
        if (g.family == GroupFamily::so_even && vec[g.rank - 1] < 0)
            throw std::logic_error("orthogonal expansion produced a mirror weight");
        WeightVec key = vec;
        while (!key.empty() && key.back() == 0) key.pop_back();
        for (int v : key)
            if (v < 0)
                throw std::invalid_argument(
                    "expansion keys are partitions; rational weights are unsupported here");
        out.add(Partition(std::move(key)), c);
    }
    return out;
}

// Invariance check plus dominant-term extraction.  Invariance is verified
// against the group generators (adjacent swaps plus the family's sign
// change), which catches missing orbit members as well as unequal
// coefficients.  For so_even the check is against the full orthogonal group
// (single sign flips), matching the two-summand basis.
std::map<WeightVec, long long> dominant_terms_checked(const LaurentPoly& P,
                                                      const GroupLabel& g) {
    const int n = g.rank;
    const GroupFamily check_family =
        g.family == GroupFamily::so_even ? GroupFamily::so_odd : g.family;
    WeightVec image;
    auto check_image = [&](const BigInt& c) {
        if (c != P.coefficient(image))
            throw std::invalid_argument("polynomial is not invariant under the Weyl group");
    };
    std::map<WeightVec, long long> table;
    for (const auto& [e, c] : P.terms()) {
        for (int i = 0; i + 1 < n; ++i) {
            image = e;
            std::swap(image[i], image[i + 1]);
            check_image(c);
        }
        if (check_family != GroupFamily::gl && n >= 1) {
            image = e;
            image[n - 1] = -image[n - 1];
            check_image(c);
        }
        if (e == dominant_rep(g.family, e)) {
            if (c > std::numeric_limits<long long>::max() ||
                c < std::numeric_limits<long long>::min())
                throw std::overflow_error("expansion coefficient exceeds 64 bits");
            table[e] = static_cast<long long>(c);
        }
    }
    return table;
}

}  // namespace

LaurentPoly weyl_character(const GroupLabel& g, const Partition& lambda) {
    if (lambda.length() > g.rank)
        throw std::invalid_argument("weyl_character: length(lambda) exceeds rank");
    const WeightVec top = partition_vec(lambda, g.rank);
    LaurentPoly p = table_to_poly(g.family, g.rank, weight_multiplicities(g, top));
    if (mirror_pair_needed(g, top))
        p += table_to_poly(g.family, g.rank, weight_multiplicities(g, mirror_last(top)));
    return p;
}

LaurentPoly gl_character(int n, const WeightVec& decreasing) {
    GroupLabel g{GroupFamily::gl, n};
    return table_to_poly(g.family, n, weight_multiplicities(g, decreasing));
}

Expansion expand_in_characters(const LaurentPoly& P, const GroupLabel& g) {
    if (P.nvars() != g.rank)
        throw std::invalid_argument("expand_in_characters: variable count != rank");
    return peel_to_expansion(dominant_terms_checked(P, g), g);
}

std::map<WeightVec, long long> expand_gl_laurent(const LaurentPoly& P, int n) {
    GroupLabel g{GroupFamily::gl, n};
    if (P.nvars() != n)
        throw std::invalid_argument("expand_gl_laurent: variable count != rank");
    return peel_table(dominant_terms_checked(P, g), g);
}

Expansion psi_oracle(const GroupLabel& g, const Partition& lambda, int ell) {
    if (ell < 1) throw std::invalid_argument("psi_oracle: ell must be >= 1");
    if (lambda.length() > g.rank)
        throw std::invalid_argument("psi_oracle: length(lambda) exceeds rank");
    const WeightVec top = partition_vec(lambda, g.rank);
    std::map<WeightVec, long long> scaled;
    auto accumulate = [&](const WeightVec& highest) {
        for (const auto& [mu, m] : weight_multiplicities(g, highest)) {
            WeightVec k = mu;
            for (int& v : k) v *= ell;
            scaled[k] += m;
        }
    };
    accumulate(top);
    if (mirror_pair_needed(g, top)) accumulate(mirror_last(top));
    return peel_to_expansion(std::move(scaled), g);
}

BigInt weyl_dimension(const GroupLabel& g, const Partition& lambda) {
    if (lambda.length() > g.rank)
        throw std::invalid_argument("weyl_dimension: length(lambda) exceeds rank");
    const WeightVec top = partition_vec(lambda, g.rank);
    const WeightVec r2 = rho2(g.family, g.rank);
    WeightVec top2(g.rank);
    for (int i = 0; i < g.rank; ++i) top2[i] = 2 * top[i] + r2[i];
    BigInt num = 1, den = 1;
    for (const WeightVec& alpha : positive_roots(g.family, g.rank)) {
        num *= dot(top2, alpha);
        den *= dot(r2, alpha);
    }
    BigInt dim = num / den;
    if (dim * den != num) throw std::logic_error("Weyl dimension did not divide exactly");
    if (mirror_pair_needed(g, top)) dim *= 2;
    return dim;
}

LaurentPoly restrict_gl_character(const LaurentPoly& P, const GroupLabel& g) {
    const int n = g.rank;
    int N = 0;
    switch (g.family) {
        case GroupFamily::so_odd: N = 2 * n + 1; break;
        case GroupFamily::sp:
        case GroupFamily::so_even: N = 2 * n; break;
        case GroupFamily::gl:
            throw std::invalid_argument("restrict_gl_character: target must be so or sp");
    }
    if (P.nvars() != N)
        throw std::invalid_argument("restrict_gl_character: polynomial must have " +
                                    std::to_string(N) + " variables");
    std::vector<WeightVec> images;
    for (int i = 0; i < N; ++i) {
        WeightVec img(n, 0);
        if (i < n)
            img[i] = 1;
        else if (N - 1 - i < n)
            img[N - 1 - i] = -1;
        images.push_back(std::move(img));
    }
    return P.substitute_monomials(n, images);
}

long long levi_branch_multiplicity(const Partition& lambda, int n, const LeviShape& shape,
                                   const std::vector<WeightVec>& gl_targets,
                                   const Partition& so_target) {
    long long total = shape.so_rank;
    for (int r : shape.gl_blocks) total += r;
    if (total != n) throw std::invalid_argument("levi blocks must sum to the rank");
    if (gl_targets.size() != shape.gl_blocks.size())
        throw std::invalid_argument("one GL target weight per GL block required");
    for (std::size_t k = 0; k < gl_targets.size(); ++k)
        if (static_cast<int>(gl_targets[k].size()) != shape.gl_blocks[k])
            throw std::invalid_argument("GL target weight length != block size");
    if (so_target.length() > shape.so_rank)
        throw std::invalid_argument("orthogonal target weight longer than its block");

    LaurentPoly current = weyl_character(GroupLabel{GroupFamily::so_odd, n}, lambda);
    for (std::size_t k = 0; k < shape.gl_blocks.size(); ++k) {
        const int r = shape.gl_blocks[k];
        if (r == 0) continue;
        const int rest = current.nvars() - r;
        // Slice off the leading block: each trailing-exponent class is an
        // S_r-invariant Laurent polynomial in the block variables.
        std::map<WeightVec, LaurentPoly> groups;
        for (const auto& [e, c] : current.terms()) {
            WeightVec head(e.begin(), e.begin() + r);
            WeightVec tail(e.begin() + r, e.end());
            auto [it, inserted] = groups.try_emplace(std::move(tail), LaurentPoly(r));
            it->second.add_term(head, c);
        }
        LaurentPoly next(rest);
        for (const auto& [tail, block_poly] : groups) {
            const auto expansion = expand_gl_laurent(block_poly, r);
            auto it = expansion.find(gl_targets[k]);
            if (it != expansion.end() && it->second != 0) next.add_term(tail, it->second);
        }
        current = std::move(next);
    }
    if (shape.so_rank == 0) {
        if (current.nvars() != 0)
            throw std::logic_error("levi restriction left variables unconsumed");
        if (so_target.length() != 0) return 0;
        return static_cast<long long>(current.coefficient(WeightVec{}));
    }
    Expansion so_part =
        expand_in_characters(current, GroupLabel{GroupFamily::so_odd, shape.so_rank});
    return so_part.at(so_target);
}

}  // namespace plethyon
