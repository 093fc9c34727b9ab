#include "plethyon/lr.hpp"

#include <fstream>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include <json.hpp>

namespace plethyon {

namespace {

struct TripleKey {
    Partition a, b, c;
    bool operator==(const TripleKey&) const = default;
};

struct TripleHash {
    std::size_t operator()(const TripleKey& k) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](int v) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        };
        for (int v : k.a.parts()) mix(v);
        mix(-1);
        for (int v : k.b.parts()) mix(v);
        mix(-2);
        for (int v : k.c.parts()) mix(v);
        return h;
    }
};

struct LrCache {
    std::mutex mutex;
    std::unordered_map<TripleKey, long long, TripleHash> memo;
    std::vector<TripleKey> fresh;  // computed since last load/flush
};

LrCache& cache() {
    static LrCache c;
    return c;
}

// Counts column-strict fillings of nu/lambda with content mu whose reverse
// reading word (rows top to bottom, right to left) is a lattice word.
long long count_lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int rows = nu.length();
    const int letters = mu.length();
    if (letters == 0) return 1;  // shapes equal, empty filling
    if (letters > rows) return 0;

    // grid[r][c] holds the letter at row r, column c (1-based cols), 0 = inner.
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(nu.part(r) + 1, 0);
    std::vector<int> used(letters + 1, 0);

    long long total = 0;
    auto fill = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            ++total;
            return;
        }
        if (c < lambda.part(r) + 1) {  // row done, move down
            self(self, r + 1, nu.part(r + 1));
            return;
        }
        const int above = (r > 0 && c <= nu.part(r - 1) && c > lambda.part(r - 1))
                              ? grid[r - 1][c]
                              : 0;
        const int right = (c < nu.part(r)) ? grid[r][c + 1] : letters;
        for (int t = above + 1; t <= right; ++t) {
            if (used[t] >= mu.part(t - 1)) continue;
            if (t > 1 && used[t] >= used[t - 1]) continue;  // lattice prefix
            grid[r][c] = t;
            ++used[t];
            self(self, r, c - 1);
            --used[t];
            grid[r][c] = 0;
        }
    };
    fill(fill, 0, nu.part(0));
    return total;
}

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() + mu.weight() != nu.weight()) return 0;
    if (!nu.contains(lambda) || !nu.contains(mu)) return 0;

    TripleKey key{lambda, mu, nu};
    if (mu < lambda) key = TripleKey{mu, lambda, nu};  // c is symmetric in (lambda, mu)
    auto& c = cache();
    {
        std::lock_guard<std::mutex> lock(c.mutex);
        auto it = c.memo.find(key);
        if (it != c.memo.end()) return it->second;
    }
    long long value = count_lr_tableaux(lambda, mu, nu);
    {
        std::lock_guard<std::mutex> lock(c.mutex);
        auto [it, inserted] = c.memo.emplace(key, value);
        if (inserted) c.fresh.push_back(key);
        return it->second;
    }
}

Expansion schur_product(const Partition& lambda, const Partition& mu) {
    Expansion out;
    const int total = static_cast<int>(lambda.weight() + mu.weight());
    const int max_len = lambda.length() + mu.length();
    for (const Partition& nu : enumerate_partitions(total, max_len)) {
        if (nu.part(0) > lambda.part(0) + mu.part(0)) continue;
        if (!nu.contains(lambda)) continue;
        long long c = lr_coefficient(lambda, mu, nu);
        if (c) out.add(nu, c);
    }
    return out;
}

Expansion skew_expansion(const Partition& nu, const Partition& lambda) {
    Expansion out;
    if (!nu.contains(lambda)) return out;
    const int size = static_cast<int>(nu.weight() - lambda.weight());
    for (const Partition& sigma : enumerate_partitions(size, nu.length())) {
        long long c = lr_coefficient(lambda, sigma, nu);
        if (c) out.add(sigma, c);
    }
    return out;
}

Expansion multi_schur_product(const std::vector<Partition>& shapes, const Partition* within) {
    Expansion acc;
    acc.add(Partition{}, 1);
    for (const Partition& shape : shapes) {
        Expansion next;
        for (const auto& [key, coeff] : acc.entries()) {
            for (const auto& [nu, c] : schur_product(key, shape).entries()) {
                if (within && !within->contains(nu)) continue;
                next.add(nu, coeff * c);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

long long multi_lr(const std::vector<Partition>& shapes, const Partition& nu) {
    long long total = 0;
    for (const Partition& s : shapes) total += s.weight();
    if (total != nu.weight()) return 0;
    return multi_schur_product(shapes, &nu).at(nu);
}

long long stable_tensor_coefficient(const Partition& lambda, const Partition& mu,
                                    const Partition& nu) {
    const long long twice = lambda.weight() + mu.weight() - nu.weight();
    if (twice < 0 || twice % 2 != 0) return 0;
    const int k = static_cast<int>(twice / 2);
    long long d = 0;
    for (const Partition& xi : enumerate_subpartitions(lambda, k)) {
        if (!mu.contains(xi)) continue;
        const Expansion sigmas = skew_expansion(lambda, xi);
        const Expansion taus = skew_expansion(mu, xi);
        for (const auto& [sigma, cs] : sigmas.entries())
            for (const auto& [tau, ct] : taus.entries()) {
                long long c = lr_coefficient(sigma, tau, nu);
                if (c) d += cs * ct * c;
            }
    }
    return d;
}

long long littlewood_b(const Partition& nu, const Partition& lambda, Family family) {
    if (family == Family::gl)
        throw std::invalid_argument("littlewood_b: family must be so or sp");
    const long long m = nu.weight() - lambda.weight();
    if (m < 0) return 0;
    long long b = 0;
    for (const Partition& gamma : enumerate_subpartitions(nu, static_cast<int>(m))) {
        const bool ok = family == Family::so ? is_even_rows(gamma) : is_even_columns(gamma);
        if (!ok) continue;
        b += lr_coefficient(lambda, gamma, nu);
    }
    return b;
}

long long littlewood_r(const Partition& lambda, const Partition& nu, Family family) {
    if (family == Family::gl)
        throw std::invalid_argument("littlewood_r: family must be so or sp");
    const long long diff = lambda.weight() - nu.weight();
    if (diff < 0 || diff % 2 != 0) return 0;
    long long r = 0;
    for (const auto& alpha : enumerate_strict_partitions(static_cast<int>(diff / 2))) {
        const Partition gamma =
            family == Family::sp ? frobenius_gamma(alpha) : frobenius_gamma_prime(alpha);
        r += lr_coefficient(nu, gamma, lambda);
    }
    return r;
}

void load_lr_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;  // nothing cached yet
    auto& c = cache();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
        if (rec.is_discarded()) continue;
        try {
            TripleKey key{Partition::parse(rec.at("lambda").get<std::string>()),
                          Partition::parse(rec.at("mu").get<std::string>()),
                          Partition::parse(rec.at("nu").get<std::string>())};
            long long value = rec.at("c").get<long long>();
            std::lock_guard<std::mutex> lock(c.mutex);
            c.memo.emplace(key, value);
        } catch (const std::exception&) {
            // skip malformed record
        }
    }
    std::lock_guard<std::mutex> lock(c.mutex);
    c.fresh.clear();
}

void flush_lr_cache(const std::string& path) {
    auto& c = cache();
    std::vector<TripleKey> fresh;
    {
        std::lock_guard<std::mutex> lock(c.mutex);
        fresh.swap(c.fresh);
    }
    if (fresh.empty()) return;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open LR cache file '" + path + "'");
    for (const TripleKey& key : fresh) {
        long long value;
        {
            std::lock_guard<std::mutex> lock(c.mutex);
            value = c.memo.at(key);
        }
        nlohmann::json rec = {{"lambda", key.a.to_plain_string()},
                              {"mu", key.b.to_plain_string()},
                              {"nu", key.c.to_plain_string()},
                              {"c", value}};
        out << rec.dump() << '\n';
    }
}

}  // namespace plethyon
