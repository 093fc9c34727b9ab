#include "plethyon/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plethyon {

namespace {

void trim_zeros(std::vector<int>& parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition part must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    trim_zeros(parts_);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    bool any = false;
    while (std::getline(in, token, ',')) {
        any = true;
        std::size_t b = token.find_first_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("empty component in partition string '" + text + "'");
        std::size_t e = token.find_last_not_of(" \t");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token.substr(b, e - b + 1), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid integer in partition string '" + text + "'");
        }
        if (used != e - b + 1)
            throw std::invalid_argument("invalid integer in partition string '" + text + "'");
        parts.push_back(value);
    }
    if (!any) return Partition{};
    return Partition(std::move(parts));
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const {
    if (i < 0) throw std::out_of_range("negative part index");
    return i < length() ? parts_[i] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(parts_[0], 0);
        for (int j = 0; j < parts_[0]; ++j)
            cols[j] = static_cast<int>(std::count_if(
                parts_.begin(), parts_.end(), [&](int p) { return p > j; }));
    }
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

std::vector<int> Partition::increasing_view(int n) const {
    if (n < length())
        throw std::invalid_argument("increasing_view: n smaller than partition length");
    std::vector<int> v(n, 0);
    for (int i = 0; i < length(); ++i) v[n - 1 - i] = parts_[i];
    return v;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

std::string Partition::to_plain_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

bool is_even_rows(const Partition& p) {
    for (int v : p.parts())
        if (v % 2 != 0) return false;
    return true;
}

bool is_even_columns(const Partition& p) {
    return is_even_rows(p.conjugate());
}

Partition frobenius_gamma(const std::vector<int>& alpha) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] <= 0)
            throw std::invalid_argument("frobenius_gamma: entries must be positive");
        if (i > 0 && alpha[i] >= alpha[i - 1])
            throw std::invalid_argument("frobenius_gamma: entries must be strictly decreasing");
    }
    const int s = static_cast<int>(alpha.size());
    std::vector<int> rows;
    for (int i = 1; i <= s; ++i) rows.push_back(alpha[i - 1] - 1 + i);
    // Rows below the diagonal come from the legs: row i has a box in column j
    // exactly when leg_j + j >= i.
    for (int i = s + 1;; ++i) {
        int row = 0;
        for (int j = 1; j <= s; ++j)
            if (alpha[j - 1] + j >= i) ++row;
        if (row == 0) break;
        rows.push_back(row);
    }
    return Partition(std::move(rows));
}

Partition frobenius_gamma_prime(const std::vector<int>& alpha) {
    return frobenius_gamma(alpha).conjugate();
}

namespace {

void gen_partitions(int remaining, int max_part, int slots, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    if (slots == 0) return;
    if (static_cast<long long>(max_part) * slots < remaining) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, slots - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int size, int max_length) {
    if (size < 0) throw std::invalid_argument("enumerate_partitions: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(size, size, max_length, cur, out);
    return out;
}

std::vector<Partition> enumerate_subpartitions(const Partition& outer, int size) {
    std::vector<Partition> out;
    if (size < 0 || size > outer.weight()) return out;
    std::vector<int> cur;
    // Descending generation bounded row-by-row by the outer shape.
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        if (row >= outer.length()) return;
        int hi = std::min(outer.part(row), row > 0 ? cur[row - 1] : remaining);
        hi = std::min(hi, remaining);
        for (int p = hi; p >= 1; --p) {
            cur.push_back(p);
            self(self, row + 1, remaining - p);
            cur.pop_back();
        }
    };
    rec(rec, 0, size);
    return out;
}

namespace {

void gen_strict(int remaining, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_strict(remaining - p, p - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_strict_partitions(int total) {
    std::vector<std::vector<int>> out;
    if (total < 0) return out;
    if (total == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur;
    gen_strict(total, total, cur, out);
    return out;
}

std::vector<int> RationalGLWeight::to_vector(int r) const {
    if (neg.length() + pos.length() > r)
        throw std::invalid_argument("RationalGLWeight does not fit in block size");
    std::vector<int> v(r, 0);
    for (int i = 0; i < pos.length(); ++i) v[i] = pos.part(i);
    for (int i = 0; i < neg.length(); ++i) v[r - 1 - i] = -neg.part(i);
    return v;
}

RationalGLWeight RationalGLWeight::from_vector(const std::vector<int>& decreasing) {
    for (std::size_t i = 1; i < decreasing.size(); ++i)
        if (decreasing[i] > decreasing[i - 1])
            throw std::invalid_argument("RationalGLWeight: vector not weakly decreasing");
    std::vector<int> pos, neg;
    for (int v : decreasing) {
        if (v >= 0)
            pos.push_back(v);
        else
            neg.push_back(-v);
    }
    std::reverse(neg.begin(), neg.end());
    return RationalGLWeight{Partition(std::move(neg)), Partition(std::move(pos))};
}

}  // namespace plethyon
