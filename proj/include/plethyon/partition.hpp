#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace plethyon {

// Integer partition: weakly decreasing nonnegative parts, trailing zeros
// trimmed.  The empty partition is Partition{}.
class Partition {
public:
    Partition() = default;

    // Accepts a weakly decreasing sequence (trailing zeros allowed, trimmed).
    // Throws std::invalid_argument on negative or increasing input.
    explicit Partition(std::vector<int> parts);

    // Sorts descending before trimming; never throws on ordering.
    static Partition from_unsorted(std::vector<int> parts);

    // "5,2,1" -> (5,2,1); "" -> ().  Spaces around commas are tolerated.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const& { return parts_; }
    std::vector<int> parts() && { return std::move(parts_); }
    int length() const { return static_cast<int>(parts_.size()); }
    long long weight() const;
    bool empty() const { return parts_.empty(); }

    // 0-based part access; parts beyond length() read as 0.
    int part(int i) const;

    Partition conjugate() const;
    bool contains(const Partition& inner) const;

    // Length-n weakly increasing zero-padded view: v[i] = part(n-1-i).
    // The quotient algorithms consume this form.  Requires n >= length().
    std::vector<int> increasing_view(int n) const;

    // "(5,2,1)", "()" for the empty partition.
    std::string to_string() const;
    // "5,2,1", "" for the empty partition (parse() round-trips this).
    std::string to_plain_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

bool is_even_rows(const Partition& p);
bool is_even_columns(const Partition& p);

// Partition with i-th Frobenius arm alpha_i - 1 and i-th leg alpha_i.
// Requires alpha strictly decreasing and positive; |result| = 2*sum(alpha).
Partition frobenius_gamma(const std::vector<int>& alpha);
// Conjugate of frobenius_gamma: arms alpha_i, legs alpha_i - 1.
Partition frobenius_gamma_prime(const std::vector<int>& alpha);

// All partitions of `size` with at most max_length parts, in lexicographic
// descending order: (4),(3,1),(2,2) for (4,2).
std::vector<Partition> enumerate_partitions(int size, int max_length);

// All partitions contained in `outer` with the given size.
std::vector<Partition> enumerate_subpartitions(const Partition& outer, int size);

// Strictly decreasing positive sequences summing to `total`, lexicographic
// descending: (3),(2,1) for total 3.
std::vector<std::vector<int>> enumerate_strict_partitions(int total);

// Rational highest weight of GL_r, split as a pair of partitions.  The full
// weight vector of block size r is (pos_1,...,pos_p, 0,...,0, -neg_q,...,-neg_1)
// in decreasing order, with p + q <= r.
struct RationalGLWeight {
    Partition neg;
    Partition pos;

    long long weight() const { return neg.weight() + pos.weight(); }

    // Decreasing weight vector padded with zeros to block size r.
    // Throws if the two partitions need more than r slots.
    std::vector<int> to_vector(int r) const;

    // Splits a weakly decreasing integer vector: negative entries (negated,
    // reversed) form `neg`, nonnegative ones form `pos`.
    static RationalGLWeight from_vector(const std::vector<int>& decreasing);

    friend auto operator<=>(const RationalGLWeight&, const RationalGLWeight&) = default;
};

}  // namespace plethyon
