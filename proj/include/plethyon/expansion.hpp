#pragma once

#include <map>
#include <string>

#include "plethyon/partition.hpp"

namespace plethyon {

// Character families on the universal-basis side.
enum class Family { gl, so, sp };

std::string family_name(Family f);
Family parse_family(const std::string& name);

// Finitely supported integer-valued map on partitions.  Zero coefficients are
// never stored; iteration order is the partition order (deterministic).
class Expansion {
public:
    using Map = std::map<Partition, long long>;

    Expansion() = default;
    explicit Expansion(Map entries);

    void add(const Partition& key, long long value);
    long long at(const Partition& key) const;

    // Value overload keeps range-for over a temporary's entries well defined.
    const Map& entries() const& { return entries_; }
    Map entries() && { return std::move(entries_); }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    Expansion& operator+=(const Expansion& other);
    Expansion operator*(long long scalar) const;

    // Applies conjugation to every indexing partition.
    Expansion conjugated() const;

    // {"(2,1)":3,"()":-1} with keys in partition order.
    std::string to_json() const;
    std::string to_string() const;

    friend bool operator==(const Expansion&, const Expansion&) = default;

private:
    Map entries_;
};

}  // namespace plethyon
