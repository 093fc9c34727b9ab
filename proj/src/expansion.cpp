#include "plethyon/expansion.hpp"

#include <stdexcept>

namespace plethyon {

std::string family_name(Family f) {
    switch (f) {
        case Family::gl: return "gl";
        case Family::so: return "so";
        case Family::sp: return "sp";
    }
    throw std::logic_error("unknown family");
}

Family parse_family(const std::string& name) {
    if (name == "gl") return Family::gl;
    if (name == "so") return Family::so;
    if (name == "sp") return Family::sp;
    throw std::invalid_argument("unknown family '" + name + "' (expected gl, so or sp)");
}

Expansion::Expansion(Map entries) : entries_(std::move(entries)) {
    for (auto it = entries_.begin(); it != entries_.end();)
        it = it->second == 0 ? entries_.erase(it) : std::next(it);
}

void Expansion::add(const Partition& key, long long value) {
    if (value == 0) return;
    auto [it, inserted] = entries_.emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) entries_.erase(it);
    }
}

long long Expansion::at(const Partition& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second;
}

Expansion& Expansion::operator+=(const Expansion& other) {
    for (const auto& [k, v] : other.entries_) add(k, v);
    return *this;
}

Expansion Expansion::operator*(long long scalar) const {
    Expansion out;
    if (scalar == 0) return out;
    for (const auto& [k, v] : entries_) out.entries_.emplace(k, v * scalar);
    return out;
}

Expansion Expansion::conjugated() const {
    Expansion out;
    for (const auto& [k, v] : entries_) out.add(k.conjugate(), v);
    return out;
}

std::string Expansion::to_json() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : entries_) {
        if (!first) s += ',';
        first = false;
        s += '"' + k.to_string() + "\":" + std::to_string(v);
    }
    s += '}';
    return s;
}

std::string Expansion::to_string() const {
    if (entries_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, v] : entries_) {
        if (!first) s += v >= 0 ? " + " : " - ";
        else if (v < 0) s += "-";
        first = false;
        long long a = v >= 0 ? v : -v;
        if (a != 1) s += std::to_string(a) + "*";
        s += k.to_string();
    }
    return s;
}

}  // namespace plethyon
