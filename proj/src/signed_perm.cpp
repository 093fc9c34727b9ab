#include "plethyon/signed_perm.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace plethyon {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    const int size = n();
    std::vector<bool> seen(size + 1, false);
    for (int v : window_) {
        int a = std::abs(v);
        if (a < 1 || a > size || seen[a])
            throw std::invalid_argument("signed permutation window is not bijective");
        seen[a] = true;
    }
}

int SignedPermutation::image(int x) const {
    if (x == 0 || std::abs(x) > n())
        throw std::out_of_range("signed permutation argument out of range");
    return x > 0 ? window_[x - 1] : -window_[-x - 1];
}

int SignedPermutation::det_sign() const {
    long long flips = 0, inversions = 0;
    const int size = n();
    for (int i = 0; i < size; ++i) {
        if (window_[i] < 0) ++flips;
        for (int j = i + 1; j < size; ++j)
            if (std::abs(window_[i]) > std::abs(window_[j])) ++inversions;
    }
    return (flips + inversions) % 2 == 0 ? 1 : -1;
}

long long SignedPermutation::coxeter_length() const {
    const int size = n();
    long long len = 0;
    for (int i = 0; i < size; ++i) {
        if (window_[i] < 0) len += -window_[i];
        for (int j = i + 1; j < size; ++j)
            if (window_[i] > window_[j]) ++len;
    }
    return len;
}

namespace {

std::string two_row(const SignedPermutation& w, bool tilde) {
    const int n = w.n();
    std::vector<int> top, bottom;
    for (int x = -n; x <= n; ++x) {
        if (x == 0) continue;
        top.push_back(x);
        int y = w.image(x);
        bottom.push_back(tilde && y < 0 ? y + 1 : y);
    }
    std::size_t width = 2;
    for (int v : bottom) width = std::max(width, std::to_string(v).size());
    for (int v : top) width = std::max(width, std::to_string(v).size());
    std::ostringstream out;
    auto row = [&](const std::vector<int>& vals) {
        for (std::size_t i = 0; i < vals.size(); ++i) {
            std::string s = std::to_string(vals[i]);
            out << (i ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        out << '\n';
    };
    row(top);
    row(bottom);
    return out.str();
}

}  // namespace

std::string format_wtilde(const SignedPermutation& w) { return two_row(w, true); }

std::string format_signed_permutation(const SignedPermutation& w) { return two_row(w, false); }

}  // namespace plethyon
