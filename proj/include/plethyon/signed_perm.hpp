#pragma once

#include <string>
#include <vector>

namespace plethyon {

// Signed permutation of {1..n}, extended to negatives by w(-x) = -w(x).
// Stored as the window (w(1),...,w(n)) with values in +-{1..n} whose absolute
// values form a permutation.
class SignedPermutation {
public:
    explicit SignedPermutation(std::vector<int> window);

    int n() const { return static_cast<int>(window_.size()); }
    int image(int x) const;  // defined for x in +-{1..n}

    // Determinant of the signed permutation matrix: parity of the underlying
    // permutation times (-1)^(number of negative window entries).
    int det_sign() const;

    // Coxeter length for the hyperoctahedral generators
    // (i,i+1)(-i,-i-1), i=1..n-1 and (1,-1):
    // inversions of the window plus the sum of negated values.
    long long coxeter_length() const;

    const std::vector<int>& window() const { return window_; }

private:
    std::vector<int> window_;
};

// Two-row array of eta . w over -n..-1,1..n where eta shifts negative images
// up by one (so the bottom row lives in -(n-1)..n).  Used for printing.
std::string format_wtilde(const SignedPermutation& w);
std::string format_signed_permutation(const SignedPermutation& w);

}  // namespace plethyon
