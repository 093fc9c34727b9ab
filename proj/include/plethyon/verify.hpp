#pragma once

#include <string>
#include <vector>

namespace plethyon {

struct VerifyOptions {
    int max_lambda_weight = 2;  // largest |lambda| exercised
    int max_ell = 3;
    double timeout_seconds = 0;        // 0 = no limit; exceeded suites are skipped
    bool inject_a_gl_sign_flip = false;  // negative-control fixture
};

struct VerifyItem {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_pass() const;
};

// Runs the cross-route consistency suites (stable plethysms against the
// rank-n character oracle, duality, Levi branching, basis inversion,
// tensor-square splits) within the given budget.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace plethyon
