// Acceptance suite: exact reproduction of the worked quotient examples plus
// cross-route equivalences between the stable formulas, the Levi branching
// route and the rank-n character oracle.  Prints one line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "plethyon/characters.hpp"
#include "plethyon/lr.hpp"
#include "plethyon/plethysm.hpp"
#include "plethyon/quotient_a.hpp"
#include "plethyon/quotient_b.hpp"
#include "plethyon/verify.hpp"

using namespace plethyon;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

std::string fail_at(const std::string& what) { return what; }

std::string criterion_quotient_a_example() {
    const Partition mu = P({6, 6, 4, 4, 4, 3, 2, 1});
    ell_quotient_a(mu, 3, 8);  // warm up
    const auto t0 = std::chrono::steady_clock::now();
    const QuotientA q = ell_quotient_a(mu, 3, 8);
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - t0;
    if (q.sign != -1) return fail_at("sign != -1");
    if (q.quotient != std::vector<Partition>{P({1, 1}), P({2, 2, 1}), P({2, 1})})
        return fail_at("quotient tuple mismatch");
    if (elapsed.count() >= 1.0)
        return fail_at("runtime " + std::to_string(elapsed.count()) + " ms >= 1 ms");
    return "";
}

std::string criterion_quotient_b_even_example() {
    const LeviDatum d = sign_levi_weight(P({9, 7, 6, 5, 5, 2}), 2, 6);
    if (d.sign != 1) return fail_at("sign != +1");
    if (d.alpha != std::vector<long long>{2}) return fail_at("alpha_1 != 2");
    if (d.gl_weight_raw != std::vector<std::vector<int>>{{-5, -2, -1, 3, 3, 3}})
        return fail_at("dominant weight mismatch");
    if (d.gl_blocks != std::vector<int>{6} || d.so_block)
        return fail_at("levi is not GL_6");
    const std::string wtilde =
        "-6 -5 -4 -3 -2 -1  1  2  3  4  5  6\n"
        "-4 -5 -3 -1 -2  0  1  3  2  4  6  5\n";
    if (format_wtilde(*d.w0) != wtilde) return fail_at("printed wtilde array differs");
    return "";
}

std::string criterion_quotient_b_odd_example() {
    const LeviDatum d = sign_levi_weight(P({9, 7, 6, 5, 5, 1}), 3, 6);
    if (d.sign != 1) return fail_at("sign != +1");
    if (d.gl_weight_raw != std::vector<std::vector<int>>{{-2, -2, 3, 3}})
        return fail_at("GL-block weight mismatch");
    if (d.so_weight_raw != std::vector<int>{0, 1}) return fail_at("SO-block weight mismatch");
    if (d.gl_blocks != std::vector<int>{4} || !d.so_block || *d.so_block != 5)
        return fail_at("levi is not GL_4 x SO_5");
    const std::string wtilde =
        "-6 -5 -4 -3 -2 -1  1  2  3  4  5  6\n"
        "-5 -2 -3 -4  0 -1  2  1  5  4  3  6\n";
    if (format_wtilde(*d.w0) != wtilde) return fail_at("printed wtilde array differs");
    return "";
}

std::string criterion_nonstable_sequence() {
    const Partition mu = P({9, 6, 5, 5, 1});
    const std::vector<std::vector<int>> expected = {
        {-1, 2, 4, 4, 5}, {-5, -4, -4, -2, -2, 1}, {-1, 2, 2, 2, 4, 4, 5}};
    for (int i = 0; i < 3; ++i) {
        const LeviDatum d = sign_levi_weight(mu, 2, 5 + i);
        if (d.sign == 0) return fail_at("sign vanished at n=" + std::to_string(5 + i));
        if (d.gl_weight_raw[0] != expected[i])
            return fail_at("weight mismatch at n=" + std::to_string(5 + i));
    }
    const LeviDatum base = sign_levi_weight(mu, 2, 5);
    if (base.s[0] != 1 || base.alpha[0] != 2) return fail_at("s_1/alpha_1 mismatch");
    if (is_stable(mu, 2, 5)) return fail_at("sequence wrongly reported stable");
    // Padding by ell zeros at once lands on the third weight.
    if (pad_levi(mu, 2, 5).gl_weight_raw[0] != expected[2])
        return fail_at("pad by ell zeros mismatch");
    return "";
}

std::string criterion_oracle_equivalence() {
    for (int w = 0; w <= 3; ++w)
        for (const Partition& lam : enumerate_partitions(w, w))
            for (int ell = 2; ell <= 3; ++ell) {
                const int n = std::max(ell * w, 2) + 1;
                const std::string tag =
                    " at lambda=" + lam.to_string() + " ell=" + std::to_string(ell);
                if (!(psi_gl(lam, ell) ==
                      psi_oracle(GroupLabel{GroupFamily::gl, n}, lam, ell)))
                    return fail_at("gl" + tag);
                const Expansion so = psi_so(lam, ell);
                if (!(so == psi_oracle(GroupLabel{GroupFamily::so_odd, n}, lam, ell)))
                    return fail_at("so_odd" + tag);
                if (!(so == psi_oracle(GroupLabel{GroupFamily::so_even, n}, lam, ell)))
                    return fail_at("so_even" + tag);
                if (!(psi_sp(lam, ell) ==
                      psi_oracle(GroupLabel{GroupFamily::sp, n}, lam, ell)))
                    return fail_at("sp" + tag);
            }
    return "";
}

std::string criterion_levi_route_ell2() {
    for (int w = 0; w <= 4; ++w)
        for (const Partition& lam : enumerate_partitions(w, w)) {
            const int base_rank = std::max(2 * w, 1);
            for (int m = 2 * w; m >= 0; --m)
                for (const Partition& mu : enumerate_partitions(m, m)) {
                    const int n = std::max(base_rank, mu.length());
                    if (a_so(lam, mu, 2) != a_so_via_levi(lam, mu, 2, n))
                        return fail_at("lambda=" + lam.to_string() + " mu=" + mu.to_string());
                }
        }
    return "";
}

std::string criterion_levi_route_ell3() {
    for (const Partition& lam : {P({1}), P({2}), P({1, 1})}) {
        const int n = 3 * static_cast<int>(lam.weight());
        for (int m = 3 * static_cast<int>(lam.weight()); m >= 0; --m)
            for (const Partition& mu : enumerate_partitions(m, n))
                if (a_so(lam, mu, 3) != a_so_via_levi(lam, mu, 3, n))
                    return fail_at("lambda=" + lam.to_string() + " mu=" + mu.to_string());
    }
    return "";
}

std::string criterion_basis_inversion_and_restriction() {
    for (int w = 0; w <= 6; ++w)
        for (const Partition& lam : enumerate_partitions(w, w))
            for (Family family : {Family::so, Family::sp}) {
                Expansion composite;
                const Expansion to_gl = family == Family::so ? so_to_gl(lam) : sp_to_gl(lam);
                for (const auto& [nu, c] : to_gl.entries())
                    composite += (family == Family::so ? gl_to_so(nu) : gl_to_sp(nu)) * c;
                Expansion identity;
                identity.add(lam, 1);
                if (!(composite == identity))
                    return fail_at("inversion failed for " + family_name(family) + " at " +
                                   lam.to_string());
            }
    for (int n = 1; n <= 3; ++n)
        for (int w = 0; w <= 5; ++w)
            for (const Partition& nu : enumerate_partitions(w, n)) {
                const GroupLabel so{GroupFamily::so_odd, n};
                const Expansion got = expand_in_characters(
                    restrict_gl_character(
                        weyl_character(GroupLabel{GroupFamily::gl, 2 * n + 1}, nu), so),
                    so);
                for (int wm = 0; wm <= w; ++wm)
                    for (const Partition& lam : enumerate_partitions(wm, n))
                        if (got.at(lam) != littlewood_b(nu, lam, Family::so))
                            return fail_at("so restriction at nu=" + nu.to_string());
                const GroupLabel sp{GroupFamily::sp, n};
                const Expansion got_sp = expand_in_characters(
                    restrict_gl_character(
                        weyl_character(GroupLabel{GroupFamily::gl, 2 * n}, nu), sp),
                    sp);
                for (int wm = 0; wm <= w; ++wm)
                    for (const Partition& lam : enumerate_partitions(wm, n))
                        if (got_sp.at(lam) != littlewood_b(nu, lam, Family::sp))
                            return fail_at("sp restriction at nu=" + nu.to_string());
            }
    return "";
}

std::string criterion_split_square() {
    for (int w = 0; w <= 3; ++w)
        for (const Partition& lam : enumerate_partitions(w, w))
            for (Family family : {Family::gl, Family::so, Family::sp}) {
                SplitResult split;
                try {
                    split = split_square(lam, family);  // throws if the routes disagree
                } catch (const std::exception& e) {
                    return fail_at(std::string(e.what()) + " at " + lam.to_string());
                }
                for (const auto& [mu, c] : split.plus.entries())
                    if (c <= 0) return fail_at("nonpositive m+ at " + mu.to_string());
                for (const auto& [mu, c] : split.minus.entries())
                    if (c <= 0) return fail_at("nonpositive m- at " + mu.to_string());
                const int n = 2 * w + 1;
                const GroupFamily gf = family == Family::gl   ? GroupFamily::gl
                                       : family == Family::so ? GroupFamily::so_odd
                                                              : GroupFamily::sp;
                const GroupLabel g{gf, n};
                BigInt difference = 0, total = 0;
                auto tally = [&](const Expansion& part, int sign) {
                    for (const auto& [mu, c] : part.entries()) {
                        const BigInt d = weyl_dimension(g, mu);
                        total += c * d;
                        difference += sign * c * d;
                    }
                };
                tally(split.plus, 1);
                tally(split.minus, -1);
                const BigInt dim = weyl_dimension(g, lam);
                if (difference != dim || total != dim * dim)
                    return fail_at("dimension identity failed at " + lam.to_string() +
                                   " family " + family_name(family));
            }
    return "";
}

std::string criterion_duality() {
    for (int w = 0; w <= 4; ++w)
        for (const Partition& lam : enumerate_partitions(w, w))
            for (int ell = 1; ell <= 4; ++ell) {
                const long long sign = ((ell - 1) * w) % 2 == 0 ? 1 : -1;
                if (!(psi_sp(lam, ell) == psi_so(lam.conjugate(), ell).conjugated() * sign))
                    return fail_at("lambda=" + lam.to_string() + " ell=" + std::to_string(ell));
            }
    return "";
}

std::string criterion_negative_control() {
    VerifyOptions options;
    options.max_lambda_weight = 1;
    options.inject_a_gl_sign_flip = true;
    if (run_verification(options).all_pass())
        return fail_at("sign-flipped gl coefficients were not detected");
    VerifyOptions clean;
    clean.max_lambda_weight = 1;
    if (!run_verification(clean).all_pass())
        return fail_at("clean verification unexpectedly failed");
    return "";
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<std::string()> body;
        double time_limit_seconds = 0;  // 0 = unconstrained
    };
    const std::vector<Criterion> criteria = {
        {"1 type-A quotient worked example", criterion_quotient_a_example, 0},
        {"2 even-case quotient worked example", criterion_quotient_b_even_example, 0},
        {"3 odd-case quotient worked example", criterion_quotient_b_odd_example, 0},
        {"4 nonstable weight sequence", criterion_nonstable_sequence, 0},
        {"5 oracle equivalence (gl/so_odd/sp/so_even)", criterion_oracle_equivalence, 300},
        {"6 levi route at ell=2", criterion_levi_route_ell2, 120},
        {"7 levi route at ell=3", criterion_levi_route_ell3, 300},
        {"8 basis inversion + littlewood restriction", criterion_basis_inversion_and_restriction,
         0},
        {"9 split-square formulas and dimensions", criterion_split_square, 0},
        {"10 symplectic/orthogonal duality", criterion_duality, 0},
        {"11 negative control (injected sign flip)", criterion_negative_control, 0},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = criterion.body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
        if (detail.empty() && criterion.time_limit_seconds > 0 &&
            elapsed.count() >= criterion.time_limit_seconds)
            detail = "time limit " + std::to_string(criterion.time_limit_seconds) +
                     "s exceeded";
        if (detail.empty()) {
            std::printf("PASS criterion %s (%.2fs)\n", criterion.name.c_str(), elapsed.count());
        } else {
            std::printf("FAIL criterion %s (%.2fs): %s\n", criterion.name.c_str(),
                        elapsed.count(), detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
