#include "plethyon/verify.hpp"

#include <chrono>
#include <functional>

#include "plethyon/characters.hpp"
#include "plethyon/lr.hpp"
#include "plethyon/plethysm.hpp"
#include "plethyon/quotient_a.hpp"
#include "plethyon/quotient_b.hpp"

namespace plethyon {

bool VerifyReport::all_pass() const {
    for (const auto& item : items)
        if (!item.pass && !item.skipped) return false;
    return true;
}

namespace {

std::vector<Partition> lambdas_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w)
        for (const Partition& p : enumerate_partitions(w, w)) out.push_back(p);
    return out;
}

int oracle_rank(const Partition& lambda, int ell) {
    return std::max<int>(static_cast<int>(ell * lambda.weight()), 2) + 1;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    const auto start = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
        if (options.timeout_seconds <= 0) return false;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        return elapsed.count() > options.timeout_seconds;
    };
    auto run = [&](const std::string& name, const std::function<std::string()>& body) {
        VerifyItem item;
        item.name = name;
        if (out_of_time()) {
            item.skipped = true;
            item.detail = "skipped: timeout budget exhausted";
            report.items.push_back(std::move(item));
            return;
        }
        try {
            item.detail = body();
            item.pass = item.detail.empty();
        } catch (const std::exception& e) {
            item.pass = false;
            item.detail = std::string("exception: ") + e.what();
        }
        report.items.push_back(std::move(item));
    };

    const std::vector<Partition> lambdas = lambdas_up_to(options.max_lambda_weight);
    const long long flip = options.inject_a_gl_sign_flip ? -1 : 1;

    run("psi-gl-vs-oracle", [&]() -> std::string {
        for (const Partition& lam : lambdas)
            for (int ell = 1; ell <= options.max_ell; ++ell) {
                const int n = oracle_rank(lam, ell);
                const Expansion got = psi_gl(lam, ell) * flip;
                const Expansion want = psi_oracle(GroupLabel{GroupFamily::gl, n}, lam, ell);
                if (!(got == want))
                    return "mismatch at lambda=" + lam.to_string() +
                           " ell=" + std::to_string(ell);
            }
        return "";
    });

    for (auto [name, family, oracle_family] :
         {std::tuple{"psi-so-vs-oracle", Family::so, GroupFamily::so_odd},
          std::tuple{"psi-sp-vs-oracle", Family::sp, GroupFamily::sp},
          std::tuple{"psi-so-vs-even-oracle", Family::so, GroupFamily::so_even}}) {
        run(name, [&, family, oracle_family]() -> std::string {
            for (const Partition& lam : lambdas)
                for (int ell = 1; ell <= options.max_ell; ++ell) {
                    const int n = oracle_rank(lam, ell);
                    const Expansion got = psi_universal(family, lam, ell) * flip;
                    const Expansion want =
                        psi_oracle(GroupLabel{oracle_family, n}, lam, ell);
                    if (!(got == want))
                        return "mismatch at lambda=" + lam.to_string() +
                               " ell=" + std::to_string(ell);
                }
            return "";
        });
    }

    run("sp-so-duality", [&]() -> std::string {
        for (const Partition& lam : lambdas)
            for (int ell = 1; ell <= options.max_ell; ++ell) {
                const long long sign =
                    ((ell - 1) * lam.weight()) % 2 == 0 ? 1 : -1;
                const Expansion lhs = psi_sp(lam, ell);
                const Expansion rhs = psi_so(lam.conjugate(), ell).conjugated() * sign;
                if (!(lhs == rhs))
                    return "duality broken at lambda=" + lam.to_string() +
                           " ell=" + std::to_string(ell);
            }
        return "";
    });

    run("levi-route-ell-2", [&]() -> std::string {
        for (const Partition& lam : lambdas) {
            const int n = std::max<int>(2 * static_cast<int>(lam.weight()), 1);
            for (int m = 2 * static_cast<int>(lam.weight()); m >= 0; m -= 2)
                for (const Partition& mu : enumerate_partitions(m, n)) {
                    const long long direct = flip * a_so(lam, mu, 2);
                    const long long levi = a_so_via_levi(lam, mu, 2, std::max(n, mu.length()));
                    if (direct != levi)
                        return "route mismatch at lambda=" + lam.to_string() +
                               " mu=" + mu.to_string();
                }
        }
        return "";
    });

    run("basis-inversion", [&]() -> std::string {
        for (const Partition& lam : lambdas) {
            for (Family family : {Family::so, Family::sp}) {
                Expansion composite;
                const Expansion to_gl =
                    family == Family::so ? so_to_gl(lam) : sp_to_gl(lam);
                for (const auto& [nu, c] : to_gl.entries())
                    composite +=
                        (family == Family::so ? gl_to_so(nu) : gl_to_sp(nu)) * c;
                Expansion identity;
                identity.add(lam, 1);
                if (!(composite == identity))
                    return "round trip failed for " + family_name(family) + " at " +
                           lam.to_string();
            }
        }
        return "";
    });

    run("split-square", [&]() -> std::string {
        for (const Partition& lam : lambdas)
            for (Family family : {Family::gl, Family::so, Family::sp}) {
                const SplitResult split = split_square(lam, family);
                Expansion sum = split.plus;
                sum += split.minus;
                const Expansion one{Expansion::Map{{lam, 1}}};
                if (!(sum == basis_product(one, one, family)))
                    return "halves do not recompose for " + family_name(family) + " at " +
                           lam.to_string();
            }
        return "";
    });

    run("quotient-pad-stability", [&]() -> std::string {
        for (int w = 0; w <= options.max_lambda_weight + 2; ++w)
            for (const Partition& mu : enumerate_partitions(w, w))
                for (int ell = 1; ell <= options.max_ell; ++ell)
                    for (int n = mu.length(); n <= mu.length() + ell; ++n)
                        if (!pad_stability_check(mu, ell, std::max(n, 1)))
                            return "pad stability failed at mu=" + mu.to_string() +
                                   " ell=" + std::to_string(ell) + " n=" + std::to_string(n);
        return "";
    });

    return report;
}

}  // namespace plethyon
