// plethyon: stabilized power-sum plethysms for classical Weyl characters.
//
// Subcommands: quotient-a, quotient-b, plethysm, split-square, convert-basis,
// branch, oracle, verify.  Partitions are entered as comma-separated weakly
// decreasing integers ("9,7,5"); the empty partition is "".

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "plethyon/characters.hpp"
#include "plethyon/expansion.hpp"
#include "plethyon/lr.hpp"
#include "plethyon/plethysm.hpp"
#include "plethyon/quotient_a.hpp"
#include "plethyon/quotient_b.hpp"
#include "plethyon/verify.hpp"

namespace {

using namespace plethyon;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

ordered_json expansion_json(const Expansion& e) {
    ordered_json out = ordered_json::object();
    for (const auto& [k, v] : e.entries()) out[k.to_string()] = v;
    return out;
}

std::string expansion_text(const Expansion& e) {
    std::string s;
    for (const auto& [k, v] : e.entries())
        s += k.to_string() + ": " + std::to_string(v) + "\n";
    if (s.empty()) s = "0\n";
    return s;
}

void emit(const ordered_json& input, const ordered_json& result, const ordered_json& meta,
          bool json_format, const std::string& text) {
    if (json_format) {
        ordered_json out;
        out["input"] = input;
        out["result"] = result;
        if (!meta.is_null()) out["meta"] = meta;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << text;
    }
}

ordered_json levi_json(const LeviDatum& d) {
    ordered_json out;
    out["sign"] = d.sign;
    if (d.sign == 0) return out;
    ordered_json blocks = ordered_json::array();
    for (int r : d.gl_blocks) blocks.push_back("GL" + std::to_string(r));
    if (d.so_block) blocks.push_back("SO" + std::to_string(*d.so_block));
    out["levi"] = blocks;
    out["alpha"] = d.alpha;
    out["s"] = d.s;
    ordered_json weights = ordered_json::array();
    for (const auto& w : d.gl_weight_raw) weights.push_back(w);
    out["gl_weights_increasing"] = weights;
    if (d.so_block) {
        out["so_weight_increasing"] = d.so_weight_raw;
        out["so_weight"] = d.so_weight.to_string();
    }
    return out;
}

std::string weight_vec_text(const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

std::string levi_text(const LeviDatum& d) {
    std::string s =
        "sign: " + std::string(d.sign > 0 ? "+1" : d.sign < 0 ? "-1" : "0") + "\n";
    if (d.sign == 0) return s;
    s += "levi:";
    for (int r : d.gl_blocks) s += " GL" + std::to_string(r);
    if (d.so_block) s += " SO" + std::to_string(*d.so_block);
    s += "\n";
    for (std::size_t k = 0; k < d.gl_blocks.size(); ++k)
        s += "alpha_" + std::to_string(k + 1) + ": " + std::to_string(d.alpha[k]) + "  s_" +
             std::to_string(k + 1) + ": " + std::to_string(d.s[k]) + "\n";
    for (std::size_t k = 0; k < d.gl_weight_raw.size(); ++k)
        s += "weight[" + std::to_string(k + 1) + "]: " + weight_vec_text(d.gl_weight_raw[k]) +
             "\n";
    if (d.so_block) s += "so_weight: " + weight_vec_text(d.so_weight_raw) + "\n";
    if (d.w0) {
        s += "wtilde:\n" + format_wtilde(*d.w0);
        s += "w0:\n" + format_signed_permutation(*d.w0);
    }
    return s;
}

int dispatch(CLI::App& app, int argc, char** argv);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stabilized power-sum plethysms for classical Weyl characters"};
    app.require_subcommand(1);
    try {
        return dispatch(app, argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
}

namespace {

int dispatch(CLI::App& app, int argc, char** argv) {
    std::string format = "text";

    std::string qa_mu;
    int qa_ell = 2, qa_rank = -1;
    CLI::App* quotient_a = app.add_subcommand("quotient-a", "sign and quotient tuple of mu");
    quotient_a->add_option("--mu", qa_mu, "partition (decreasing, e.g. 6,6,4)")->required();
    quotient_a->add_option("--ell", qa_ell, "power-sum degree (>= 1)")->required();
    quotient_a->add_option("--rank", qa_rank, "padding length n (default length(mu))");
    quotient_a->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string qb_mu;
    int qb_ell = 2, qb_rank = -1;
    CLI::App* quotient_b = app.add_subcommand(
        "quotient-b", "sign, Levi block structure and dominant weight of mu");
    quotient_b->add_option("--mu", qb_mu)->required();
    quotient_b->add_option("--ell", qb_ell, "power-sum degree (>= 2)")->required();
    quotient_b->add_option("--rank", qb_rank, "rank n (default length(mu))");
    quotient_b->add_flag("--pad", "apply the datum to mu padded by ell zero parts");
    quotient_b->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string pl_family = "so", pl_lambda, pl_mu, pl_format = "json";
    int pl_ell = 2, pl_verify_rank = -1;
    bool pl_verify = false;
    CLI::App* plethysm =
        app.add_subcommand("plethysm", "stabilized expansion of p_ell o s_lambda");
    plethysm->add_option("--family", pl_family)->check(CLI::IsMember({"gl", "so", "sp"}));
    plethysm->add_option("--lambda", pl_lambda)->required();
    plethysm->add_option("--ell", pl_ell)->required();
    plethysm->add_option("--mu", pl_mu, "report a single coefficient instead");
    plethysm->add_flag("--verify", pl_verify,
                       "cross-check against the rank-n Levi branching route (so family)");
    plethysm->add_option("--rank", pl_verify_rank, "rank for --verify (default ell*|lambda|)");
    plethysm->add_option("--format", pl_format, "json (default) or text")
        ->check(CLI::IsMember({"text", "json"}));

    std::string ss_family = "gl", ss_lambda;
    CLI::App* split = app.add_subcommand(
        "split-square", "symmetric/antisymmetric split of the tensor square");
    split->add_option("--family", ss_family)->check(CLI::IsMember({"gl", "so", "sp"}));
    split->add_option("--lambda", ss_lambda)->required();
    split->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string cb_from = "gl", cb_to = "so", cb_lambda;
    CLI::App* convert =
        app.add_subcommand("convert-basis", "universal character basis conversion");
    convert->add_option("--from", cb_from)->check(CLI::IsMember({"gl", "so", "sp"}));
    convert->add_option("--to", cb_to)->check(CLI::IsMember({"gl", "so", "sp"}));
    convert->add_option("--lambda", cb_lambda)->required();
    convert->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string br_family = "so", br_nu;
    CLI::App* branch = app.add_subcommand(
        "branch", "Littlewood branching of a GL character into so/sp characters");
    branch->add_option("--family", br_family)->check(CLI::IsMember({"so", "sp"}));
    branch->add_option("--nu", br_nu)->required();
    branch->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string or_family = "so_odd", or_lambda, or_op = "psi";
    int or_rank = -1, or_ell = 2;
    CLI::App* oracle = app.add_subcommand("oracle", "rank-n character computations");
    oracle->add_option("--family", or_family)
        ->check(CLI::IsMember({"gl", "so_odd", "sp", "so_even"}));
    oracle->add_option("--rank", or_rank)->required();
    oracle->add_option("--lambda", or_lambda)->required();
    oracle->add_option("--op", or_op, "character | psi | dim")
        ->check(CLI::IsMember({"character", "psi", "dim"}));
    oracle->add_option("--ell", or_ell, "power-sum degree for --op psi");
    oracle->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    int vf_max_weight = 2, vf_max_ell = 3;
    double vf_timeout = 0;
    bool vf_inject = false;
    CLI::App* verify = app.add_subcommand("verify", "run the consistency suites");
    verify->add_option("--max-weight", vf_max_weight, "largest |lambda| exercised");
    verify->add_option("--max-ell", vf_max_ell);
    verify->add_option("--timeout", vf_timeout, "soft budget in seconds (0 = unlimited)");
    verify->add_flag("--inject-a-gl-sign-flip", vf_inject,
                     "negative-control fixture: flip the gl coefficients");

    app.parse(argc, argv);
    const bool json = format == "json";

    const char* cache_dir = std::getenv("PLETHYON_CACHE_DIR");
    const std::string cache_path =
        cache_dir ? std::string(cache_dir) + "/lr-cache.jsonl" : std::string{};
    if (!cache_path.empty()) load_lr_cache(cache_path);
    struct CacheFlush {
        std::string path;
        ~CacheFlush() {
            if (!path.empty()) {
                try {
                    flush_lr_cache(path);
                } catch (...) {
                }
            }
        }
    } flusher{cache_path};

    if (quotient_a->parsed()) {
        const Partition mu = Partition::parse(qa_mu);
        const int n = qa_rank < 0 ? mu.length() : qa_rank;
        const QuotientA q = ell_quotient_a(mu, qa_ell, n);
        ordered_json result;
        result["sign"] = q.sign;
        std::string text =
            "sign: " + std::string(q.sign > 0 ? "+1" : q.sign < 0 ? "-1" : "0") + "\n";
        if (q.sign != 0) {
            ordered_json quot = ordered_json::array();
            std::string qtext = "quotient: [";
            for (std::size_t k = 0; k < q.quotient.size(); ++k) {
                quot.push_back(q.quotient[k].to_string());
                if (k) qtext += ",";
                qtext += q.quotient[k].to_string();
            }
            result["quotient"] = quot;
            text += qtext + "]\n";
        }
        emit({{"mu", mu.to_string()}, {"ell", qa_ell}, {"rank", n}}, result, nullptr, json,
             text);
        return kExitOk;
    }

    if (quotient_b->parsed()) {
        const Partition mu = Partition::parse(qb_mu);
        const int n = qb_rank < 0 ? std::max(mu.length(), 1) : qb_rank;
        const bool pad = quotient_b->count("--pad") > 0;
        const LeviDatum d = pad ? pad_levi(mu, qb_ell, n) : sign_levi_weight(mu, qb_ell, n);
        ordered_json result = levi_json(d);
        std::string text = levi_text(d);
        if (d.sign != 0 && !pad) {
            const bool stable = is_stable(mu, qb_ell, n);
            result["stable"] = stable;
            text += std::string("stable: ") + (stable ? "true" : "false") + "\n";
        }
        emit({{"mu", mu.to_string()}, {"ell", qb_ell}, {"rank", n}}, result, nullptr, json,
             text);
        return kExitOk;
    }

    if (plethysm->parsed()) {
        const Partition lambda = Partition::parse(pl_lambda);
        const Family family = parse_family(pl_family);
        const int stable_rank = pl_ell * static_cast<int>(lambda.weight());
        const ordered_json meta = {{"stable_range_rank", stable_rank}};
        const ordered_json input = {
            {"family", pl_family}, {"lambda", lambda.to_string()}, {"ell", pl_ell}};
        const Expansion full = psi_universal(family, lambda, pl_ell);
        if (pl_verify) {
            if (family != Family::so)
                throw std::invalid_argument("--verify is implemented for --family so");
            const int n = pl_verify_rank < 0 ? std::max(stable_rank, 1) : pl_verify_rank;
            for (int m = stable_rank; m >= 0; m -= 2)
                for (const Partition& mu : enumerate_partitions(m, n)) {
                    const long long direct = full.at(mu);
                    const long long levi = a_so_via_levi(lambda, mu, pl_ell, n);
                    if (direct != levi) {
                        std::cerr << "verification mismatch at mu=" << mu.to_string()
                                  << ": stable " << direct << " vs levi " << levi << "\n";
                        return kExitVerifyFailure;
                    }
                }
        }
        const bool pl_json = pl_format == "json";
        if (plethysm->count("--mu") > 0) {
            const Partition mu = Partition::parse(pl_mu);
            const long long c = full.at(mu);
            emit(input, c, meta, pl_json, mu.to_string() + ": " + std::to_string(c) + "\n");
        } else {
            emit(input, expansion_json(full), meta, pl_json, expansion_text(full));
        }
        return kExitOk;
    }

    if (split->parsed()) {
        const Partition lambda = Partition::parse(ss_lambda);
        const Family family = parse_family(ss_family);
        const SplitResult r = split_square(lambda, family);
        const ordered_json meta = {{"stable_range_rank", 2 * lambda.weight()}};
        ordered_json result;
        result["symmetric"] = expansion_json(r.plus);
        result["antisymmetric"] = expansion_json(r.minus);
        emit({{"family", ss_family}, {"lambda", lambda.to_string()}}, result, meta, json,
             "symmetric:\n" + expansion_text(r.plus) + "antisymmetric:\n" +
                 expansion_text(r.minus));
        return kExitOk;
    }

    if (convert->parsed()) {
        const Partition lambda = Partition::parse(cb_lambda);
        Expansion e;
        if (cb_from == "gl" && cb_to == "so")
            e = gl_to_so(lambda);
        else if (cb_from == "gl" && cb_to == "sp")
            e = gl_to_sp(lambda);
        else if (cb_from == "so" && cb_to == "gl")
            e = so_to_gl(lambda);
        else if (cb_from == "sp" && cb_to == "gl")
            e = sp_to_gl(lambda);
        else
            throw std::invalid_argument("supported conversions: gl<->so, gl<->sp");
        emit({{"from", cb_from}, {"to", cb_to}, {"lambda", lambda.to_string()}},
             expansion_json(e), nullptr, json, expansion_text(e));
        return kExitOk;
    }

    if (branch->parsed()) {
        const Partition nu = Partition::parse(br_nu);
        const Family family = parse_family(br_family);
        Expansion e;
        for (int m = static_cast<int>(nu.weight()); m >= 0; m -= 2)
            for (const Partition& lam : enumerate_subpartitions(nu, m)) {
                long long b = littlewood_b(nu, lam, family);
                if (b) e.add(lam, b);
            }
        emit({{"family", br_family}, {"nu", nu.to_string()}}, expansion_json(e), nullptr,
             json, expansion_text(e));
        return kExitOk;
    }

    if (oracle->parsed()) {
        const Partition lambda = Partition::parse(or_lambda);
        const GroupLabel g{parse_group_family(or_family), or_rank};
        const ordered_json input = {{"family", or_family},
                                    {"rank", or_rank},
                                    {"lambda", lambda.to_string()},
                                    {"op", or_op}};
        if (or_op == "character") {
            const LaurentPoly chi = weyl_character(g, lambda);
            emit(input, ordered_json::parse(chi.to_json()), nullptr, json,
                 chi.to_json() + "\n");
        } else if (or_op == "dim") {
            const BigInt dim = weyl_dimension(g, lambda);
            emit(input, dim.str(), nullptr, json, dim.str() + "\n");
        } else {
            const Expansion e = psi_oracle(g, lambda, or_ell);
            ordered_json in2 = input;
            in2["ell"] = or_ell;
            emit(in2, expansion_json(e), nullptr, json, expansion_text(e));
        }
        return kExitOk;
    }

    if (verify->parsed()) {
        VerifyOptions options;
        options.max_lambda_weight = vf_max_weight;
        options.max_ell = vf_max_ell;
        options.timeout_seconds = vf_timeout;
        options.inject_a_gl_sign_flip = vf_inject;
        const VerifyReport report = run_verification(options);
        for (const auto& item : report.items) {
            std::cout << (item.skipped ? "SKIP" : item.pass ? "PASS" : "FAIL") << " "
                      << item.name;
            if (!item.detail.empty()) std::cout << ": " << item.detail;
            std::cout << "\n";
        }
        return report.all_pass() ? kExitOk : kExitVerifyFailure;
    }

    return kExitUsage;
}

}  // namespace
