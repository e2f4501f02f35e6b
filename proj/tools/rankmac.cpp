// Command-line front end: load code files, compute rank distributions and
// dual transforms, run the identity verification suites, emit reports.
//
// Exit codes: 0 = all held/skipped, 1 = identity failure, 2 = usage/parse error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankmac/codefile.hpp"
#include "rankmac/codes.hpp"
#include "rankmac/macwilliams.hpp"
#include "rankmac/moments.hpp"
#include "rankmac/mrd.hpp"
#include "rankmac/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rankmac;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t env_cap(std::uint64_t fallback) {
    const char* v = std::getenv("RANKMAC_CAP");
    if (!v) return fallback;
    try {
        return std::stoull(v);
    } catch (...) {
        throw CLI::ValidationError("RANKMAC_CAP", "not an unsigned integer");
    }
}

ordered_json dist_json(const RankDistribution& d) {
    ordered_json a = ordered_json::array();
    for (const auto& s : counts_to_strings(d)) a.push_back(s);
    return a;
}

void print_dist(std::ostream& os, const RankDistribution& d) {
    os << "(";
    for (size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i].get_str();
    os << ")";
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

ordered_json code_params(const LinearCode& c) {
    return ordered_json{{"q", c.field().q()},
                        {"m", c.field().m()},
                        {"n", c.n()},
                        {"k", c.k()}};
}

int cmd_weights(const std::string& file, bool json_out, std::uint64_t cap) {
    Timer t;
    LinearCode code = load_code_file(file);
    RankDistribution A = brute_distribution(code, cap);
    auto d = min_rank_distance(A);
    auto diam = diameter(A);
    bool mrd = d && code.cardinality() ==
                        singleton_bound(code.field().q(), code.field().m(), code.n(), *d);
    if (json_out) {
        ordered_json j;
        j["command"] = "weights";
        j["params"] = code_params(code);
        j["distribution"] = dist_json(A);
        j["min_rank_distance"] = d ? ordered_json(*d) : ordered_json(nullptr);
        j["diameter"] = diam ? ordered_json(*diam) : ordered_json(nullptr);
        j["mrd"] = mrd;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "rank distribution A = ";
        print_dist(std::cout, A);
        std::cout << "\nd_R = " << (d ? std::to_string(*d) : "undefined (zero code)")
                  << ", diameter = " << (diam ? std::to_string(*diam) : "undefined (zero code)")
                  << ", MRD = " << (mrd ? "yes" : "no") << "\n";
    }
    std::cerr << "elapsed " << t.ms() << " ms\n";
    return kExitOk;
}

int cmd_dual(const std::string& file, const std::string& method, bool json_out, std::uint64_t cap) {
    Timer t;
    LinearCode code = load_code_file(file);
    const Field& f = code.field();
    RankDistribution A = brute_distribution(code, cap);

    ordered_json methods;
    std::optional<RankDistribution> first;
    bool agree = true;
    auto run = [&](const std::string& name) {
        RankDistribution B;
        if (name == "brute")
            B = brute_distribution(dual_code(code), cap);
        else if (name == "functional")
            B = macwilliams_functional(f.q(), f.m(), code.k(), A);
        else
            B = macwilliams_krawtchouk(f.q(), f.m(), code.k(), A);
        methods[name] = dist_json(B);
        if (!first)
            first = B;
        else
            agree = agree && *first == B;
        if (!json_out) {
            std::cout << name << ": B = ";
            print_dist(std::cout, B);
            std::cout << "\n";
        }
    };
    if (method == "all") {
        run("brute");
        run("functional");
        run("krawtchouk");
    } else {
        run(method);
    }
    if (json_out) {
        ordered_json j;
        j["command"] = "dual";
        j["params"] = code_params(code);
        j["input_distribution"] = dist_json(A);
        j["methods"] = methods;
        j["agree"] = agree;
        std::cout << j.dump(2) << "\n";
    } else if (method == "all") {
        std::cout << (agree ? "all methods agree" : "METHOD DISAGREEMENT") << "\n";
    }
    std::cerr << "elapsed " << t.ms() << " ms\n";
    return agree ? kExitOk : kExitIdentityFailure;
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Held: return "held";
        case CheckStatus::Failed: return "failed";
        default: return "skipped";
    }
}

int cmd_verify(const VerifyOptions& opts, bool json_out) {
    Timer t;
    VerifySummary summary = run_verify(opts);
    if (json_out) {
        ordered_json j;
        j["command"] = "verify";
        ordered_json qs = ordered_json::array();
        for (long q : opts.qs) qs.push_back(q);
        j["params"] = ordered_json{{"q", qs},
                                   {"max_m", opts.max_m},
                                   {"max_n", opts.max_n},
                                   {"cap", opts.cap},
                                   {"seed", opts.seed},
                                   {"random_per_cell", opts.random_per_cell},
                                   {"poly_trials", opts.poly_trials}};
        ordered_json results = ordered_json::array();
        for (const auto& r : summary.results) {
            ordered_json e{{"name", r.name},
                           {"status", status_name(r.status)},
                           {"held", r.held},
                           {"failed", r.failed},
                           {"skipped", r.skipped}};
            if (!r.detail.empty()) e["detail"] = r.detail;
            results.push_back(std::move(e));
        }
        j["results"] = std::move(results);
        j["totals"] =
            ordered_json{{"held", summary.held}, {"failed", summary.failed}, {"skipped", summary.skipped}};
        j["ok"] = summary.all_ok();
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : summary.results) {
            std::cout << status_name(r.status) << "  " << r.name << "  (held " << r.held
                      << ", failed " << r.failed << ", skipped " << r.skipped << ")";
            if (r.status == CheckStatus::Failed) std::cout << "\n    first: " << r.detail;
            std::cout << "\n";
        }
        std::cout << "totals: held " << summary.held << ", failed " << summary.failed
                  << ", skipped " << summary.skipped << "\n";
    }
    std::cerr << "elapsed " << t.ms() << " ms\n";
    return summary.all_ok() ? kExitOk : kExitIdentityFailure;
}

int cmd_krawtchouk(long q, int j, int i, int m, int n, bool json_out) {
    Int value = krawtchouk(q, j, i, m, n);
    if (json_out) {
        ordered_json out;
        out["command"] = "krawtchouk";
        out["params"] = ordered_json{{"q", q}, {"j", j}, {"i", i}, {"m", m}, {"n", n}};
        out["value"] = value.get_str();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "P_" << j << "(" << i << "; " << m << ", " << n << ") = " << value.get_str()
                  << "\n";
    }
    return kExitOk;
}

int cmd_mrd(long q, int m, int n, int k, bool json_out) {
    RankDistribution A = n <= m ? mrd_distribution(q, m, n, k) : class2_distribution(q, m, n, k);
    if (json_out) {
        ordered_json out;
        out["command"] = "mrd";
        out["params"] = ordered_json{{"q", q}, {"m", m}, {"n", n}, {"k", k}};
        out["distribution"] = dist_json(A);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "MRD rank distribution A = ";
        print_dist(std::cout, A);
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_moments(const std::string& file, int max_nu, bool json_out, std::uint64_t cap) {
    Timer t;
    LinearCode code = load_code_file(file);
    const Field& f = code.field();
    const long q = f.q();
    const int m = f.m(), n = code.n(), k = code.k();
    RankDistribution A = brute_distribution(code, cap);
    RankDistribution B = macwilliams_functional(q, m, k, A);
    const int d_dual = dual_min_distance(B);
    const int diam_dual = dual_diameter(B);
    const int top = max_nu < 0 ? n : std::min(max_nu, n);

    bool any_failed = false;
    ordered_json checks = ordered_json::array();
    auto emit = [&](const MomentCheck& mc, int nu) {
        const char* status = mc.skipped() ? "skipped" : (mc.holds() ? "held" : "failed");
        any_failed = any_failed || (!mc.skipped() && !mc.holds());
        if (json_out) {
            ordered_json e{{"identity", mc.identity}, {"nu", nu}, {"status", status}};
            if (mc.skipped()) {
                e["reason"] = mc.reason;
            } else {
                e["lhs"] = mc.lhs.get_str();
                e["rhs"] = mc.rhs.get_str();
            }
            checks.push_back(std::move(e));
        } else {
            std::cout << status << "  nu=" << nu << "  " << mc.identity;
            if (mc.skipped())
                std::cout << "  (" << mc.reason << ")";
            else
                std::cout << "  lhs=" << mc.lhs.get_str() << " rhs=" << mc.rhs.get_str();
            std::cout << "\n";
        }
    };
    for (int nu = 0; nu <= top; ++nu) {
        emit(binomial_moment_x(q, m, k, A, B, nu), nu);
        emit(binomial_moment_x_simplified(q, m, k, A, nu, d_dual), nu);
        emit(binomial_moment_y(q, m, k, A, B, nu), nu);
        emit(binomial_moment_y_min_dist(q, m, k, A, nu, d_dual), nu);
        emit(binomial_moment_y_diameter(q, m, A, nu, diam_dual), nu);
        emit(pless_x(q, m, k, A, B, nu), nu);
        emit(pless_x_simplified(q, m, k, A, nu, d_dual), nu);
        emit(pless_y(q, m, k, A, B, nu), nu);
        emit(pless_y_simplified(q, m, k, A, nu, d_dual), nu);
        emit(t_closed_forms(q, m, k, A, nu, d_dual), nu);
        for (int lam = 0; lam <= 2; ++lam) {
            emit(t_reduction_lambda(q, m, k, A, lam, nu), nu);
            emit(t_transparent_lambda(q, m, k, A, lam, nu, d_dual), nu);
        }
        for (int mu = 0; mu <= 2; ++mu) {
            emit(t_reduction_mu(q, m, k, A, mu, nu), nu);
            emit(t_transparent_mu(q, m, k, A, mu, nu, d_dual), nu);
        }
    }
    if (json_out) {
        ordered_json out;
        out["command"] = "moments";
        out["params"] = code_params(code);
        out["distribution"] = dist_json(A);
        out["dual_distribution"] = dist_json(B);
        out["d_dual"] = d_dual;
        out["dual_diameter"] = diam_dual;
        out["checks"] = std::move(checks);
        out["ok"] = !any_failed;
        std::cout << out.dump(2) << "\n";
    }
    std::cerr << "elapsed " << t.ms() << " ms\n";
    return any_failed ? kExitIdentityFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank-metric weight enumerator calculus"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit a machine-readable JSON report");

    std::string file;
    std::string method = "all";
    std::uint64_t cap_file = 0;  // resolved per command below

    auto* weights = app.add_subcommand("weights", "rank distribution, d_R, diameter, MRD flag");
    weights->add_option("file", file, "code file (JSON)")->required();
    auto* w_cap = weights->add_option("--cap", cap_file, "enumeration cap (codewords)");

    auto* dual = app.add_subcommand("dual", "dual rank distribution");
    dual->add_option("file", file, "code file (JSON)")->required();
    dual->add_option("--method", method, "brute | functional | krawtchouk | all")
        ->check(CLI::IsMember({"brute", "functional", "krawtchouk", "all"}));
    auto* d_cap = dual->add_option("--cap", cap_file, "enumeration cap (codewords)");

    VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "run the identity suites on a grid");
    verify->add_option("--q", vopts.qs, "base prime(s) of the grid");
    verify->add_option("--max-m", vopts.max_m, "largest extension degree");
    verify->add_option("--max-n", vopts.max_n, "largest code length");
    std::uint64_t vcap = 0;
    auto* v_cap = verify->add_option("--cap", vcap, "enumeration cap (codewords)");
    verify->add_option("--seed", vopts.seed, "seed for sampled suites");
    verify->add_option("--random-per-cell", vopts.random_per_cell, "random codes per (q,m,n,k)");
    verify->add_option("--trials", vopts.poly_trials, "randomized polynomial trials");

    long kq = 2;
    int kj = 0, ki = 0, km = 1, kn = 1;
    auto* kraw = app.add_subcommand("krawtchouk", "generalized Krawtchouk value P_j(i;m,n)");
    kraw->add_option("--j", kj)->required();
    kraw->add_option("--i", ki)->required();
    kraw->add_option("--m", km)->required();
    kraw->add_option("--n", kn)->required();
    kraw->add_option("--q", kq)->required();

    long mq = 2;
    int mm = 1, mn = 1, mk = 1;
    auto* mrd = app.add_subcommand("mrd", "analytic MRD rank distribution");
    mrd->add_option("--n", mn)->required();
    mrd->add_option("--k", mk)->required();
    mrd->add_option("--m", mm)->required();
    mrd->add_option("--q", mq)->required();

    int max_nu = -1;
    auto* moments = app.add_subcommand("moments", "per-nu moment identity dump for a code file");
    moments->add_option("file", file, "code file (JSON)")->required();
    moments->add_option("--max-nu", max_nu, "largest nu (default n)");
    auto* m_cap = moments->add_option("--cap", cap_file, "enumeration cap (codewords)");

    try {
        app.parse(argc, argv);

        const std::uint64_t file_cap_default = env_cap(kDefaultCap);
        if (weights->parsed())
            return cmd_weights(file, json_out, w_cap->count() ? cap_file : file_cap_default);
        if (dual->parsed())
            return cmd_dual(file, method, json_out, d_cap->count() ? cap_file : file_cap_default);
        if (verify->parsed()) {
            vopts.cap = v_cap->count() ? vcap : env_cap(1ull << 20);
            return cmd_verify(vopts, json_out);
        }
        if (kraw->parsed()) return cmd_krawtchouk(kq, kj, ki, km, kn, json_out);
        if (mrd->parsed()) return cmd_mrd(mq, mm, mn, mk, json_out);
        if (moments->parsed())
            return cmd_moments(file, max_nu, json_out, m_cap->count() ? cap_file : file_cap_default);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
