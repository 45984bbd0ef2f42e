// rsgap command-line front end. Talks to the shared library strictly
// through the C API in rsgap.h.
#include "rsgap.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

// prints the library's last error and maps the status to the exit code
int fail(rsgap_status st) {
    std::cerr << "error: " << rsgap_last_error() << "\n";
    return static_cast<int>(st);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    rsgap_string_free(s);
    return out;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << data;
    return bool(out);
}

struct ParamFlags {
    std::string c_rational = "1";
    uint64_t u = 1;
    uint32_t v = 2;
    uint32_t alpha = 4;
    std::string profile = "desk";
    uint64_t m = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--C", c_rational, "sum-count exponent C (integer or num/den)");
        cmd->add_option("--u", u, "rate numerator: rho = u/2^v");
        cmd->add_option("--v", v, "rate denominator exponent");
        cmd->add_option("--alpha", alpha, "subgroup size exponent: s = 2^alpha");
        cmd->add_option("--profile", profile, "strict or desk")
            ->check(CLI::IsMember({"strict", "desk"}));
        cmd->add_option("--m", m, "coset size (desk profile only, power of two)");
    }
};

rsgap_status derive(const ParamFlags& pf, rsgap_params** out) {
    return rsgap_params_derive(pf.c_rational.c_str(), pf.u, pf.v, pf.alpha, pf.profile.c_str(),
                               pf.m, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forge and verify Reed-Solomon proximity-gap failure instances"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(rsgap_version()));

    // derive-params
    auto* cmd_derive = app.add_subcommand("derive-params", "derive the parameter tower, print JSON");
    ParamFlags derive_flags;
    derive_flags.attach(cmd_derive);

    // forge
    auto* cmd_forge = app.add_subcommand("forge", "build a counterexample instance");
    ParamFlags forge_flags;
    forge_flags.attach(cmd_forge);
    std::string params_file, out_file, fixed_prime;
    uint64_t seed = 1, max_candidates = 0, audit_budget = 0, audit_pairs = 0, witness_budget = 0;
    uint32_t threads = 1, mr_rounds = 0;
    bool sequential = false;
    cmd_forge->add_option("--params-file", params_file, "read the parameter tower from a JSON file");
    cmd_forge->add_option("--seed", seed, "RNG seed (default 1)");
    cmd_forge->add_option("--out", out_file, "output path (default stdout)");
    cmd_forge->add_option("--max-candidates", max_candidates, "prime-search candidate cap (default 100000)");
    cmd_forge->add_option("--budget-audit", audit_budget, "max subsets for the exhaustive sum audit (default 1e6)");
    cmd_forge->add_option("--budget-audit-pairs", audit_pairs, "pair draws for the sampled sum audit (default 1e6)");
    cmd_forge->add_option("--witness-budget", witness_budget, "cap on stored witnesses (default 4096, never below n^C)");
    cmd_forge->add_option("--threads", threads, "worker threads (0 = auto)");
    cmd_forge->add_option("--mr-rounds", mr_rounds, "Miller-Rabin rounds for wide primes (default 64)");
    cmd_forge->add_flag("--sequential", sequential, "scan prime candidates upward (reproducible)");
    cmd_forge->add_option("--fixed-prime", fixed_prime, "test hook: use this prime, skip the search");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "re-verify an instance file");
    std::string verify_file, level = "witness";
    uint64_t oracle_budget = 0;
    uint32_t verify_threads = 1;
    cmd_verify->add_option("file", verify_file, "instance JSON file")->required();
    cmd_verify->add_option("--level", level, "witness, exhaustive or oracle")
        ->check(CLI::IsMember({"witness", "exhaustive", "oracle"}));
    cmd_verify->add_option("--budget-oracle", oracle_budget, "p^(k+1) cap for brute-force oracles (default 1e7)");
    cmd_verify->add_option("--threads", verify_threads, "worker threads (0 = auto)");

    // audit
    auto* cmd_audit = app.add_subcommand("audit", "desk-scale number-theoretic audits");
    cmd_audit->require_subcommand(1);

    auto* audit_sums = cmd_audit->add_subcommand("sums", "subset-sum distinctness in F_p");
    uint32_t as_s = 16, as_r = 6;
    std::string as_p;
    uint64_t as_budget = 0, as_pairs = 0, as_seed = 1;
    audit_sums->add_option("--s", as_s, "subgroup order (power of two)");
    audit_sums->add_option("--r", as_r, "subset size");
    audit_sums->add_option("--p", as_p, "prime modulus, decimal")->required();
    audit_sums->add_option("--budget-exhaustive", as_budget, "exhaustive subset cap (default 1e6)");
    audit_sums->add_option("--pairs", as_pairs, "sampled pair count (default 1e6)");
    audit_sums->add_option("--seed", as_seed, "RNG seed");

    auto* audit_res = cmd_audit->add_subcommand("resultant", "cyclotomic resultant size bound");
    uint32_t ar_s = 8, ar_r = 2;
    uint64_t ar_samples = 0, ar_seed = 1, ar_budget = 0;
    audit_res->add_option("--s", ar_s, "cyclotomic index (power of two)");
    audit_res->add_option("--r", ar_r, "subset size");
    audit_res->add_option("--samples", ar_samples, "sampled pair count when not exhaustive (default 1000)");
    audit_res->add_option("--seed", ar_seed, "RNG seed");
    audit_res->add_option("--budget-exhaustive", ar_budget, "exhaustive ordered-pair cap (default 200000)");

    auto* audit_bad = cmd_audit->add_subcommand("bad-primes", "bad primes dividing resultants");
    uint32_t ab_s = 16, ab_r = 6;
    uint64_t ab_pairs = 0, ab_seed = 1;
    audit_bad->add_option("--s", ab_s, "cyclotomic index (power of two)");
    audit_bad->add_option("--r", ab_r, "subset size");
    audit_bad->add_option("--pairs", ab_pairs, "sampled pair count (default 100)");
    audit_bad->add_option("--seed", ab_seed, "RNG seed");

    auto* audit_theta = cmd_audit->add_subcommand("theta", "Chebyshev theta/psi over a progression");
    uint64_t at_x = 10, at_n = 4, at_a = 1, at_limit = 0;
    audit_theta->add_option("--x", at_x, "upper limit");
    audit_theta->add_option("--n", at_n, "modulus");
    audit_theta->add_option("--a", at_a, "residue class");
    audit_theta->add_option("--sieve-limit", at_limit, "sieve size (default max(x, 2))");

    auto* audit_tb = cmd_audit->add_subcommand("T-bound", "prime count in [4^s, 8^s] vs lower bound");
    uint32_t tb_s = 8;
    uint64_t tb_n = 16, tb_budget = 0;
    audit_tb->add_option("--s", tb_s, "interval exponent");
    audit_tb->add_option("--n", tb_n, "progression modulus");
    audit_tb->add_option("--sieve-budget", tb_budget, "largest sievable interval end (default 1e8)");

    CLI11_PARSE(app, argc, argv);

    if (cmd_derive->parsed()) {
        rsgap_params* ps = nullptr;
        if (auto st = derive(derive_flags, &ps); st != RSGAP_OK) return fail(st);
        char* json = nullptr;
        if (auto st = rsgap_params_to_json(ps, &json); st != RSGAP_OK) {
            rsgap_params_free(ps);
            return fail(st);
        }
        std::cout << take(json);
        rsgap_params_free(ps);
        return 0;
    }

    if (cmd_forge->parsed()) {
        rsgap_params* ps = nullptr;
        if (!params_file.empty()) {
            std::string text;
            if (!read_file(params_file, text)) {
                std::cerr << "error: cannot read " << params_file << "\n";
                return static_cast<int>(RSGAP_ERR_FORMAT);
            }
            if (auto st = rsgap_params_from_json(text.c_str(), &ps); st != RSGAP_OK) return fail(st);
        } else {
            if (auto st = derive(forge_flags, &ps); st != RSGAP_OK) return fail(st);
        }
        rsgap_forge_options opts{};
        opts.seed = seed;
        opts.max_candidates = max_candidates;
        opts.audit_exhaustive_budget = audit_budget;
        opts.audit_sample_pairs = audit_pairs;
        opts.witness_budget = witness_budget;
        opts.threads = threads;
        opts.mr_rounds = mr_rounds;
        opts.sequential_scan = sequential ? 1 : 0;
        opts.fixed_prime = fixed_prime.empty() ? nullptr : fixed_prime.c_str();

        rsgap_cx* cx = nullptr;
        auto st = rsgap_forge(ps, &opts, &cx);
        rsgap_params_free(ps);
        if (st != RSGAP_OK) return fail(st);
        char* json = nullptr;
        st = rsgap_cx_to_json(cx, &json);
        rsgap_cx_free(cx);
        if (st != RSGAP_OK) return fail(st);
        const std::string text = take(json);
        if (out_file.empty()) {
            std::cout << text;
        } else if (!write_file(out_file, text)) {
            std::cerr << "error: cannot write " << out_file << "\n";
            return static_cast<int>(RSGAP_ERR_FORMAT);
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        std::string text;
        if (!read_file(verify_file, text)) {
            std::cerr << "error: cannot read " << verify_file << "\n";
            return static_cast<int>(RSGAP_ERR_FORMAT);
        }
        rsgap_cx* cx = nullptr;
        if (auto st = rsgap_cx_from_json(text.c_str(), &cx); st != RSGAP_OK) return fail(st);
        char* report = nullptr;
        int all_pass = 0;
        auto st = rsgap_verify(cx, level.c_str(), oracle_budget, verify_threads, &report, &all_pass);
        rsgap_cx_free(cx);
        if (st != RSGAP_OK) return fail(st);
        std::cout << take(report);
        return all_pass ? 0 : static_cast<int>(RSGAP_ERR_VERIFY);
    }

    if (audit_sums->parsed()) {
        char* report = nullptr;
        if (auto st = rsgap_audit_sums(as_s, as_r, as_p.c_str(), as_budget, as_pairs, as_seed, &report);
            st != RSGAP_OK)
            return fail(st);
        std::cout << take(report);
        return 0;
    }
    if (audit_res->parsed()) {
        char* report = nullptr;
        if (auto st = rsgap_audit_resultant(ar_s, ar_r, ar_samples, ar_seed, ar_budget, &report);
            st != RSGAP_OK)
            return fail(st);
        std::cout << take(report);
        return 0;
    }
    if (audit_bad->parsed()) {
        char* report = nullptr;
        if (auto st = rsgap_audit_bad_primes(ab_s, ab_r, ab_pairs, ab_seed, &report); st != RSGAP_OK)
            return fail(st);
        std::cout << take(report);
        return 0;
    }
    if (audit_theta->parsed()) {
        char* report = nullptr;
        if (auto st = rsgap_audit_theta(at_x, at_n, at_a, at_limit, &report); st != RSGAP_OK)
            return fail(st);
        std::cout << take(report);
        return 0;
    }
    if (audit_tb->parsed()) {
        char* report = nullptr;
        if (auto st = rsgap_audit_t_bound(tb_s, tb_n, tb_budget, &report); st != RSGAP_OK)
            return fail(st);
        std::cout << take(report);
        return 0;
    }
    return 0;
}
