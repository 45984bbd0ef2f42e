#include "rsgap/forge.hpp"

#include "rsgap/error.hpp"
#include "rsgap/util.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace rsgap {

namespace {

bool next_combination(std::vector<uint32_t>& c, uint32_t limit) {
    const size_t r = c.size();
    size_t i = r;
    while (i-- > 0) {
        if (c[i] + 1 <= limit - (r - i)) {
            ++c[i];
            for (size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<uint32_t> random_subset(std::mt19937_64& rng, uint32_t limit, uint32_t r) {
    std::vector<uint32_t> pool(limit);
    std::iota(pool.begin(), pool.end(), 0);
    for (uint32_t i = 0; i < r; ++i) {
        const uint32_t j = i + uint32_t(rng() % (limit - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<uint32_t> out(pool.begin(), pool.begin() + r);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt subset_sum(const FieldCtx& ctx, const std::vector<uint32_t>& subset) {
    BigInt sum(0);
    for (uint32_t e : subset) sum = ctx.add(sum, ctx.xi_pow(e));
    return sum;
}

// p <= n^A expressed as a 2-power cap on p: floor(A * log2 n) bits
std::optional<BigInt> exponent_cap(const ParamSet& ps) {
    if (!ps.prime_exponent_bound.has_value()) return std::nullopt;
    const long double bits = *ps.prime_exponent_bound * std::log2l((long double)ps.n);
    if (bits >= 3.0L * ps.s) return std::nullopt;  // no tighter than 8^s
    return pow2(uint64_t(std::floor(bits)));
}

std::vector<uint32_t> coset_union_indices(uint64_t s, uint64_t m, const std::vector<uint32_t>& exponents) {
    std::vector<uint32_t> idx;
    idx.reserve(exponents.size() * m);
    for (uint32_t e : exponents)
        for (uint64_t i = 0; i < m; ++i) idx.push_back(uint32_t(e + i * s));
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace

SumAudit run_sum_audit(const FieldCtx& ctx, uint64_t r, uint64_t exhaustive_budget,
                       uint64_t sample_pairs, uint64_t seed) {
    const uint64_t s = ctx.s();
    const uint32_t half = uint32_t(s / 2);
    if (r > half) throw_param("sum audit: r > s/2, not enough exponents");
    if (r == 0) throw_param("sum audit: r must be positive");

    SumAudit audit;
    audit.seed = seed;
    const BigInt total = binomial(half, uint32_t(r));

    std::unordered_set<BigInt, BigIntHash> seen;
    if (total <= exhaustive_budget) {
        audit.mode = "exhaustive";
        seen.reserve(size_t(total));
        std::vector<uint32_t> subset(r);
        std::iota(subset.begin(), subset.end(), 0);
        do {
            ++audit.subsets_examined;
            if (!seen.insert(subset_sum(ctx, subset)).second) ++audit.collisions_found;
        } while (next_combination(subset, half));
        audit.distinct_sums = seen.size();
    } else {
        audit.mode = "sampled";
        audit.pairs_sampled = sample_pairs;
        seen.reserve(2 * size_t(std::min<uint64_t>(sample_pairs, 4'000'000)));
        std::mt19937_64 rng(seed);
        for (uint64_t i = 0; i < sample_pairs; ++i) {
            auto a = random_subset(rng, half, uint32_t(r));
            auto b = random_subset(rng, half, uint32_t(r));
            while (a == b) b = random_subset(rng, half, uint32_t(r));
            const BigInt sa = subset_sum(ctx, a);
            const BigInt sb = subset_sum(ctx, b);
            if (sa == sb) ++audit.collisions_found;
            seen.insert(sa);
            seen.insert(sb);
            audit.subsets_examined += 2;
        }
        audit.distinct_sums = seen.size();
    }
    return audit;
}

GoodPrime find_good_prime(const ParamSet& ps, const ForgeOptions& opts) {
    const uint64_t s = ps.s, n = ps.n, m = ps.m, r = ps.r;
    if (r > s / 2) throw_param("find_good_prime: r > s/2, the half-range sum set is empty");

    GoodPrime out;
    PrimeSearchLog& log = out.log;
    log.seed = opts.seed;

    const BigInt lo = pow2(2 * s);      // 4^s
    const BigInt hi_interval = pow2(3 * s);  // 8^s
    BigInt hi = hi_interval;
    if (const auto cap = exponent_cap(ps); cap.has_value() && *cap < hi) hi = *cap;
    log.range_lo = lo;
    log.range_hi = hi;

    const BigInt n_cubed = BigInt(n) * n * n;
    log.assume_4s_ge_n3 = lo >= n_cubed;
    if (ps.profile == Profile::strict && !log.assume_4s_ge_n3)
        throw_param("4^s < n^3: the prime-count argument's assumption fails");

    std::mt19937_64 rng(opts.seed);

    if (opts.fixed_prime.has_value()) {
        log.mode = "fixed";
        const BigInt& p = *opts.fixed_prime;
        if ((p - 1) % n != 0) throw_param("fixed prime: p != 1 (mod n)");
        ++log.candidates_tried;
        if (!is_probable_prime(p, opts.mr_rounds, rng)) throw_param("fixed prime: composite");
        ++log.primes_tested;
        out.omega = find_root_of_unity(p, n, rng);
        const FieldCtx ctx(p, n, out.omega, m);
        const uint64_t audit_seed = rng();
        out.audit = run_sum_audit(ctx, r, opts.audit_exhaustive_budget, opts.audit_sample_pairs, audit_seed);
        ++log.audits_run;
        if (out.audit.collisions_found != 0)
            throw_search("fixed prime is bad: subset sums collide");
        out.p = p;
        out.xi = ctx.xi();
        return out;
    }

    log.mode = opts.sequential_scan ? "sequential" : "random";
    const BigInt t_lo = (lo + n - 2) / n;  // smallest t with n*t+1 >= 4^s
    const BigInt t_hi = (hi - 1) / n;
    if (t_lo > t_hi) throw_search("prime search: empty candidate interval");
    const BigInt t_span = t_hi - t_lo + 1;

    for (uint64_t i = 0; i < opts.max_candidates; ++i) {
        BigInt t;
        if (opts.sequential_scan) {
            t = t_lo + i;
            if (t > t_hi) break;
        } else {
            t = t_lo + rand_below(rng, t_span);
        }
        const BigInt p = BigInt(n) * t + 1;
        ++log.candidates_tried;
        if (!is_probable_prime(p, opts.mr_rounds, rng)) continue;
        ++log.primes_tested;
        const BigInt omega = find_root_of_unity(p, n, rng);
        const FieldCtx ctx(p, n, omega, m);
        const uint64_t audit_seed = rng();
        const SumAudit audit =
            run_sum_audit(ctx, r, opts.audit_exhaustive_budget, opts.audit_sample_pairs, audit_seed);
        ++log.audits_run;
        if (audit.collisions_found != 0) continue;  // bad prime, draw again
        out.p = p;
        out.omega = omega;
        out.xi = ctx.xi();
        out.audit = audit;
        return out;
    }
    std::ostringstream msg;
    msg << "prime search failed: " << log.candidates_tried << " candidates, " << log.primes_tested
        << " primes tested, " << log.audits_run << " audits";
    throw_search(msg.str());
}

std::vector<std::pair<std::vector<uint32_t>, BigInt>> enumerate_lambda(const FieldCtx& ctx, uint64_t r,
                                                                       uint64_t target_count) {
    const uint32_t half = uint32_t(ctx.s() / 2);
    if (r == 0 || r > half) throw_param("enumerate_lambda: need 1 <= r <= s/2");
    std::vector<std::pair<std::vector<uint32_t>, BigInt>> out;
    out.reserve(target_count);
    std::unordered_set<BigInt, BigIntHash> seen;
    std::vector<uint32_t> subset(r);
    std::iota(subset.begin(), subset.end(), 0);
    do {
        if (out.size() == target_count) return out;
        BigInt lambda = subset_sum(ctx, subset);
        if (seen.insert(lambda).second) out.emplace_back(subset, std::move(lambda));
    } while (next_combination(subset, half));
    if (out.size() < target_count) {
        std::ostringstream msg;
        msg << "insufficient distinct sums: found " << out.size() << " of " << target_count;
        throw_search(msg.str());
    }
    return out;
}

Counterexample build_counterexample(const ParamSet& ps, const ForgeOptions& opts) {
    Counterexample cx;
    cx.params = ps;
    cx.seed = opts.seed;

    GoodPrime gp = find_good_prime(ps, opts);
    cx.p = gp.p;
    cx.omega = gp.omega;
    cx.xi = gp.xi;
    cx.search_log = gp.log;
    cx.audit = gp.audit;

    const FieldCtx ctx(cx.p, ps.n, cx.omega, ps.m);
    {
        std::mt19937_64 self_test_rng(opts.seed ^ 0x5e1f7e57ULL);
        ctx.self_test(self_test_rng);
    }

    const BigInt max_subsets = binomial(uint32_t(ps.s / 2), uint32_t(ps.r));
    BigInt target = max_subsets < opts.witness_budget ? max_subsets : BigInt(opts.witness_budget);
    if (ps.profile == Profile::strict) {
        const BigInt z_min =
            ceil_rational_power(BigInt(ps.n), ps.z_count_exponent.num, ps.z_count_exponent.den);
        if (z_min > target) target = z_min;
    }
    if (target > 100'000'000) throw_param("witness target exceeds 1e8, instance too large to store");
    const auto lambdas = enumerate_lambda(ctx, ps.r, target.convert_to<uint64_t>());

    const CodeDesc code{ctx, ps.k};
    const uint64_t required = ps.r * ps.m;
    cx.witnesses.resize(lambdas.size());
    parallel_for(lambdas.size(), opts.threads, [&](size_t i) {
        const auto& [exponents, lambda] = lambdas[i];
        const CosetProduct cp = expand_coset_product(ctx, exponents);
        if (cp.lambda != lambda)
            throw_internal("lambda mismatch between plain sum and product expansion");
        AgreementWitness wit;
        wit.exponents = exponents;
        wit.z = ctx.neg(lambda);  // the expansion carries -lambda on X^((r-1)m)
        wit.codeword = poly_neg(ctx, cp.remainder);
        wit.agreement = coset_union_indices(ps.s, ps.m, exponents);
        wit.claimed_delta = ps.delta;
        const EvalTable word = eval_monomial_word(ctx, ps.r, wit.z);
        const WitnessCheck chk = check_agreement_witness(code, word, wit, required);
        if (!chk.pass) throw_internal("forged witness failed self-check: " + chk.failure);
        cx.witnesses[i] = std::move(wit);
    });

    std::unordered_set<BigInt, BigIntHash> zs;
    for (const auto& w : cx.witnesses)
        if (!zs.insert(w.z).second) throw_internal("duplicate z among forged witnesses");

    cx.cert = no_correlated_agreement_cert(code, ps.r, ps.m);
    cx.z_count = cx.witnesses.size();
    return cx;
}

VerifyLevel verify_level_parse(const std::string& s) {
    if (s == "witness") return VerifyLevel::witness;
    if (s == "exhaustive") return VerifyLevel::exhaustive;
    if (s == "oracle") return VerifyLevel::oracle;
    throw_param("unknown verify level '" + s + "'");
}

std::string verify_level_str(VerifyLevel lvl) {
    switch (lvl) {
        case VerifyLevel::witness: return "witness";
        case VerifyLevel::exhaustive: return "exhaustive";
        default: return "oracle";
    }
}

SumCountVerdict audit_sum_count_bound(const ParamSet& ps, const SumAudit& audit, uint64_t z_collected) {
    SumCountVerdict v;
    v.distinct_sums = audit.distinct_sums;
    v.z_collected = z_collected;
    v.z_target_ceil = ceil_rational_power(BigInt(ps.n), ps.z_count_exponent.num, ps.z_count_exponent.den);

    // ceil((s/(2r))^r) via integer cross-multiplication
    BigInt num(1), den(1);
    for (uint64_t i = 0; i < ps.r; ++i) {
        num *= ps.s;
        den *= 2 * ps.r;
    }
    v.lower_bound_ceil = (num + den - 1) / den;

    v.pass = true;
    std::ostringstream d;
    if (audit.mode == "exhaustive") {
        v.lower_bound_applicable = true;
        // distinct >= (s/2r)^r  <=>  distinct * (2r)^r >= s^r
        const bool ok = BigInt(audit.distinct_sums) * den >= num;
        v.pass = v.pass && ok;
        d << "distinct_sums " << audit.distinct_sums << (ok ? " >= " : " < ") << "ceil((s/2r)^r) = "
          << v.lower_bound_ceil.str();
    } else {
        d << "lower bound waived (sampled audit); distinct among sampled = " << audit.distinct_sums;
    }
    if (ps.profile == Profile::strict) {
        const bool ok = BigInt(z_collected) >= v.z_target_ceil;
        v.pass = v.pass && ok;
        d << "; z collected " << z_collected << (ok ? " >= " : " < ") << "n^C = " << v.z_target_ceil.str();
    }
    v.detail = d.str();
    return v;
}

VerificationReport verify_counterexample(const Counterexample& cx, const VerifyOptions& opts) {
    VerificationReport rep;
    rep.level = verify_level_str(opts.level);
    auto add = [&rep](const std::string& name, const std::string& status, const std::string& detail) {
        rep.checks.push_back({name, status, detail});
    };
    auto check = [&add](const std::string& name, bool ok, const std::string& detail) {
        add(name, ok ? "pass" : "fail", detail);
        return ok;
    };

    const ParamSet& ps = cx.params;

    // parameter tower re-derivation from the stored inputs
    try {
        const ParamSet re = derive_params(ps.z_count_exponent, ps.rate, ps.alpha, ps.profile, ps.m_override);
        const bool same = re.s == ps.s && re.r == ps.r && re.m == ps.m && re.n == ps.n && re.k == ps.k &&
                          ratio_eq(re.delta, ps.delta) && ratio_eq(re.eta, ps.eta) &&
                          re.log_scale == ps.log_scale;
        check("params.rederive", same, same ? "derived tower matches stored values" : "stored tower differs");
    } catch (const Error& e) {
        check("params.rederive", false, e.what());
    }

    for (const auto& idv : check_identities(ps).identities) {
        // identity failures carry both sides
        const std::string name = "identity: " + idv.name;
        if (idv.status == "pass")
            add(name, "pass", idv.lhs + " = " + idv.rhs);
        else if (idv.status == "fail")
            add(name, "fail", idv.lhs + " != " + idv.rhs);
        else
            add(name, "waived", idv.status);
    }

    check("prime.congruence", (cx.p - 1) % ps.n == 0, "p = 1 (mod n)");
    check("prime.primality", is_probable_prime(cx.p, opts.mr_rounds),
          "Miller-Rabin, " + std::to_string(opts.mr_rounds) + " rounds");

    {
        const BigInt lo = pow2(2 * ps.s);
        BigInt hi = pow2(3 * ps.s);
        if (const auto cap = exponent_cap(ps); cap.has_value() && *cap < hi) hi = *cap;
        if (cx.search_log.mode == "fixed") {
            add("prime.range", "waived", "fixed prime test hook");
        } else {
            check("prime.range", cx.p >= lo && cx.p <= hi,
                  "p in [4^s, min(8^s, n^A)] = [2^" + std::to_string(2 * ps.s) + ", " + hi.str() + "]");
        }
        if (ps.prime_exponent_bound.has_value() && cx.search_log.mode != "fixed") {
            const double ratio = std::log(cx.p.convert_to<double>()) / std::log(double(ps.n));
            check("prime.exponent_bound", ratio <= *ps.prime_exponent_bound + 1e-9,
                  "ln p / ln n = " + std::to_string(ratio) + " <= A = " +
                      std::to_string(*ps.prime_exponent_bound));
        }
        const BigInt n_cubed = BigInt(ps.n) * ps.n * ps.n;
        if (ps.profile == Profile::strict)
            check("params.4s_ge_n3", lo >= n_cubed, "4^s vs n^3");
        else
            add("params.4s_ge_n3", "waived", std::string("desk profile; holds: ") +
                                                 (lo >= n_cubed ? "yes" : "no"));
    }

    // field context: primality, omega order n, xi = omega^m of order s
    std::optional<FieldCtx> ctx;
    try {
        ctx.emplace(cx.p, ps.n, cx.omega, ps.m);
        const bool xi_ok = ctx->xi() == cx.xi;
        check("field.roots", xi_ok, xi_ok ? "omega order n, xi = omega^m order s certified"
                                          : "stored xi != omega^m");
    } catch (const Error& e) {
        check("field.roots", false, e.what());
        rep.overall_pass = false;
        return rep;
    }

    // witnesses
    {
        const CodeDesc code{*ctx, ps.k};
        const uint64_t required = ps.r * ps.m;
        std::vector<std::string> fails(cx.witnesses.size());
        parallel_for(cx.witnesses.size(), opts.threads, [&](size_t i) {
            const AgreementWitness& wit = cx.witnesses[i];
            std::ostringstream why;
            if (wit.exponents.size() != ps.r) {
                why << "exponent count " << wit.exponents.size() << " != r";
            } else {
                std::unordered_set<uint32_t> uniq(wit.exponents.begin(), wit.exponents.end());
                if (uniq.size() != ps.r)
                    why << "duplicate exponents";
                else
                    for (uint32_t e : wit.exponents)
                        if (e >= ps.s / 2) {
                            why << "exponent " << e << " outside [0, s/2)";
                            break;
                        }
            }
            if (why.str().empty()) {
                // sign convention: z = -(sum of xi^e)
                BigInt lambda(0);
                for (uint32_t e : wit.exponents) lambda = ctx->add(lambda, ctx->xi_pow(e));
                if (ctx->neg(lambda) != wit.z) why << "z != -lambda for the listed exponents";
            }
            if (why.str().empty()) {
                const auto expected = coset_union_indices(ps.s, ps.m, wit.exponents);
                if (wit.agreement != expected)
                    why << "agreement set is not the stated coset union";
                else
                    for (uint32_t t : wit.agreement) {
                        // coset membership recomputed, not trusted
                        const BigInt a_m = ctx->omega_pow(uint64_t(t) * ps.m % ps.n);
                        if (a_m != ctx->xi_pow(t % ps.s)) {
                            why << "coset membership fails at index " << t;
                            break;
                        }
                    }
            }
            if (why.str().empty() && !ratio_eq(wit.claimed_delta, ps.delta))
                why << "claimed delta != 1 - r/s";
            if (why.str().empty()) {
                const EvalTable word = eval_monomial_word(*ctx, ps.r, wit.z);
                const WitnessCheck chk = check_agreement_witness(code, word, wit, required);
                if (!chk.pass) why << chk.failure;
            }
            fails[i] = why.str();
        });
        uint64_t bad = 0;
        for (size_t i = 0; i < fails.size(); ++i) {
            if (fails[i].empty()) continue;
            ++bad;
            if (bad <= 16) add("witness[" + std::to_string(i) + "]", "fail", fails[i]);
        }
        check("witnesses.all", bad == 0,
              std::to_string(cx.witnesses.size() - bad) + " of " + std::to_string(cx.witnesses.size()) +
                  " witnesses pass, agreement " + std::to_string(required) + " of " +
                  std::to_string(ps.n) + " required each");

        std::unordered_set<BigInt, BigIntHash> zs;
        bool distinct = true;
        for (const auto& w : cx.witnesses) distinct = zs.insert(w.z).second && distinct;
        check("z distinctness/count", distinct && cx.z_count == cx.witnesses.size(),
              std::to_string(zs.size()) + " distinct z, z_count field = " + std::to_string(cx.z_count));

        if (ps.profile == Profile::strict) {
            const BigInt z_min =
                ceil_rational_power(BigInt(ps.n), ps.z_count_exponent.num, ps.z_count_exponent.den);
            check("witnesses.z_count_bound", BigInt(cx.z_count) >= z_min,
                  std::to_string(cx.z_count) + " >= n^C = " + z_min.str());
        }

        // certificate
        try {
            const auto cert = no_correlated_agreement_cert(code, ps.r, ps.m);
            const bool same = cert.g_degree == cx.cert.g_degree &&
                              cert.max_joint_agreement_bound == cx.cert.max_joint_agreement_bound &&
                              cert.required_agreement == cx.cert.required_agreement &&
                              ratio_eq(cert.joint_distance_lower_bound, cx.cert.joint_distance_lower_bound);
            const bool sound = cx.cert.max_joint_agreement_bound < cx.cert.required_agreement &&
                               ratio_cmp(cx.cert.joint_distance_lower_bound, ps.delta) > 0;
            check("certificate", same && sound,
                  "max joint agreement " + std::to_string(cx.cert.max_joint_agreement_bound) + " < " +
                      std::to_string(cx.cert.required_agreement) + " required; joint distance >= " +
                      ratio_str(cx.cert.joint_distance_lower_bound) + " > delta = " + ratio_str(ps.delta));
        } catch (const Error& e) {
            check("certificate", false, e.what());
        }

        const SumCountVerdict scv = audit_sum_count_bound(ps, cx.audit, cx.z_count);
        check("audit.sum_count_bound", scv.pass, scv.detail);

        if (opts.level == VerifyLevel::exhaustive || opts.level == VerifyLevel::oracle) {
            // replay the stored audit with its own seed and parameters
            const uint64_t ex_budget =
                cx.audit.mode == "exhaustive" ? std::max<uint64_t>(cx.audit.subsets_examined, 1) : 0;
            const SumAudit re =
                run_sum_audit(*ctx, ps.r, ex_budget, cx.audit.pairs_sampled, cx.audit.seed);
            const bool same = re.mode == cx.audit.mode && re.subsets_examined == cx.audit.subsets_examined &&
                              re.collisions_found == cx.audit.collisions_found &&
                              re.distinct_sums == cx.audit.distinct_sums;
            check("audit.sums.replay", same && re.collisions_found == 0,
                  re.mode + " audit: " + std::to_string(re.subsets_examined) + " subsets, " +
                      std::to_string(re.collisions_found) + " collisions, " +
                      std::to_string(re.distinct_sums) + " distinct");
        }

        if (opts.level == VerifyLevel::oracle) {
            BigInt cost(1);
            bool within = true;
            for (uint64_t i = 0; i <= ps.k && within; ++i) {
                cost *= cx.p;
                if (cost > opts.oracle_budget) within = false;
            }
            if (!within) {
                add("oracle.distance", "skipped", "p^(k+1) exceeds oracle budget");
                add("oracle.g_max_agreement", "skipped", "p^(k+1) exceeds oracle budget");
                add("oracle.interleaved_distance", "skipped", "p^(k+1) exceeds oracle budget");
            } else {
                bool all_close = true;
                std::string first_fail;
                for (size_t i = 0; i < cx.witnesses.size(); ++i) {
                    const EvalTable word = eval_monomial_word(*ctx, ps.r, cx.witnesses[i].z);
                    const Ratio dist = distance_to_code_bruteforce(code, word, opts.oracle_budget);
                    if (ratio_cmp(dist, cx.witnesses[i].claimed_delta) > 0) {
                        all_close = false;
                        if (first_fail.empty())
                            first_fail = "witness " + std::to_string(i) + " distance " + ratio_str(dist) +
                                         " > claimed " + ratio_str(cx.witnesses[i].claimed_delta);
                    }
                }
                check("oracle.distance", all_close,
                      all_close ? "brute-force distance <= claimed delta for every witness" : first_fail);

                const EvalTable g_word = [&] {
                    std::vector<BigInt> vals;
                    vals.reserve(ps.n);
                    for (uint64_t t = 0; t < ps.n; ++t)
                        vals.push_back(ctx->omega_pow(t * ((ps.r - 1) * ps.m) % ps.n));
                    return EvalTable{std::move(vals)};
                }();
                const uint64_t g_agree = max_agreement_bruteforce(code, g_word, opts.oracle_budget);
                check("oracle.g_max_agreement", g_agree <= cx.cert.max_joint_agreement_bound,
                      "max agreement of g with the code = " + std::to_string(g_agree) +
                          " <= certificate bound " + std::to_string(cx.cert.max_joint_agreement_bound));
                const Ratio joint_lb(BigInt(ps.n - g_agree), BigInt(ps.n));
                check("oracle.interleaved_distance", ratio_cmp(joint_lb, ps.delta) > 0,
                      "interleaved distance >= " + ratio_str(joint_lb) + " > delta = " + ratio_str(ps.delta));
            }
        }
    }

    rep.overall_pass = std::none_of(rep.checks.begin(), rep.checks.end(),
                                    [](const CheckResult& c) { return c.status == "fail"; });
    return rep;
}

}  // namespace rsgap
