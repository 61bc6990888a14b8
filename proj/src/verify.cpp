#include "capax/verify.hpp"

#include <algorithm>
#include <random>

#include "capax/constructions.hpp"
#include "capax/errors.hpp"
#include "capax/oracle.hpp"
#include "capax/sequence.hpp"

namespace capax {

using nlohmann::json;

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"agreement", "bounds",  "decompose", "constant-weight",
                                                "extremal",  "oracle", "increment"};
    return names;
}

std::uint64_t default_oracle_max_n(PrimeModulus p) {
    std::uint64_t n = 1;
    while (checked_pow(p, n + 1) <= 128) ++n;
    return n;
}

std::uint64_t default_max_k(PrimeModulus p) {
    std::uint64_t k = 0;
    while (checked_pow(p, k + 2) <= 256) ++k;
    return k;
}

namespace {

void fail(SuiteResult& r, json counterexample, std::string summary) {
    r.passed = false;
    r.counterexample = std::move(counterexample);
    r.summary = std::move(summary);
}

json dist_to_json(const std::map<std::size_t, std::uint64_t>& dist) {
    json j = json::object();
    for (const auto& [w, c] : dist) j[std::to_string(w)] = c;
    return j;
}

SuiteResult agreement(const VerifyConfig& c) {
    SuiteResult r;
    r.name = "agreement";
    const LambdaTable closed = lambda_closed_table(c.max_n, c.p);
    const LambdaTable shift = lambda_shift(c.max_n, c.p);
    std::optional<LambdaTable> meta;
    try {
        meta = c.meta_seeds.empty() ? lambda_meta(c.max_n, c.p)
                                    : lambda_meta(c.max_n, c.p, c.meta_seeds);
    } catch (const ConsistencyError& e) {
        fail(r, json{{"error", e.what()}}, std::string("meta recurrence broke down: ") + e.what());
        return r;
    }
    for (std::uint64_t n = 1; n <= c.max_n; ++n) {
        ++r.checked;
        const std::uint64_t a = closed(n), b = (*meta)(n), s = shift(n);
        if (a != b || a != s) {
            fail(r, json{{"n", n}, {"closed", a}, {"meta", b}, {"shift", s}},
                 "methods disagree at n = " + std::to_string(n) + " (closed " + std::to_string(a) +
                     ", meta " + std::to_string(b) + ", shift " + std::to_string(s) + ")");
            return r;
        }
    }
    r.summary = "closed = meta = shift for n <= " + std::to_string(c.max_n);
    return r;
}

SuiteResult bounds(const VerifyConfig& c) {
    SuiteResult r;
    r.name = "bounds";
    std::uint64_t prev = 0;
    for (std::uint64_t n = 1; n <= c.max_n; ++n) {
        ++r.checked;
        const std::uint64_t v = lambda_closed(n, c.p);
        const bool seed_region = n <= c.p.value();
        std::string broken;
        if (v < prev) broken = "lambda decreases";
        else if (v < 1 || v > n) broken = "lambda outside [1, n]";
        else if (seed_region != (v == n)) broken = "lambda(n) = n must hold exactly for n <= p";
        if (!broken.empty()) {
            fail(r, json{{"n", n}, {"lambda", v}, {"previous", prev}, {"violation", broken}},
                 broken + " at n = " + std::to_string(n));
            return r;
        }
        prev = v;
    }
    r.summary = "nondecreasing, 1 <= lambda(n) <= n, equality iff n <= p, for n <= " +
                std::to_string(c.max_n);
    return r;
}

SuiteResult decomposition(const VerifyConfig& c) {
    SuiteResult r;
    r.name = "decompose";
    for (std::uint64_t n = 1; n <= c.max_n; ++n) {
        ++r.checked;
        const SigmaDecomposition d = decompose(n, c.p);
        if (auto why = d.invariant_violation()) {
            fail(r, json{{"n", n}, {"coefficients", d.coefficients}, {"violation", *why}},
                 *why + " at n = " + std::to_string(n));
            return r;
        }
    }
    r.summary = "greedy sigma decomposition valid for n <= " + std::to_string(c.max_n);
    return r;
}

SuiteResult constant_weight(const VerifyConfig& c) {
    SuiteResult r;
    r.name = "constant-weight";
    const std::uint64_t max_k = c.max_k ? c.max_k : default_max_k(c.p);
    BlockBuilder builder(c.p);
    for (std::uint64_t k = 0; k <= max_k; ++k) {
        ++r.checked;
        const FpMatrix b = builder.B(k);
        const auto dist = weight_distribution(b, c.budget);
        const std::map<std::size_t, std::uint64_t> expected{
            {checked_pow(c.p, k), checked_pow(c.p, k + 1) - 1}};
        const bool shape_ok = b.row_count() == k + 1 && b.col_count() == sigma(k, c.p);
        if (dist != expected || !shape_ok) {
            fail(r, json{{"k", k}, {"distribution", dist_to_json(dist)},
                         {"expected", dist_to_json(expected)}, {"rows", b.row_count()},
                         {"cols", b.col_count()}},
                 "B_" + std::to_string(k) + " is not constant weight p^k");
            return r;
        }
    }
    r.summary = "every nonzero codeword of B_k has weight p^k, k <= " + std::to_string(max_k);
    return r;
}

SuiteResult extremal(const VerifyConfig& c) {
    SuiteResult r;
    r.name = "extremal";
    BlockBuilder builder(c.p);
    for (std::uint64_t n = 1; n <= c.extremal_max_n; ++n) {
        ++r.checked;
        const FpMatrix m = builder.extremal(n);
        const std::uint64_t cap = capacity(m, c.budget);
        const std::uint64_t want = lambda_closed(n, c.p);
        if (cap != want || !has_full_support(m) || m.col_count() != n) {
            fail(r, json{{"n", n}, {"capacity", cap}, {"lambda_closed", want},
                         {"full_support", has_full_support(m)}, {"cols", m.col_count()}},
                 "extremal matrix for n = " + std::to_string(n) + " has capacity " +
                     std::to_string(cap) + ", expected " + std::to_string(want));
            return r;
        }
    }
    r.summary = "capacity(extremal(n)) = lambda(n) for n <= " + std::to_string(c.extremal_max_n);
    return r;
}

SuiteResult oracle(const VerifyConfig& c) {
    SuiteResult r;
    r.name = "oracle";
    const std::uint64_t max_n = c.oracle_max_n ? c.oracle_max_n : default_oracle_max_n(c.p);
    OracleOptions opts;
    opts.budget = c.budget;
    opts.workers = c.workers;
    json values = json::object();
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        ++r.checked;
        const std::uint64_t brute = lambda_bruteforce(n, c.p, opts);
        const std::uint64_t closed = lambda_closed(n, c.p);
        values[std::to_string(n)] = brute;
        if (brute != closed) {
            r.details["bruteforce"] = values;
            fail(r, json{{"n", n}, {"bruteforce", brute}, {"lambda_closed", closed}},
                 "brute force gives " + std::to_string(brute) + " at n = " + std::to_string(n) +
                     ", closed form " + std::to_string(closed));
            return r;
        }
    }
    r.details["bruteforce"] = values;
    std::string listing;
    for (std::uint64_t n = 1; n <= max_n; ++n)
        listing += (n > 1 ? "," : "") + values[std::to_string(n)].dump();
    r.summary = "brute force = closed form for n <= " + std::to_string(max_n) + " [" + listing + "]";
    return r;
}

SuiteResult increment(const VerifyConfig& c) {
    SuiteResult r;
    r.name = "increment";
    std::mt19937_64 rng(c.seed);
    // Keep row spaces to at most 4096 codewords.
    std::uint64_t row_cap = 1;
    while (checked_pow(c.p, row_cap + 1) <= 4096) ++row_cap;
    std::uniform_int_distribution<std::uint64_t> pick_n(1, std::max<std::uint64_t>(1, c.increment_max_n));
    std::uint64_t hypothesis = 0;
    for (std::uint64_t t = 0; t < c.increment_matrices; ++t) {
        const std::uint64_t n = pick_n(rng);
        std::uniform_int_distribution<std::uint64_t> pick_m(1, std::min(n + 2, row_cap));
        const FpMatrix m = random_full_support_matrix(rng, c.p, pick_m(rng), n);
        const IncrementLemmaReport rep = check_increment_lemma(m, ~std::uint64_t{0}, c.budget);
        ++r.checked;
        hypothesis += rep.hypothesis_held;
        if (!rep.passed()) {
            std::vector<std::vector<Residue>> rows;
            for (const auto& row : m.rows()) rows.emplace_back(row.entries().begin(), row.entries().end());
            fail(r, json{{"matrix", json{{"p", c.p.value()}, {"rows", rows}}},
                         {"v", std::vector<Residue>(rep.witness->entries().begin(),
                                                     rep.witness->entries().end())},
                         {"capacity", rep.capacity}},
                 "no heavier codeword for a vector satisfying the increment hypothesis");
            return r;
        }
    }
    r.details["hypothesis_instances"] = hypothesis;
    r.summary = std::to_string(c.increment_matrices) + " random full-support matrices, " +
                std::to_string(hypothesis) + " hypothesis instances, 0 violations";
    return r;
}

}  // namespace

SuiteResult run_suite(std::string_view name, const VerifyConfig& config) {
    if (name == "agreement") return agreement(config);
    if (name == "bounds") return bounds(config);
    if (name == "decompose") return decomposition(config);
    if (name == "constant-weight") return constant_weight(config);
    if (name == "extremal") return extremal(config);
    if (name == "oracle") return oracle(config);
    if (name == "increment") return increment(config);
    throw DomainError("unknown suite: " + std::string(name));
}

json verify_report(const VerifyConfig& config, const std::vector<SuiteResult>& results) {
    json suites = json::array();
    bool all = true;
    for (const SuiteResult& r : results) {
        json s{{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"summary", r.summary}};
        if (!r.details.empty()) s["details"] = r.details;
        if (r.counterexample) s["counterexample"] = *r.counterexample;
        suites.push_back(std::move(s));
        all = all && r.passed;
    }
    return json{{"p", config.p.value()}, {"passed", all}, {"suites", std::move(suites)}};
}

}  // namespace capax
