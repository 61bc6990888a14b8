#include "capax/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "capax/bfile.hpp"
#include "capax/constructions.hpp"
#include "capax/errors.hpp"
#include "capax/matrix_io.hpp"
#include "capax/sequence.hpp"
#include "capax/verify.hpp"

namespace capax {

namespace {

using nlohmann::json;

EnumerationBudget resolve_budget(std::optional<std::uint64_t> flag) {
    EnumerationBudget budget;
    if (flag) {
        budget.max_items = *flag;
    } else if (const char* env = std::getenv("CAPAX_BUDGET"); env && *env) {
        const std::string_view s(env);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw DomainError("CAPAX_BUDGET must be a positive integer, got \"" + std::string(s) + "\"");
        budget.max_items = v;
    }
    if (budget.max_items < 1) throw DomainError("enumeration budget must be >= 1");
    return budget;
}

// Sends output to `path`, or to `out` when the path is empty.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot write " + path);
    body(file);
    if (!file) throw IoError("failed writing " + path);
}

struct LambdaArgs {
    std::uint64_t p = 2;
    std::uint64_t min_n = 1;
    std::uint64_t max_n = 100;
    std::string method = "closed";
    std::string format = "csv";
    std::string output;
};

int cmd_lambda(const LambdaArgs& a, std::ostream& out) {
    const PrimeModulus p(a.p);
    if (a.min_n < 1 || a.min_n > a.max_n)
        throw DomainError("range must satisfy 1 <= --min-n <= --max-n");
    const auto method = parse_lambda_method(a.method);
    if (!method) throw DomainError("unknown method " + a.method);
    const LambdaTable table = lambda_table(*method, a.max_n, p);
    const auto values = table.values().subspan(a.min_n - 1);
    emit(a.output, out, [&](std::ostream& os) {
        if (a.format == "csv") {
            os << "n,lambda\n";
            for (std::size_t i = 0; i < values.size(); ++i) os << a.min_n + i << ',' << values[i] << '\n';
        } else {
            write_bfile(os, values, static_cast<std::int64_t>(a.min_n));
        }
    });
    return kExitOk;
}

struct ConstructArgs {
    std::uint64_t p = 2;
    std::string kind;
    std::optional<std::uint64_t> k, j, n;
    std::string format = "json";
    std::string output;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    const PrimeModulus p(a.p);
    const auto kind = parse_block_kind(a.kind);
    if (!kind) throw DomainError("unknown kind " + a.kind);
    BlockSpec spec{p.value(), *kind};
    auto require = [&](const std::optional<std::uint64_t>& v, const char* flag) {
        if (!v) throw DomainError(std::string(flag) + " is required for kind " + a.kind);
        return *v;
    };
    switch (*kind) {
        case BlockKind::B:
        case BlockKind::Bprime: spec.k = require(a.k, "--k"); break;
        case BlockKind::Btilde:
            spec.k = require(a.k, "--k");
            spec.j = require(a.j, "--j");
            break;
        case BlockKind::extremal: spec.n = require(a.n, "--n"); break;
    }
    spec.validate();
    BlockBuilder builder(p);
    const FpMatrix m = builder.build(spec);
    emit(a.output, out, [&](std::ostream& os) { os << (a.format == "json" ? to_json(m) : to_text(m)); });
    return kExitOk;
}

struct VerifyArgs {
    std::uint64_t p = 2;
    std::uint64_t max_n = 1000;
    std::uint64_t oracle_max_n = 0;
    std::uint64_t extremal_max_n = 200;
    std::uint64_t max_k = 0;
    std::uint64_t samples = 200;
    std::uint64_t seed = 1;
    unsigned workers = 0;
    std::optional<std::uint64_t> budget;
    std::vector<std::string> suites;
    std::vector<std::string> inject_seeds;
    std::string format = "text";
    std::string report;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    VerifyConfig c;
    c.p = PrimeModulus(a.p);
    if (a.max_n < 1) throw DomainError("--max-n must be >= 1");
    c.max_n = a.max_n;
    c.oracle_max_n = a.oracle_max_n;
    c.extremal_max_n = a.extremal_max_n;
    c.max_k = a.max_k;
    c.increment_matrices = a.samples;
    c.seed = a.seed;
    c.workers = a.workers;
    c.budget = resolve_budget(a.budget);
    if (!a.inject_seeds.empty()) {
        c.meta_seeds.resize(c.p.value());
        for (std::uint64_t n = 1; n <= c.p.value(); ++n) c.meta_seeds[n - 1] = n;
        for (const std::string& spec : a.inject_seeds) {
            const auto eq = spec.find('=');
            std::uint64_t n = 0, v = 0;
            bool ok = eq != std::string::npos;
            if (ok) {
                auto r1 = std::from_chars(spec.data(), spec.data() + eq, n);
                auto r2 = std::from_chars(spec.data() + eq + 1, spec.data() + spec.size(), v);
                ok = r1.ec == std::errc() && r1.ptr == spec.data() + eq && r2.ec == std::errc() &&
                     r2.ptr == spec.data() + spec.size();
            }
            if (!ok || n < 1 || n > c.p.value())
                throw DomainError("--inject-seed expects n=value with 1 <= n <= p, got " + spec);
            c.meta_seeds[n - 1] = v;
        }
    }
    const std::vector<std::string>& names = a.suites.empty() ? suite_names() : a.suites;

    std::vector<SuiteResult> results;
    for (const std::string& name : names) results.push_back(run_suite(name, c));
    const json report = verify_report(c, results);

    if (!a.report.empty()) emit(a.report, out, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
    if (a.format == "json") {
        out << report.dump(2) << '\n';
    } else {
        std::size_t passed = 0;
        for (const SuiteResult& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checked): " << r.summary
                << '\n';
            if (r.counterexample) out << "  counterexample: " << r.counterexample->dump() << '\n';
            passed += r.passed;
        }
        out << "verify: " << passed << '/' << results.size() << " suites passed\n";
    }
    return report["passed"].get<bool>() ? kExitOk : kExitFailure;
}

struct ExportArgs {
    std::uint64_t p = 2;
    std::uint64_t max_n = 1000;
    std::string output;
    std::string compare;
    std::int64_t max_offset = 16;
    std::uint64_t min_overlap = 20;
    std::string format = "text";
};

int cmd_oeis_export(const ExportArgs& a, std::ostream& out) {
    const PrimeModulus p(a.p);
    if (a.max_n < 1) throw DomainError("--max-n must be >= 1");
    const LambdaTable closed = lambda_closed_table(a.max_n, p);
    const LambdaTable meta = lambda_meta(a.max_n, p);
    const LambdaTable shift = lambda_shift(a.max_n, p);
    for (std::uint64_t n = 1; n <= a.max_n; ++n)
        if (closed(n) != meta(n) || closed(n) != shift(n))
            throw ConsistencyError("lambda methods disagree at n = " + std::to_string(n));

    if (a.compare.empty()) {
        emit(a.output, out, [&](std::ostream& os) { write_bfile(os, closed.values()); });
        return kExitOk;
    }
    if (!a.output.empty()) emit(a.output, out, [&](std::ostream& os) { write_bfile(os, closed.values()); });

    const std::vector<BFileEntry> theirs = read_bfile(std::filesystem::path(a.compare));
    std::vector<BFileEntry> ours;
    ours.reserve(a.max_n);
    for (std::uint64_t n = 1; n <= a.max_n; ++n) ours.push_back({static_cast<std::int64_t>(n), closed(n)});
    const OffsetReport rep = find_offset(ours, theirs, a.max_offset, a.min_overlap);

    json j{{"agree", rep.offset.has_value()}, {"overlap", rep.overlap}};
    if (rep.offset) {
        j["offset"] = *rep.offset;
    } else {
        j["closest_offset"] = rep.closest_offset;
        if (rep.first_disagreement)
            j["first_disagreement"] = {
                {"n", *rep.first_disagreement}, {"ours", rep.ours_value}, {"theirs", rep.theirs_value}};
    }
    if (a.format == "json") {
        out << j.dump() << '\n';
    } else if (rep.offset) {
        out << "agree: yes\noffset: " << *rep.offset << "\noverlap: " << rep.overlap << '\n';
    } else {
        out << "agree: no\nclosest_offset: " << rep.closest_offset << "\noverlap: " << rep.overlap << '\n';
        if (rep.first_disagreement)
            out << "first_disagreement: n=" << *rep.first_disagreement << " ours=" << rep.ours_value
                << " theirs=" << rep.theirs_value << '\n';
    }
    return rep.offset ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum matrix capacity lambda_p(n) over F_p", "capax"};
    app.require_subcommand(1);

    LambdaArgs la;
    auto* lam = app.add_subcommand("lambda", "Tabulate lambda_p(n)");
    lam->add_option("--p", la.p, "Prime modulus")->capture_default_str();
    lam->add_option("--min-n", la.min_n, "First n")->capture_default_str();
    lam->add_option("--max-n", la.max_n, "Last n")->capture_default_str();
    lam->add_option("--method", la.method, "closed | meta | shift")
        ->check(CLI::IsMember({"closed", "meta", "shift"}))
        ->capture_default_str();
    lam->add_option("--format", la.format, "csv | bfile")
        ->check(CLI::IsMember({"csv", "bfile"}))
        ->capture_default_str();
    lam->add_option("--output,-o", la.output, "Write to a file instead of stdout");

    ConstructArgs ca;
    auto* con = app.add_subcommand("construct", "Emit a block or extremal matrix");
    con->add_option("--p", ca.p, "Prime modulus")->capture_default_str();
    con->add_option("--kind", ca.kind, "B | Bprime | Btilde | extremal")
        ->required()
        ->check(CLI::IsMember({"B", "Bprime", "Btilde", "extremal"}));
    con->add_option("--k", ca.k, "Block index k");
    con->add_option("--j", ca.j, "Inner index j of Btilde");
    con->add_option("--n", ca.n, "Column count of the extremal matrix");
    con->add_option("--format", ca.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    con->add_option("--output,-o", ca.output, "Write to a file instead of stdout");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Run the verification suites");
    ver->add_option("--p", va.p, "Prime modulus")->capture_default_str();
    ver->add_option("--max-n", va.max_n, "Range for agreement, bounds and decompose")->capture_default_str();
    ver->add_option("--oracle-max-n", va.oracle_max_n, "Largest n for the brute-force oracle (0: auto)")
        ->capture_default_str();
    ver->add_option("--extremal-max-n", va.extremal_max_n, "Largest n for extremal matrices")
        ->capture_default_str();
    ver->add_option("--max-k", va.max_k, "Largest k for constant-weight blocks (0: auto)")->capture_default_str();
    ver->add_option("--samples", va.samples, "Random matrices for the increment suite")->capture_default_str();
    ver->add_option("--seed", va.seed, "Random seed")->capture_default_str();
    ver->add_option("--workers", va.workers, "Oracle worker threads (0: all cores)")->capture_default_str();
    ver->add_option("--budget", va.budget, "Enumeration budget (overrides CAPAX_BUDGET)");
    ver->add_option("--suite", va.suites, "Suite to run (repeatable; default all)")
        ->check(CLI::IsMember(suite_names()));
    ver->add_option("--inject-seed", va.inject_seeds, "Override a meta-recurrence seed, n=value");
    ver->add_option("--format", va.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    ver->add_option("--report", va.report, "Also write the JSON report to this file");

    ExportArgs ea;
    auto* exp = app.add_subcommand("oeis-export", "Write lambda_p as an OEIS b-file, or compare with one");
    exp->add_option("--p", ea.p, "Prime modulus")->capture_default_str();
    exp->add_option("--max-n", ea.max_n, "Number of terms")->capture_default_str();
    exp->add_option("--output,-o", ea.output, "Write the b-file here instead of stdout");
    exp->add_option("--compare", ea.compare, "b-file to compare against");
    exp->add_option("--max-offset", ea.max_offset, "Largest index shift tried")->capture_default_str();
    exp->add_option("--min-overlap", ea.min_overlap, "Shared terms required for agreement")->capture_default_str();
    exp->add_option("--format", ea.format, "text | json (compare report)")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::vector<const char*> argv{"capax"};
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*lam) return cmd_lambda(la, out);
        if (*con) return cmd_construct(ca, out);
        if (*ver) return cmd_verify(va, out);
        if (*exp) return cmd_oeis_export(ea, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace capax
