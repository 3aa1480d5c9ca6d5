// ellocal: local data of elliptic curves over Q and the Euler-characteristic ledger.
#include "ellocal/batch.hpp"
#include "ellocal/errors.hpp"
#include "ellocal/ledger.hpp"
#include "ellocal/lmfdb.hpp"
#include "ellocal/report.hpp"
#include "ellocal/tate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace ellocal;

namespace {

enum Exit : int {
    ok = 0,
    verdict_failed = 1,
    usage = 2,
    singular = 3,
    undecided = 4,
    oracle = 5,
    internal = 6,
};

struct CurveSpec {
    std::string curve;
    std::string label;
    bool offline = false;
};

void add_curve_options(CLI::App* cmd, CurveSpec& spec)
{
    auto* c = cmd->add_option("--curve", spec.curve, "a-invariants \"a1,a2,a3,a4,a6\"");
    auto* l = cmd->add_option("--label", spec.label, "label of a cached or fetchable record");
    c->excludes(l);
    cmd->add_flag("--offline", spec.offline, "never touch the network");
}

LmfdbClient make_client(bool offline, bool refresh = false)
{
    LmfdbConfig config = LmfdbConfig::from_env();
    config.offline = config.offline || offline;
    config.refresh = refresh;
    return LmfdbClient(config);
}

WeierstrassCurve resolve_curve(CurveSpec const& spec)
{
    if (!spec.curve.empty())
        return WeierstrassCurve::parse(spec.curve);
    if (!spec.label.empty())
        return make_client(spec.offline).fetch_curve(spec.label).curve();
    throw ParseError("one of --curve or --label is required");
}

std::int64_t checked_p(std::int64_t p)
{
    try {
        require_supported_p(p);
    } catch (DomainError const& e) {
        throw ParseError(e.what());
    }
    return p;
}

void emit(std::string const& text, std::string const& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    f << text;
    if (!f)
        throw Error("cannot write " + out);
}

int exit_for(Verdict v)
{
    switch (v) {
    case Verdict::fail:
        return verdict_failed;
    case Verdict::undecided:
        return undecided;
    default:
        return ok;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Local data of elliptic curves over Q and Euler-characteristic checks for E[p]"};
    app.require_subcommand(1);

    CurveSpec spec;
    std::string out;
    std::string format = "json";

    // localdata
    auto* localdata = app.add_subcommand("localdata", "Tate's algorithm at one prime or at every bad prime");
    add_curve_options(localdata, spec);
    std::string prime;
    bool all_bad = false, trace = false;
    auto* prime_opt = localdata->add_option("--prime", prime, "the prime ell");
    localdata->add_flag("--all-bad", all_bad, "every prime of bad reduction")->excludes(prime_opt);
    localdata->add_flag("--trace", trace, "include the coordinate changes of the step machine");

    // verify
    auto* verify = app.add_subcommand("verify", "Euler characteristic and product formula for E[p]");
    add_curve_options(verify, spec);
    std::int64_t p = 0;
    std::string check = "all";
    std::string selmer_order, restricted_order;
    int max_precision = 2048;
    verify->add_option("-p", p, "odd prime: 3, 5 or 7")->required();
    verify->add_option("--check", check, "euler | main-theorem | all")
        ->check(CLI::IsMember({"euler", "main-theorem", "all"}));
    verify->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out, "write the report here instead of stdout");
    verify->add_option("--selmer-order", selmer_order, "#Sel_p(E/Q), if known");
    verify->add_option("--restricted-order", restricted_order, "#H^1_[S](Q,E[p]), if known");
    verify->add_option("--max-precision", max_precision, "cap on the ell-adic precision")
        ->check(CLI::Range(1, 1 << 16));

    // batch
    auto* batch = app.add_subcommand("batch", "verify every curve of a CSV file");
    std::string input;
    int jobs = 1;
    std::int64_t batch_p = 0;
    std::string batch_check = "all";
    batch->add_option("--input", input, "lines \"a1,a2,a3,a4,a6[,label]\"")->required();
    batch->add_option("--out", out, "write the report here instead of stdout");
    batch->add_option("-p", batch_p, "odd prime: 3, 5 or 7")->required();
    batch->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
    batch->add_option("--check", batch_check, "euler | main-theorem | all")
        ->check(CLI::IsMember({"euler", "main-theorem", "all"}));
    batch->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    // fetch
    auto* fetch = app.add_subcommand("fetch", "oracle records, from the cache or the LMFDB API");
    std::vector<std::string> labels;
    bool refresh = false, fetch_offline = false;
    fetch->add_option("labels", labels, "curve labels")->required();
    auto* refresh_flag = fetch->add_flag("--refresh", refresh, "refetch and overwrite the cache");
    fetch->add_flag("--offline", fetch_offline, "cache only")->excludes(refresh_flag);

    // crosscheck
    auto* cross = app.add_subcommand("crosscheck", "compare computed local data with an oracle record");
    std::string cross_label;
    std::string cross_curve;
    bool cross_offline = false;
    cross->add_option("--label", cross_label, "record label")->required();
    cross->add_option("--curve", cross_curve, "curve to check (default: the record's a-invariants)");
    cross->add_flag("--offline", cross_offline, "cache only");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*localdata) {
            WeierstrassCurve curve = resolve_curve(spec);
            curve.integral_coefficients();
            std::vector<Integer> primes;
            if (!prime.empty()) {
                Integer ell;
                if (ell.set_str(prime, 10) != 0 || !is_prime(ell))
                    throw ParseError("--prime must be a prime, got '" + prime + "'");
                primes.push_back(ell);
            } else {
                for (Integer const& ell : prime_divisors(curve.discriminant().get_num()))
                    primes.push_back(ell);
            }
            ordered_json j;
            j["curve"] = curve_json(curve);
            j["local_data"] = ordered_json::array();
            for (Integer const& ell : primes) {
                LocalData local = tate_local(curve, ell);
                if (prime.empty() && local.conductor_exponent == 0)
                    continue; /* only non-minimal at ell */
                j["local_data"].push_back(local_data_json(local, trace));
            }
            std::cout << j.dump(2) << "\n";
            return ok;
        }

        if (*verify) {
            checked_p(p);
            WeierstrassCurve curve = resolve_curve(spec);
            LedgerOptions options;
            options.max_precision = max_precision;
            auto integer_flag = [](std::string const& text, char const* name) {
                Integer n;
                if (n.set_str(text, 10) != 0 || n < 1)
                    throw ParseError(std::string(name) + " must be a positive integer");
                return n;
            };
            if (!selmer_order.empty())
                options.external.selmer_order = integer_flag(selmer_order, "--selmer-order");
            if (!restricted_order.empty())
                options.external.restricted_order = integer_flag(restricted_order, "--restricted-order");
            EulerLedger ledger = verify_main_theorem(curve, p, options);
            Verdict v = combined_verdict(ledger, requested_verdicts(check));
            if (format == "csv")
                emit(order_table_header() + order_table_rows(ledger, spec.label, to_string(v)), out);
            else
                emit(ledger_json(ledger).dump(2) + "\n", out);
            for (auto const& nv : ledger.verdicts)
                std::cerr << nv.name << ": " << to_string(nv.verdict)
                          << (nv.detail.empty() ? "" : " (" + nv.detail + ")") << "\n";
            return exit_for(v);
        }

        if (*batch) {
            BatchOptions options;
            options.p = checked_p(batch_p);
            options.jobs = jobs;
            options.check = batch_check;
            std::ifstream in(input);
            if (!in) {
                std::cerr << "error: cannot read " << input << "\n";
                return usage;
            }
            auto results = run_batch(read_batch_input(in), options);
            if (format == "csv")
                emit(batch_csv(results), out);
            else
                emit(batch_json(results, options).dump(2) + "\n", out);
            BatchSummary s = summarize(results);
            (out.empty() ? std::cerr : std::cout) << summary_line(s) << "\n";
            return s.failed > 0 ? verdict_failed : ok;
        }

        if (*fetch) {
            LmfdbClient client = make_client(fetch_offline, refresh);
            ordered_json j = ordered_json::array();
            for (auto const& label : labels)
                j.push_back(ordered_json::parse(to_json(client.fetch_curve(label))));
            std::cout << (labels.size() == 1 ? j[0] : j).dump(2) << "\n";
            return ok;
        }

        if (*cross) {
            OracleRecord record = make_client(cross_offline).fetch_curve(cross_label);
            WeierstrassCurve curve = cross_curve.empty() ? record.curve() : WeierstrassCurve::parse(cross_curve);
            auto diff = crosscheck(curve, record);
            ordered_json j;
            j["label"] = record.label;
            j["diff"] = ordered_json::array();
            for (auto const& d : diff)
                j["diff"].push_back(
                    {{"prime", d.prime}, {"field", d.field}, {"expected", d.expected}, {"actual", d.actual}});
            std::cout << j.dump(2) << "\n";
            return diff.empty() ? ok : verdict_failed;
        }
    } catch (ParseError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (SingularCurveError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return singular;
    } catch (UndecidedError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return undecided;
    } catch (OracleError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!e.raw_payload().empty())
            std::cerr << "raw payload:\n" << e.raw_payload().substr(0, 4000) << "\n";
        return oracle;
    } catch (DomainError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (std::exception const& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal;
    }
    return ok;
}
