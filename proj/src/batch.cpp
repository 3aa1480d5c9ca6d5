#include "ellocal/batch.hpp"

#include "ellocal/errors.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace ellocal {

std::vector<std::string> requested_verdicts(std::string const& check)
{
    if (check == "euler")
        return {"euler_characteristic"};
    if (check == "main-theorem")
        return {"main_theorem"};
    if (check == "all")
        return {};
    throw ParseError("unknown check '" + check + "' (euler, main-theorem, all)");
}

Verdict combined_verdict(EulerLedger const& ledger, std::vector<std::string> const& names)
{
    bool undecided = false;
    for (auto const& v : ledger.verdicts) {
        if (!names.empty() && std::find(names.begin(), names.end(), v.name) == names.end())
            continue;
        if (v.verdict == Verdict::fail)
            return Verdict::fail;
        if (v.verdict == Verdict::undecided)
            undecided = true;
    }
    return undecided ? Verdict::undecided : Verdict::pass;
}

namespace {

std::string trim(std::string const& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

std::vector<BatchRow> read_batch_input(std::istream& in)
{
    std::vector<BatchRow> rows;
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        BatchRow row{n, line, ""};
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');)
            fields.push_back(trim(f));
        if (fields.size() == 6) {
            row.label = fields[5];
            row.text = fields[0];
            for (int i = 1; i < 5; ++i)
                row.text += "," + fields[i];
        }
        rows.push_back(row);
    }
    return rows;
}

std::string to_string(RowStatus s)
{
    switch (s) {
    case RowStatus::passed:
        return "passed";
    case RowStatus::failed:
        return "failed";
    case RowStatus::undecided:
        return "undecided";
    case RowStatus::parse_error:
        return "failed-parse";
    case RowStatus::singular:
        return "failed-singular";
    case RowStatus::error:
        return "failed-error";
    }
    return "?";
}

namespace {

BatchResult run_one(BatchRow const& row, BatchOptions const& options, std::vector<std::string> const& names)
{
    BatchResult r;
    r.row = row;
    try {
        WeierstrassCurve curve = WeierstrassCurve::parse(row.text);
        r.ledger = verify_main_theorem(curve, options.p, options.ledger);
        switch (combined_verdict(*r.ledger, names)) {
        case Verdict::pass:
            r.status = RowStatus::passed;
            break;
        case Verdict::undecided:
            r.status = RowStatus::undecided;
            break;
        default:
            r.status = RowStatus::failed;
        }
    } catch (ParseError const& e) {
        r.status = RowStatus::parse_error;
        r.message = e.what();
    } catch (SingularCurveError const& e) {
        r.status = RowStatus::singular;
        r.message = e.what();
    } catch (UndecidedError const& e) {
        r.status = RowStatus::undecided;
        r.message = e.what();
    } catch (std::exception const& e) {
        r.status = RowStatus::error;
        r.message = e.what();
    }
    return r;
}

}  // namespace

std::vector<BatchResult> run_batch(std::vector<BatchRow> const& rows, BatchOptions const& options)
{
    require_supported_p(options.p);
    auto names = requested_verdicts(options.check);
    std::vector<BatchResult> results(rows.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < rows.size();)
            results[i] = run_one(rows[i], options, names);
    };
    int jobs = std::clamp(options.jobs, 1, static_cast<int>(std::max<std::size_t>(rows.size(), 1)));
    std::vector<std::jthread> pool;
    for (int t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    return results;
}

BatchSummary summarize(std::vector<BatchResult> const& results)
{
    BatchSummary s;
    for (auto const& r : results) {
        if (r.status == RowStatus::passed)
            ++s.passed;
        else if (r.status == RowStatus::undecided)
            ++s.undecided;
        else
            ++s.failed;
    }
    return s;
}

std::string summary_line(BatchSummary const& s)
{
    return std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed, " +
           std::to_string(s.undecided) + " undecided";
}

ordered_json batch_json(std::vector<BatchResult> const& results, BatchOptions const& options)
{
    ordered_json j;
    j["p"] = options.p;
    j["check"] = options.check;
    BatchSummary s = summarize(results);
    j["summary"] = {{"passed", s.passed}, {"failed", s.failed}, {"undecided", s.undecided}};
    j["curves"] = ordered_json::array();
    for (auto const& r : results) {
        ordered_json row;
        row["line"] = r.row.line;
        row["input"] = r.row.text;
        row["label"] = r.row.label;
        row["status"] = to_string(r.status);
        if (!r.message.empty())
            row["message"] = r.message;
        if (r.ledger)
            row["ledger"] = ledger_json(*r.ledger);
        j["curves"].push_back(row);
    }
    return j;
}

std::string batch_csv(std::vector<BatchResult> const& results)
{
    std::string out = order_table_header();
    for (auto const& r : results) {
        std::string label = r.row.label.empty() ? r.row.text : r.row.label;
        if (r.ledger)
            out += order_table_rows(*r.ledger, label, to_string(r.status));
        else
            out += csv_escape(label) + ",,,,,,,,," + to_string(r.status) + "\n";
    }
    return out;
}

}  // namespace ellocal
