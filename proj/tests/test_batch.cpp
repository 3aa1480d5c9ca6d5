#include "ellocal/batch.hpp"
#include "ellocal/errors.hpp"
#include "ellocal/report.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ellocal;

namespace {

std::vector<BatchRow> rows_of(std::string const& text)
{
    std::istringstream in(text);
    return read_batch_input(in);
}

std::vector<BatchRow> corpus_rows()
{
    std::ifstream in(support::fixtures_dir() / "corpus.csv");
    return read_batch_input(in);
}

}  // namespace

TEST_CASE("input rows")
{
    auto rows = rows_of("# comment\n\n0,-1,1,-10,-20,11.a2\n 0,0,1,0,0 \nx,y\n");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].line == 3);
    CHECK(rows[0].label == "11.a2");
    CHECK(rows[0].text == "0,-1,1,-10,-20");
    CHECK(rows[1].label.empty());
    CHECK(rows[1].text == "0,0,1,0,0");
    CHECK(rows[2].text == "x,y");
}

TEST_CASE("empty input")
{
    auto results = run_batch({}, BatchOptions{3});
    CHECK(results.empty());
    CHECK(summary_line(summarize(results)) == "0 passed, 0 failed, 0 undecided");
}

TEST_CASE("a bad row does not affect the others")
{
    BatchOptions o{5};
    auto results = run_batch(rows_of("0,0,0,0,0,sing\n0,-1,1,-10,-20,11.a2\n1,2,three,4,5\n"), o);
    REQUIRE(results.size() == 3);
    CHECK(results[0].status == RowStatus::singular);
    CHECK(results[1].status == RowStatus::passed);
    CHECK(results[2].status == RowStatus::parse_error);
    CHECK(to_string(results[2].status) == "failed-parse");
    CHECK(summary_line(summarize(results)) == "1 passed, 2 failed, 0 undecided");
    std::string csv = batch_csv(results);
    CHECK(csv.rfind(order_table_header(), 0) == 0);
    CHECK(csv.find("sing,,,,,,,,,failed-singular\n") != std::string::npos);
    CHECK(csv.find("11.a2,5,11,25,25,5,125,5,5,passed\n") != std::string::npos);
}

TEST_CASE("undecided rows are counted separately")
{
    BatchOptions o{5};
    o.ledger.max_precision = 1;
    auto results = run_batch(rows_of("0,-1,1,-10,-20\n"), o);
    CHECK(results[0].status == RowStatus::undecided);
    CHECK(summary_line(summarize(results)) == "0 passed, 0 failed, 1 undecided");
}

TEST_CASE("requested checks")
{
    CHECK(requested_verdicts("euler") == std::vector<std::string>{"euler_characteristic"});
    CHECK(requested_verdicts("main-theorem") == std::vector<std::string>{"main_theorem"});
    CHECK(requested_verdicts("all").empty());
    CHECK_THROWS_AS(requested_verdicts("bogus"), ParseError);
    EulerLedger L{WeierstrassCurve(0, 0, 0, 1, 0)};
    L.verdicts = {{"euler_characteristic", Verdict::pass, ""}, {"main_theorem", Verdict::fail, ""},
                  {"truncation", Verdict::undecided, ""}, {"selmer_bound", Verdict::not_evaluated, ""}};
    CHECK(combined_verdict(L, {"euler_characteristic"}) == Verdict::pass);
    CHECK(combined_verdict(L, {"truncation", "euler_characteristic"}) == Verdict::undecided);
    CHECK(combined_verdict(L, {}) == Verdict::fail);
}

TEST_CASE("batch output is deterministic and independent of the job count")
{
    auto rows = corpus_rows();
    REQUIRE(rows.size() >= 50);
    BatchOptions one{3, 1};
    BatchOptions many{3, 8};
    std::string a = batch_json(run_batch(rows, one), one).dump(2);
    std::string b = batch_json(run_batch(rows, many), one).dump(2);
    std::string c = batch_json(run_batch(rows, many), one).dump(2);
    CHECK(a == b);
    CHECK(b == c);
    auto s = summarize(run_batch(rows, many));
    CHECK(s.passed == rows.size());
    CHECK(summary_line(s) == std::to_string(rows.size()) + " passed, 0 failed, 0 undecided");
}

TEST_CASE("ledger report fields")
{
    auto j = ledger_json(verify_main_theorem(WeierstrassCurve(0, -1, 1, -10, -20), 5));
    std::vector<std::string> keys;
    for (auto const& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"curve", "p", "S", "global_torsion", "local_orders", "reduction",
                                           "chi_selmer", "chi_relaxed", "mt_lhs", "mt_rhs", "products",
                                           "all_phi_trivial", "truncation", "undecided", "verdicts"});
    CHECK(j["S"] == ordered_json({"inf", "5", "11"}));
    CHECK(j["mt_rhs"] == "5");
    CHECK(j["local_orders"][2] == ordered_json::parse(
                                      R"({"place":"11","torsion":25,"kummer":25,"phi_p":5,"relaxed":125,)"
                                      R"("restricted":5,"tt_p":5})"));
    auto const& r = j["reduction"][1];
    CHECK(r["kodaira"] == "In:5");
    CHECK(r["vdelta"] == 5);
    CHECK(r["f"] == 1);
    CHECK(r["c"] == 5);
    CHECK(r["phi_geom"] == ordered_json({5}));
    CHECK(r["phi_arith"] == ordered_json({5}));
    CHECK(r["split"] == true);
    CHECK(r["m"] == 5);
    CHECK(j["verdicts"]["main_theorem"]["verdict"] == "pass");
    CHECK(j["verdicts"]["selmer_bound"]["verdict"] == "not evaluated");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"x\"") == "\"say \"\"x\"\"\"");
    CHECK(csv_escape("\"q\",") == "\"\"\"q\"\",\"");
}
