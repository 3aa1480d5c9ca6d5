#ifndef ELLOCAL_BATCH_HPP_
#define ELLOCAL_BATCH_HPP_

#include "ellocal/ledger.hpp"
#include "ellocal/report.hpp"

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace ellocal {

/* "euler", "main-theorem" or "all" -> verdict names; empty means every verdict */
std::vector<std::string> requested_verdicts(std::string const& check);
/* fail beats undecided beats pass; not_evaluated verdicts are ignored */
Verdict combined_verdict(EulerLedger const& ledger, std::vector<std::string> const& names);

struct BatchRow {
    std::size_t line = 0; /* 1-based */
    std::string text;     /* "a1,a2,a3,a4,a6" as given */
    std::string label;
};

/* Skips blank lines and lines starting with '#'. */
std::vector<BatchRow> read_batch_input(std::istream& in);

enum class RowStatus { passed, failed, undecided, parse_error, singular, error };
std::string to_string(RowStatus s);

struct BatchResult {
    BatchRow row;
    RowStatus status = RowStatus::error;
    std::string message;
    std::optional<EulerLedger> ledger;
};

struct BatchOptions {
    std::int64_t p = 3;
    int jobs = 1;
    std::string check = "all";
    LedgerOptions ledger{};
};

/* Results come back in input order whatever the number of jobs. */
std::vector<BatchResult> run_batch(std::vector<BatchRow> const& rows, BatchOptions const& options);

struct BatchSummary {
    std::size_t passed = 0;
    std::size_t failed = 0; /* includes rows that could not be parsed */
    std::size_t undecided = 0;
};
BatchSummary summarize(std::vector<BatchResult> const& results);
/* "N passed, M failed, K undecided" */
std::string summary_line(BatchSummary const& s);

ordered_json batch_json(std::vector<BatchResult> const& results, BatchOptions const& options);
std::string batch_csv(std::vector<BatchResult> const& results);

}  // namespace ellocal

#endif /* ELLOCAL_BATCH_HPP_ */
