#ifndef ELLOCAL_LMFDB_HPP_
#define ELLOCAL_LMFDB_HPP_

#include "ellocal/arith.hpp"
#include "ellocal/tate.hpp"
#include "ellocal/weierstrass.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace ellocal {

struct OracleLocalRow {
    Integer prime;
    KodairaType kodaira;
    std::int64_t tamagawa = 1;
    int conductor_exponent = 0;
    std::optional<int> reduction_type;         /* 1 split, -1 nonsplit, 0 additive */
    std::optional<int> discriminant_valuation; /* of the minimal discriminant */

    friend bool operator==(OracleLocalRow const&, OracleLocalRow const&) = default;
};

struct OracleRecord {
    std::string label;
    std::array<Integer, 5> ainvs;
    Integer conductor;
    std::vector<OracleLocalRow> local; /* sorted by prime */
    std::vector<std::int64_t> torsion_structure;
    std::string source;

    WeierstrassCurve curve() const { return WeierstrassCurve(ainvs); }
    /* Throws OracleError(schema_drift) naming the broken invariant. */
    void validate() const;

    friend bool operator==(OracleRecord const&, OracleRecord const&) = default;
};

/* The cache schema, one document per label; stable field order. */
std::string to_json(OracleRecord const& record);
OracleRecord record_from_json(std::string const& text);

/* Normalizes the two LMFDB API responses (ec_curvedata, ec_localdata). */
OracleRecord record_from_lmfdb(std::string const& label, std::string const& curvedata, std::string const& localdata);

struct LmfdbConfig {
    std::string base_url = "https://www.lmfdb.org";
    std::filesystem::path cache_dir = "fixtures/curves";
    bool offline = false;
    bool refresh = false; /* ignore and overwrite the cache */
    std::chrono::milliseconds min_interval{500};
    std::chrono::seconds timeout{30};

    /* ELLOCAL_LMFDB_URL, ELLOCAL_FIXTURES_DIR (curves/ below it), ELLOCAL_OFFLINE */
    static LmfdbConfig from_env();
};

class LmfdbClient {
  public:
    explicit LmfdbClient(LmfdbConfig config);

    /* Cache first unless refresh is set; live fetches update the cache. */
    OracleRecord fetch_curve(std::string const& label);
    std::optional<OracleRecord> cached(std::string const& label) const;
    std::filesystem::path cache_path(std::string const& label) const;

    LmfdbConfig const& config() const { return config_; }
    int live_requests() const { return live_requests_; }

  private:
    std::string get(std::string const& path_and_query);

    LmfdbConfig config_;
    std::mutex mutex_; /* live fetches are single-flight */
    std::optional<std::chrono::steady_clock::time_point> last_request_;
    int live_requests_ = 0;
};

struct CrosscheckEntry {
    std::string prime; /* "torsion" for the global entry */
    std::string field;
    std::string expected; /* oracle */
    std::string actual;   /* computed */
};

/* Empty on agreement. Throws OracleError(mismatch) if the a-invariants differ. */
std::vector<CrosscheckEntry> crosscheck(WeierstrassCurve const& curve, OracleRecord const& record);

}  // namespace ellocal

#endif /* ELLOCAL_LMFDB_HPP_ */
