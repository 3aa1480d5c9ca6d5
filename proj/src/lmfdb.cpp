#include "ellocal/lmfdb.hpp"

#include "ellocal/errors.hpp"
#include "ellocal/ledger.hpp"
#include "ellocal/local_selmer.hpp"

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

namespace ellocal {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

namespace {

[[noreturn]] void drift(std::string const& what, std::string const& raw)
{
    throw OracleError(OracleError::Kind::schema_drift, "oracle schema drift: " + what, raw);
}

Integer integer_field(json const& j, std::string const& raw, char const* name)
{
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (std::invalid_argument const&) {
        }
    } else if (j.is_number_integer()) {
        return Integer(j.dump());
    }
    drift(std::string("field '") + name + "' is not an integer", raw);
}

int small_int(json const& j, std::string const& raw, char const* name)
{
    Integer v = integer_field(j, raw, name);
    if (!v.fits_sint_p())
        drift(std::string("field '") + name + "' out of range", raw);
    return static_cast<int>(v.get_si());
}

json const& member(json const& obj, char const* name, std::string const& raw)
{
    if (!obj.is_object() || !obj.contains(name))
        drift(std::string("missing field '") + name + "'", raw);
    return obj.at(name);
}

json parse_or_drift(std::string const& text)
{
    try {
        return json::parse(text);
    } catch (json::parse_error const& e) {
        drift(std::string("malformed JSON: ") + e.what(), text);
    }
}

void sort_rows(OracleRecord& r)
{
    std::sort(r.local.begin(), r.local.end(),
              [](OracleLocalRow const& a, OracleLocalRow const& b) { return a.prime < b.prime; });
}

bool safe_label(std::string const& label)
{
    static std::regex const pattern("[A-Za-z0-9][A-Za-z0-9.\\-]*");
    return std::regex_match(label, pattern);
}

}  // namespace

void OracleRecord::validate() const
{
    std::string raw = to_json(*this);
    try {
        curve();
    } catch (SingularCurveError const&) {
        drift("a-invariants define a singular curve", raw);
    }
    if (conductor < 1)
        drift("conductor must be positive", raw);
    std::vector<Integer> primes;
    for (auto const& row : local)
        if (row.conductor_exponent > 0)
            primes.push_back(row.prime);
    if (primes != prime_divisors(conductor))
        drift("local rows do not cover exactly the primes of the conductor", raw);
    try {
        FiniteAbelianGroup::from_cyclic_factors(torsion_structure);
    } catch (Error const&) {
        drift("bad torsion structure", raw);
    }
}

std::string to_json(OracleRecord const& r)
{
    ordered_json j;
    j["label"] = r.label;
    j["ainvs"] = ordered_json::array();
    for (auto const& a : r.ainvs)
        j["ainvs"].push_back(a.get_str());
    j["conductor"] = r.conductor.get_str();
    j["local_data"] = ordered_json::array();
    for (auto const& row : r.local) {
        ordered_json o;
        o["prime"] = row.prime.get_str();
        o["kodaira"] = row.kodaira.to_string();
        o["kodaira_code"] = row.kodaira.code();
        o["tamagawa"] = row.tamagawa;
        o["conductor_exponent"] = row.conductor_exponent;
        if (row.reduction_type)
            o["reduction_type"] = *row.reduction_type;
        if (row.discriminant_valuation)
            o["discriminant_valuation"] = *row.discriminant_valuation;
        j["local_data"].push_back(o);
    }
    j["torsion_structure"] = r.torsion_structure;
    j["source"] = r.source;
    return j.dump(2) + "\n";
}

OracleRecord record_from_json(std::string const& text)
{
    json j = parse_or_drift(text);
    OracleRecord r;
    json const& label = member(j, "label", text);
    if (!label.is_string())
        drift("field 'label' is not a string", text);
    r.label = label.get<std::string>();
    json const& ainvs = member(j, "ainvs", text);
    if (!ainvs.is_array() || ainvs.size() != 5)
        drift("field 'ainvs' is not a list of five integers", text);
    for (std::size_t i = 0; i < 5; ++i)
        r.ainvs[i] = integer_field(ainvs[i], text, "ainvs");
    r.conductor = integer_field(member(j, "conductor", text), text, "conductor");
    json const& rows = member(j, "local_data", text);
    if (!rows.is_array())
        drift("field 'local_data' is not a list", text);
    for (json const& o : rows) {
        OracleLocalRow row;
        row.prime = integer_field(member(o, "prime", text), text, "prime");
        json const& kod = member(o, "kodaira", text);
        try {
            row.kodaira = KodairaType::parse(kod.get<std::string>());
        } catch (std::exception const&) {
            drift("bad kodaira symbol " + kod.dump(), text);
        }
        if (o.contains("kodaira_code") && small_int(o["kodaira_code"], text, "kodaira_code") != row.kodaira.code())
            drift("kodaira and kodaira_code disagree", text);
        row.tamagawa = small_int(member(o, "tamagawa", text), text, "tamagawa");
        row.conductor_exponent = small_int(member(o, "conductor_exponent", text), text, "conductor_exponent");
        if (o.contains("reduction_type"))
            row.reduction_type = small_int(o["reduction_type"], text, "reduction_type");
        if (o.contains("discriminant_valuation"))
            row.discriminant_valuation = small_int(o["discriminant_valuation"], text, "discriminant_valuation");
        r.local.push_back(row);
    }
    json const& tors = member(j, "torsion_structure", text);
    if (!tors.is_array())
        drift("field 'torsion_structure' is not a list", text);
    for (json const& t : tors)
        r.torsion_structure.push_back(small_int(t, text, "torsion_structure"));
    if (j.contains("source") && j["source"].is_string())
        r.source = j["source"].get<std::string>();
    sort_rows(r);
    r.validate();
    return r;
}

OracleRecord record_from_lmfdb(std::string const& label, std::string const& curvedata, std::string const& localdata)
{
    json c = parse_or_drift(curvedata);
    json const& cdata = member(c, "data", curvedata);
    if (!cdata.is_array())
        drift("field 'data' is not a list", curvedata);
    if (cdata.empty())
        throw OracleError(OracleError::Kind::not_found, "not found: " + label);
    if (cdata.size() != 1)
        drift("expected one curve for " + label, curvedata);
    json const& row = cdata[0];

    OracleRecord r;
    r.label = label;
    json const& ainvs = member(row, "ainvs", curvedata);
    if (!ainvs.is_array() || ainvs.size() != 5)
        drift("field 'ainvs' is not a list of five integers", curvedata);
    for (std::size_t i = 0; i < 5; ++i)
        r.ainvs[i] = integer_field(ainvs[i], curvedata, "ainvs");
    r.conductor = integer_field(member(row, "conductor", curvedata), curvedata, "conductor");
    json const& tors = member(row, "torsion_structure", curvedata);
    if (!tors.is_array())
        drift("field 'torsion_structure' is not a list", curvedata);
    for (json const& t : tors)
        r.torsion_structure.push_back(small_int(t, curvedata, "torsion_structure"));

    json l = parse_or_drift(localdata);
    json const& ldata = member(l, "data", localdata);
    if (!ldata.is_array())
        drift("field 'data' is not a list", localdata);
    for (json const& o : ldata) {
        OracleLocalRow lr;
        lr.prime = integer_field(member(o, "prime", localdata), localdata, "prime");
        try {
            lr.kodaira = KodairaType::from_code(small_int(member(o, "kodaira_symbol", localdata), localdata,
                                                          "kodaira_symbol"));
        } catch (OracleError const&) {
            throw;
        } catch (Error const& e) {
            drift(std::string("bad kodaira_symbol: ") + e.what(), localdata);
        }
        lr.tamagawa = small_int(member(o, "tamagawa_number", localdata), localdata, "tamagawa_number");
        lr.conductor_exponent =
            small_int(member(o, "conductor_valuation", localdata), localdata, "conductor_valuation");
        if (o.contains("reduction_type") && !o["reduction_type"].is_null())
            lr.reduction_type = small_int(o["reduction_type"], localdata, "reduction_type");
        if (o.contains("discriminant_valuation") && !o["discriminant_valuation"].is_null())
            lr.discriminant_valuation =
                small_int(o["discriminant_valuation"], localdata, "discriminant_valuation");
        r.local.push_back(lr);
    }
    sort_rows(r);
    r.source = "lmfdb api ec_curvedata/ec_localdata";
    try {
        r.validate();
    } catch (OracleError const& e) {
        throw OracleError(OracleError::Kind::schema_drift, e.what(), curvedata + "\n" + localdata);
    }
    return r;
}

LmfdbConfig LmfdbConfig::from_env()
{
    LmfdbConfig c;
    if (char const* url = std::getenv("ELLOCAL_LMFDB_URL"); url && *url)
        c.base_url = url;
    if (char const* dir = std::getenv("ELLOCAL_FIXTURES_DIR"); dir && *dir)
        c.cache_dir = std::filesystem::path(dir) / "curves";
#ifdef ELLOCAL_DEFAULT_FIXTURES_DIR
    else
        c.cache_dir = std::filesystem::path(ELLOCAL_DEFAULT_FIXTURES_DIR) / "curves";
#endif
    if (char const* off = std::getenv("ELLOCAL_OFFLINE"); off && *off && std::string(off) != "0")
        c.offline = true;
    return c;
}

LmfdbClient::LmfdbClient(LmfdbConfig config) : config_(std::move(config)) {}

std::filesystem::path LmfdbClient::cache_path(std::string const& label) const
{
    if (!safe_label(label))
        throw ParseError("bad label '" + label + "'");
    return config_.cache_dir / (label + ".json");
}

std::optional<OracleRecord> LmfdbClient::cached(std::string const& label) const
{
    auto path = cache_path(label);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream text;
    text << in.rdbuf();
    return record_from_json(text.str());
}

std::string LmfdbClient::get(std::string const& path_and_query)
{
    if (last_request_) {
        auto next = *last_request_ + config_.min_interval;
        std::this_thread::sleep_until(next);
    }
    httplib::Client client(config_.base_url);
    client.set_connection_timeout(config_.timeout);
    client.set_read_timeout(config_.timeout);
    client.set_follow_location(true);
    auto result = client.Get(path_and_query);
    last_request_ = std::chrono::steady_clock::now();
    ++live_requests_;
    if (!result)
        throw OracleError(OracleError::Kind::transport,
                          "transport error: " + httplib::to_string(result.error()) + " (" + config_.base_url + ")");
    if (result->status == 404)
        throw OracleError(OracleError::Kind::not_found, "not found: " + path_and_query, result->body);
    if (result->status != 200)
        throw OracleError(OracleError::Kind::transport, "HTTP " + std::to_string(result->status), result->body);
    return result->body;
}

OracleRecord LmfdbClient::fetch_curve(std::string const& label)
{
    auto path = cache_path(label);
    if (!config_.refresh)
        if (auto hit = cached(label))
            return *hit;
    if (config_.offline)
        throw OracleError(OracleError::Kind::not_found, "not found: " + label + " (offline, no cached record)");

    std::lock_guard lock(mutex_);
    std::string query = "?lmfdb_label=" + label + "&_format=json";
    std::string curvedata = get("/api/ec_curvedata/" + query);
    std::string localdata = get("/api/ec_localdata/" + query + "&_sort=prime");
    OracleRecord record = record_from_lmfdb(label, curvedata, localdata);

    std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << to_json(record);
        if (!out)
            throw Error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
    return record;
}

std::vector<CrosscheckEntry> crosscheck(WeierstrassCurve const& curve, OracleRecord const& record)
{
    if (!curve.is_integral() || curve.integral_coefficients() != record.ainvs)
        throw OracleError(OracleError::Kind::mismatch, "record/curve mismatch: " + record.label);

    std::vector<CrosscheckEntry> diff;
    auto check = [&diff](std::string const& prime, std::string field, auto const& expected, auto const& actual) {
        std::ostringstream e, a;
        e << expected;
        a << actual;
        if (e.str() != a.str())
            diff.push_back({prime, std::move(field), e.str(), a.str()});
    };

    std::vector<Integer> record_primes;
    for (auto const& row : record.local) {
        record_primes.push_back(row.prime);
        LocalData local = tate_local(curve, row.prime);
        std::string p = row.prime.get_str();
        check(p, "kodaira", row.kodaira.to_string(), local.kodaira.to_string());
        check(p, "conductor_exponent", row.conductor_exponent, local.conductor_exponent);
        check(p, "tamagawa", row.tamagawa, local.tamagawa);
        if (row.reduction_type && local.kodaira.is_multiplicative())
            check(p, "reduction_type", *row.reduction_type, local.split ? 1 : -1);
        if (row.discriminant_valuation)
            check(p, "discriminant_valuation", *row.discriminant_valuation, local.discriminant_valuation);
    }
    for (Integer const& ell : prime_divisors(curve.discriminant().get_num())) {
        if (std::find(record_primes.begin(), record_primes.end(), ell) != record_primes.end())
            continue;
        LocalData local = tate_local(curve, ell);
        if (local.conductor_exponent > 0)
            check(ell.get_str(), "kodaira", "(no row)", local.kodaira.to_string());
    }

    FiniteAbelianGroup tors = FiniteAbelianGroup::from_cyclic_factors(record.torsion_structure);
    std::int64_t two = 1 + static_cast<std::int64_t>(rational_roots(two_torsion_polynomial(curve)).size());
    check("torsion", "E(Q)[2]", tors.p_torsion_order(2), two);
    for (std::int64_t p : {3, 5, 7})
        check("torsion", "E(Q)[" + std::to_string(p) + "]", tors.p_torsion_order(p), global_torsion_order(curve, p));
    return diff;
}

}  // namespace ellocal
