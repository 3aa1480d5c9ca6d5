#include "ellocal/report.hpp"

#include <sstream>

namespace ellocal {

ordered_json curve_json(WeierstrassCurve const& curve)
{
    ordered_json j;
    j["ainvs"] = ordered_json::array();
    for (auto const& a : curve.coefficients())
        j["ainvs"].push_back(to_string(a));
    j["discriminant"] = to_string(curve.discriminant());
    j["j_invariant"] = to_string(curve.invariants().j);
    return j;
}

ordered_json transformation_json(Transformation const& t)
{
    return ordered_json{{"u", to_string(t.u)}, {"r", to_string(t.r)}, {"s", to_string(t.s)}, {"t", to_string(t.t)}};
}

ordered_json local_data_json(LocalData const& local, bool with_trace)
{
    ordered_json j;
    j["prime"] = local.prime.get_str();
    j["kodaira"] = local.kodaira.to_string();
    j["kodaira_code"] = local.kodaira.code();
    j["vdelta"] = local.discriminant_valuation;
    j["f"] = local.conductor_exponent;
    j["c"] = local.tamagawa;
    auto factors = [](FiniteAbelianGroup const& g) {
        return ordered_json(std::vector<std::int64_t>(g.invariant_factors().begin(), g.invariant_factors().end()));
    };
    j["phi_geom"] = factors(local.phi_geometric);
    j["phi_arith"] = factors(local.phi_arithmetic);
    if (local.kodaira.is_multiplicative())
        j["split"] = local.split;
    j["m"] = local.components;
    j["minimal_model"] = curve_json(local.minimal_model)["ainvs"];
    j["to_minimal"] = transformation_json(local.to_minimal);
    if (with_trace) {
        j["trace"] = ordered_json::array();
        for (auto const& step : local.trace)
            j["trace"].push_back({{"action", step.action}, {"change", transformation_json(step.change)}});
    }
    return j;
}

ordered_json local_orders_json(LocalSelmerOrders const& o)
{
    ordered_json j;
    j["place"] = o.place.to_string();
    j["torsion"] = o.torsion_order;
    j["kummer"] = o.kummer_order;
    j["phi_p"] = o.phi_p;
    j["relaxed"] = o.relaxed_order;
    j["restricted"] = o.restricted_order;
    j["tt_p"] = o.tt_p;
    return j;
}

ordered_json ledger_json(EulerLedger const& L)
{
    ordered_json j;
    j["curve"] = curve_json(L.curve);
    j["p"] = L.p;
    j["S"] = ordered_json::array();
    for (auto const& v : L.S)
        j["S"].push_back(v.to_string());
    j["global_torsion"] = L.global_torsion;
    j["local_orders"] = ordered_json::array();
    for (auto const& o : L.local)
        j["local_orders"].push_back(local_orders_json(o));
    j["reduction"] = ordered_json::array();
    for (auto const& r : L.reduction)
        j["reduction"].push_back(local_data_json(r));
    j["chi_selmer"] = to_string(L.chi_selmer);
    j["chi_relaxed"] = to_string(L.chi_relaxed);
    j["mt_lhs"] = to_string(L.mt_lhs);
    j["mt_rhs"] = L.mt_rhs.get_str();
    j["products"] = {{"kummer", L.kummer_total.get_str()},
                     {"relaxed", L.relaxed_total.get_str()},
                     {"restricted", L.restricted_total.get_str()}};
    j["all_phi_trivial"] = L.all_phi_trivial;
    j["truncation"] = ordered_json::array();
    for (auto const& t : L.truncation)
        j["truncation"].push_back({{"prime", t.prime.get_str()},
                                   {"torsion", t.orders.torsion_order},
                                   {"reduced_torsion", t.reduced_torsion},
                                   {"selmer_factor", to_string(t.orders.selmer_euler_factor())},
                                   {"relaxed_factor", to_string(t.orders.relaxed_euler_factor())}});
    j["undecided"] = L.undecided;
    j["verdicts"] = ordered_json::object();
    for (auto const& v : L.verdicts)
        j["verdicts"][v.name] = {{"verdict", to_string(v.verdict)}, {"detail", v.detail}};
    return j;
}

std::string csv_escape(std::string const& field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string order_table_header()
{
    return "label,p,place,torsion,kummer,phi_p,relaxed,restricted,tt_p,status\n";
}

std::string order_table_rows(EulerLedger const& L, std::string const& label, std::string const& status)
{
    std::ostringstream out;
    for (auto const& o : L.local)
        out << csv_escape(label) << ',' << L.p << ',' << o.place.to_string() << ',' << o.torsion_order << ','
            << o.kummer_order << ',' << o.phi_p << ',' << o.relaxed_order << ',' << o.restricted_order << ','
            << o.tt_p << ',' << status << '\n';
    return out.str();
}

}  // namespace ellocal
