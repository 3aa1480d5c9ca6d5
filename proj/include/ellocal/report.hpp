#ifndef ELLOCAL_REPORT_HPP_
#define ELLOCAL_REPORT_HPP_

#include "ellocal/ledger.hpp"
#include "ellocal/local_selmer.hpp"
#include "ellocal/tate.hpp"
#include "ellocal/weierstrass.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ellocal {

using ordered_json = nlohmann::ordered_json;

ordered_json curve_json(WeierstrassCurve const& curve);
ordered_json transformation_json(Transformation const& t);
ordered_json local_data_json(LocalData const& local, bool with_trace = false);
ordered_json local_orders_json(LocalSelmerOrders const& orders);
ordered_json ledger_json(EulerLedger const& ledger);

/* header row of the order table */
std::string order_table_header();
/* one row per place of S; label may be empty */
std::string order_table_rows(EulerLedger const& ledger, std::string const& label, std::string const& status);
std::string csv_escape(std::string const& field);

}  // namespace ellocal

#endif /* ELLOCAL_REPORT_HPP_ */
