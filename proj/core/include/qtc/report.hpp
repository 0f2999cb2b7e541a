#ifndef QTC_REPORT_HPP
#define QTC_REPORT_HPP

#include <string>

#include <json.hpp>

#include "qtc/automaton.hpp"
#include "qtc/crt.hpp"
#include "qtc/scan.hpp"

namespace qtc {

using Json = nlohmann::ordered_json;

// Report serialization.  Key order is fixed and numbers are emitted
// exactly, so identical inputs give byte-identical documents.

Json scan_to_json(const QueryTableScan& scan);
std::string scan_to_csv(const QueryTableScan& scan);

Json richness_to_json(const RichnessReport& r);
Json coverage_to_json(const CoverageReport& r);
Json residual_to_json(const ResidualReport& r, const std::string& oracle_kind);
Json census_to_json(const std::vector<size_t>& counts);
Json bound_check_to_json(const DfaProfileBoundCheck& c);

Json witness_to_json(const CrtWitness& w);
CrtWitness witness_from_json(const Json& j);

// Canonical two-space-indented rendering with trailing newline.
std::string render(const Json& j);

}  // namespace qtc

#endif
