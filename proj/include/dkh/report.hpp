#ifndef DKH_REPORT_HPP
#define DKH_REPORT_HPP

#include <string>

#include <json.hpp>

#include "dkh/cobordism.hpp"
#include "dkh/homology.hpp"
#include "dkh/obstructions.hpp"

namespace dkh {

// Text grid: homological degree i across, quantum degree j down (descending).
std::string render_grid(const BigradedAbelianGroup& h);
std::string render_group(const BidegreeGroup& g);  // "Z^2+Z_2", "0" when trivial

nlohmann::json to_json(const BigradedAbelianGroup& h);
BigradedAbelianGroup group_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RasmussenPair& s);
nlohmann::json to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LeeSummary& s);
nlohmann::json to_json(const ObstructionReport& r);
nlohmann::json to_json(const InducedMap& m);

std::string render_summary(const LeeSummary& s);
std::string render_report(const ObstructionReport& r);
std::string render_induced_map(const InducedMap& m);

}  // namespace dkh

#endif
