#pragma once

#include <json.hpp>

#include "osprings/fillings.hpp"
#include "osprings/frobenius.hpp"
#include "osprings/oracle.hpp"
#include "osprings/osp.hpp"

namespace osprings {

using json = nlohmann::json;

json to_json(const QPoly& f);
QPoly qpoly_from_json(const json& j);

json to_json(const SchurExpansion& f);
json to_json(const FundExpansion& f);
SchurExpansion schur_from_json(const json& j);
FundExpansion fund_from_json(const json& j);
json to_json(const GradedModuleSeries& g, bool fundamental = false);

json to_json(const ExtendedFilling& f);
ExtendedFilling filling_from_json(const json& j);

json osp_to_json(const OrderedSetPartition& p);
OrderedSetPartition osp_from_json(const json& j);

json to_json(const ExponentPolynomial& p);
ExponentPolynomial exponent_polynomial_from_json(const json& j);

}  // namespace osprings
