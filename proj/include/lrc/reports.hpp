#pragma once

#include <json.hpp>

#include "lrc/bounds.hpp"
#include "lrc/lab.hpp"
#include "lrc/locality.hpp"

// JSON report schemas for the CLI and for fixture files. Field names are
// stable: n,k,d,r,delta,ell,r_prime,repair_sets[],plan.tier,plan.equations[].
namespace lrc {
namespace reports {

nlohmann::json to_json(const gf2::CodeValidation& v);
nlohmann::json to_json(const LocalityProfile& p);
nlohmann::json to_json(const RepairPlan& plan);
nlohmann::json to_json(const RepairChain& chain);
nlohmann::json to_json(const bounds::BoundReport& rep);
nlohmann::json to_json(const bounds::CmBound& cm);
nlohmann::json to_json(const bounds::ComparisonReport& rep);
nlohmann::json to_json(const lab::SuiteReport& rep);
nlohmann::json to_json(const lab::SearchResult& res);

}  // namespace reports
}  // namespace lrc
