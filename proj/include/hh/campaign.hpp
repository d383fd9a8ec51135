#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hh/bounds.hpp"
#include "hh/json_io.hpp"

namespace hh {

/// A verification sweep: families x dimensions x random simplices x function
/// catalog, run in config order with all randomness derived from one seed.
struct CampaignConfig {
    std::vector<BoundFamily> families = {BoundFamily::Classical, BoundFamily::Wright,
                                         BoundFamily::StronglyConvex,
                                         BoundFamily::StronglyWright, BoundFamily::Operator};
    std::vector<int> dimensions = {1, 2, 3, 4};
    int simplices_per_dim = 25;
    std::vector<nlohmann::json> function_catalog; // descriptors; empty = default catalog
    std::int64_t mc_samples = 10000;
    std::uint64_t seed = 1;
    std::string output_path = "hh_report.json";
    std::string format = "json"; // "json" | "csv"
};

/// The descriptors used when a config does not supply a catalog.
std::vector<nlohmann::json> default_function_catalog();

/// Throws InvalidArgument on any violated config invariant.
void validate(const CampaignConfig& config);

CampaignConfig campaign_config_from_json(const nlohmann::json& j);
nlohmann::ordered_json campaign_config_to_json(const CampaignConfig& config);

struct CampaignCase {
    int dim = 0;
    int simplex_index = 0;
    std::string function;
    ConvexClass function_class = ConvexClass::Convex;
    BoundFamily family = BoundFamily::Classical;
    BoundReport report;
};

struct CampaignSummary {
    int total = 0;
    int holds = 0;
    int violated = 0;
    int inconclusive = 0;
    double worst_margin = 0.0;
    int positive_violations = 0; // Violated cases whose function is a positive class
};

struct CampaignSimplex {
    int dim = 0;
    int index = 0;
    nlohmann::ordered_json descriptor; // {"n": ..., "vertices": ...}
};

struct CampaignResult {
    std::vector<CampaignSimplex> simplices; // the sampled simplices, per (dim, index)
    std::vector<CampaignCase> cases;
    CampaignSummary summary;
};

/// Whether a family applies to a function's class tag (the strong families
/// need a modulus; everything else runs on every spec, negative controls
/// included, so violations can be detected).
bool family_applicable(BoundFamily family, const FunctionSpec& f);

CampaignResult run_campaign(const CampaignConfig& config);

nlohmann::ordered_json aggregate_json(const CampaignSummary& summary);
nlohmann::ordered_json campaign_report_json(const CampaignConfig& config,
                                            const CampaignResult& result);
std::string campaign_report_csv(const CampaignResult& result);

} // namespace hh
