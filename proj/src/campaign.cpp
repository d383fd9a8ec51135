#include "hh/campaign.hpp"

#include <limits>
#include <sstream>
#include <utility>

namespace hh {

namespace {

// stable seed streams for the independent random choices of a campaign
constexpr std::uint64_t kSimplexStream = 0x53;
constexpr std::uint64_t kCatalogStream = 0x46;
constexpr std::uint64_t kMcStream = 0x4d;

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t a,
                        std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = derive_seed(seed, stream);
    s = derive_seed(s, a);
    s = derive_seed(s, b);
    return derive_seed(s, c);
}

std::string csv_number(double x) { return nlohmann::json(x).dump(); }

} // namespace

std::vector<nlohmann::json> default_function_catalog() {
    using nlohmann::json;
    return {
        json{{"class", "quadratic_form"}},
        json{{"class", "norm_power"}, {"params", {{"p", 2.0}}}},
        json{{"class", "norm_power"}, {"params", {{"p", 3.0}}}},
        json{{"class", "max_affine"}},
        json{{"class", "exp_linear"}},
        json{{"class", "strongly_convex"}, {"params", {{"c", 1.0}}}},
        json{{"class", "wright"}},
        json{{"class", "strongly_wright"}, {"params", {{"c", 0.5}}}},
    };
}

void validate(const CampaignConfig& config) {
    if (config.families.empty()) throw InvalidArgument("campaign needs at least one family");
    if (config.dimensions.empty()) throw InvalidArgument("campaign needs at least one dimension");
    for (int n : config.dimensions)
        if (n < 1) throw InvalidArgument("campaign dimensions must be >= 1");
    if (config.simplices_per_dim < 1)
        throw InvalidArgument("simplices_per_dim must be >= 1");
    if (config.mc_samples < 100) throw InvalidArgument("mc_samples must be >= 100");
    if (config.format != "json" && config.format != "csv")
        throw InvalidArgument("format must be \"json\" or \"csv\"");
}

CampaignConfig campaign_config_from_json(const nlohmann::json& j) {
    CampaignConfig config;
    if (j.contains("families")) {
        config.families.clear();
        for (const auto& name : j.at("families"))
            config.families.push_back(family_from_string(name.get<std::string>()));
    }
    if (j.contains("dimensions")) config.dimensions = j.at("dimensions").get<std::vector<int>>();
    if (j.contains("simplices_per_dim")) config.simplices_per_dim = j.at("simplices_per_dim").get<int>();
    if (j.contains("function_catalog"))
        config.function_catalog = std::vector<nlohmann::json>(j.at("function_catalog").begin(),
                                                              j.at("function_catalog").end());
    if (j.contains("mc_samples")) config.mc_samples = j.at("mc_samples").get<std::int64_t>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("output_path")) config.output_path = j.at("output_path").get<std::string>();
    if (j.contains("format")) config.format = j.at("format").get<std::string>();
    validate(config);
    return config;
}

nlohmann::ordered_json campaign_config_to_json(const CampaignConfig& config) {
    nlohmann::ordered_json j;
    auto families = nlohmann::ordered_json::array();
    for (BoundFamily f : config.families) families.push_back(family_name(f));
    j["families"] = std::move(families);
    j["dimensions"] = config.dimensions;
    j["simplices_per_dim"] = config.simplices_per_dim;
    auto catalog = nlohmann::ordered_json::array();
    for (const auto& d : config.function_catalog)
        catalog.push_back(nlohmann::ordered_json(d));
    j["function_catalog"] = std::move(catalog);
    j["mc_samples"] = config.mc_samples;
    j["seed"] = config.seed;
    return j;
}

bool family_applicable(BoundFamily family, const FunctionSpec& f) {
    switch (family) {
        case BoundFamily::StronglyConvex:
        case BoundFamily::StronglyWright:
            return f.has_modulus();
        default:
            return true;
    }
}

CampaignResult run_campaign(const CampaignConfig& config) {
    validate(config);
    const std::vector<nlohmann::json> catalog =
        config.function_catalog.empty() ? default_function_catalog() : config.function_catalog;

    CampaignResult result;
    result.summary.worst_margin = std::numeric_limits<double>::infinity();

    for (std::size_t d = 0; d < config.dimensions.size(); ++d) {
        const int n = config.dimensions[d];

        std::vector<FunctionSpec> specs;
        specs.reserve(catalog.size());
        for (std::size_t e = 0; e < catalog.size(); ++e) {
            Rng gen(case_seed(config.seed, kCatalogStream, d, e));
            specs.push_back(function_from_json(catalog[e], n, &gen));
        }

        for (int s = 0; s < config.simplices_per_dim; ++s) {
            const Simplex S = random_simplex(n, case_seed(config.seed, kSimplexStream, d,
                                                          static_cast<std::uint64_t>(s)));
            result.simplices.push_back({n, s, simplex_to_json(S)});
            const PositiveLinearFunctional interior = make_interior_rule_functional(S);

            for (std::size_t e = 0; e < specs.size(); ++e) {
                const FunctionSpec& f = specs[e];
                for (std::size_t fam = 0; fam < config.families.size(); ++fam) {
                    const BoundFamily family = config.families[fam];
                    if (!family_applicable(family, f)) continue;

                    IntegratorConfig icfg;
                    icfg.mc_samples = config.mc_samples;
                    icfg.seed = case_seed(config.seed, kMcStream,
                                          (d << 24) | (static_cast<std::uint64_t>(s) << 8) | fam,
                                          e);

                    CampaignCase item;
                    item.dim = n;
                    item.simplex_index = s;
                    item.function = catalog[e].at("class").get<std::string>() + "#" +
                                    std::to_string(e);
                    item.function_class = f.class_tag;
                    item.family = family;
                    switch (family) {
                        case BoundFamily::Classical:
                            item.report = classical_hh(f, S, icfg);
                            break;
                        case BoundFamily::Wright:
                            item.report = wright_hh(f, S, icfg);
                            break;
                        case BoundFamily::StronglyConvex:
                            item.report = strongly_convex_hh(f, S, icfg);
                            break;
                        case BoundFamily::StronglyWright:
                            item.report = strongly_wright_hh(f, S, icfg);
                            break;
                        case BoundFamily::Operator:
                            item.report = operator_hh(f, S, interior);
                            break;
                    }

                    auto& summary = result.summary;
                    summary.total += 1;
                    switch (item.report.status) {
                        case BoundStatus::Holds: summary.holds += 1; break;
                        case BoundStatus::Violated:
                            summary.violated += 1;
                            if (f.is_positive_class()) summary.positive_violations += 1;
                            break;
                        case BoundStatus::Inconclusive: summary.inconclusive += 1; break;
                    }
                    summary.worst_margin =
                        std::min({summary.worst_margin, item.report.margin_lower,
                                  item.report.margin_upper});
                    result.cases.push_back(std::move(item));
                }
            }
        }
    }
    return result;
}

nlohmann::ordered_json aggregate_json(const CampaignSummary& summary) {
    nlohmann::ordered_json j;
    j["total"] = summary.total;
    j["holds"] = summary.holds;
    j["violated"] = summary.violated;
    j["inconclusive"] = summary.inconclusive;
    j["worst_margin"] = summary.worst_margin;
    j["positive_violations"] = summary.positive_violations;
    return j;
}

nlohmann::ordered_json campaign_report_json(const CampaignConfig& config,
                                            const CampaignResult& result) {
    nlohmann::ordered_json j;
    j["config"] = campaign_config_to_json(config);
    auto simplices = nlohmann::ordered_json::array();
    for (const CampaignSimplex& s : result.simplices) {
        nlohmann::ordered_json row;
        row["dim"] = s.dim;
        row["index"] = s.index;
        row["simplex"] = s.descriptor;
        simplices.push_back(std::move(row));
    }
    j["simplices"] = std::move(simplices);
    auto cases = nlohmann::ordered_json::array();
    for (const CampaignCase& item : result.cases) {
        nlohmann::ordered_json row;
        row["dim"] = item.dim;
        row["simplex"] = item.simplex_index;
        row["function"] = item.function;
        row["class"] = class_name(item.function_class);
        row["family"] = family_name(item.family);
        row["report"] = report_to_json(item.report);
        cases.push_back(std::move(row));
    }
    j["cases"] = std::move(cases);
    j["aggregate"] = aggregate_json(result.summary);
    return j;
}

std::string campaign_report_csv(const CampaignResult& result) {
    std::ostringstream out;
    out << "dim,simplex,function,class,family,lower,middle,kind,std_error,upper,"
           "margin_lower,margin_upper,status,guard\n";
    for (const CampaignCase& item : result.cases) {
        const BoundReport& r = item.report;
        out << item.dim << ',' << item.simplex_index << ',' << item.function << ','
            << class_name(item.function_class) << ',' << family_name(item.family) << ','
            << csv_number(r.lower) << ',' << csv_number(r.middle.value) << ','
            << kind_name(r.middle.kind) << ',' << csv_number(r.middle.std_error) << ','
            << csv_number(r.upper) << ',' << csv_number(r.margin_lower) << ','
            << csv_number(r.margin_upper) << ',' << status_name(r.status) << ','
            << csv_number(r.guard) << '\n';
    }
    return out.str();
}

} // namespace hh
