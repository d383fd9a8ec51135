#include "hh/json_io.hpp"

#include <utility>
#include <vector>

namespace hh {

namespace {

Eigen::VectorXd vector_from_json(const nlohmann::json& j, int dim, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw InvalidArgument(std::string(what) + " must be an array of length " +
                              std::to_string(dim));
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = j.at(static_cast<std::size_t>(i)).get<double>();
    return v;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j, int dim, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw InvalidArgument(std::string(what) + " must be a " + std::to_string(dim) + "x" +
                              std::to_string(dim) + " matrix");
    Eigen::MatrixXd m(dim, dim);
    for (int i = 0; i < dim; ++i) m.row(i) = vector_from_json(j.at(static_cast<std::size_t>(i)),
                                                              dim, what).transpose();
    return m;
}

Eigen::VectorXd random_vector(Rng& gen, int dim, double lo, double hi) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = gen.uniform(lo, hi);
    return v;
}

Eigen::MatrixXd random_psd(Rng& gen, int dim) {
    Eigen::MatrixXd a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = gen.uniform(-1.0, 1.0);
    return (a.transpose() * a) / static_cast<double>(dim);
}

} // namespace

nlohmann::ordered_json simplex_to_json(const Simplex& S) {
    nlohmann::ordered_json j;
    j["n"] = S.dim();
    auto vertices = nlohmann::ordered_json::array();
    for (const Point& v : S.vertices()) {
        auto row = nlohmann::ordered_json::array();
        for (int i = 0; i < v.size(); ++i) row.push_back(v(i));
        vertices.push_back(std::move(row));
    }
    j["vertices"] = std::move(vertices);
    return j;
}

Simplex simplex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("vertices"))
        throw InvalidArgument("simplex descriptor needs keys \"n\" and \"vertices\"");
    const int n = j.at("n").get<int>();
    if (n < 1) throw InvalidArgument("simplex dimension must be >= 1");
    const auto& rows = j.at("vertices");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n + 1)
        throw InvalidArgument("simplex needs exactly n+1 vertices");
    std::vector<Point> vertices;
    vertices.reserve(rows.size());
    for (const auto& row : rows) vertices.push_back(vector_from_json(row, n, "vertex"));
    return Simplex(std::move(vertices));
}

const char* family_name(BoundFamily family) {
    switch (family) {
        case BoundFamily::Classical: return "classical";
        case BoundFamily::Wright: return "wright";
        case BoundFamily::StronglyConvex: return "strongly_convex";
        case BoundFamily::StronglyWright: return "strongly_wright";
        case BoundFamily::Operator: return "operator";
    }
    return "?";
}

BoundFamily family_from_string(const std::string& name) {
    if (name == "classical") return BoundFamily::Classical;
    if (name == "wright") return BoundFamily::Wright;
    if (name == "strongly_convex") return BoundFamily::StronglyConvex;
    if (name == "strongly_wright") return BoundFamily::StronglyWright;
    if (name == "operator") return BoundFamily::Operator;
    throw InvalidArgument("unknown bound family \"" + name + "\"");
}

const char* status_name(BoundStatus status) {
    switch (status) {
        case BoundStatus::Holds: return "holds";
        case BoundStatus::Violated: return "violated";
        case BoundStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* kind_name(EstimateKind kind) {
    return kind == EstimateKind::Exact ? "exact" : "monte_carlo";
}

const char* class_name(ConvexClass c) {
    switch (c) {
        case ConvexClass::Convex: return "convex";
        case ConvexClass::StronglyConvex: return "strongly_convex";
        case ConvexClass::WrightConvex: return "wright_convex";
        case ConvexClass::StronglyWrightConvex: return "strongly_wright_convex";
        case ConvexClass::NonConvexControl: return "non_convex_control";
    }
    return "?";
}

nlohmann::ordered_json estimate_to_json(const IntegralEstimate& est) {
    nlohmann::ordered_json j;
    j["value"] = est.value;
    j["kind"] = kind_name(est.kind);
    j["std_error"] = est.std_error;
    j["n_samples"] = est.n_samples;
    return j;
}

nlohmann::ordered_json report_to_json(const BoundReport& r) {
    nlohmann::ordered_json j;
    j["family"] = family_name(r.family);
    j["lower"] = r.lower;
    nlohmann::ordered_json middle;
    middle["value"] = r.middle.value;
    middle["kind"] = kind_name(r.middle.kind);
    middle["std_error"] = r.middle.std_error;
    j["middle"] = std::move(middle);
    j["upper"] = r.upper;
    j["margin_lower"] = r.margin_lower;
    j["margin_upper"] = r.margin_upper;
    j["status"] = status_name(r.status);
    j["guard"] = r.guard;
    if (r.classical_lower) j["classical_lower"] = *r.classical_lower;
    if (r.classical_upper) j["classical_upper"] = *r.classical_upper;
    return j;
}

FunctionSpec function_from_json(const nlohmann::json& descriptor, int dim, Rng* gen) {
    if (!descriptor.is_object() || !descriptor.contains("class"))
        throw InvalidArgument("function descriptor needs a \"class\" key");
    const std::string cls = descriptor.at("class").get<std::string>();
    const nlohmann::json params =
        descriptor.contains("params") ? descriptor.at("params") : nlohmann::json::object();

    auto need = [&](const char* key) -> const nlohmann::json& {
        if (!params.contains(key))
            throw InvalidArgument("function class \"" + cls + "\" needs parameter \"" +
                                  std::string(key) + "\"");
        return params.at(key);
    };
    auto vector_param = [&](const char* key, double lo, double hi) -> Eigen::VectorXd {
        if (params.contains(key)) return vector_from_json(params.at(key), dim, key);
        if (gen) return random_vector(*gen, dim, lo, hi);
        throw InvalidArgument("function class \"" + cls + "\" needs parameter \"" +
                              std::string(key) + "\"");
    };
    auto base_param = [&](const char* fallback_class) -> FunctionSpec {
        if (params.contains("base")) return function_from_json(params.at("base"), dim, gen);
        if (gen)
            return function_from_json({{"class", fallback_class}}, dim, gen);
        throw InvalidArgument("function class \"" + cls + "\" needs parameter \"base\"");
    };

    if (cls == "quadratic_form") {
        if (params.contains("Q")) return make_quadratic_form(matrix_from_json(need("Q"), dim, "Q"));
        if (gen) return make_quadratic_form(random_psd(*gen, dim));
        throw InvalidArgument("quadratic_form needs parameter \"Q\"");
    }
    if (cls == "max_affine") {
        std::vector<std::pair<Eigen::VectorXd, double>> pieces;
        if (params.contains("pieces")) {
            for (const auto& piece : need("pieces"))
                pieces.emplace_back(vector_from_json(piece.at("w"), dim, "w"),
                                    piece.at("b").get<double>());
        } else if (gen) {
            for (int k = 0; k < 3; ++k)
                pieces.emplace_back(random_vector(*gen, dim, -1.0, 1.0), gen->uniform(-1.0, 1.0));
        } else {
            throw InvalidArgument("max_affine needs parameter \"pieces\"");
        }
        return make_max_affine(std::move(pieces));
    }
    if (cls == "exp_linear") return make_exp_linear(vector_param("w", -0.5, 0.5));
    if (cls == "norm_power") return make_norm_power(dim, need("p").get<double>());
    if (cls == "strongly_convex") {
        const double c = params.contains("c") ? params.at("c").get<double>() : 1.0;
        return make_strongly_convex(base_param("quadratic_form"), c);
    }
    if (cls == "wright")
        return make_wright(vector_param("w", -2.0, 2.0), base_param("max_affine"));
    if (cls == "strongly_wright") {
        const double c = params.contains("c") ? params.at("c").get<double>() : 0.5;
        return make_strongly_wright(vector_param("w", -2.0, 2.0), base_param("quadratic_form"),
                                    c);
    }
    if (cls == "concave_control") return make_concave_control(base_param("quadratic_form"));
    throw InvalidArgument("unknown function class \"" + cls + "\"");
}

} // namespace hh
