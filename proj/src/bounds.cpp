#include "hh/bounds.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace hh {

namespace {

// Mean of f over S: exact when a polynomial form is available, MC otherwise.
IntegralEstimate integral_mean(const FunctionSpec& f, const Simplex& S,
                               const IntegratorConfig& cfg) {
    if (f.polynomial_form)
        return integrate_polynomial(S, *f.polynomial_form).scaled(1.0 / S.volume());
    return integrate_mc(S, f.evaluator, cfg.mc_samples, cfg.seed).scaled(1.0 / S.volume());
}

IntegralEstimate integral_mean(const SymmetrizedFunction& F, const IntegratorConfig& cfg) {
    const Simplex& S = F.simplex();
    if (F.polynomial_form())
        return integrate_polynomial(S, *F.polynomial_form()).scaled(1.0 / S.volume());
    auto eval = [&F](const Point& x) { return F(x); };
    return integrate_mc(S, eval, cfg.mc_samples, cfg.seed).scaled(1.0 / S.volume());
}

double vertex_average(const FunctionSpec& f, const Simplex& S) {
    double sum = 0.0;
    for (int i = 0; i <= S.dim(); ++i) sum += f.evaluator(S.vertex(i));
    return sum / static_cast<double>(S.dim() + 1);
}

double vertex_sum(const FunctionSpec& f, const Simplex& S) {
    double sum = 0.0;
    for (int i = 0; i <= S.dim(); ++i) sum += f.evaluator(S.vertex(i));
    return sum;
}

void finalize(BoundReport& r) {
    r.margin_lower = r.middle.value - r.lower;
    r.margin_upper = r.upper - r.middle.value;
    const double worst = std::min(r.margin_lower, r.margin_upper);
    const double noise = kExactGuardRel * (1.0 + std::abs(r.middle.value));
    if (r.middle.kind == EstimateKind::Exact) {
        r.guard = noise;
        r.status = (worst >= -r.guard) ? BoundStatus::Holds : BoundStatus::Violated;
    } else {
        // the sigma band covers sampling error; the noise floor covers the
        // arithmetic error of the three terms (an equality chain estimated
        // by MC would otherwise flag float rounding as a violation)
        r.guard = kMcGuardSigmas * r.middle.std_error + noise;
        if (worst < -r.guard)
            r.status = BoundStatus::Violated;
        else if (worst <= r.guard)
            r.status = BoundStatus::Inconclusive;
        else
            r.status = BoundStatus::Holds;
    }
}

void require_dim(const FunctionSpec& f, const Simplex& S) {
    if (f.dim != S.dim()) throw DimensionMismatch("function/simplex dimension mismatch");
}

} // namespace

BoundReport classical_hh(const FunctionSpec& f, const Simplex& S, const IntegratorConfig& cfg) {
    require_dim(f, S);
    BoundReport r;
    r.family = BoundFamily::Classical;
    r.lower = f.evaluator(S.barycenter());
    r.middle = integral_mean(f, S, cfg);
    r.upper = vertex_average(f, S);
    finalize(r);
    return r;
}

BoundReport wright_hh(const FunctionSpec& f, const Simplex& S, const IntegratorConfig& cfg) {
    require_dim(f, S);
    const SymmetrizedFunction F = symmetrize(f, S);
    BoundReport r;
    r.family = BoundFamily::Wright;
    r.lower = static_cast<double>(S.dim() + 1) * f.evaluator(S.barycenter());
    r.middle = integral_mean(F, cfg);
    r.upper = vertex_sum(f, S);
    finalize(r);
    return r;
}

BoundReport strongly_convex_hh(const FunctionSpec& f, const Simplex& S,
                               const IntegratorConfig& cfg) {
    require_dim(f, S);
    if (!f.has_modulus())
        throw WrongClass("strongly_convex_hh needs a class tag with a modulus");
    const double c = f.modulus;
    const double m2 = mean_norm_sq(S);
    const double bary_norm_sq = S.barycenter().squaredNorm();
    double vertex_norm_avg = 0.0;
    for (int i = 0; i <= S.dim(); ++i) vertex_norm_avg += S.vertex(i).squaredNorm();
    vertex_norm_avg /= static_cast<double>(S.dim() + 1);

    BoundReport r;
    r.family = BoundFamily::StronglyConvex;
    r.classical_lower = f.evaluator(S.barycenter());
    r.classical_upper = vertex_average(f, S);
    r.lower = *r.classical_lower + c * (m2 - bary_norm_sq);
    r.upper = *r.classical_upper + c * (m2 - vertex_norm_avg);
    r.middle = integral_mean(f, S, cfg);
    finalize(r);
    return r;
}

BoundReport strongly_wright_hh(const FunctionSpec& f, const Simplex& S,
                               const IntegratorConfig& cfg) {
    require_dim(f, S);
    if (!f.has_modulus())
        throw WrongClass("strongly_wright_hh needs a class tag with a modulus");
    const double c = f.modulus;
    const double m2 = mean_norm_sq(S);
    const double bary_norm_sq = S.barycenter().squaredNorm();
    double vertex_norm_avg = 0.0;
    for (int i = 0; i <= S.dim(); ++i) vertex_norm_avg += S.vertex(i).squaredNorm();
    vertex_norm_avg /= static_cast<double>(S.dim() + 1);

    const SymmetrizedFunction F = symmetrize(f, S);
    BoundReport r;
    r.family = BoundFamily::StronglyWright;
    r.classical_lower = f.evaluator(S.barycenter());
    r.classical_upper = vertex_average(f, S);
    r.lower = *r.classical_lower + c * (m2 - bary_norm_sq);
    r.upper = *r.classical_upper + c * (m2 - vertex_norm_avg);
    // the chain's middle carries an extra 1/(n+1) relative to the Wright one
    r.middle = integral_mean(F, cfg).scaled(1.0 / static_cast<double>(S.dim() + 1));
    finalize(r);
    return r;
}

PositiveLinearFunctional::PositiveLinearFunctional(const Simplex& S, std::vector<Point> nodes,
                                                   std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
    if (nodes_.empty() || nodes_.size() != weights_.size())
        throw InvalidArgument("functional needs matching non-empty nodes and weights");
    for (const Point& x : nodes_)
        if (static_cast<int>(x.size()) != S.dim())
            throw DimensionMismatch("functional node dimension does not match simplex");

    double weight_sum = 0.0;
    for (double w : weights_) {
        if (!(w > 0.0)) throw InvalidArgument("functional weights must be strictly positive");
        weight_sum += w;
    }
    if (std::abs(weight_sum - 1.0) > 1e-10)
        throw MomentMismatch("functional weights sum to " + std::to_string(weight_sum) +
                             ", expected 1");

    // T must reproduce the integral mean of every coordinate projection
    for (int i = 0; i < S.dim(); ++i) {
        const Polynomial proj = Polynomial::variable(Basis::Cartesian, S.dim(), i);
        const double target = integrate_polynomial(S, proj).value / S.volume();
        double applied = 0.0;
        for (std::size_t j = 0; j < nodes_.size(); ++j) applied += weights_[j] * nodes_[j](i);
        if (std::abs(applied - target) > 1e-10 * (1.0 + std::abs(target)))
            throw MomentMismatch("functional misses the mean of coordinate " +
                                 std::to_string(i + 1));
    }
}

double PositiveLinearFunctional::apply(const std::function<double(const Point&)>& g) const {
    double total = 0.0;
    for (std::size_t j = 0; j < nodes_.size(); ++j) total += weights_[j] * g(nodes_[j]);
    return total;
}

PositiveLinearFunctional make_vertex_average_functional(const Simplex& S) {
    const double w = 1.0 / static_cast<double>(S.dim() + 1);
    return PositiveLinearFunctional(
        S, S.vertices(), std::vector<double>(static_cast<std::size_t>(S.dim() + 1), w));
}

PositiveLinearFunctional make_barycenter_functional(const Simplex& S) {
    return PositiveLinearFunctional(S, {S.barycenter()}, {1.0});
}

PositiveLinearFunctional make_quadrature_functional(const Simplex& S, std::vector<Point> nodes,
                                                    std::vector<double> weights) {
    return PositiveLinearFunctional(S, std::move(nodes), std::move(weights));
}

PositiveLinearFunctional make_interior_rule_functional(const Simplex& S) {
    std::vector<Point> nodes;
    nodes.reserve(static_cast<std::size_t>(S.dim() + 1));
    for (int i = 0; i <= S.dim(); ++i)
        nodes.push_back(0.5 * (S.vertex(i) + S.barycenter()));
    const double w = 1.0 / static_cast<double>(S.dim() + 1);
    return PositiveLinearFunctional(
        S, std::move(nodes), std::vector<double>(static_cast<std::size_t>(S.dim() + 1), w));
}

BoundReport operator_hh(const FunctionSpec& f, const Simplex& S,
                        const PositiveLinearFunctional& T) {
    require_dim(f, S);
    const SymmetrizedFunction F = symmetrize(f, S);
    BoundReport r;
    r.family = BoundFamily::Operator;
    r.lower = F.at_barycenter();
    r.middle = IntegralEstimate::exact(T.apply([&F](const Point& x) { return F(x); }));
    double upper = 0.0;
    for (int i = 0; i <= S.dim(); ++i) upper += F(S.vertex(i));
    r.upper = upper / static_cast<double>(S.dim() + 1);
    finalize(r);
    return r;
}

BoundReport operator_hh_integral_mean(const FunctionSpec& f, const Simplex& S,
                                      const IntegratorConfig& cfg) {
    require_dim(f, S);
    const SymmetrizedFunction F = symmetrize(f, S);
    BoundReport r;
    r.family = BoundFamily::Operator;
    r.lower = F.at_barycenter();
    r.middle = integral_mean(F, cfg);
    double upper = 0.0;
    for (int i = 0; i <= S.dim(); ++i) upper += F(S.vertex(i));
    r.upper = upper / static_cast<double>(S.dim() + 1);
    finalize(r);
    return r;
}

} // namespace hh
