#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hh/functions.hpp"
#include "hh/geometry.hpp"
#include "hh/quadrature.hpp"
#include "hh/symmetrization.hpp"

namespace hh {

enum class BoundFamily { Classical, Wright, StronglyConvex, StronglyWright, Operator };

enum class BoundStatus { Holds, Violated, Inconclusive };

/// How the middle term is integrated when no exact polynomial form exists.
struct IntegratorConfig {
    std::int64_t mc_samples = 100000;
    std::uint64_t seed = 1;
};

// Guard policy: exact middles use an absolute band of kExactGuardRel times
// (1 + |middle|); Monte Carlo middles use kMcGuardSigmas standard errors. A
// Monte Carlo margin inside the band is Inconclusive, never a silent pass.
inline constexpr double kExactGuardRel = 1e-9;
inline constexpr double kMcGuardSigmas = 4.0;

/// One three-term inequality chain: lower <= middle <= upper, with signed
/// margins and a verdict under the guard policy. The strong families also
/// retain the uncorrected classical bounds so the tightening is auditable.
struct BoundReport {
    BoundFamily family = BoundFamily::Classical;
    double lower = 0.0;
    IntegralEstimate middle; // value is the chain's middle term
    double upper = 0.0;
    double margin_lower = 0.0; // middle - lower
    double margin_upper = 0.0; // upper - middle
    BoundStatus status = BoundStatus::Holds;
    double guard = 0.0;
    std::optional<double> classical_lower;
    std::optional<double> classical_upper;
};

/// f(barycenter) <= mean of f over S <= average of f over the vertices.
/// Middle is exact when f carries a polynomial form, Monte Carlo otherwise.
BoundReport classical_hh(const FunctionSpec& f, const Simplex& S,
                         const IntegratorConfig& cfg = {});

/// (n+1) f(barycenter) <= mean of the symmetrization F <= sum of f over the
/// vertices. For n = 1 this is the reflected-integrand interval inequality.
BoundReport wright_hh(const FunctionSpec& f, const Simplex& S, const IntegratorConfig& cfg = {});

/// Classical chain sharpened by the exact second-moment corrections
///   lower += c * (mean||x||^2 - ||barycenter||^2)
///   upper += c * (mean||x||^2 - average of ||v_i||^2),
/// where c = f.modulus. Throws WrongClass when the tag has no modulus.
BoundReport strongly_convex_hh(const FunctionSpec& f, const Simplex& S,
                               const IntegratorConfig& cfg = {});

/// Same corrected bounds around the middle term
/// (1/((n+1)|S|)) * integral of the symmetrization F.
BoundReport strongly_wright_hh(const FunctionSpec& f, const Simplex& S,
                               const IntegratorConfig& cfg = {});

/// A finitely supported positive rule T[g] = sum w_j g(x_j) with positive
/// weights summing to 1 and T matching the integral mean of every coordinate
/// projection. Construction validates both invariants.
class PositiveLinearFunctional {
public:
    PositiveLinearFunctional(const Simplex& S, std::vector<Point> nodes,
                             std::vector<double> weights);

    double apply(const std::function<double(const Point&)>& g) const;
    const std::vector<Point>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<Point> nodes_;
    std::vector<double> weights_;
};

/// Nodes v_i, weights 1/(n+1).
PositiveLinearFunctional make_vertex_average_functional(const Simplex& S);

/// Single node at the barycenter, weight 1.
PositiveLinearFunctional make_barycenter_functional(const Simplex& S);

/// Arbitrary user-supplied positive rule, moment-checked at construction.
PositiveLinearFunctional make_quadrature_functional(const Simplex& S, std::vector<Point> nodes,
                                                    std::vector<double> weights);

/// Strictly interior rule: nodes (v_i + barycenter)/2, weights 1/(n+1).
PositiveLinearFunctional make_interior_rule_functional(const Simplex& S);

/// F(barycenter) <= T[F] <= average of F over the vertices, for the
/// symmetrization F of f. The middle is exact (a finite positive rule).
BoundReport operator_hh(const FunctionSpec& f, const Simplex& S,
                        const PositiveLinearFunctional& T);

/// The operator chain with T = the integral mean itself, which recovers the
/// Wright chain term by term.
BoundReport operator_hh_integral_mean(const FunctionSpec& f, const Simplex& S,
                                      const IntegratorConfig& cfg = {});

} // namespace hh
