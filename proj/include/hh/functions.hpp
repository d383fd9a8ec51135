#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hh/geometry.hpp"
#include "hh/polynomial.hpp"

namespace hh {

enum class ConvexClass {
    Convex,
    StronglyConvex,       // convex minus modulus*||x||^2 stays convex
    WrightConvex,         // linear + convex
    StronglyWrightConvex, // linear + convex + modulus*||x||^2
    NonConvexControl,
};

/// A self-describing test function: evaluable at points, tagged with its
/// convexity class, and carrying whatever structure the class implies
/// (modulus, linear-plus-convex decomposition, exact polynomial form).
///
/// Decomposition contract for the Wright and strong classes:
///   evaluator(x) = <additive_linear, x> + convex_part(x) + modulus*||x||^2
/// with absent pieces contributing nothing. The additive part is restricted
/// to linear maps; discontinuous additive functions have dense graphs and
/// admit no numerical representation.
struct FunctionSpec {
    ConvexClass class_tag = ConvexClass::Convex;
    int dim = 0;
    double modulus = 0.0; // c > 0 for the strong classes, else 0
    std::function<double(const Point&)> evaluator;
    std::optional<Polynomial> polynomial_form; // Cartesian basis, dim variables
    std::optional<Eigen::VectorXd> additive_linear;
    std::shared_ptr<const FunctionSpec> convex_part;
    std::string name;

    double operator()(const Point& x) const { return evaluator(x); }
    bool has_modulus() const {
        return class_tag == ConvexClass::StronglyConvex ||
               class_tag == ConvexClass::StronglyWrightConvex;
    }
    bool is_positive_class() const { return class_tag != ConvexClass::NonConvexControl; }
};

/// x^T Q x with Q symmetric PSD (validated by an LDLT factorization attempt).
FunctionSpec make_quadratic_form(const Eigen::MatrixXd& Q);

/// max_j (<w_j, x> + b_j). Polynomial form only in the single-piece case.
FunctionSpec make_max_affine(std::vector<std::pair<Eigen::VectorXd, double>> pieces);

/// exp(<w, x>).
FunctionSpec make_exp_linear(const Eigen::VectorXd& w);

/// ||x||^p for p >= 1; polynomial form when p is an even integer.
FunctionSpec make_norm_power(int dim, double p);

/// base(x) + c*||x||^2, tagged StronglyConvex. Moduli accumulate when the
/// base is itself strongly convex.
FunctionSpec make_strongly_convex(FunctionSpec base, double c);

/// <w, x> + base(x), tagged WrightConvex even when w = 0 (convex functions
/// are Wright-convex).
FunctionSpec make_wright(const Eigen::VectorXd& w, FunctionSpec base);

/// <w, x> + base(x) + c*||x||^2, tagged StronglyWrightConvex.
FunctionSpec make_strongly_wright(const Eigen::VectorXd& w, FunctionSpec base, double c);

/// -base(x), a negative control for violation-detection tests.
FunctionSpec make_concave_control(FunctionSpec base);

/// max over sampled pairs x, y in S of f((x+y)/2) - (f(x)+f(y))/2.
/// Non-positive (up to float noise) for Jensen-convex f; expected positive
/// for the negative controls on suitable domains.
double midpoint_convexity_deficit(const FunctionSpec& f, const Simplex& S, int trials,
                                  std::uint64_t seed);

/// max over sampled (x, y, t) of
///   f(tx+(1-t)y) + f((1-t)x+ty) - [f(x) + f(y) - 2ct(1-t)||x-y||^2],
/// the defining deficit of strong Wright convexity with modulus c = f.modulus.
/// Throws WrongClass if the tag carries no modulus.
double strong_wright_deficit(const FunctionSpec& f, const Simplex& S, int trials,
                             std::uint64_t seed);

} // namespace hh
