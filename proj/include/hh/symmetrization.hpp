#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hh/functions.hpp"
#include "hh/geometry.hpp"
#include "hh/polynomial.hpp"

namespace hh {

/// The symmetrization F(x) = sum over the n+1 cyclic shifts k of
/// f(apply_cyclic(S, k, x)). F is invariant under every cyclic map and, when
/// f is Wright-convex, convex on S. When f is strongly Wright-convex with
/// modulus c, F is strongly convex with modulus at least c; the modulus
/// reaches (n+1)c exactly when the cyclic maps act as Euclidean isometries
/// (always for n = 1, and for regular simplices centered at the origin).
class SymmetrizedFunction {
public:
    SymmetrizedFunction(FunctionSpec base, Simplex simplex);

    double operator()(const Point& x) const;

    const FunctionSpec& base() const { return base_; }
    const Simplex& simplex() const { return simplex_; }
    int order() const { return simplex_.dim() + 1; }

    /// F at the barycenter; equals (n+1) * f(barycenter).
    double at_barycenter() const { return (*this)(simplex_.barycenter()); }

    /// Barycentric polynomial of F w.r.t. the simplex, present whenever the
    /// base has a polynomial form (affine composition preserves degree).
    const std::optional<Polynomial>& polynomial_form() const { return poly_; }

private:
    FunctionSpec base_;
    Simplex simplex_;
    std::optional<Polynomial> poly_;
};

SymmetrizedFunction symmetrize(const FunctionSpec& f, const Simplex& S);

/// Both sides of the vertex-sum identity sum_i F(v_i) = (n+1) sum_i f(v_i),
/// returned as (lhs, rhs) so the identity is a first-class test point.
std::pair<double, double> vertex_sum_identity(const SymmetrizedFunction& F);

struct CyclicSumStats {
    double reference;         // <w, sum of vertices>
    double max_abs_deviation; // worst probe's |A(p) - reference|
    std::size_t worst_probe;
};

/// Evaluates A(p) = sum over the given shifts of <w, apply_cyclic(S, k, p)>
/// at every probe and compares against <w, sum v_i>. With the canonical
/// shifts {0..n} the deviation is float noise; a corrupted shift list breaks
/// constancy, which is what the detection tests exploit.
CyclicSumStats additive_cyclic_sum_stats(const Eigen::VectorXd& w, const Simplex& S,
                                         const std::vector<Point>& probes,
                                         const std::vector<int>& shifts);

/// The constant value <w, sum v_i> of the symmetrized linear map. Checks
/// every probe against it and throws ConstancyViolation if the spread
/// exceeds tol * (1 + |constant|).
double additive_symmetrization_constant(const Eigen::VectorXd& w, const Simplex& S,
                                        const std::vector<Point>& probes, double tol = 1e-10);

/// Deficit of strong convexity of F with modulus (n+1) * base_modulus:
/// max over sampled (x, y, t) in S of
///   F(tx+(1-t)y) - [tF(x) + (1-t)F(y) - (n+1)*base_modulus*t(1-t)||x-y||^2].
/// Non-positive only where the (n+1)c modulus actually holds (see the class
/// comment); on general simplices with n >= 2 the deficit is positive and
/// this function measures by how much.
double strong_convexity_modulus_check(const SymmetrizedFunction& F, double base_modulus,
                                      int trials, std::uint64_t seed);

} // namespace hh
