#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hh/geometry.hpp"
#include "hh/polynomial.hpp"
#include "hh/rng.hpp"

namespace hh {

enum class EstimateKind { Exact, MonteCarlo };

/// An integral value together with its error model. Exact estimates carry no
/// error; Monte Carlo estimates carry the standard error of the mean.
struct IntegralEstimate {
    double value = 0.0;
    EstimateKind kind = EstimateKind::Exact;
    double std_error = 0.0;
    std::int64_t n_samples = 0;

    static IntegralEstimate exact(double v) { return {v, EstimateKind::Exact, 0.0, 0}; }
    static IntegralEstimate monte_carlo(double v, double se, std::int64_t n) {
        return {v, EstimateKind::MonteCarlo, se, n};
    }

    IntegralEstimate scaled(double factor) const {
        IntegralEstimate out = *this;
        out.value *= factor;
        out.std_error *= std::abs(factor);
        return out;
    }
};

/// Exact monomial moment over the unit simplex (Dirichlet integral):
/// integral over S1 of x^alpha = prod(alpha_i!) / (n + |alpha|)!.
/// Computed with integer factorials while exact in 64 bits, in log space
/// beyond (guards overflow for n + |alpha| > 20).
double moment_unit_simplex(int n, const MultiIndex& alpha);

/// The factor n! * prod(alpha_i!) / (n + |alpha|)! such that the integral of
/// a barycentric monomial t^alpha over any simplex S equals |S| times it.
double barycentric_moment_factor(int n, const std::vector<int>& alpha);

/// Rewrites a Cartesian-basis polynomial as a polynomial in the barycentric
/// coordinates of S by substituting x_j = sum_i t_i v_{i,j}.
Polynomial cartesian_to_barycentric(const Polynomial& p, const Simplex& S);

/// Exact integral of a polynomial over S via barycentric monomial moments.
/// Accepts either basis; Cartesian input is converted first.
IntegralEstimate integrate_polynomial(const Simplex& S, const Polynomial& p);

/// i.i.d. uniform points on S: flat Dirichlet weights from normalized
/// exponential spacings, mapped through the vertices. Deterministic per seed
/// and chunk-stable: the first k points of a longer run equal a shorter run.
std::vector<Point> sample_uniform(const Simplex& S, std::int64_t count, std::uint64_t seed);

/// One uniform draw on S, consuming n+1 exponentials from rng.
Point uniform_point(const Simplex& S, Rng& rng);

/// Monte Carlo integral of f over S using the same sample stream as
/// sample_uniform: value = |S| * mean, std_error = |S| * sd / sqrt(count).
/// Throws NonFiniteSample if any evaluation is non-finite.
IntegralEstimate integrate_mc(const Simplex& S, const std::function<double(const Point&)>& f,
                              std::int64_t count, std::uint64_t seed);

/// Exact (1/|S|) * integral of ||x||^2 over S, evaluated by expanding the
/// squared norm into barycentric monomials and integrating exactly.
double mean_norm_sq(const Simplex& S);

} // namespace hh
