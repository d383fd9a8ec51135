#include "hh/symmetrization.hpp"

#include <cmath>
#include <limits>

#include "hh/quadrature.hpp"
#include "hh/rng.hpp"

namespace hh {

SymmetrizedFunction::SymmetrizedFunction(FunctionSpec base, Simplex simplex)
    : base_(std::move(base)), simplex_(std::move(simplex)) {
    if (base_.dim != simplex_.dim())
        throw DimensionMismatch("function/simplex dimension mismatch");
    if (base_.polynomial_form) {
        const int m = simplex_.dim() + 1;
        const Polynomial q = cartesian_to_barycentric(*base_.polynomial_form, simplex_);
        // q(sigma_k(x)) permutes exponents: beta_j = alpha_{(j - k) mod m}
        Polynomial sym(Basis::Barycentric, m);
        std::vector<int> perm(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
            for (int j = 0; j < m; ++j)
                perm[static_cast<std::size_t>(j)] = ((j - k) % m + m) % m;
            sym += q.permute_vars(perm);
        }
        poly_ = std::move(sym);
    }
}

double SymmetrizedFunction::operator()(const Point& x) const {
    const int m = simplex_.dim() + 1;
    const BarycentricCoords bc = simplex_.to_barycentric(x);
    Eigen::VectorXd shifted(m);
    Point y(simplex_.dim());
    double total = 0.0;
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) shifted(i) = bc.t((i + k) % m);
        y.noalias() = simplex_.vertex_matrix() * shifted;
        total += base_.evaluator(y);
    }
    return total;
}

SymmetrizedFunction symmetrize(const FunctionSpec& f, const Simplex& S) {
    return SymmetrizedFunction(f, S);
}

std::pair<double, double> vertex_sum_identity(const SymmetrizedFunction& F) {
    const Simplex& S = F.simplex();
    double lhs = 0.0;
    double base_sum = 0.0;
    for (int i = 0; i <= S.dim(); ++i) {
        lhs += F(S.vertex(i));
        base_sum += F.base().evaluator(S.vertex(i));
    }
    return {lhs, static_cast<double>(S.dim() + 1) * base_sum};
}

CyclicSumStats additive_cyclic_sum_stats(const Eigen::VectorXd& w, const Simplex& S,
                                         const std::vector<Point>& probes,
                                         const std::vector<int>& shifts) {
    if (static_cast<int>(w.size()) != S.dim())
        throw DimensionMismatch("weight dimension does not match simplex");
    if (probes.empty()) throw InvalidArgument("need at least one probe point");

    CyclicSumStats stats{};
    stats.reference = w.dot(S.vertex_matrix().rowwise().sum());
    stats.max_abs_deviation = 0.0;
    stats.worst_probe = 0;
    for (std::size_t p = 0; p < probes.size(); ++p) {
        double total = 0.0;
        for (int k : shifts) total += w.dot(S.apply_cyclic(CyclicPermutation{k}, probes[p]));
        const double dev = std::abs(total - stats.reference);
        if (dev > stats.max_abs_deviation) {
            stats.max_abs_deviation = dev;
            stats.worst_probe = p;
        }
    }
    return stats;
}

double additive_symmetrization_constant(const Eigen::VectorXd& w, const Simplex& S,
                                        const std::vector<Point>& probes, double tol) {
    std::vector<int> shifts(static_cast<std::size_t>(S.dim() + 1));
    for (int k = 0; k <= S.dim(); ++k) shifts[static_cast<std::size_t>(k)] = k;
    const CyclicSumStats stats = additive_cyclic_sum_stats(w, S, probes, shifts);
    if (stats.max_abs_deviation > tol * (1.0 + std::abs(stats.reference)))
        throw ConstancyViolation("symmetrized linear map is not constant: probe " +
                                 std::to_string(stats.worst_probe) + " deviates by " +
                                 std::to_string(stats.max_abs_deviation));
    return stats.reference;
}

double strong_convexity_modulus_check(const SymmetrizedFunction& F, double base_modulus,
                                      int trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidArgument("modulus check needs trials >= 1");
    const Simplex& S = F.simplex();
    const double modulus = static_cast<double>(S.dim() + 1) * base_modulus;

    Rng rng(derive_seed(seed, 0x7363u));
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < trials; ++k) {
        const Point x = uniform_point(S, rng);
        const Point y = uniform_point(S, rng);
        const double t = rng.uniform01();
        const double lhs = F(t * x + (1.0 - t) * y);
        const double rhs = t * F(x) + (1.0 - t) * F(y) -
                           modulus * t * (1.0 - t) * (x - y).squaredNorm();
        worst = std::max(worst, lhs - rhs);
    }
    return worst;
}

} // namespace hh
