#include "hh/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hh/rng.hpp"

namespace hh {

namespace {

constexpr std::int64_t kChunkSize = 8192;

// exact in uint64 up to 20!
std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

void check_multi_index(const MultiIndex& alpha, int expected_size) {
    if (alpha.size() != expected_size)
        throw DimensionMismatch("multi-index has " + std::to_string(alpha.size()) +
                                " entries, expected " + std::to_string(expected_size));
    for (int a : alpha.alpha)
        if (a < 0) throw InvalidArgument("multi-index entries must be non-negative");
}

// Streams the uniform sample points of sample_uniform(S, count, seed) into
// the callback without materializing them.
template <typename Fn>
void for_each_uniform_sample(const Simplex& S, std::int64_t count, std::uint64_t seed, Fn&& fn) {
    const int m = S.dim() + 1;
    Eigen::VectorXd weights(m);
    Point x(S.dim());
    std::int64_t produced = 0;
    for (std::uint64_t chunk = 0; produced < count; ++chunk) {
        Rng rng(derive_seed(seed, chunk));
        const std::int64_t chunk_count = std::min<std::int64_t>(kChunkSize, count - produced);
        for (std::int64_t i = 0; i < chunk_count; ++i) {
            double sum = 0.0;
            for (int j = 0; j < m; ++j) {
                weights(j) = rng.exponential();
                sum += weights(j);
            }
            weights /= sum;
            x.noalias() = S.vertex_matrix() * weights;
            fn(static_cast<const Point&>(x));
        }
        produced += chunk_count;
    }
}

} // namespace

double moment_unit_simplex(int n, const MultiIndex& alpha) {
    if (n < 1) throw DimensionMismatch("dimension must be >= 1");
    check_multi_index(alpha, n);
    const int total = n + alpha.total_degree();
    if (total <= 20) {
        std::uint64_t num = 1;
        for (int a : alpha.alpha) num *= factorial_u64(a);
        return static_cast<double>(num) / static_cast<double>(factorial_u64(total));
    }
    double log_num = 0.0;
    for (int a : alpha.alpha) log_num += log_factorial(a);
    return std::exp(log_num - log_factorial(total));
}

double barycentric_moment_factor(int n, const std::vector<int>& alpha) {
    int degree = 0;
    for (int a : alpha) {
        if (a < 0) throw InvalidArgument("multi-index entries must be non-negative");
        degree += a;
    }
    const int total = n + degree;
    if (total <= 20) {
        std::uint64_t num = factorial_u64(n);
        for (int a : alpha) num *= factorial_u64(a);
        return static_cast<double>(num) / static_cast<double>(factorial_u64(total));
    }
    double log_num = log_factorial(n);
    for (int a : alpha) log_num += log_factorial(a);
    return std::exp(log_num - log_factorial(total));
}

Polynomial cartesian_to_barycentric(const Polynomial& p, const Simplex& S) {
    if (p.basis() != Basis::Cartesian)
        throw InvalidArgument("polynomial is already barycentric");
    const int n = S.dim();
    if (p.nvars() != n)
        throw DimensionMismatch("polynomial variable count does not match simplex dimension");
    const int m = n + 1;

    // linear barycentric form of each Cartesian coordinate: x_j = sum_i v_{i,j} t_i
    std::vector<Polynomial> coord(static_cast<std::size_t>(n), Polynomial(Basis::Barycentric, m));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
            std::vector<int> e(static_cast<std::size_t>(m), 0);
            e[static_cast<std::size_t>(i)] = 1;
            coord[static_cast<std::size_t>(j)].add_term(e, S.vertex_matrix()(j, i));
        }
    }

    Polynomial out(Basis::Barycentric, m);
    for (const auto& [alpha, coeff] : p.terms()) {
        Polynomial term = Polynomial::constant(Basis::Barycentric, m, coeff);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < alpha[static_cast<std::size_t>(j)]; ++k)
                term = term * coord[static_cast<std::size_t>(j)];
        out += term;
    }
    return out;
}

IntegralEstimate integrate_polynomial(const Simplex& S, const Polynomial& p) {
    const Polynomial& q =
        (p.basis() == Basis::Barycentric) ? p : cartesian_to_barycentric(p, S);
    // only reachable via a hand-built barycentric polynomial of wrong arity
    if (q.nvars() != S.dim() + 1)
        throw DimensionMismatch("barycentric polynomial has wrong variable count");
    double total = 0.0;
    for (const auto& [alpha, coeff] : q.terms())
        total += coeff * barycentric_moment_factor(S.dim(), alpha);
    return IntegralEstimate::exact(total * S.volume());
}

Point uniform_point(const Simplex& S, Rng& rng) {
    const int m = S.dim() + 1;
    Eigen::VectorXd weights(m);
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
        weights(j) = rng.exponential();
        sum += weights(j);
    }
    weights /= sum;
    return S.vertex_matrix() * weights;
}

std::vector<Point> sample_uniform(const Simplex& S, std::int64_t count, std::uint64_t seed) {
    if (count < 1) throw InvalidArgument("sample count must be >= 1");
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(count));
    for_each_uniform_sample(S, count, seed, [&](const Point& x) { points.push_back(x); });
    return points;
}

IntegralEstimate integrate_mc(const Simplex& S, const std::function<double(const Point&)>& f,
                              std::int64_t count, std::uint64_t seed) {
    if (count < 2) throw InvalidArgument("integrate_mc needs at least 2 samples");

    bool have_shift = false;
    double shift = 0.0;   // variance computed around the first sample value
    double sum_d = 0.0;
    double sum_d2 = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    for_each_uniform_sample(S, count, seed, [&](const Point& x) {
        const double y = f(x);
        if (!std::isfinite(y)) throw NonFiniteSample("integrand evaluated to a non-finite value");
        if (!have_shift) {
            shift = y;
            have_shift = true;
        }
        const double d = y - shift;
        sum_d += d;
        sum_d2 += d * d;
        lo = std::min(lo, y);
        hi = std::max(hi, y);
    });

    const double nd = static_cast<double>(count);
    if (lo == hi) {
        // constant integrand: exact mean, zero spread
        return IntegralEstimate::monte_carlo(lo * S.volume(), 0.0, count);
    }
    const double mean = shift + sum_d / nd;
    const double var = std::max(0.0, (sum_d2 - sum_d * sum_d / nd) / (nd - 1.0));
    const double se = std::sqrt(var / nd);
    return IntegralEstimate::monte_carlo(mean * S.volume(), se * S.volume(), count);
}

double mean_norm_sq(const Simplex& S) {
    const int n = S.dim();
    const int m = n + 1;
    Polynomial norm_sq(Basis::Barycentric, m);
    for (int j = 0; j < n; ++j) {
        Polynomial lin(Basis::Barycentric, m);
        for (int i = 0; i < m; ++i) {
            std::vector<int> e(static_cast<std::size_t>(m), 0);
            e[static_cast<std::size_t>(i)] = 1;
            lin.add_term(e, S.vertex_matrix()(j, i));
        }
        norm_sq += lin * lin;
    }
    return integrate_polynomial(S, norm_sq).value / S.volume();
}

} // namespace hh
