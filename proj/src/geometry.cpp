#include "hh/geometry.hpp"

#include <cmath>
#include <utility>

#include "hh/rng.hpp"

namespace hh {

namespace {

// Relative degeneracy threshold: volume < kDegeneracyScale * (max pairwise
// vertex distance)^n rejects. Scale-aware, so rescaling a simplex does not
// change the verdict.
constexpr double kDegeneracyScale = 1e-8;
constexpr int kRandomSimplexRetries = 100;

double factorial_double(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

double max_pairwise_distance(const std::vector<Point>& vertices) {
    double best = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            best = std::max(best, (vertices[i] - vertices[j]).norm());
    return best;
}

} // namespace

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty())
        throw DimensionMismatch("simplex needs at least 2 vertices");
    n_ = static_cast<int>(vertices_.front().size());
    if (n_ < 1)
        throw DimensionMismatch("points must have dimension >= 1");
    if (static_cast<int>(vertices_.size()) != n_ + 1)
        throw DimensionMismatch("simplex in R^" + std::to_string(n_) + " needs exactly " +
                                std::to_string(n_ + 1) + " vertices, got " +
                                std::to_string(vertices_.size()));
    for (const Point& v : vertices_) {
        if (static_cast<int>(v.size()) != n_)
            throw DimensionMismatch("vertices have inconsistent dimensions");
        if (!v.allFinite())
            throw InvalidArgument("vertex has non-finite coordinates");
    }

    vertex_matrix_.resize(n_, n_ + 1);
    for (int i = 0; i <= n_; ++i) vertex_matrix_.col(i) = vertices_[static_cast<std::size_t>(i)];

    Eigen::MatrixXd edges(n_, n_);
    for (int i = 1; i <= n_; ++i)
        edges.col(i - 1) = vertices_[static_cast<std::size_t>(i)] - vertices_[0];
    volume_ = std::abs(edges.determinant()) / factorial_double(n_);

    const double scale = max_pairwise_distance(vertices_);
    if (scale == 0.0 || volume_ < kDegeneracyScale * std::pow(scale, n_))
        throw DegenerateSimplex("simplex volume " + std::to_string(volume_) +
                                " below degeneracy threshold");

    barycenter_ = vertex_matrix_.rowwise().sum() / static_cast<double>(n_ + 1);

    bary_system_.resize(n_ + 1, n_ + 1);
    bary_system_.topRows(n_) = vertex_matrix_;
    bary_system_.row(n_).setOnes();
    bary_lu_.compute(bary_system_);
}

BarycentricCoords Simplex::to_barycentric(const Point& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw DimensionMismatch("point dimension does not match simplex");
    Eigen::VectorXd rhs(n_ + 1);
    rhs.head(n_) = x;
    rhs(n_) = 1.0;

    Eigen::VectorXd t = bary_lu_.solve(rhs);
    // one iterative refinement pass keeps the residual near machine level
    // even for poorly conditioned simplices
    t += bary_lu_.solve(rhs - bary_system_ * t);

    if (!t.allFinite())
        throw SolveFailure("barycentric solve produced non-finite coordinates");
    return BarycentricCoords{std::move(t)};
}

Point Simplex::from_barycentric(const BarycentricCoords& bc) const {
    if (bc.order() != n_ + 1)
        throw DimensionMismatch("barycentric coordinates have wrong length");
    const double sum = bc.t.sum();
    if (std::abs(sum - 1.0) > 1e-8 * (1.0 + bc.t.cwiseAbs().sum()))
        throw WeightSumError("barycentric weights sum to " + std::to_string(sum));
    return vertex_matrix_ * bc.t;
}

Point Simplex::apply_cyclic(CyclicPermutation sigma, const Point& x) const {
    const int m = n_ + 1;
    const int k = ((sigma.shift % m) + m) % m;
    const BarycentricCoords bc = to_barycentric(x);
    Eigen::VectorXd shifted(m);
    for (int i = 0; i < m; ++i) shifted(i) = bc.t((i + k) % m);
    return vertex_matrix_ * shifted;
}

Simplex make_simplex(std::vector<Point> vertices) { return Simplex(std::move(vertices)); }

Simplex make_unit_simplex(int n) {
    if (n < 1) throw DimensionMismatch("unit simplex needs n >= 1");
    std::vector<Point> vertices;
    vertices.reserve(static_cast<std::size_t>(n) + 1);
    vertices.push_back(Point::Zero(n));
    for (int i = 0; i < n; ++i) vertices.push_back(Point::Unit(n, i));
    return Simplex(std::move(vertices));
}

Simplex random_simplex(int n, std::uint64_t seed) {
    if (n < 1) throw DimensionMismatch("random simplex needs n >= 1");
    Rng rng(derive_seed(seed, 0x51u));
    for (int attempt = 0; attempt < kRandomSimplexRetries; ++attempt) {
        std::vector<Point> vertices(static_cast<std::size_t>(n) + 1);
        for (auto& v : vertices) {
            v.resize(n);
            for (int j = 0; j < n; ++j) v(j) = rng.uniform(-1.0, 1.0);
        }
        try {
            return Simplex(std::move(vertices));
        } catch (const DegenerateSimplex&) {
            // degenerate draws have measure zero; retry
        }
    }
    throw GenerationFailure("random_simplex: no non-degenerate draw in " +
                            std::to_string(kRandomSimplexRetries) + " attempts");
}

} // namespace hh
