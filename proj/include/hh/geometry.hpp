#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hh/errors.hpp"

namespace hh {

using Point = Eigen::VectorXd;

/// Barycentric coordinates of a point with respect to a simplex: n+1 weights
/// summing to 1. Entries may be negative for points outside the simplex.
struct BarycentricCoords {
    Eigen::VectorXd t;

    int order() const { return static_cast<int>(t.size()); }
    double sum() const { return t.sum(); }
};

/// The cyclic permutation sigma(i) = (i + shift) mod (n+1). The n+1 shifts
/// form the cyclic group acting on a simplex's vertex indices; each acts on
/// R^n as the affine map sending sum t_i v_i to sum t_{sigma(i)} v_i.
struct CyclicPermutation {
    int shift = 0;
};

/// A non-degenerate simplex in R^n: n+1 affine-independent vertices with
/// cached volume, barycenter and barycentric solver.
///
/// Immutable after construction; all member operations are pure.
class Simplex {
public:
    /// Validates and caches. Throws DimensionMismatch if the vertex count or
    /// coordinate sizes are inconsistent, InvalidArgument on non-finite
    /// entries, DegenerateSimplex if the volume is below the scale-aware
    /// degeneracy threshold.
    explicit Simplex(std::vector<Point> vertices);

    int dim() const { return n_; }
    int vertex_count() const { return n_ + 1; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const Point& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
    double volume() const { return volume_; }
    const Point& barycenter() const { return barycenter_; }

    /// n x (n+1) matrix whose columns are the vertices.
    const Eigen::MatrixXd& vertex_matrix() const { return vertex_matrix_; }

    /// Solves [vertices; 1...1] t = [x; 1] with the cached partial-pivot LU
    /// plus one step of iterative refinement.
    BarycentricCoords to_barycentric(const Point& x) const;

    /// Returns sum t_i v_i. Throws WeightSumError if the weights do not sum
    /// to 1 within tolerance, DimensionMismatch on wrong length.
    Point from_barycentric(const BarycentricCoords& bc) const;

    /// The affine self-map induced by sigma, extended to all of R^n.
    /// apply_cyclic(k1) followed by apply_cyclic(k2) equals
    /// apply_cyclic((k1+k2) mod (n+1)).
    Point apply_cyclic(CyclicPermutation sigma, const Point& x) const;

private:
    int n_ = 0;
    std::vector<Point> vertices_;
    double volume_ = 0.0;
    Point barycenter_;
    Eigen::MatrixXd vertex_matrix_;           // n x (n+1)
    Eigen::MatrixXd bary_system_;             // (n+1) x (n+1): vertex rows + ones row
    Eigen::PartialPivLU<Eigen::MatrixXd> bary_lu_;
};

Simplex make_simplex(std::vector<Point> vertices);

/// Vertices 0, e_1, ..., e_n. Volume 1/n!.
Simplex make_unit_simplex(int n);

/// n+1 vertices drawn i.i.d. uniform on [-1,1]^n, redrawn until the
/// degeneracy check passes. Deterministic per seed. Throws GenerationFailure
/// after 100 rejected draws.
Simplex random_simplex(int n, std::uint64_t seed);

} // namespace hh
