#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "hh/errors.hpp"

namespace hh {

/// Monomial exponents, one entry per variable.
struct MultiIndex {
    std::vector<int> alpha;

    int total_degree() const {
        int d = 0;
        for (int a : alpha) d += a;
        return d;
    }
    int size() const { return static_cast<int>(alpha.size()); }
};

/// Which coordinate system a polynomial's variables live in: the n Cartesian
/// coordinates of R^n, or the n+1 barycentric coordinates of a simplex.
enum class Basis { Cartesian, Barycentric };

/// Sparse multivariate polynomial, sum of coeff * prod(x_i^alpha_i).
class Polynomial {
public:
    Polynomial(Basis basis, int nvars);

    static Polynomial constant(Basis basis, int nvars, double c);
    static Polynomial variable(Basis basis, int nvars, int i);

    Basis basis() const { return basis_; }
    int nvars() const { return nvars_; }
    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, double>& terms() const { return terms_; }

    /// Adds coeff * x^alpha, merging with an existing term if present.
    void add_term(const std::vector<int>& alpha, double coeff);

    double operator()(const Eigen::VectorXd& vars) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(double factor) const;
    Polynomial pow(int exponent) const;

    /// Variable substitution x_j -> x_{perm[j]}: each monomial's exponent
    /// vector alpha maps to beta with beta_j = alpha_{perm[j]}.
    Polynomial permute_vars(const std::vector<int>& perm) const;

private:
    Basis basis_;
    int nvars_;
    std::map<std::vector<int>, double> terms_;
};

} // namespace hh
