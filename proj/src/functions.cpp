#include "hh/functions.hpp"

#include <cmath>
#include <limits>

#include "hh/quadrature.hpp"
#include "hh/rng.hpp"

namespace hh {

namespace {

Polynomial squared_norm_polynomial(int dim) {
    Polynomial p(Basis::Cartesian, dim);
    for (int i = 0; i < dim; ++i) {
        std::vector<int> e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(i)] = 2;
        p.add_term(e, 1.0);
    }
    return p;
}

Polynomial linear_polynomial(const Eigen::VectorXd& w) {
    const int dim = static_cast<int>(w.size());
    Polynomial p(Basis::Cartesian, dim);
    for (int i = 0; i < dim; ++i) {
        std::vector<int> e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.add_term(e, w(i));
    }
    return p;
}

void require_convex_base(const FunctionSpec& base, const char* builder) {
    if (base.class_tag != ConvexClass::Convex && base.class_tag != ConvexClass::StronglyConvex)
        throw WrongClass(std::string(builder) + " requires a convex-class base");
}

} // namespace

FunctionSpec make_quadratic_form(const Eigen::MatrixXd& Q) {
    if (Q.rows() != Q.cols() || Q.rows() < 1)
        throw DimensionMismatch("quadratic form needs a square matrix");
    if (!Q.allFinite()) throw InvalidArgument("quadratic form has non-finite entries");
    const double scale = std::max(1.0, Q.cwiseAbs().maxCoeff());
    if ((Q - Q.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw NotPSD("quadratic form matrix is not symmetric");
    Eigen::LDLT<Eigen::MatrixXd> ldlt(Q);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
        throw NotPSD("quadratic form matrix is not positive semidefinite");

    const int dim = static_cast<int>(Q.rows());
    FunctionSpec f;
    f.class_tag = ConvexClass::Convex;
    f.dim = dim;
    f.evaluator = [Q](const Point& x) { return x.dot(Q * x); };
    Polynomial p(Basis::Cartesian, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (Q(i, j) == 0.0) continue;
            std::vector<int> e(static_cast<std::size_t>(dim), 0);
            e[static_cast<std::size_t>(i)] += 1;
            e[static_cast<std::size_t>(j)] += 1;
            p.add_term(e, Q(i, j));
        }
    }
    f.polynomial_form = std::move(p);
    f.name = "quadratic_form";
    return f;
}

FunctionSpec make_max_affine(std::vector<std::pair<Eigen::VectorXd, double>> pieces) {
    if (pieces.empty()) throw InvalidArgument("max_affine needs at least one piece");
    const int dim = static_cast<int>(pieces.front().first.size());
    if (dim < 1) throw DimensionMismatch("max_affine pieces need dimension >= 1");
    for (const auto& [w, b] : pieces) {
        if (static_cast<int>(w.size()) != dim)
            throw DimensionMismatch("max_affine pieces have inconsistent dimensions");
        if (!w.allFinite() || !std::isfinite(b))
            throw InvalidArgument("max_affine piece has non-finite entries");
    }

    FunctionSpec f;
    f.class_tag = ConvexClass::Convex;
    f.dim = dim;
    if (pieces.size() == 1) {
        Polynomial p = linear_polynomial(pieces.front().first);
        p.add_term(std::vector<int>(static_cast<std::size_t>(dim), 0), pieces.front().second);
        f.polynomial_form = std::move(p);
    }
    f.evaluator = [pieces = std::move(pieces)](const Point& x) {
        double best = pieces.front().first.dot(x) + pieces.front().second;
        for (std::size_t j = 1; j < pieces.size(); ++j)
            best = std::max(best, pieces[j].first.dot(x) + pieces[j].second);
        return best;
    };
    f.name = "max_affine";
    return f;
}

FunctionSpec make_exp_linear(const Eigen::VectorXd& w) {
    if (w.size() < 1) throw DimensionMismatch("exp_linear needs dimension >= 1");
    if (!w.allFinite()) throw InvalidArgument("exp_linear weight has non-finite entries");
    FunctionSpec f;
    f.class_tag = ConvexClass::Convex;
    f.dim = static_cast<int>(w.size());
    f.evaluator = [w](const Point& x) { return std::exp(w.dot(x)); };
    f.name = "exp_linear";
    return f;
}

FunctionSpec make_norm_power(int dim, double p) {
    if (dim < 1) throw DimensionMismatch("norm_power needs dimension >= 1");
    if (!(p >= 1.0)) throw InvalidArgument("norm_power needs p >= 1");
    FunctionSpec f;
    f.class_tag = ConvexClass::Convex;
    f.dim = dim;
    f.evaluator = [p](const Point& x) { return std::pow(x.squaredNorm(), p / 2.0); };
    const int half = static_cast<int>(p / 2.0);
    if (p == 2.0 * half && half >= 1 && half <= 4)
        f.polynomial_form = squared_norm_polynomial(dim).pow(half);
    f.name = "norm_power";
    return f;
}

FunctionSpec make_strongly_convex(FunctionSpec base, double c) {
    if (!(c > 0.0)) throw InvalidModulus("strong-convexity modulus must be > 0");
    require_convex_base(base, "make_strongly_convex");

    FunctionSpec f;
    f.class_tag = ConvexClass::StronglyConvex;
    f.dim = base.dim;
    f.modulus = base.modulus + c;
    if (base.polynomial_form)
        f.polynomial_form = *base.polynomial_form + squared_norm_polynomial(base.dim).scaled(c);
    f.name = "strongly_convex(" + base.name + ")";
    auto base_ptr = std::make_shared<const FunctionSpec>(std::move(base));
    f.convex_part = base_ptr;
    f.evaluator = [base_ptr, c](const Point& x) {
        return base_ptr->evaluator(x) + c * x.squaredNorm();
    };
    return f;
}

FunctionSpec make_wright(const Eigen::VectorXd& w, FunctionSpec base) {
    if (static_cast<int>(w.size()) != base.dim)
        throw DimensionMismatch("additive weight dimension does not match base");
    if (!w.allFinite()) throw InvalidArgument("additive weight has non-finite entries");
    require_convex_base(base, "make_wright");

    FunctionSpec f;
    f.class_tag = ConvexClass::WrightConvex;
    f.dim = base.dim;
    if (base.polynomial_form)
        f.polynomial_form = *base.polynomial_form + linear_polynomial(w);
    f.name = "wright(" + base.name + ")";
    f.additive_linear = w;
    auto base_ptr = std::make_shared<const FunctionSpec>(std::move(base));
    f.convex_part = base_ptr;
    f.evaluator = [w, base_ptr](const Point& x) { return w.dot(x) + base_ptr->evaluator(x); };
    return f;
}

FunctionSpec make_strongly_wright(const Eigen::VectorXd& w, FunctionSpec base, double c) {
    if (!(c > 0.0)) throw InvalidModulus("strong-convexity modulus must be > 0");
    if (static_cast<int>(w.size()) != base.dim)
        throw DimensionMismatch("additive weight dimension does not match base");
    if (!w.allFinite()) throw InvalidArgument("additive weight has non-finite entries");
    require_convex_base(base, "make_strongly_wright");

    FunctionSpec f;
    f.class_tag = ConvexClass::StronglyWrightConvex;
    f.dim = base.dim;
    f.modulus = base.modulus + c;
    if (base.polynomial_form)
        f.polynomial_form = *base.polynomial_form + linear_polynomial(w) +
                            squared_norm_polynomial(base.dim).scaled(c);
    f.name = "strongly_wright(" + base.name + ")";
    f.additive_linear = w;
    auto base_ptr = std::make_shared<const FunctionSpec>(std::move(base));
    f.convex_part = base_ptr;
    f.evaluator = [w, base_ptr, c](const Point& x) {
        return w.dot(x) + base_ptr->evaluator(x) + c * x.squaredNorm();
    };
    return f;
}

FunctionSpec make_concave_control(FunctionSpec base) {
    FunctionSpec f;
    f.class_tag = ConvexClass::NonConvexControl;
    f.dim = base.dim;
    if (base.polynomial_form) f.polynomial_form = base.polynomial_form->scaled(-1.0);
    f.name = "concave_control(" + base.name + ")";
    auto base_ptr = std::make_shared<const FunctionSpec>(std::move(base));
    f.evaluator = [base_ptr](const Point& x) { return -base_ptr->evaluator(x); };
    return f;
}

double midpoint_convexity_deficit(const FunctionSpec& f, const Simplex& S, int trials,
                                  std::uint64_t seed) {
    if (trials < 1) throw InvalidArgument("deficit check needs trials >= 1");
    if (f.dim != S.dim()) throw DimensionMismatch("function/simplex dimension mismatch");

    Rng rng(derive_seed(seed, 0x6d69u));
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < trials; ++k) {
        const Point x = uniform_point(S, rng);
        const Point y = uniform_point(S, rng);
        const double deficit = f(0.5 * (x + y)) - 0.5 * (f(x) + f(y));
        worst = std::max(worst, deficit);
    }
    return worst;
}

double strong_wright_deficit(const FunctionSpec& f, const Simplex& S, int trials,
                             std::uint64_t seed) {
    if (!f.has_modulus())
        throw WrongClass("strong_wright_deficit needs a class tag with a modulus");
    if (trials < 1) throw InvalidArgument("deficit check needs trials >= 1");
    if (f.dim != S.dim()) throw DimensionMismatch("function/simplex dimension mismatch");

    const double c = f.modulus;
    Rng rng(derive_seed(seed, 0x7377u));
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < trials; ++k) {
        const Point x = uniform_point(S, rng);
        const Point y = uniform_point(S, rng);
        const double t = rng.uniform01();
        const double lhs = f(t * x + (1.0 - t) * y) + f((1.0 - t) * x + t * y);
        const double rhs = f(x) + f(y) - 2.0 * c * t * (1.0 - t) * (x - y).squaredNorm();
        worst = std::max(worst, lhs - rhs);
    }
    return worst;
}

} // namespace hh
