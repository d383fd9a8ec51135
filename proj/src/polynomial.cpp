#include "hh/polynomial.hpp"

#include <cmath>
#include <string>

namespace hh {

Polynomial::Polynomial(Basis basis, int nvars) : basis_(basis), nvars_(nvars) {
    if (nvars < 1) throw InvalidArgument("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(Basis basis, int nvars, double c) {
    Polynomial p(basis, nvars);
    p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

Polynomial Polynomial::variable(Basis basis, int nvars, int i) {
    if (i < 0 || i >= nvars) throw InvalidArgument("variable index out of range");
    Polynomial p(basis, nvars);
    std::vector<int> alpha(static_cast<std::size_t>(nvars), 0);
    alpha[static_cast<std::size_t>(i)] = 1;
    p.add_term(alpha, 1.0);
    return p;
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [alpha, coeff] : terms_) {
        int t = 0;
        for (int a : alpha) t += a;
        d = std::max(d, t);
    }
    return d;
}

void Polynomial::add_term(const std::vector<int>& alpha, double coeff) {
    if (static_cast<int>(alpha.size()) != nvars_)
        throw DimensionMismatch("exponent vector has wrong length");
    for (int a : alpha)
        if (a < 0) throw InvalidArgument("negative exponent");
    if (coeff == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(alpha, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0.0) terms_.erase(it);
    }
}

double Polynomial::operator()(const Eigen::VectorXd& vars) const {
    if (static_cast<int>(vars.size()) != nvars_)
        throw DimensionMismatch("evaluation point has wrong length");
    double total = 0.0;
    for (const auto& [alpha, coeff] : terms_) {
        double m = coeff;
        for (int i = 0; i < nvars_; ++i) {
            const int a = alpha[static_cast<std::size_t>(i)];
            for (int k = 0; k < a; ++k) m *= vars(i);
        }
        total += m;
    }
    return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.basis_ != basis_ || other.nvars_ != nvars_)
        throw DimensionMismatch("polynomial bases/variable counts differ");
    for (const auto& [alpha, coeff] : other.terms_) add_term(alpha, coeff);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    out += other;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (other.basis_ != basis_ || other.nvars_ != nvars_)
        throw DimensionMismatch("polynomial bases/variable counts differ");
    Polynomial out(basis_, nvars_);
    std::vector<int> merged(static_cast<std::size_t>(nvars_));
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : other.terms_) {
            for (int i = 0; i < nvars_; ++i)
                merged[static_cast<std::size_t>(i)] =
                    a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
            out.add_term(merged, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(double factor) const {
    Polynomial out(basis_, nvars_);
    for (const auto& [alpha, coeff] : terms_) out.add_term(alpha, coeff * factor);
    return out;
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) throw InvalidArgument("negative polynomial power");
    Polynomial out = Polynomial::constant(basis_, nvars_, 1.0);
    for (int k = 0; k < exponent; ++k) out = out * *this;
    return out;
}

Polynomial Polynomial::permute_vars(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars_)
        throw DimensionMismatch("permutation has wrong length");
    Polynomial out(basis_, nvars_);
    std::vector<int> beta(static_cast<std::size_t>(nvars_));
    for (const auto& [alpha, coeff] : terms_) {
        for (int j = 0; j < nvars_; ++j)
            beta[static_cast<std::size_t>(j)] = alpha[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
        out.add_term(beta, coeff);
    }
    return out;
}

} // namespace hh
