#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace subheat {

// Multivariate polynomial in up to n variables, stored as a monomial list.
// Parsed from expressions like "1", "-0.5*y", "x^2*y - 3". Variables are
// x1..xn, with x,y,z,t accepted as aliases for x1..x4.
class Polynomial {
public:
    struct Monomial {
        double coef = 0.0;
        std::vector<int> exps; // one exponent per variable
    };

    static Polynomial parse(const std::string& expr, int nvars);

    double eval(std::span<const double> x) const;
    Polynomial derivative(int var) const;
    int nvars() const { return nvars_; }
    const std::vector<Monomial>& monomials() const { return terms_; }

private:
    int nvars_ = 0;
    std::vector<Monomial> terms_;
};

} // namespace subheat
