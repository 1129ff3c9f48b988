#pragma once

#include <string>
#include <vector>

#include "treespec/bigint.hpp"

namespace treespec {

// Integer polynomial, coefficients stored by ascending power. The zero
// polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(BigInt c);
    static IntPolynomial monomial(int degree, BigInt c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero poly
    bool monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    // Coefficient of x^k (0 when k exceeds the degree).
    const BigInt& coeff(int k) const;

    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt evaluate(const BigInt& x) const;

    IntPolynomial operator*(const IntPolynomial& other) const;
    IntPolynomial operator+(const IntPolynomial& other) const;
    bool operator==(const IntPolynomial& other) const = default;

    // Number of trailing zero coefficients, i.e. multiplicity of the root 0.
    int trailing_zero_count() const;

    // Divide by (x - root). Returns quotient; remainder (= evaluate(root))
    // is written to *remainder if given.
    IntPolynomial synthetic_divide(const BigInt& root, BigInt* remainder = nullptr) const;

    std::string to_string() const;  // e.g. "x^3 - 4*x^2 + 3*x"

private:
    std::vector<BigInt> coeffs_;
};

}  // namespace treespec
