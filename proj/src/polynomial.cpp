#include "treespec/polynomial.hpp"

#include <sstream>

#include "treespec/error.hpp"

namespace treespec {

namespace {
void normalize(std::vector<BigInt>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}
const BigInt kZero = 0;
}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize(coeffs_);
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::monomial(int degree, BigInt c) {
    std::vector<BigInt> coeffs(static_cast<size_t>(degree) + 1);
    coeffs.back() = std::move(c);
    return IntPolynomial(std::move(coeffs));
}

const BigInt& IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) return IntPolynomial();
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(out));
}

int IntPolynomial::trailing_zero_count() const {
    int k = 0;
    while (k < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<size_t>(k)] == 0) ++k;
    return k;
}

IntPolynomial IntPolynomial::synthetic_divide(const BigInt& root, BigInt* remainder) const {
    if (is_zero()) {
        if (remainder) *remainder = 0;
        return IntPolynomial();
    }
    std::vector<BigInt> quotient(coeffs_.size() - 1);
    BigInt carry = coeffs_.back();
    for (size_t i = coeffs_.size() - 1; i-- > 0;) {
        quotient[i] = carry;
        carry = coeffs_[i] + carry * root;
    }
    if (remainder) *remainder = carry;
    return IntPolynomial(std::move(quotient));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeff(k);
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) out << mag.str();
        if (k > 0) {
            if (mag != 1) out << "*";
            out << "x";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace treespec
