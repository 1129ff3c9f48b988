#pragma once

#include <vector>

#include "treespec/int_matrix.hpp"
#include "treespec/polynomial.hpp"

namespace treespec {

// Exact determinant by Bareiss fraction-free elimination. det of the
// 0x0 matrix is 1.
BigInt det(const IntMatrix& m);

// Monic characteristic polynomial det(xI - m) by Faddeev-LeVerrier with
// exact integer divisions (ErrorKind::InexactDivision on failure, which
// would indicate a bug, not bad input).
IntPolynomial char_poly(const IntMatrix& m);

struct SmithForm {
    std::vector<BigInt> invariant_factors;  // s_1 | s_2 | ... | s_r, all positive
    int rank() const { return static_cast<int>(invariant_factors.size()); }
};

// Invariant factors by gcd-pivot elimination; the unimodular transforms are
// not tracked.
SmithForm smith_normal_form(const IntMatrix& m);

// Rank of m mod 2, over packed bit rows.
int rank_gf2(const IntMatrix& m);

// For symmetric m: an index set I with |I| = rank_gf2(m) such that
// m(I,I) mod 2 is invertible. Greedy pivot tracking, with an exhaustive
// fallback below order 12.
std::vector<int> principal_full_rank_submatrix_gf2(const IntMatrix& m);

struct IntegerSpectrum {
    struct Entry {
        BigInt eigenvalue;
        int multiplicity;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;  // sorted by eigenvalue ascending
    IntPolynomial residual;      // no integer roots

    int multiplicity_of(const BigInt& lambda) const;
    int nullity() const { return multiplicity_of(0); }
    bool operator==(const IntegerSpectrum&) const = default;
};

// All integer roots of a monic polynomial with multiplicities, plus the
// integer-root-free residual factor. Complete by the rational root theorem:
// candidates are the divisors of the trailing nonzero coefficient, pruned by
// a root bound.
IntegerSpectrum integer_eigenvalues(const IntPolynomial& p);

}  // namespace treespec
