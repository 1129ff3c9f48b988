#include "treespec/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "treespec/error.hpp"

namespace treespec {

BigInt det(const IntMatrix& m) {
    if (!m.square()) throw Error(ErrorKind::NotSquare, "determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot == -1) return 0;
            for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : BigInt(-a.at(n - 1, n - 1));
}

IntPolynomial char_poly(const IntMatrix& m) {
    if (!m.square()) throw Error(ErrorKind::NotSquare, "characteristic polynomial of non-square matrix");
    const int n = m.rows();
    // Faddeev-LeVerrier: M_1 = A, c_1 = -tr(M_1)/1,
    // M_k = A(M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k. Every division is exact.
    std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1);
    coeffs[static_cast<size_t>(n)] = 1;
    IntMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        BigInt tr = mk.trace();
        if (tr % k != 0)
            throw Error(ErrorKind::InexactDivision, "Faddeev-LeVerrier trace not divisible");
        BigInt ck = -tr / k;
        coeffs[static_cast<size_t>(n - k)] = ck;
        if (k < n) {
            for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
            mk = m * mk;
        }
    }
    return IntPolynomial(std::move(coeffs));
}

SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    const int rows = a.rows();
    const int cols = a.cols();
    SmithForm out;
    int t = 0;
    while (t < std::min(rows, cols)) {
        // smallest nonzero entry of the trailing submatrix becomes the pivot
        int pr = -1, pc = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (a.at(i, j) == 0) continue;
                if (pr == -1 || abs(a.at(i, j)) < abs(a.at(pr, pc))) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr == -1) break;  // trailing submatrix is zero
        if (pr != t)
            for (int j = 0; j < cols; ++j) std::swap(a.at(t, j), a.at(pr, j));
        if (pc != t)
            for (int i = 0; i < rows; ++i) std::swap(a.at(i, t), a.at(i, pc));

        bool clean = true;
        for (int i = t + 1; i < rows; ++i) {
            if (a.at(i, t) == 0) continue;
            BigInt q = a.at(i, t) / a.at(t, t);
            for (int j = t; j < cols; ++j) a.at(i, j) -= q * a.at(t, j);
            if (a.at(i, t) != 0) clean = false;  // remainder left; re-pivot
        }
        for (int j = t + 1; j < cols; ++j) {
            if (a.at(t, j) == 0) continue;
            BigInt q = a.at(t, j) / a.at(t, t);
            for (int i = t; i < rows; ++i) a.at(i, j) -= q * a.at(i, t);
            if (a.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        // pivot must divide every remaining entry for the divisibility chain
        bool divides_all = true;
        for (int i = t + 1; i < rows && divides_all; ++i)
            for (int j = t + 1; j < cols; ++j)
                if (a.at(i, j) % a.at(t, t) != 0) {
                    for (int jj = t; jj < cols; ++jj) a.at(t, jj) += a.at(i, jj);
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;

        if (a.at(t, t) < 0) a.at(t, t) = -a.at(t, t);
        out.invariant_factors.push_back(a.at(t, t));
        ++t;
    }
    return out;
}

namespace {

// Packed GF(2) rows; matrix entries enter reduced mod 2.
std::vector<std::vector<std::uint64_t>> pack_mod2(const IntMatrix& m) {
    const int words = (m.cols() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(
        static_cast<size_t>(m.rows()), std::vector<std::uint64_t>(static_cast<size_t>(words), 0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) % 2 != 0)
                rows[static_cast<size_t>(i)][static_cast<size_t>(j) / 64] |= std::uint64_t(1)
                                                                             << (j % 64);
    return rows;
}

bool row_is_zero(const std::vector<std::uint64_t>& row) {
    return std::all_of(row.begin(), row.end(), [](std::uint64_t w) { return w == 0; });
}

int lowest_set_bit(const std::vector<std::uint64_t>& row) {
    for (size_t w = 0; w < row.size(); ++w)
        if (row[w]) return static_cast<int>(w) * 64 + std::countr_zero(row[w]);
    return -1;
}

void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
    for (size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

}  // namespace

int rank_gf2(const IntMatrix& m) {
    auto rows = pack_mod2(m);
    // basis rows in reduced form, keyed by pivot column
    std::vector<std::pair<int, std::vector<std::uint64_t>>> basis;
    int rank = 0;
    for (auto& row : rows) {
        for (const auto& [pivot, base] : basis) {
            if ((row[static_cast<size_t>(pivot) / 64] >> (pivot % 64)) & 1) xor_into(row, base);
        }
        if (!row_is_zero(row)) {
            basis.emplace_back(lowest_set_bit(row), row);
            ++rank;
        }
    }
    return rank;
}

std::vector<int> principal_full_rank_submatrix_gf2(const IntMatrix& m) {
    if (!m.symmetric())
        throw Error(ErrorKind::NotSymmetric, "principal submatrix search needs a symmetric matrix");
    // The lexicographically first maximal independent row set I of a
    // symmetric matrix indexes an invertible principal submatrix M(I,I):
    // rows outside I are combinations of rows in I, hence by symmetry the
    // columns of M(I,:) outside I are combinations of those in I, so
    // rank M(I,I) = rank M(I,:) = |I|.
    auto rows = pack_mod2(m);
    std::vector<std::pair<int, std::vector<std::uint64_t>>> basis;
    std::vector<int> index_set;
    for (int i = 0; i < m.rows(); ++i) {
        auto row = rows[static_cast<size_t>(i)];
        for (const auto& [pivot, base] : basis)
            if ((row[static_cast<size_t>(pivot) / 64] >> (pivot % 64)) & 1) xor_into(row, base);
        if (!row_is_zero(row)) {
            basis.emplace_back(lowest_set_bit(row), row);
            index_set.push_back(i);
        }
    }

    // Certify; fall back to exhaustive search at small order if the greedy
    // certificate ever failed (it should not).
    auto certified = [&](const std::vector<int>& idx) {
        return rank_gf2(submatrix(m, idx, idx)) == static_cast<int>(idx.size());
    };
    if (certified(index_set)) return index_set;
    const int r = static_cast<int>(index_set.size());
    if (m.rows() < 12) {
        std::vector<int> subset(static_cast<size_t>(r));
        std::vector<int> pick(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) pick[static_cast<size_t>(i)] = i;
        while (true) {
            for (int i = 0; i < r; ++i) subset[static_cast<size_t>(i)] = pick[static_cast<size_t>(i)];
            if (certified(subset)) return subset;
            int i = r - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == m.rows() - r + i) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (int j = i + 1; j < r; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "no full-rank principal submatrix found");
}

int IntegerSpectrum::multiplicity_of(const BigInt& lambda) const {
    for (const auto& e : entries)
        if (e.eigenvalue == lambda) return e.multiplicity;
    return 0;
}

namespace {

// Smallest r >= 0 with r^k >= x (x >= 0).
BigInt ceil_kth_root(const BigInt& x, int k) {
    if (x <= 0) return 0;
    if (k == 1) return x;
    BigInt lo = 0, hi = 1;
    auto pow_k = [&](const BigInt& b) {
        BigInt p = 1;
        for (int i = 0; i < k; ++i) p *= b;
        return p;
    };
    while (pow_k(hi) < x) hi <<= 1;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (pow_k(mid) >= x)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

// Bound on the magnitude of all (complex) roots of a monic polynomial:
// min of the Cauchy bound 1 + max|a_i| and the Fujiwara-style bound
// 2 max_k |a_{n-k}|^{1/k}.
BigInt root_bound(const IntPolynomial& p) {
    const int n = p.degree();
    BigInt cauchy = 0;
    for (int i = 0; i < n; ++i) {
        BigInt mag = p.coeff(i) < 0 ? BigInt(-p.coeff(i)) : p.coeff(i);
        cauchy = std::max(cauchy, mag);
    }
    cauchy += 1;
    BigInt fuji = 0;
    for (int k = 1; k <= n; ++k) {
        BigInt mag = p.coeff(n - k) < 0 ? BigInt(-p.coeff(n - k)) : p.coeff(n - k);
        fuji = std::max(fuji, 2 * ceil_kth_root(mag, k));
    }
    return std::min(cauchy, fuji);
}

}  // namespace

IntegerSpectrum integer_eigenvalues(const IntPolynomial& p) {
    if (!p.monic()) throw Error(ErrorKind::NotMonic, "integer eigenvalue extraction needs a monic polynomial");
    IntegerSpectrum out;

    IntPolynomial q = p;
    int zeros = q.trailing_zero_count();
    for (int i = 0; i < zeros; ++i) q = q.synthetic_divide(0);

    // Integer roots of the remaining monic factor divide its constant term
    // (rational root theorem) and have magnitude at most the root bound.
    std::vector<BigInt> candidates;
    if (q.degree() >= 1) {
        BigInt c0 = q.coeff(0) < 0 ? BigInt(-q.coeff(0)) : q.coeff(0);
        BigInt bound = std::min(root_bound(q), c0);
        for (BigInt d = 1; d <= bound; ++d)
            if (c0 % d == 0) {
                candidates.push_back(-d);
                candidates.push_back(d);
            }
    }

    std::vector<IntegerSpectrum::Entry> found;
    for (const BigInt& lambda : candidates) {
        int mult = 0;
        while (q.degree() >= 1) {
            BigInt rem;
            IntPolynomial div = q.synthetic_divide(lambda, &rem);
            if (rem != 0) break;
            q = div;
            ++mult;
        }
        if (mult > 0) found.push_back({lambda, mult});
    }
    if (zeros > 0) found.push_back({0, zeros});
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.eigenvalue < b.eigenvalue; });
    out.entries = std::move(found);
    out.residual = std::move(q);
    return out;
}

}  // namespace treespec
