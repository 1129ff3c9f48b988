#include "treespec/int_matrix.hpp"

#include <sstream>

#include "treespec/error.hpp"

namespace treespec {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0)
        throw Error(ErrorKind::InvalidArgument, "matrix dimensions must be non-negative");
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != static_cast<size_t>(rows) * cols)
        throw Error(ErrorKind::InvalidArgument, "entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw Error(ErrorKind::InvalidArgument, "ragged row in matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw Error(ErrorKind::SizeMismatch, "matrix product dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
        }
    }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(ErrorKind::SizeMismatch, "matrix sum dimension mismatch");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(ErrorKind::SizeMismatch, "matrix difference dimension mismatch");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
    return out;
}

BigInt IntMatrix::trace() const {
    if (!square()) throw Error(ErrorKind::NotSquare, "trace of non-square matrix");
    BigInt t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool IntMatrix::symmetric() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        out << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).str();
        }
        out << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) out << "[]";
    return out.str();
}

IntMatrix submatrix(const IntMatrix& m, const std::vector<int>& row_set,
                    const std::vector<int>& col_set) {
    auto validate = [](const std::vector<int>& idx, int limit) {
        for (size_t k = 0; k < idx.size(); ++k) {
            if (idx[k] < 0 || idx[k] >= limit)
                throw Error(ErrorKind::IndexOutOfRange, "submatrix index out of range");
            if (k > 0 && idx[k] <= idx[k - 1])
                throw Error(ErrorKind::InvalidArgument, "submatrix indices must be strictly increasing");
        }
    };
    validate(row_set, m.rows());
    validate(col_set, m.cols());
    IntMatrix out(static_cast<int>(row_set.size()), static_cast<int>(col_set.size()));
    for (size_t i = 0; i < row_set.size(); ++i)
        for (size_t j = 0; j < col_set.size(); ++j)
            out.at(static_cast<int>(i), static_cast<int>(j)) = m.at(row_set[i], col_set[j]);
    return out;
}

IntMatrix delete_row_col(const IntMatrix& m, int row, int col) {
    if (row < 0 || row >= m.rows() || col < 0 || col >= m.cols())
        throw Error(ErrorKind::IndexOutOfRange, "delete_row_col index out of range");
    IntMatrix out(m.rows() - 1, m.cols() - 1);
    for (int i = 0, oi = 0; i < m.rows(); ++i) {
        if (i == row) continue;
        for (int j = 0, oj = 0; j < m.cols(); ++j) {
            if (j == col) continue;
            out.at(oi, oj) = m.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

}  // namespace treespec
