#pragma once

#include <string>
#include <vector>

#include "treespec/bigint.hpp"

namespace treespec {

// Dense row-major matrix of arbitrary-precision integers. Immutable use is
// the norm; mutation is only exposed through at() during construction.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<BigInt> entries);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const BigInt& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    BigInt& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    BigInt trace() const;
    bool symmetric() const;

    std::string to_string() const;

private:
    int rows_;
    int cols_;
    std::vector<BigInt> data_;
};

// M(R,S): rows R, columns S, indices strictly increasing.
IntMatrix submatrix(const IntMatrix& m, const std::vector<int>& row_set,
                    const std::vector<int>& col_set);

// Square matrix with row i and column j deleted.
IntMatrix delete_row_col(const IntMatrix& m, int row, int col);

}  // namespace treespec
