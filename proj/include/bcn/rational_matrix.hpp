#pragma once

#include <vector>

#include "bcn/rational.hpp"

namespace bcn {

class BooleanMatrix;

/// Dense matrix of exact rationals.  Used wherever the probabilistic path
/// needs real arithmetic; equality is exact, never tolerance-based.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);
    static RationalMatrix ones(int rows, int cols);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }

    [[nodiscard]] const Rational& at(int r, int c) const {
        return entries_[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
    }
    [[nodiscard]] Rational& at(int r, int c) {
        return entries_[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
    }

    /// Columns [first, first+count) as a new matrix.
    [[nodiscard]] RationalMatrix column_block(int first, int count) const;

    RationalMatrix& operator+=(const RationalMatrix& rhs);
    friend RationalMatrix operator+(RationalMatrix lhs, const RationalMatrix& rhs) { return lhs += rhs; }
    friend RationalMatrix operator*(const Rational& s, RationalMatrix m);

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

RationalMatrix mul(const RationalMatrix& a, const RationalMatrix& b);

/// Entrywise nonzero pattern.
BooleanMatrix sgn(const RationalMatrix& a);

}  // namespace bcn
