#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcn {

class BooleanMatrix;
class RationalMatrix;

/// Matrix whose every column is a canonical unit vector, stored as one row
/// index per column.  Externally (delta notation, JSON, text) indices are
/// 1-based; in memory everything is 0-based and the conversion happens only
/// at construction/serialization boundaries.
class LogicalMatrix {
public:
    LogicalMatrix() = default;

    /// unit_rows[j] is the 0-based row of the single 1 in column j.
    LogicalMatrix(int rows, std::vector<int> unit_rows);

    /// delta(n)[i1 i2 ...] with 1-based indices, matching the written notation.
    static LogicalMatrix delta(int rows, std::span<const int> one_based);
    static LogicalMatrix delta(int rows, std::initializer_list<int> one_based);

    /// Single column delta_rows^index (1-based index).
    static LogicalMatrix unit(int rows, int one_based_index);

    static LogicalMatrix identity(int n);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return static_cast<int>(unit_rows_.size()); }

    /// 0-based row of the 1 in column `col` (0-based).
    [[nodiscard]] int unit_row(int col) const { return unit_rows_[static_cast<size_t>(col)]; }

    /// 1-based delta index of column `col` (0-based column).
    [[nodiscard]] int delta_index(int col) const { return unit_rows_[static_cast<size_t>(col)] + 1; }

    [[nodiscard]] std::vector<int> delta_indices() const;

    [[nodiscard]] bool is_column_vector() const { return cols() == 1; }

    [[nodiscard]] BooleanMatrix to_boolean() const;
    [[nodiscard]] RationalMatrix to_rational() const;

    /// Inverse of to_boolean(); throws if some column is not a unit vector.
    static LogicalMatrix from_boolean(const BooleanMatrix& dense);

    /// Text form "delta(8)[2 3 1 5]".  Round-trips bit-exactly.
    [[nodiscard]] std::string to_delta_string() const;
    static LogicalMatrix from_delta_string(std::string_view text);

    friend bool operator==(const LogicalMatrix&, const LogicalMatrix&) = default;

private:
    int rows_ = 0;
    std::vector<int> unit_rows_;
};

/// Ordinary matrix product of logical matrices (inner dimensions must match).
LogicalMatrix mul(const LogicalMatrix& a, const LogicalMatrix& b);

}  // namespace bcn
