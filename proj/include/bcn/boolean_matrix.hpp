#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bcn {

/// Dense 0/1 matrix with bit-packed rows (64 entries per word).
///
/// Bits beyond the last column of each row are kept zero, so whole-word
/// comparisons and bitwise operations are valid without masking.
class BooleanMatrix {
public:
    BooleanMatrix() = default;
    BooleanMatrix(int rows, int cols);

    static BooleanMatrix identity(int n);
    static BooleanMatrix ones(int rows, int cols);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }

    [[nodiscard]] bool get(int r, int c) const {
        return (word(r, c / 64) >> (c % 64)) & 1u;
    }
    void set(int r, int c, bool value = true) {
        uint64_t mask = uint64_t{1} << (c % 64);
        uint64_t& w = bits_[static_cast<size_t>(r) * words_ + static_cast<size_t>(c / 64)];
        if (value) {
            w |= mask;
        } else {
            w &= ~mask;
        }
    }

    [[nodiscard]] std::span<const uint64_t> row(int r) const {
        return {bits_.data() + static_cast<size_t>(r) * words_, static_cast<size_t>(words_)};
    }
    [[nodiscard]] std::span<uint64_t> row(int r) {
        return {bits_.data() + static_cast<size_t>(r) * words_, static_cast<size_t>(words_)};
    }

    /// OR the given row of `src` into row `r` of this matrix (equal col counts).
    void or_row(int r, const BooleanMatrix& src, int src_row);

    [[nodiscard]] bool row_empty(int r) const;
    [[nodiscard]] bool column_empty(int c) const;

    /// 0-based indices of the 1s in column c.
    [[nodiscard]] std::vector<int> column_support(int c) const;

    [[nodiscard]] BooleanMatrix transpose() const;

    friend bool operator==(const BooleanMatrix&, const BooleanMatrix&) = default;

    /// Row-major bitstrings, one string of '0'/'1' per row.  Round-trips
    /// bit-exactly through from_bitstrings.
    [[nodiscard]] std::vector<std::string> to_bitstrings() const;
    static BooleanMatrix from_bitstrings(std::span<const std::string> rows);

    /// Compact column-support rendering, e.g. "bool(3)[1+2 1+3 3]".
    [[nodiscard]] std::string to_column_support_string() const;

private:
    [[nodiscard]] uint64_t word(int r, int w) const {
        return bits_[static_cast<size_t>(r) * words_ + static_cast<size_t>(w)];
    }

    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;  // words per row
    std::vector<uint64_t> bits_;
};

/// Boolean product: (a (*) b)(i,j) = OR_k a(i,k) AND b(k,j).
BooleanMatrix bool_product(const BooleanMatrix& a, const BooleanMatrix& b);

/// Boolean product iterated `exponent` times (square matrix, exponent >= 1).
BooleanMatrix bool_power(const BooleanMatrix& a, int exponent);

/// Entrywise AND / OR (equal dimensions).
BooleanMatrix bool_and(const BooleanMatrix& a, const BooleanMatrix& b);
BooleanMatrix bool_or(const BooleanMatrix& a, const BooleanMatrix& b);

/// Entrywise a <= b (equal dimensions).
bool leq(const BooleanMatrix& a, const BooleanMatrix& b);

/// Equal-row / equal-column grouping.  Returns one class id per row (column),
/// ids assigned in order of first occurrence, so the result is deterministic.
std::vector<int> equal_row_classes(const BooleanMatrix& a);
std::vector<int> equal_column_classes(const BooleanMatrix& a);

/// N x N equivalence-relation matrix from a class id per element.
BooleanMatrix equivalence_from_classes(std::span<const int> class_of);

/// Reflexive + symmetric + transitive, checked as I <= a, a == a^T, a(*)a <= a.
bool is_equivalence_matrix(const BooleanMatrix& a);

}  // namespace bcn
