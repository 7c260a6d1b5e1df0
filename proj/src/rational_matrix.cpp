#include "bcn/rational_matrix.hpp"

#include <stdexcept>

#include "bcn/boolean_matrix.hpp"

namespace bcn {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative rational matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::ones(int rows, int cols) {
    RationalMatrix m(rows, cols);
    for (auto& e : m.entries_) e = 1;
    return m;
}

RationalMatrix RationalMatrix::column_block(int first, int count) const {
    if (first < 0 || count < 0 || first + count > cols_) {
        throw std::out_of_range("column block out of range");
    }
    RationalMatrix out(rows_, count);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < count; ++c) out.at(r, c) = at(r, first + c);
    }
    return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("rational matrix addition dimension mismatch");
    }
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

RationalMatrix operator*(const Rational& s, RationalMatrix m) {
    for (auto& e : m.entries_) e *= s;
    return m;
}

RationalMatrix mul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("rational product dimension mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

BooleanMatrix sgn(const RationalMatrix& a) {
    BooleanMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            if (!a.at(r, c).is_zero()) out.set(r, c);
        }
    }
    return out;
}

}  // namespace bcn
