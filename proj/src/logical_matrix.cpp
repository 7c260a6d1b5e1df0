#include "bcn/logical_matrix.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "bcn/boolean_matrix.hpp"
#include "bcn/rational_matrix.hpp"

namespace bcn {

LogicalMatrix::LogicalMatrix(int rows, std::vector<int> unit_rows)
    : rows_(rows), unit_rows_(std::move(unit_rows)) {
    if (rows_ <= 0) throw std::invalid_argument("logical matrix needs a positive row count");
    for (int r : unit_rows_) {
        if (r < 0 || r >= rows_) {
            throw std::out_of_range("logical matrix column index out of [1, rows]");
        }
    }
}

LogicalMatrix LogicalMatrix::delta(int rows, std::span<const int> one_based) {
    std::vector<int> zero_based(one_based.size());
    for (size_t j = 0; j < one_based.size(); ++j) zero_based[j] = one_based[j] - 1;
    return {rows, std::move(zero_based)};
}

LogicalMatrix LogicalMatrix::delta(int rows, std::initializer_list<int> one_based) {
    return delta(rows, std::span<const int>(one_based.begin(), one_based.size()));
}

LogicalMatrix LogicalMatrix::unit(int rows, int one_based_index) {
    return delta(rows, {one_based_index});
}

LogicalMatrix LogicalMatrix::identity(int n) {
    std::vector<int> cols(static_cast<size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    return {n, std::move(cols)};
}

std::vector<int> LogicalMatrix::delta_indices() const {
    std::vector<int> out(unit_rows_.size());
    for (size_t j = 0; j < unit_rows_.size(); ++j) out[j] = unit_rows_[j] + 1;
    return out;
}

BooleanMatrix LogicalMatrix::to_boolean() const {
    BooleanMatrix dense(rows_, cols());
    for (int j = 0; j < cols(); ++j) dense.set(unit_rows_[static_cast<size_t>(j)], j);
    return dense;
}

RationalMatrix LogicalMatrix::to_rational() const {
    RationalMatrix dense(rows_, cols());
    for (int j = 0; j < cols(); ++j) dense.at(unit_rows_[static_cast<size_t>(j)], j) = 1;
    return dense;
}

LogicalMatrix LogicalMatrix::from_boolean(const BooleanMatrix& dense) {
    std::vector<int> cols(static_cast<size_t>(dense.cols()), -1);
    for (int j = 0; j < dense.cols(); ++j) {
        auto support = dense.column_support(j);
        if (support.size() != 1) {
            throw std::invalid_argument("matrix column is not a unit vector");
        }
        cols[static_cast<size_t>(j)] = support.front();
    }
    return {dense.rows(), std::move(cols)};
}

std::string LogicalMatrix::to_delta_string() const {
    std::string out = "delta(" + std::to_string(rows_) + ")[";
    for (int j = 0; j < cols(); ++j) {
        if (j > 0) out += ' ';
        out += std::to_string(delta_index(j));
    }
    out += ']';
    return out;
}

LogicalMatrix LogicalMatrix::from_delta_string(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("malformed delta string: '" + std::string(text) + "'"); };
    constexpr std::string_view prefix = "delta(";
    if (!text.starts_with(prefix)) fail();
    size_t close = text.find(')', prefix.size());
    if (close == std::string_view::npos) fail();
    int rows = 0;
    {
        auto body = text.substr(prefix.size(), close - prefix.size());
        auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), rows);
        if (ec != std::errc{} || p != body.data() + body.size()) fail();
    }
    size_t open = close + 1;
    if (open >= text.size() || text[open] != '[' || text.back() != ']') fail();
    std::string_view list = text.substr(open + 1, text.size() - open - 2);
    std::vector<int> indices;
    size_t pos = 0;
    while (pos < list.size()) {
        while (pos < list.size() && list[pos] == ' ') ++pos;
        if (pos >= list.size()) break;
        int value = 0;
        auto [p, ec] = std::from_chars(list.data() + pos, list.data() + list.size(), value);
        if (ec != std::errc{}) fail();
        indices.push_back(value);
        pos = static_cast<size_t>(p - list.data());
    }
    return delta(rows, indices);
}

LogicalMatrix mul(const LogicalMatrix& a, const LogicalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("logical product dimension mismatch");
    std::vector<int> cols(static_cast<size_t>(b.cols()));
    for (int j = 0; j < b.cols(); ++j) cols[static_cast<size_t>(j)] = a.unit_row(b.unit_row(j));
    return {a.rows(), std::move(cols)};
}

}  // namespace bcn
