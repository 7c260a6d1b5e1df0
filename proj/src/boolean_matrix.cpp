#include "bcn/boolean_matrix.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace bcn {

namespace {

void require_same_shape(const BooleanMatrix& a, const BooleanMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("boolean matrix dimension mismatch");
    }
}

uint64_t hash_words(std::span<const uint64_t> words) {
    // FNV-1a over the packed row words.
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : words) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

bool same_words(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

}  // namespace

BooleanMatrix::BooleanMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      bits_(static_cast<size_t>(rows) * static_cast<size_t>(words_)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative boolean matrix dimension");
}

BooleanMatrix BooleanMatrix::identity(int n) {
    BooleanMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BooleanMatrix BooleanMatrix::ones(int rows, int cols) {
    BooleanMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m.set(r, c);
    }
    return m;
}

void BooleanMatrix::or_row(int r, const BooleanMatrix& src, int src_row) {
    if (cols_ != src.cols_) throw std::invalid_argument("or_row column mismatch");
    auto dst = row(r);
    auto s = src.row(src_row);
    for (size_t w = 0; w < dst.size(); ++w) dst[w] |= s[w];
}

bool BooleanMatrix::row_empty(int r) const {
    for (uint64_t w : row(r)) {
        if (w != 0) return false;
    }
    return true;
}

bool BooleanMatrix::column_empty(int c) const {
    for (int r = 0; r < rows_; ++r) {
        if (get(r, c)) return false;
    }
    return true;
}

std::vector<int> BooleanMatrix::column_support(int c) const {
    std::vector<int> out;
    for (int r = 0; r < rows_; ++r) {
        if (get(r, c)) out.push_back(r);
    }
    return out;
}

BooleanMatrix BooleanMatrix::transpose() const {
    BooleanMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        auto src = row(r);
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = src[static_cast<size_t>(w)];
            while (bits != 0) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                t.set(w * 64 + b, r);
            }
        }
    }
    return t;
}

std::vector<std::string> BooleanMatrix::to_bitstrings() const {
    std::vector<std::string> out(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        std::string& s = out[static_cast<size_t>(r)];
        s.resize(static_cast<size_t>(cols_));
        for (int c = 0; c < cols_; ++c) s[static_cast<size_t>(c)] = get(r, c) ? '1' : '0';
    }
    return out;
}

BooleanMatrix BooleanMatrix::from_bitstrings(std::span<const std::string> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    BooleanMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        const std::string& s = rows[static_cast<size_t>(i)];
        if (static_cast<int>(s.size()) != c) {
            throw std::invalid_argument("ragged bitstring rows");
        }
        for (int j = 0; j < c; ++j) {
            if (s[static_cast<size_t>(j)] == '1') {
                m.set(i, j);
            } else if (s[static_cast<size_t>(j)] != '0') {
                throw std::invalid_argument("bitstring entry must be '0' or '1'");
            }
        }
    }
    return m;
}

std::string BooleanMatrix::to_column_support_string() const {
    std::string out = "bool(" + std::to_string(rows_) + ")[";
    for (int c = 0; c < cols_; ++c) {
        if (c > 0) out += ' ';
        bool first = true;
        for (int r : column_support(c)) {
            if (!first) out += '+';
            out += std::to_string(r + 1);
            first = false;
        }
        if (first) out += '0';
    }
    out += ']';
    return out;
}

BooleanMatrix bool_product(const BooleanMatrix& a, const BooleanMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("boolean product dimension mismatch");
    BooleanMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        auto src = a.row(i);
        for (size_t w = 0; w < src.size(); ++w) {
            uint64_t bits = src[w];
            while (bits != 0) {
                int k = static_cast<int>(w) * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                c.or_row(i, b, k);
            }
        }
    }
    return c;
}

BooleanMatrix bool_power(const BooleanMatrix& a, int exponent) {
    if (a.rows() != a.cols()) throw std::invalid_argument("boolean power needs a square matrix");
    if (exponent < 1) throw std::invalid_argument("boolean power needs exponent >= 1");
    BooleanMatrix base = a;
    BooleanMatrix result;
    bool have_result = false;
    while (exponent > 0) {
        if (exponent & 1) {
            result = have_result ? bool_product(result, base) : base;
            have_result = true;
        }
        exponent >>= 1;
        if (exponent > 0) base = bool_product(base, base);
    }
    return result;
}

BooleanMatrix bool_and(const BooleanMatrix& a, const BooleanMatrix& b) {
    require_same_shape(a, b);
    BooleanMatrix c(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) {
        auto out = c.row(r);
        auto ra = a.row(r);
        auto rb = b.row(r);
        for (size_t w = 0; w < out.size(); ++w) out[w] = ra[w] & rb[w];
    }
    return c;
}

BooleanMatrix bool_or(const BooleanMatrix& a, const BooleanMatrix& b) {
    require_same_shape(a, b);
    BooleanMatrix c(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) {
        auto out = c.row(r);
        auto ra = a.row(r);
        auto rb = b.row(r);
        for (size_t w = 0; w < out.size(); ++w) out[w] = ra[w] | rb[w];
    }
    return c;
}

bool leq(const BooleanMatrix& a, const BooleanMatrix& b) {
    require_same_shape(a, b);
    for (int r = 0; r < a.rows(); ++r) {
        auto ra = a.row(r);
        auto rb = b.row(r);
        for (size_t w = 0; w < ra.size(); ++w) {
            if ((ra[w] & ~rb[w]) != 0) return false;
        }
    }
    return true;
}

std::vector<int> equal_row_classes(const BooleanMatrix& a) {
    std::vector<int> class_of(static_cast<size_t>(a.rows()), -1);
    // hash -> rows that first carried that hash; ties resolved by exact compare
    std::unordered_map<uint64_t, std::vector<int>> buckets;
    int next_class = 0;
    for (int r = 0; r < a.rows(); ++r) {
        auto& reps = buckets[hash_words(a.row(r))];
        int found = -1;
        for (int rep : reps) {
            if (same_words(a.row(rep), a.row(r))) {
                found = class_of[static_cast<size_t>(rep)];
                break;
            }
        }
        if (found < 0) {
            found = next_class++;
            reps.push_back(r);
        }
        class_of[static_cast<size_t>(r)] = found;
    }
    return class_of;
}

std::vector<int> equal_column_classes(const BooleanMatrix& a) {
    return equal_row_classes(a.transpose());
}

BooleanMatrix equivalence_from_classes(std::span<const int> class_of) {
    int n = static_cast<int>(class_of.size());
    int num_classes = 0;
    for (int c : class_of) num_classes = std::max(num_classes, c + 1);
    // one mask row per class, then copied to every member
    BooleanMatrix masks(num_classes, n);
    for (int i = 0; i < n; ++i) masks.set(class_of[static_cast<size_t>(i)], i);
    BooleanMatrix rel(n, n);
    for (int i = 0; i < n; ++i) rel.or_row(i, masks, class_of[static_cast<size_t>(i)]);
    return rel;
}

bool is_equivalence_matrix(const BooleanMatrix& a) {
    if (a.rows() != a.cols()) return false;
    if (!leq(BooleanMatrix::identity(a.rows()), a)) return false;
    if (a != a.transpose()) return false;
    return leq(bool_product(a, a), a);
}

}  // namespace bcn
