#include "bcn/stp.hpp"

#include <numeric>
#include <stdexcept>

#include "bcn/boolean_matrix.hpp"

namespace bcn {

LogicalMatrix kron(const LogicalMatrix& a, const LogicalMatrix& b) {
    std::vector<int> cols(static_cast<size_t>(a.cols()) * static_cast<size_t>(b.cols()));
    size_t out = 0;
    for (int ja = 0; ja < a.cols(); ++ja) {
        for (int jb = 0; jb < b.cols(); ++jb) {
            cols[out++] = a.unit_row(ja) * b.rows() + b.unit_row(jb);
        }
    }
    return {a.rows() * b.rows(), std::move(cols)};
}

BooleanMatrix kron(const BooleanMatrix& a, const BooleanMatrix& b) {
    BooleanMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ra = 0; ra < a.rows(); ++ra) {
        for (int ca = 0; ca < a.cols(); ++ca) {
            if (!a.get(ra, ca)) continue;
            for (int rb = 0; rb < b.rows(); ++rb) {
                for (int cb = 0; cb < b.cols(); ++cb) {
                    if (b.get(rb, cb)) out.set(ra * b.rows() + rb, ca * b.cols() + cb);
                }
            }
        }
    }
    return out;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ra = 0; ra < a.rows(); ++ra) {
        for (int ca = 0; ca < a.cols(); ++ca) {
            const Rational& s = a.at(ra, ca);
            if (s.is_zero()) continue;
            for (int rb = 0; rb < b.rows(); ++rb) {
                for (int cb = 0; cb < b.cols(); ++cb) {
                    out.at(ra * b.rows() + rb, ca * b.cols() + cb) = s * b.at(rb, cb);
                }
            }
        }
    }
    return out;
}

namespace {

// A (x) I_k without materializing the identity.
LogicalMatrix kron_identity_right(const LogicalMatrix& a, int k) {
    if (k == 1) return a;
    std::vector<int> cols(static_cast<size_t>(a.cols()) * static_cast<size_t>(k));
    size_t out = 0;
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < k; ++i) cols[out++] = a.unit_row(j) * k + i;
    }
    return {a.rows() * k, std::move(cols)};
}

RationalMatrix kron_identity_right(const RationalMatrix& a, int k) {
    if (k == 1) return a;
    return kron(a, RationalMatrix::identity(k));
}

}  // namespace

LogicalMatrix stp(const LogicalMatrix& a, const LogicalMatrix& b) {
    long long s = std::lcm<long long>(a.cols(), b.rows());
    return mul(kron_identity_right(a, static_cast<int>(s / a.cols())),
               kron_identity_right(b, static_cast<int>(s / b.rows())));
}

RationalMatrix stp(const RationalMatrix& a, const RationalMatrix& b) {
    long long s = std::lcm<long long>(a.cols(), b.rows());
    return mul(kron_identity_right(a, static_cast<int>(s / a.cols())),
               kron_identity_right(b, static_cast<int>(s / b.rows())));
}

LogicalMatrix khatri_rao(const LogicalMatrix& a, const LogicalMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("khatri-rao column count mismatch");
    std::vector<int> cols(static_cast<size_t>(a.cols()));
    for (int j = 0; j < a.cols(); ++j) {
        cols[static_cast<size_t>(j)] = a.unit_row(j) * b.rows() + b.unit_row(j);
    }
    return {a.rows() * b.rows(), std::move(cols)};
}

LogicalMatrix swap_matrix(int m, int n) {
    if (m <= 0 || n <= 0) throw std::invalid_argument("swap matrix needs positive dimensions");
    // column (r-1)n + c  ->  unit (c-1)m + r, i.e. [I_n (x) d_m^1, ..., I_n (x) d_m^m]
    std::vector<int> cols(static_cast<size_t>(m) * static_cast<size_t>(n));
    size_t out = 0;
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) cols[out++] = c * m + r;
    }
    return {m * n, std::move(cols)};
}

LogicalMatrix power_reducing(int k) {
    if (k <= 0) throw std::invalid_argument("power-reducing matrix needs positive dimension");
    std::vector<int> cols(static_cast<size_t>(k));
    for (int w = 0; w < k; ++w) cols[static_cast<size_t>(w)] = w * k + w;
    return {k * k, std::move(cols)};
}

}  // namespace bcn
