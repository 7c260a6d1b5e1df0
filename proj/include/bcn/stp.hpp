#pragma once

#include "bcn/logical_matrix.hpp"
#include "bcn/rational_matrix.hpp"

namespace bcn {

/// Semi-tensor product (A (x) I_{s/n})(B (x) I_{s/p}) with s = lcm(n, p).
/// Coincides with the ordinary product when the inner dimensions match, and
/// is closed over logical matrices.
LogicalMatrix stp(const LogicalMatrix& a, const LogicalMatrix& b);
RationalMatrix stp(const RationalMatrix& a, const RationalMatrix& b);

/// Kronecker products.
LogicalMatrix kron(const LogicalMatrix& a, const LogicalMatrix& b);
BooleanMatrix kron(const BooleanMatrix& a, const BooleanMatrix& b);
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

/// Columnwise Kronecker product of logical matrices with equal column counts.
LogicalMatrix khatri_rao(const LogicalMatrix& a, const LogicalMatrix& b);

/// Swap matrix W_[m,n] of size mn x mn: W (x (x) y) = y (x) x for unit
/// vectors x (m rows) and y (n rows).
LogicalMatrix swap_matrix(int m, int n);

/// Power-reducing matrix of size k^2 x k: column w is the index of w (x) w,
/// so w (x) w = P_k w for every unit w.
LogicalMatrix power_reducing(int k);

}  // namespace bcn
