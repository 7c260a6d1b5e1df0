#pragma once

#include <span>
#include <vector>

#include "bcn/logical_matrix.hpp"
#include "bcn/rational.hpp"

namespace bcn {

/// Subset of the state space delta_N.  Members are kept 0-based and strictly
/// increasing; construction from the written 1-based form converts once.
class TargetSet {
public:
    TargetSet() = default;
    static TargetSet from_1based(int ambient, std::span<const int> members);
    static TargetSet from_1based(int ambient, std::initializer_list<int> members);
    static TargetSet from_0based(int ambient, std::vector<int> members);

    [[nodiscard]] int ambient() const { return ambient_; }
    [[nodiscard]] const std::vector<int>& members() const { return members_; }  // 0-based
    [[nodiscard]] std::vector<int> members_1based() const;
    [[nodiscard]] bool contains(int state0) const;
    [[nodiscard]] int size() const { return static_cast<int>(members_.size()); }

    friend bool operator==(const TargetSet&, const TargetSet&) = default;

private:
    int ambient_ = 0;
    std::vector<int> members_;
};

/// Boolean control network in algebraic form: x(t+1) = F u(t) x(t) with
/// F of size N x NM, laid out input-major (block q holds all states under
/// input q).  bits_n/bits_m are -1 when the model was built directly from a
/// transition matrix with dimensions that are not powers of two.
struct BcnModel {
    int bits_n = -1;
    int bits_m = -1;
    int N = 0;
    int M = 0;
    LogicalMatrix F;

    /// Successor of state `state0` under input `input0` (both 0-based).
    [[nodiscard]] int successor(int state0, int input0) const {
        return F.unit_row(input0 * N + state0);
    }

    /// Input block F_q as an N x N logical matrix (q 0-based).
    [[nodiscard]] LogicalMatrix input_block(int input0) const;

    static BcnModel from_matrix(int N, int M, LogicalMatrix F);

    /// Spec'd direct-load path: columns given as 1-based delta indices.
    static BcnModel from_delta_columns(int N, int M, std::span<const int> one_based);
    static BcnModel from_delta_columns(int N, int M, std::initializer_list<int> one_based);
};

/// Probabilistic Boolean control network: per step one of the per-mode
/// transition matrices fires with its (exact rational) probability.
struct PbcnMode {
    LogicalMatrix F;
    Rational probability;
};

struct PbcnModel {
    int bits_n = -1;
    int bits_m = -1;
    int N = 0;
    int M = 0;
    std::vector<PbcnMode> modes;

    [[nodiscard]] int num_modes() const { return static_cast<int>(modes.size()); }

    /// Validates: nonempty modes, equal dimensions, all p > 0, sum p == 1.
    void validate() const;
};

}  // namespace bcn
