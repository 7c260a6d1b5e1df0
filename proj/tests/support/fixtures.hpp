#pragma once

// Shared regression fixtures: two hand-sized 8-state models with known
// bisimulation behavior, and a six-node biological network with four control
// inputs whose reduction and synthesis results are known exactly.

#include <string>
#include <vector>

#include "bcn/bisimulation.hpp"
#include "bcn/model.hpp"

namespace bcn::fixtures {

/// 8-state, 2-input model whose hand relation {1,2},{3,4},{5..8} is a weak
/// but not strong bisimulation.
inline BcnModel model_a() {
    return BcnModel::from_delta_columns(8, 2, {2, 3, 1, 5, 6, 7, 8, 5, 3, 2, 5, 2, 6, 7, 8, 7});
}

/// 8-state, 2-input model whose hand relation {1,2},{3},{4..8} is a weak
/// bisimulation.
inline BcnModel model_b() {
    return BcnModel::from_delta_columns(8, 2, {2, 1, 4, 5, 6, 7, 8, 4, 1, 1, 8, 5, 6, 7, 8, 4});
}

/// Equivalence-relation matrix from 1-based blocks.
inline BooleanMatrix relation_from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> class_of(static_cast<size_t>(n), -1);
    for (size_t b = 0; b < blocks.size(); ++b) {
        for (int s : blocks[b]) class_of[static_cast<size_t>(s - 1)] = static_cast<int>(b);
    }
    return equivalence_from_classes(class_of);
}

inline BooleanMatrix relation_a() {
    return relation_from_blocks(8, {{1, 2}, {3, 4}, {5, 6, 7, 8}});
}

inline BooleanMatrix relation_b() {
    return relation_from_blocks(8, {{1, 2}, {3}, {4, 5, 6, 7, 8}});
}

/// Boolean matrix from 1-based column supports.
inline BooleanMatrix boolean_from_columns(int rows, const std::vector<std::vector<int>>& cols) {
    BooleanMatrix m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        for (int i : cols[j]) m.set(i - 1, static_cast<int>(j));
    }
    return m;
}

/// Six state nodes (growth/arrest regulators) driven by four input signals.
inline std::string proliferation_network_text() {
    return "states X1 X2 X3 X4 X5 X6\n"
           "inputs U1 U2 U3 U4\n"
           "X1' = U1 & !U2 & !U3\n"
           "X2' = U3 & !X1\n"
           "X3' = !X2 & !X4\n"
           "X4' = U4\n"
           "X5' = X3\n"
           "X6' = X4\n"
           "target = {1:4, 29:36, 61:64}\n";
}

/// Expected one-step reachability of the six-node network: columns come in
/// 16 groups of four identical columns.
inline BooleanMatrix proliferation_reach1() {
    const std::vector<std::vector<int>> group_support = {
        {25, 29, 57, 61}, {26, 30, 58, 62}, {27, 31, 59, 63}, {20, 24, 52, 56},
        {25, 29, 57, 61}, {26, 30, 58, 62}, {27, 31, 59, 63}, {20, 24, 52, 56},
        {25, 29, 41, 45, 57, 61}, {26, 30, 42, 46, 58, 62},
        {27, 31, 43, 47, 59, 63}, {20, 24, 36, 40, 52, 56},
        {25, 29, 41, 45, 57, 61}, {26, 30, 42, 46, 58, 62},
        {27, 31, 43, 47, 59, 63}, {20, 24, 36, 40, 52, 56},
    };
    std::vector<std::vector<int>> cols;
    for (const auto& support : group_support) {
        for (int repeat = 0; repeat < 4; ++repeat) cols.push_back(support);
    }
    return boolean_from_columns(64, cols);
}

/// Expected maximum-weak-bisimulation blocks of the six-node network for the
/// target {1..4, 29..36, 61..64} (1-based states).
inline std::vector<std::vector<int>> proliferation_blocks() {
    auto range = [](int lo, int hi) {
        std::vector<int> out;
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    };
    auto append = [](std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    return {range(1, 4),
            append(range(5, 12), range(17, 28)),
            range(13, 16),
            range(29, 32),
            range(33, 36),
            append(range(37, 44), range(49, 60)),
            range(45, 48),
            range(61, 64)};
}

/// Expected quotient one-step matrix of the six-node network (8 blocks).
inline BooleanMatrix proliferation_quotient_reach1() {
    return boolean_from_columns(8, {{2, 4, 6, 7, 8},
                                    {2, 4, 6, 7, 8},
                                    {2, 6},
                                    {2, 6},
                                    {2, 4, 6, 7, 8},
                                    {2, 4, 6, 7, 8},
                                    {1, 2, 5, 6},
                                    {1, 2, 5, 6}});
}

/// A concrete time-optimal feedback for the six-node network (one member of
/// the synthesized family).
inline LogicalMatrix proliferation_feedback() {
    std::vector<int> cols;
    auto repeat = [&](int value, int count) {
        for (int r = 0; r < count; ++r) cols.push_back(value);
    };
    repeat(2, 32);
    repeat(4, 12);
    repeat(1, 4);
    repeat(4, 12);
    repeat(1, 4);
    return LogicalMatrix::delta(16, cols);
}

}  // namespace bcn::fixtures
