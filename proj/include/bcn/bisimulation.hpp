#pragma once

#include <vector>

#include "bcn/boolean_matrix.hpp"
#include "bcn/model.hpp"
#include "bcn/rational_matrix.hpp"

namespace bcn {

/// Equivalence relation on the state space as a block assignment.  Blocks are
/// numbered by their minimal member, so the induced projection row order is
/// deterministic.
class Partition {
public:
    Partition() = default;

    /// block_of[i] = block id of state i; ids must already be first-occurrence
    /// ordered (block 0 appears before block 1, ...).
    static Partition from_block_of(std::vector<int> block_of);

    /// Collapse the identical rows of an equivalence-relation matrix.
    static Partition from_equivalence(const BooleanMatrix& relation);

    [[nodiscard]] int size() const { return static_cast<int>(block_of_.size()); }
    [[nodiscard]] int num_blocks() const { return num_blocks_; }
    [[nodiscard]] int block_of(int state0) const { return block_of_[static_cast<size_t>(state0)]; }

    /// Blocks as sorted 0-based member lists, ordered by minimal member.
    [[nodiscard]] std::vector<std::vector<int>> blocks() const;

    /// N x N relation matrix (1 iff same block).
    [[nodiscard]] BooleanMatrix relation_matrix() const;

    /// num_blocks x N logical projection: column i is the unit vector of
    /// block_of(i).
    [[nodiscard]] LogicalMatrix projection() const;

    /// Image of a state-space target under the projection.  Requires the
    /// partition to refine {target, complement}; throws otherwise.
    [[nodiscard]] TargetSet project_target(const TargetSet& target) const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> block_of_;
    int num_blocks_ = 0;
};

/// Matrix form of the equivalence relation that pairs states lying on the
/// same side of the target set (both inside, or both outside).
BooleanMatrix relation_from_target(const TargetSet& target, int N);

/// One-step reachability: (i,j) = 1 iff some input sends state j to state i.
BooleanMatrix one_step_reachability(const BcnModel& model);

/// (i,j) = 1 iff columns i and j of relation (*) reach1 coincide.  The result
/// is an equivalence-relation matrix by construction.
BooleanMatrix weak_bisim_matrix(const BooleanMatrix& relation, const BooleanMatrix& reach1);

/// (i,j) = 1 iff states i and j have the same relation-projected response to
/// every individual input.
BooleanMatrix strong_bisim_matrix(const BooleanMatrix& relation, const BcnModel& model);

/// (i,j) = 1 iff the relation-aggregated transition probabilities of states
/// i and j agree exactly (per block, per input), as rational numbers.
BooleanMatrix prob_bisim_matrix(const BooleanMatrix& relation, const PbcnModel& model);

/// Criterion checks: relation must be an equivalence-relation matrix, and the
/// relation is a bisimulation iff it is <= the corresponding bisim matrix.
bool is_weak_bisimulation(const BooleanMatrix& relation, const BcnModel& model);
bool is_strong_bisimulation(const BooleanMatrix& relation, const BcnModel& model);
bool is_probabilistic_bisimulation(const BooleanMatrix& relation, const PbcnModel& model);

enum class BisimMode { weak, strong, probabilistic };

struct MaxBisimResult {
    Partition partition;
    int k_star = 0;            // number of strict refinement steps to the fixed point
    BooleanMatrix fixed_point; // the maximum bisimulation as a relation matrix
};

/// Greatest bisimulation contained in the given equivalence relation, by
/// iterating relation <- relation AND bisim_matrix(relation) to a fixed point.
MaxBisimResult max_bisimulation(const BooleanMatrix& relation0, const BcnModel& model,
                                BisimMode mode);
MaxBisimResult max_bisimulation(const BooleanMatrix& relation0, const PbcnModel& model);

struct QuotientWeak {
    BooleanMatrix reach1_q;   // quotient one-step reachability
    LogicalMatrix projection; // num_blocks x N
};

struct QuotientStrong {
    BooleanMatrix blocks;     // num_blocks x (num_blocks * M), input-major block layout
    LogicalMatrix projection; // num_blocks x N
    int num_inputs = 0;

    /// Input block q as a num_blocks x num_blocks matrix.
    [[nodiscard]] BooleanMatrix input_block(int input0) const;
    /// OR of all input blocks: quotient one-step reachability.
    [[nodiscard]] BooleanMatrix one_step() const;
};

QuotientWeak quotient_weak(const Partition& partition, const BooleanMatrix& reach1);
QuotientStrong quotient_strong(const Partition& partition, const BcnModel& model);

/// Aggregated transition-probability matrix of a probabilistic model, size
/// N x NM laid out state-major: columns [i*M, (i+1)*M) give the distribution
/// responses of state i, entry (j, q) = P(i -> j | input q).
RationalMatrix aggregated_transition(const PbcnModel& model);

}  // namespace bcn
