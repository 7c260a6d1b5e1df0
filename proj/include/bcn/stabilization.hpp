#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcn/bisimulation.hpp"

namespace bcn {

/// Diagonal selector of a target set: column i is the i-th unit vector for
/// members and the zero column otherwise.
BooleanMatrix target_selector_matrix(const TargetSet& target, int n_states);

struct ReachabilityClosure {
    BooleanMatrix reach;  // OR of the first l_star powers of the one-step matrix
    int l_star = 0;       // first l whose (l+1)-th power repeats an earlier one
};

/// Multi-step reachability closure of a square one-step matrix.
ReachabilityClosure reachability_closure(const BooleanMatrix& reach1);

struct StabilizationReport {
    TargetSet target;           // target on the analyzed (usually quotient) system
    BooleanMatrix selector;     // diagonal target selector
    BooleanMatrix reach;        // reachability closure
    int l_star = 0;
    bool stabilizable = false;
};

/// Set-stabilizability test on a one-step reachability matrix: from every
/// state, some reachable target state can survive |target| further steps
/// inside the target.
StabilizationReport check_stabilizable(const BooleanMatrix& reach1, const TargetSet& target);

struct StabilizationLayers {
    std::vector<std::vector<int>> layers;  // layers[k] = 0-based states at optimal distance k
    std::vector<int> layer_of;             // per state; -1 when unreachable
    bool covers = false;                   // layers partition the whole space
};

/// Layer 0 is the holdable core of the target; layer k+1 holds the one-step
/// predecessors of layer k that are not already assigned.
StabilizationLayers stabilization_layers(const BooleanMatrix& reach1, const TargetSet& target);

class NotStabilizableError : public std::runtime_error {
public:
    NotStabilizableError(std::string message, std::vector<int> uncovered0)
        : std::runtime_error(std::move(message)), uncovered_(std::move(uncovered0)) {}

    /// 0-based quotient states outside every layer.
    [[nodiscard]] const std::vector<int>& uncovered() const { return uncovered_; }

private:
    std::vector<int> uncovered_;
};

struct SynthesisResult {
    StabilizationLayers layers;              // on the quotient system
    std::vector<std::vector<int>> theta;     // per original state: admissible inputs, 0-based
    LogicalMatrix canonical_feedback;        // M x N, least admissible input per state
    std::string family_size_decimal;         // product of |theta_i| as a decimal string
};

/// All time-optimal state feedbacks from the weak-bisimulation quotient.
/// Needs the original transition matrix to project each state's successors.
SynthesisResult synthesize_weak(const BcnModel& model, const Partition& partition,
                                const StabilizationLayers& layers);

/// All time-optimal state feedbacks from the strong-bisimulation quotient.
/// Uses only quotient data plus the projection; layers are recomputed from
/// the quotient's own one-step matrix.
SynthesisResult synthesize_strong(const BcnModel& model, const QuotientStrong& quotient,
                                  const TargetSet& quotient_target);

/// Autonomous system obtained by substituting u = G x: column i is the
/// successor of state i under input G(i).
LogicalMatrix closed_loop(const BcnModel& model, const LogicalMatrix& feedback);

/// Trajectory of length steps+1 from x0 (0-based) under the feedback.
std::vector<int> simulate(const BcnModel& model, const LogicalMatrix& feedback, int x0, int steps);

/// First step after which the closed-loop trajectory stays in the target
/// forever; nullopt when it never does.
std::vector<std::optional<int>> stabilization_times(const BcnModel& model,
                                                    const LogicalMatrix& feedback,
                                                    const TargetSet& target);

}  // namespace bcn
