#include "bcn/bisimulation.hpp"

#include <map>
#include <stdexcept>

#include "bcn/stp.hpp"

namespace bcn {

namespace {

void require_equivalence(const BooleanMatrix& relation) {
    if (!is_equivalence_matrix(relation)) {
        throw std::invalid_argument("relation matrix is not an equivalence relation");
    }
}

void require_state_count(const BooleanMatrix& relation, int N) {
    if (relation.rows() != N || relation.cols() != N) {
        throw std::invalid_argument("relation dimension does not match the state count");
    }
}

}  // namespace

Partition Partition::from_block_of(std::vector<int> block_of) {
    Partition p;
    int next = 0;
    for (int b : block_of) {
        if (b < 0 || b > next) throw std::invalid_argument("block ids must be first-occurrence ordered");
        if (b == next) ++next;
    }
    p.block_of_ = std::move(block_of);
    p.num_blocks_ = next;
    return p;
}

Partition Partition::from_equivalence(const BooleanMatrix& relation) {
    require_equivalence(relation);
    return from_block_of(equal_row_classes(relation));
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(num_blocks_));
    for (int i = 0; i < size(); ++i) out[static_cast<size_t>(block_of_[static_cast<size_t>(i)])].push_back(i);
    return out;
}

BooleanMatrix Partition::relation_matrix() const {
    return equivalence_from_classes(block_of_);
}

LogicalMatrix Partition::projection() const {
    return {num_blocks_, block_of_};
}

TargetSet Partition::project_target(const TargetSet& target) const {
    if (target.ambient() != size()) {
        throw std::invalid_argument("target ambient does not match partition size");
    }
    std::vector<char> block_in(static_cast<size_t>(num_blocks_), 0);
    std::vector<char> block_out(static_cast<size_t>(num_blocks_), 0);
    for (int i = 0; i < size(); ++i) {
        (target.contains(i) ? block_in : block_out)[static_cast<size_t>(block_of(i))] = 1;
    }
    std::vector<int> members;
    for (int b = 0; b < num_blocks_; ++b) {
        if (block_in[static_cast<size_t>(b)] && block_out[static_cast<size_t>(b)]) {
            throw std::invalid_argument("partition does not refine the target split");
        }
        if (block_in[static_cast<size_t>(b)]) members.push_back(b);
    }
    return TargetSet::from_0based(num_blocks_, std::move(members));
}

BooleanMatrix relation_from_target(const TargetSet& target, int N) {
    if (target.ambient() != N) throw std::invalid_argument("target ambient does not match N");
    std::vector<int> side(static_cast<size_t>(N), 1);
    for (int s : target.members()) side[static_cast<size_t>(s)] = 0;
    bool has_outside = false;
    for (int v : side) has_outside = has_outside || v == 1;
    if (!has_outside) return BooleanMatrix::ones(N, N);
    return equivalence_from_classes(side);
}

BooleanMatrix one_step_reachability(const BcnModel& model) {
    BooleanMatrix reach1(model.N, model.N);
    for (int q = 0; q < model.M; ++q) {
        for (int i = 0; i < model.N; ++i) reach1.set(model.successor(i, q), i);
    }
    return reach1;
}

BooleanMatrix weak_bisim_matrix(const BooleanMatrix& relation, const BooleanMatrix& reach1) {
    if (relation.rows() != relation.cols() || reach1.rows() != reach1.cols() ||
        relation.rows() != reach1.rows()) {
        throw std::invalid_argument("weak bisim matrix needs square matrices of equal size");
    }
    BooleanMatrix projected = bool_product(relation, reach1);
    return equivalence_from_classes(equal_column_classes(projected));
}

BooleanMatrix strong_bisim_matrix(const BooleanMatrix& relation, const BcnModel& model) {
    require_equivalence(relation);
    require_state_count(relation, model.N);
    // Relation-projected column of a state's successor is determined by the
    // successor's relation class, so the per-state input response collapses
    // to a tuple of class ids.
    std::vector<int> state_class = equal_column_classes(relation);
    std::map<std::vector<int>, int> signature_class;
    std::vector<int> class_of(static_cast<size_t>(model.N));
    std::vector<int> signature(static_cast<size_t>(model.M));
    int next = 0;
    for (int i = 0; i < model.N; ++i) {
        for (int q = 0; q < model.M; ++q) {
            signature[static_cast<size_t>(q)] = state_class[static_cast<size_t>(model.successor(i, q))];
        }
        auto [it, inserted] = signature_class.try_emplace(signature, next);
        if (inserted) ++next;
        class_of[static_cast<size_t>(i)] = it->second;
    }
    // signature_class ids are insertion-ordered already (states scanned in order)
    return equivalence_from_classes(class_of);
}

RationalMatrix aggregated_transition(const PbcnModel& model) {
    model.validate();
    RationalMatrix out(model.N, model.N * model.M);
    for (const auto& mode : model.modes) {
        for (int i = 0; i < model.N; ++i) {
            for (int q = 0; q < model.M; ++q) {
                int succ = mode.F.unit_row(q * model.N + i);
                out.at(succ, i * model.M + q) += mode.probability;
            }
        }
    }
    return out;
}

BooleanMatrix prob_bisim_matrix(const BooleanMatrix& relation, const PbcnModel& model) {
    require_equivalence(relation);
    require_state_count(relation, model.N);
    Partition partition = Partition::from_equivalence(relation);
    RationalMatrix aggregated = aggregated_transition(model);
    // Per-state signature: probability of landing in each relation block,
    // per input.  Exact rational equality, no tolerance.
    std::map<std::vector<Rational>, int> signature_class;
    std::vector<int> class_of(static_cast<size_t>(model.N));
    int next = 0;
    for (int i = 0; i < model.N; ++i) {
        std::vector<Rational> signature(
            static_cast<size_t>(partition.num_blocks()) * static_cast<size_t>(model.M));
        for (int j = 0; j < model.N; ++j) {
            int b = partition.block_of(j);
            for (int q = 0; q < model.M; ++q) {
                const Rational& p = aggregated.at(j, i * model.M + q);
                if (!p.is_zero()) {
                    signature[static_cast<size_t>(b) * model.M + static_cast<size_t>(q)] += p;
                }
            }
        }
        auto [it, inserted] = signature_class.try_emplace(std::move(signature), next);
        if (inserted) ++next;
        class_of[static_cast<size_t>(i)] = it->second;
    }
    return equivalence_from_classes(class_of);
}

bool is_weak_bisimulation(const BooleanMatrix& relation, const BcnModel& model) {
    require_equivalence(relation);
    require_state_count(relation, model.N);
    return leq(relation, weak_bisim_matrix(relation, one_step_reachability(model)));
}

bool is_strong_bisimulation(const BooleanMatrix& relation, const BcnModel& model) {
    return leq(relation, strong_bisim_matrix(relation, model));
}

bool is_probabilistic_bisimulation(const BooleanMatrix& relation, const PbcnModel& model) {
    return leq(relation, prob_bisim_matrix(relation, model));
}

namespace {

template <typename StepMatrix>
MaxBisimResult refine_to_fixed_point(const BooleanMatrix& relation0, StepMatrix&& bisim_matrix_of) {
    require_equivalence(relation0);
    BooleanMatrix current = relation0;
    int k_star = 0;
    for (;;) {
        BooleanMatrix next = bool_and(current, bisim_matrix_of(current));
        if (next == current) break;
        current = std::move(next);
        ++k_star;
    }
    MaxBisimResult result;
    result.partition = Partition::from_equivalence(current);
    result.k_star = k_star;
    result.fixed_point = std::move(current);
    return result;
}

}  // namespace

MaxBisimResult max_bisimulation(const BooleanMatrix& relation0, const BcnModel& model,
                                BisimMode mode) {
    require_state_count(relation0, model.N);
    switch (mode) {
        case BisimMode::weak: {
            BooleanMatrix reach1 = one_step_reachability(model);
            return refine_to_fixed_point(
                relation0, [&](const BooleanMatrix& rel) { return weak_bisim_matrix(rel, reach1); });
        }
        case BisimMode::strong:
            return refine_to_fixed_point(
                relation0, [&](const BooleanMatrix& rel) { return strong_bisim_matrix(rel, model); });
        case BisimMode::probabilistic:
            throw std::invalid_argument("probabilistic mode needs a probabilistic model");
    }
    throw std::logic_error("unreachable bisimulation mode");
}

MaxBisimResult max_bisimulation(const BooleanMatrix& relation0, const PbcnModel& model) {
    require_state_count(relation0, model.N);
    return refine_to_fixed_point(
        relation0, [&](const BooleanMatrix& rel) { return prob_bisim_matrix(rel, model); });
}

QuotientWeak quotient_weak(const Partition& partition, const BooleanMatrix& reach1) {
    if (reach1.rows() != partition.size() || reach1.cols() != partition.size()) {
        throw std::invalid_argument("reachability matrix does not match partition size");
    }
    BooleanMatrix proj = partition.projection().to_boolean();
    return {bool_product(bool_product(proj, reach1), proj.transpose()), partition.projection()};
}

QuotientStrong quotient_strong(const Partition& partition, const BcnModel& model) {
    if (partition.size() != model.N) {
        throw std::invalid_argument("partition does not match the model state count");
    }
    int nb = partition.num_blocks();
    QuotientStrong q;
    q.blocks = BooleanMatrix(nb, nb * model.M);
    q.projection = partition.projection();
    q.num_inputs = model.M;
    for (int input = 0; input < model.M; ++input) {
        for (int i = 0; i < model.N; ++i) {
            q.blocks.set(partition.block_of(model.successor(i, input)),
                         input * nb + partition.block_of(i));
        }
    }
    return q;
}

BooleanMatrix QuotientStrong::input_block(int input0) const {
    int nb = blocks.rows();
    BooleanMatrix out(nb, nb);
    for (int r = 0; r < nb; ++r) {
        for (int c = 0; c < nb; ++c) {
            if (blocks.get(r, input0 * nb + c)) out.set(r, c);
        }
    }
    return out;
}

BooleanMatrix QuotientStrong::one_step() const {
    int nb = blocks.rows();
    BooleanMatrix out(nb, nb);
    for (int q = 0; q < num_inputs; ++q) out = bool_or(out, input_block(q));
    return out;
}

}  // namespace bcn
