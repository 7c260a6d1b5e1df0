#include "bcn/stabilization.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace bcn {

BooleanMatrix target_selector_matrix(const TargetSet& target, int n_states) {
    if (target.ambient() != n_states) {
        throw std::out_of_range("target ambient does not match the state count");
    }
    BooleanMatrix sel(n_states, n_states);
    for (int s : target.members()) sel.set(s, s);
    return sel;
}

ReachabilityClosure reachability_closure(const BooleanMatrix& reach1) {
    if (reach1.rows() != reach1.cols()) {
        throw std::invalid_argument("reachability closure needs a square matrix");
    }
    std::vector<BooleanMatrix> powers{reach1};
    BooleanMatrix accumulated = reach1;
    for (;;) {
        BooleanMatrix next = bool_product(powers.back(), reach1);
        if (std::find(powers.begin(), powers.end(), next) != powers.end()) {
            return {std::move(accumulated), static_cast<int>(powers.size())};
        }
        accumulated = bool_or(accumulated, next);
        powers.push_back(std::move(next));
    }
}

namespace {

// (selector (*) reach1)^|target|: entry (i,j) = 1 iff some length-|target|
// path from j lands in the target at every step and ends in i.
BooleanMatrix held_in_target_power(const BooleanMatrix& reach1, const BooleanMatrix& selector,
                                   int target_size) {
    return bool_power(bool_product(selector, reach1), target_size);
}

}  // namespace

StabilizationReport check_stabilizable(const BooleanMatrix& reach1, const TargetSet& target) {
    BooleanMatrix selector = target_selector_matrix(target, reach1.rows());
    ReachabilityClosure closure = reachability_closure(reach1);
    BooleanMatrix held = held_in_target_power(reach1, selector, target.size());
    BooleanMatrix composite = bool_product(bool_product(held, selector), closure.reach);
    bool stabilizable = true;
    for (int j = 0; j < composite.cols(); ++j) {
        if (composite.column_empty(j)) {
            stabilizable = false;
            break;
        }
    }
    return {target, std::move(selector), std::move(closure.reach), closure.l_star, stabilizable};
}

StabilizationLayers stabilization_layers(const BooleanMatrix& reach1, const TargetSet& target) {
    int n = reach1.rows();
    BooleanMatrix selector = target_selector_matrix(target, n);
    BooleanMatrix held = held_in_target_power(reach1, selector, target.size());

    StabilizationLayers out;
    out.layer_of.assign(static_cast<size_t>(n), -1);

    std::vector<int> core;
    for (int s : target.members()) {
        if (!held.column_empty(s)) core.push_back(s);
    }
    if (core.empty()) return out;
    for (int s : core) out.layer_of[static_cast<size_t>(s)] = 0;
    out.layers.push_back(std::move(core));

    int assigned = static_cast<int>(out.layers.front().size());
    while (assigned < n) {
        const std::vector<int>& previous = out.layers.back();
        std::vector<char> hit(static_cast<size_t>(n), 0);
        for (int s : previous) {
            // column s of the transpose view: predecessors of s
            for (int j = 0; j < n; ++j) {
                if (reach1.get(s, j)) hit[static_cast<size_t>(j)] = 1;
            }
        }
        std::vector<int> layer;
        for (int j = 0; j < n; ++j) {
            if (hit[static_cast<size_t>(j)] && out.layer_of[static_cast<size_t>(j)] < 0) {
                layer.push_back(j);
            }
        }
        if (layer.empty()) break;
        int depth = static_cast<int>(out.layers.size());
        for (int j : layer) out.layer_of[static_cast<size_t>(j)] = depth;
        assigned += static_cast<int>(layer.size());
        out.layers.push_back(std::move(layer));
    }
    out.covers = assigned == n;
    return out;
}

namespace {

std::vector<int> uncovered_states(const StabilizationLayers& layers) {
    std::vector<int> out;
    for (size_t i = 0; i < layers.layer_of.size(); ++i) {
        if (layers.layer_of[i] < 0) out.push_back(static_cast<int>(i));
    }
    return out;
}

void require_covering(const StabilizationLayers& layers) {
    if (!layers.covers) {
        auto uncovered = uncovered_states(layers);
        std::string msg = "synthesis needs a stabilizable system; no layer reaches quotient state(s)";
        for (int s : uncovered) msg += " " + std::to_string(s + 1);
        throw NotStabilizableError(std::move(msg), std::move(uncovered));
    }
}

SynthesisResult finalize(StabilizationLayers layers, std::vector<std::vector<int>> theta, int M) {
    std::vector<int> canonical(theta.size());
    boost::multiprecision::cpp_int family = 1;
    for (size_t i = 0; i < theta.size(); ++i) {
        if (theta[i].empty()) {
            throw std::logic_error("empty admissible input set for state " + std::to_string(i + 1));
        }
        canonical[i] = theta[i].front();
        family *= theta[i].size();
    }
    SynthesisResult result;
    result.layers = std::move(layers);
    result.theta = std::move(theta);
    result.canonical_feedback = LogicalMatrix(M, std::move(canonical));
    result.family_size_decimal = family.str();
    return result;
}

}  // namespace

SynthesisResult synthesize_weak(const BcnModel& model, const Partition& partition,
                                const StabilizationLayers& layers) {
    if (partition.size() != model.N) {
        throw std::invalid_argument("partition does not match the model state count");
    }
    if (static_cast<int>(layers.layer_of.size()) != partition.num_blocks()) {
        throw std::invalid_argument("layers do not match the quotient size");
    }
    require_covering(layers);
    std::vector<std::vector<int>> theta(static_cast<size_t>(model.N));
    for (int i = 0; i < model.N; ++i) {
        int k = layers.layer_of[static_cast<size_t>(partition.block_of(i))];
        int b = k >= 1 ? k - 1 : 0;
        for (int q = 0; q < model.M; ++q) {
            int projected = partition.block_of(model.successor(i, q));
            if (layers.layer_of[static_cast<size_t>(projected)] == b) {
                theta[static_cast<size_t>(i)].push_back(q);
            }
        }
    }
    return finalize(layers, std::move(theta), model.M);
}

SynthesisResult synthesize_strong(const BcnModel& model, const QuotientStrong& quotient,
                                  const TargetSet& quotient_target) {
    if (quotient.projection.cols() != model.N || quotient.num_inputs != model.M) {
        throw std::invalid_argument("quotient does not match the model dimensions");
    }
    StabilizationLayers layers = stabilization_layers(quotient.one_step(), quotient_target);
    require_covering(layers);
    int nb = quotient.blocks.rows();
    // successor block per (block, input); -1 when the quotient column is not
    // a unit vector (never happens for a strong-bisimulation quotient)
    std::vector<std::vector<int>> block_succ(static_cast<size_t>(nb), std::vector<int>(model.M, -1));
    for (int blk = 0; blk < nb; ++blk) {
        for (int q = 0; q < model.M; ++q) {
            int found = -1;
            bool unit = true;
            for (int r = 0; r < nb; ++r) {
                if (quotient.blocks.get(r, q * nb + blk)) {
                    unit = found < 0;
                    found = r;
                }
            }
            if (unit && found >= 0) block_succ[static_cast<size_t>(blk)][static_cast<size_t>(q)] = found;
        }
    }
    std::vector<std::vector<int>> theta(static_cast<size_t>(model.N));
    for (int i = 0; i < model.N; ++i) {
        int blk = quotient.projection.unit_row(i);
        int k = layers.layer_of[static_cast<size_t>(blk)];
        int b = k >= 1 ? k - 1 : 0;
        for (int q = 0; q < model.M; ++q) {
            int next = block_succ[static_cast<size_t>(blk)][static_cast<size_t>(q)];
            if (next >= 0 && layers.layer_of[static_cast<size_t>(next)] == b) {
                theta[static_cast<size_t>(i)].push_back(q);
            }
        }
    }
    return finalize(std::move(layers), std::move(theta), model.M);
}

LogicalMatrix closed_loop(const BcnModel& model, const LogicalMatrix& feedback) {
    if (feedback.rows() != model.M || feedback.cols() != model.N) {
        throw std::invalid_argument("feedback matrix must be M x N");
    }
    std::vector<int> cols(static_cast<size_t>(model.N));
    for (int i = 0; i < model.N; ++i) {
        cols[static_cast<size_t>(i)] = model.successor(i, feedback.unit_row(i));
    }
    return {model.N, std::move(cols)};
}

std::vector<int> simulate(const BcnModel& model, const LogicalMatrix& feedback, int x0, int steps) {
    if (x0 < 0 || x0 >= model.N) throw std::out_of_range("initial state out of range");
    LogicalMatrix loop = closed_loop(model, feedback);
    std::vector<int> trajectory(static_cast<size_t>(steps) + 1);
    trajectory[0] = x0;
    for (int t = 0; t < steps; ++t) {
        trajectory[static_cast<size_t>(t) + 1] = loop.unit_row(trajectory[static_cast<size_t>(t)]);
    }
    return trajectory;
}

std::vector<std::optional<int>> stabilization_times(const BcnModel& model,
                                                    const LogicalMatrix& feedback,
                                                    const TargetSet& target) {
    if (target.ambient() != model.N) {
        throw std::invalid_argument("target ambient does not match the model");
    }
    LogicalMatrix loop = closed_loop(model, feedback);
    std::vector<std::optional<int>> times(static_cast<size_t>(model.N));
    std::vector<int> visit_step(static_cast<size_t>(model.N));
    for (int x0 = 0; x0 < model.N; ++x0) {
        // Walk until a state repeats; the trajectory is path + cycle.
        std::fill(visit_step.begin(), visit_step.end(), -1);
        std::vector<int> path;
        int x = x0;
        while (visit_step[static_cast<size_t>(x)] < 0) {
            visit_step[static_cast<size_t>(x)] = static_cast<int>(path.size());
            path.push_back(x);
            x = loop.unit_row(x);
        }
        int cycle_start = visit_step[static_cast<size_t>(x)];
        bool cycle_inside = true;
        for (size_t t = static_cast<size_t>(cycle_start); t < path.size(); ++t) {
            cycle_inside = cycle_inside && target.contains(path[t]);
        }
        if (!cycle_inside) continue;
        int entry = 0;
        for (int t = cycle_start - 1; t >= 0; --t) {
            if (!target.contains(path[static_cast<size_t>(t)])) {
                entry = t + 1;
                break;
            }
        }
        times[static_cast<size_t>(x0)] = entry;
    }
    return times;
}

}  // namespace bcn
