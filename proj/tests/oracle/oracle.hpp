#pragma once

// Brute-force reference implementations over the explicit controlled
// transition graph.  These deliberately avoid the matrix pipeline they are
// used to validate: everything here is plain set/game/BFS logic on successor
// tables, favoring clarity over speed.

#include <optional>
#include <random>
#include <vector>

#include "bcn/bisimulation.hpp"
#include "bcn/model.hpp"

namespace bcn::oracle {

/// Explicit controlled transition graph: one successor per (state, input),
/// or one exact rational distribution per (state, input).
struct ExplicitGraph {
    int N = 0;
    int M = 0;
    std::vector<std::vector<int>> succ;  // [state][input], deterministic systems
    bool probabilistic = false;
    // [state][input] -> sparse (successor, probability) list, probabilities sum to 1
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> dist;

    static ExplicitGraph from_model(const BcnModel& model);
    static ExplicitGraph from_model(const PbcnModel& model);
};

/// Relation over states as a dense 0/1 table.
using Relation = std::vector<std::vector<char>>;

Relation relation_from_matrix(const BooleanMatrix& m);
BooleanMatrix relation_to_matrix(const Relation& rel);

/// Direct game-condition checks on every related pair: weak matching allows
/// a different input on the other side, strong demands the same input.
bool oracle_is_weak(const Relation& rel, const ExplicitGraph& graph);
bool oracle_is_strong(const Relation& rel, const ExplicitGraph& graph);

enum class OracleMode { weak, strong, probabilistic };

/// Naive refinement: repeatedly delete pairs violating the one-step game
/// condition until stable, then close transitively.  Returns block ids per
/// state, first-occurrence ordered.
std::vector<int> oracle_max_bisim(const Relation& rel, const ExplicitGraph& graph, OracleMode mode);

struct OracleStabilization {
    bool stabilizable = false;
    // Shortest time to enter the largest controlled-invariant subset of the
    // target and stay; nullopt when unreachable.
    std::vector<std::optional<int>> times;
};

/// target0 holds 0-based target states.
OracleStabilization oracle_stabilizable(const ExplicitGraph& graph, const std::vector<int>& target0);

/// Definition-level probabilistic bisimulation check: evolve exact
/// distributions along input sequences (depth-first up to `horizon`, at most
/// `budget` evolution steps per pair) and compare per-block probabilities at
/// every time.  A false result always carries a concrete witness; a true
/// result certifies every sequence explored within the budget.
bool oracle_prob_bisim(const Relation& rel, const ExplicitGraph& graph, int horizon, long budget);

// ------------------------------------------------------------------------
// Seeded random instances.  Uniform successor choice; uniform block counts.

BcnModel random_model(std::mt19937_64& rng, int N, int M);
Partition random_partition(std::mt19937_64& rng, int N);
BooleanMatrix random_equivalence(std::mt19937_64& rng, int N);
TargetSet random_target(std::mt19937_64& rng, int N);
PbcnModel random_pbcn(std::mt19937_64& rng, int N, int M, int num_modes);

}  // namespace bcn::oracle
