#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bcn/model.hpp"

namespace bcn {

struct SourceLocation {
    int line = 0;  // 1-based
    int col = 0;   // 1-based
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, SourceLocation where)
        : std::runtime_error(std::to_string(where.line) + ":" + std::to_string(where.col) +
                             ": " + message),
          where_(where) {}

    [[nodiscard]] SourceLocation where() const { return where_; }

private:
    SourceLocation where_;
};

/// Boolean expression over declared variables.  Variable ids are assigned in
/// declaration order, inputs first (0..m-1) then states (m..m+n-1).
struct Expr {
    enum class Kind {
        constant,
        variable,
        negation,
        conjunction,
        disjunction,
        implication,
        equivalence,
    };

    Kind kind = Kind::constant;
    bool value = false;                 // constant
    int var = -1;                       // variable id
    std::string name;                   // variable name, kept for printing
    std::unique_ptr<Expr> lhs, rhs;     // negation uses lhs only
};

using ExprPtr = std::unique_ptr<Expr>;

/// Evaluate with assignment[id] giving each variable's truth value.
bool eval(const Expr& expr, const std::vector<bool>& assignment);

/// Target set written either as explicit 1-based delta indices or as a
/// predicate over the state variables.
struct TargetSpec {
    std::vector<int> explicit_members;  // 1-based; empty when predicate is set
    ExprPtr predicate;
};

struct NetworkMode {
    Rational probability;
    std::vector<ExprPtr> rules;  // one per state variable, in declaration order
};

struct NetworkSource {
    std::vector<std::string> input_vars;
    std::vector<std::string> state_vars;
    std::vector<ExprPtr> rules;       // plain network; empty when modes are used
    std::vector<NetworkMode> modes;
    std::optional<TargetSpec> target;

    [[nodiscard]] int num_inputs() const { return static_cast<int>(input_vars.size()); }
    [[nodiscard]] int num_states() const { return static_cast<int>(state_vars.size()); }
    [[nodiscard]] bool probabilistic() const { return !modes.empty(); }
};

/// Parse the `.bcn` text format.  Errors carry 1-based line/column positions.
NetworkSource parse_network(std::string_view text);

/// Canonical printer; parse(to_canonical_text(s)) reproduces s exactly.
std::string to_canonical_text(const NetworkSource& source);

/// Structure matrix of `expr` over the ordered variable list `var_ids`:
/// the j-th column is the function value at the j-th delta index of the
/// stacked argument vector (truth value 1 comes first).  Every variable the
/// expression references must appear in var_ids.
LogicalMatrix compile_function(const Expr& expr, std::span<const int> var_ids);

/// Delta index (0-based) of a state bit vector, all-true mapping to index 0.
int state_index_from_bits(const std::vector<bool>& bits);
std::vector<bool> bits_from_state_index(int index0, int num_bits);

struct AssembledModel {
    std::variant<BcnModel, PbcnModel> model;
    std::optional<TargetSet> target;

    [[nodiscard]] bool probabilistic() const { return model.index() == 1; }
    [[nodiscard]] const BcnModel& bcn() const { return std::get<BcnModel>(model); }
    [[nodiscard]] const PbcnModel& pbcn() const { return std::get<PbcnModel>(model); }
};

/// Build the global transition matrix (columnwise Kronecker of the per-node
/// structure matrices) and resolve the target set, if any.
AssembledModel assemble(const NetworkSource& source);

}  // namespace bcn
