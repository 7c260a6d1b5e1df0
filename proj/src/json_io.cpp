#include "bcn/json_io.hpp"

#include <nlohmann/json.hpp>

namespace bcn {

json to_json(const LogicalMatrix& m) {
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"delta", m.delta_indices()}};
}

LogicalMatrix logical_from_json(const json& j) {
    int rows = j.at("rows").get<int>();
    auto delta = j.at("delta").get<std::vector<int>>();
    if (j.contains("cols") && j.at("cols").get<int>() != static_cast<int>(delta.size())) {
        throw std::invalid_argument("logical matrix cols does not match delta length");
    }
    return LogicalMatrix::delta(rows, delta);
}

json to_json(const BooleanMatrix& m) {
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"bits", m.to_bitstrings()}};
}

BooleanMatrix boolean_from_json(const json& j) {
    auto bits = j.at("bits").get<std::vector<std::string>>();
    BooleanMatrix m = BooleanMatrix::from_bitstrings(bits);
    if (j.at("rows").get<int>() != m.rows() || j.at("cols").get<int>() != m.cols()) {
        throw std::invalid_argument("boolean matrix dimensions do not match bitstrings");
    }
    return m;
}

json model_to_json(const AssembledModel& assembled) {
    json j;
    auto dims = [&](int bits_n, int bits_m, int N, int M) {
        if (bits_n >= 0) j["n"] = bits_n;
        if (bits_m >= 0) j["m"] = bits_m;
        j["N"] = N;
        j["M"] = M;
    };
    if (!assembled.probabilistic()) {
        const BcnModel& model = assembled.bcn();
        dims(model.bits_n, model.bits_m, model.N, model.M);
        j["F"] = to_json(model.F);
    } else {
        const PbcnModel& model = assembled.pbcn();
        dims(model.bits_n, model.bits_m, model.N, model.M);
        json modes = json::array();
        for (const auto& mode : model.modes) {
            modes.push_back(json{{"p", mode.probability.str()}, {"F", to_json(mode.F)}});
        }
        j["modes"] = std::move(modes);
    }
    if (assembled.target) j["target"] = assembled.target->members_1based();
    return j;
}

AssembledModel model_from_json(const json& j) {
    int N = j.at("N").get<int>();
    int M = j.at("M").get<int>();
    AssembledModel out;
    if (j.contains("modes")) {
        PbcnModel model;
        model.N = N;
        model.M = M;
        model.bits_n = j.value("n", -1);
        model.bits_m = j.value("m", -1);
        for (const auto& mode : j.at("modes")) {
            model.modes.push_back(
                {logical_from_json(mode.at("F")), Rational::parse(mode.at("p").get<std::string>())});
        }
        model.validate();
        out.model = std::move(model);
    } else {
        out.model = BcnModel::from_matrix(N, M, logical_from_json(j.at("F")));
    }
    if (j.contains("target")) {
        auto members = j.at("target").get<std::vector<int>>();
        out.target = TargetSet::from_1based(N, members);
    }
    return out;
}

json partition_to_json(const Partition& partition) {
    json blocks = json::array();
    for (const auto& block : partition.blocks()) {
        json members = json::array();
        for (int s : block) members.push_back(s + 1);
        blocks.push_back(std::move(members));
    }
    return blocks;
}

json reduce_report_json(const std::string& criterion, bool holds, const MaxBisimResult& result,
                        const QuotientWeak* weak, const QuotientStrong* strong) {
    json j{{"criterion", criterion},
           {"holds", holds},
           {"k_star", result.k_star},
           {"num_blocks", result.partition.num_blocks()},
           {"partition", partition_to_json(result.partition)}};
    if (weak != nullptr) {
        j["quotient"] = json{{"one_step", to_json(weak->reach1_q)},
                             {"projection", to_json(weak->projection)}};
    } else if (strong != nullptr) {
        j["quotient"] = json{{"transition_blocks", to_json(strong->blocks)},
                             {"num_inputs", strong->num_inputs},
                             {"projection", to_json(strong->projection)}};
    } else {
        j["quotient"] = nullptr;
    }
    return j;
}

json stabilization_report_json(const StabilizationReport& report) {
    return json{{"stabilizable", report.stabilizable},
                {"l_star", report.l_star},
                {"target", report.target.members_1based()},
                {"selector", to_json(report.selector)},
                {"reachability", to_json(report.reach)}};
}

json synthesis_report_json(const StabilizationReport& report, const SynthesisResult& synthesis) {
    json layers = json::array();
    for (const auto& layer : synthesis.layers.layers) {
        json members = json::array();
        for (int s : layer) members.push_back(s + 1);
        layers.push_back(std::move(members));
    }
    json theta = json::object();
    for (size_t i = 0; i < synthesis.theta.size(); ++i) {
        json inputs = json::array();
        for (int q : synthesis.theta[i]) inputs.push_back(q + 1);
        theta[std::to_string(i + 1)] = std::move(inputs);
    }
    return json{{"stabilizable", report.stabilizable},
                {"l_star", report.l_star},
                {"layers", std::move(layers)},
                {"theta", std::move(theta)},
                {"canonical_G", to_json(synthesis.canonical_feedback)},
                {"family_size", synthesis.family_size_decimal}};
}

std::string dot_digraph(const BooleanMatrix& reach1, const std::string& name) {
    std::string out = "digraph " + name + " {\n";
    for (int j = 0; j < reach1.cols(); ++j) {
        for (int i : reach1.column_support(j)) {
            out += "  " + std::to_string(j + 1) + " -> " + std::to_string(i + 1) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

std::string trajectory_csv(const std::vector<int>& trajectory) {
    std::string out = "step,state_index\n";
    for (size_t t = 0; t < trajectory.size(); ++t) {
        out += std::to_string(t) + "," + std::to_string(trajectory[t] + 1) + "\n";
    }
    return out;
}

std::string all_trajectories_csv(const BcnModel& model, const LogicalMatrix& feedback, int steps) {
    std::string out = "initial_state,step,state\n";
    for (int x0 = 0; x0 < model.N; ++x0) {
        std::vector<int> trajectory = simulate(model, feedback, x0, steps);
        for (size_t t = 0; t < trajectory.size(); ++t) {
            out += std::to_string(x0 + 1) + "," + std::to_string(t) + "," +
                   std::to_string(trajectory[t] + 1) + "\n";
        }
    }
    return out;
}

}  // namespace bcn
