#include "bcn/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcn {

TargetSet TargetSet::from_1based(int ambient, std::span<const int> members) {
    std::vector<int> zero_based(members.size());
    for (size_t i = 0; i < members.size(); ++i) zero_based[i] = members[i] - 1;
    return from_0based(ambient, std::move(zero_based));
}

TargetSet TargetSet::from_1based(int ambient, std::initializer_list<int> members) {
    return from_1based(ambient, std::span<const int>(members.begin(), members.size()));
}

TargetSet TargetSet::from_0based(int ambient, std::vector<int> members) {
    if (ambient <= 0) throw std::invalid_argument("target set needs a positive ambient size");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw std::invalid_argument("target set must be nonempty");
    if (members.front() < 0 || members.back() >= ambient) {
        throw std::out_of_range("target state outside [1, ambient]");
    }
    TargetSet t;
    t.ambient_ = ambient;
    t.members_ = std::move(members);
    return t;
}

std::vector<int> TargetSet::members_1based() const {
    std::vector<int> out(members_.size());
    for (size_t i = 0; i < members_.size(); ++i) out[i] = members_[i] + 1;
    return out;
}

bool TargetSet::contains(int state0) const {
    return std::binary_search(members_.begin(), members_.end(), state0);
}

LogicalMatrix BcnModel::input_block(int input0) const {
    std::vector<int> cols(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) cols[static_cast<size_t>(i)] = successor(i, input0);
    return {N, std::move(cols)};
}

namespace {

int exact_log2(int value) {
    int bits = 0;
    int v = value;
    while (v > 1) {
        v >>= 1;
        ++bits;
    }
    return (1 << bits) == value ? bits : -1;
}

}  // namespace

BcnModel BcnModel::from_matrix(int N, int M, LogicalMatrix F) {
    if (N <= 0 || M <= 0) throw std::invalid_argument("model dimensions must be positive");
    if (F.rows() != N || F.cols() != static_cast<long long>(N) * M) {
        throw std::invalid_argument("transition matrix must be N x N*M");
    }
    BcnModel model;
    model.bits_n = exact_log2(N);
    model.bits_m = exact_log2(M);
    model.N = N;
    model.M = M;
    model.F = std::move(F);
    return model;
}

BcnModel BcnModel::from_delta_columns(int N, int M, std::span<const int> one_based) {
    if (static_cast<long long>(one_based.size()) != static_cast<long long>(N) * M) {
        throw std::invalid_argument("delta column list must have N*M entries");
    }
    return from_matrix(N, M, LogicalMatrix::delta(N, one_based));
}

BcnModel BcnModel::from_delta_columns(int N, int M, std::initializer_list<int> one_based) {
    return from_delta_columns(N, M, std::span<const int>(one_based.begin(), one_based.size()));
}

void PbcnModel::validate() const {
    if (modes.empty()) throw std::invalid_argument("probabilistic model needs at least one mode");
    Rational sum = 0;
    for (const auto& mode : modes) {
        if (mode.F.rows() != N || mode.F.cols() != static_cast<long long>(N) * M) {
            throw std::invalid_argument("mode transition matrix must be N x N*M");
        }
        if (!(mode.probability > Rational(0))) {
            throw std::invalid_argument("mode probabilities must be positive");
        }
        sum += mode.probability;
    }
    if (sum != Rational(1)) {
        throw std::invalid_argument("mode probabilities must sum to 1, got " + sum.str());
    }
}

}  // namespace bcn
