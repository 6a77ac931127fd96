#pragma once

#include "ew/crystal.hpp"
#include "ew/energy.hpp"
#include "ew/root_data.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ew {

// p_r for r < head.size(); p_r = b_r beyond.
struct LambdaPath {
    std::vector<int> head;
    bool operator==(const LambdaPath& o) const = default;
    auto operator<=>(const LambdaPath& o) const = default;
};

// s_r for r < head.size(); s_r = g_r beyond.
struct FockPath {
    std::vector<AffineElem> head;
    bool operator==(const FockPath& o) const = default;
    auto operator<=>(const FockPath& o) const = default;
};

class PathModel {
public:
    PathModel(const CartanSpec& spec, const CrystalGraph& b, const EnergyTable& h, const GroundState& g);

    LambdaPath ground() const { return {}; }
    std::optional<LambdaPath> step(const LambdaPath& p, Dir d, int i) const;
    Weight weight(const LambdaPath& p) const;
    int eps(const LambdaPath& p, int i) const;
    int phi(const LambdaPath& p, int i) const;

    FockPath fock_ground() const { return {}; }
    std::optional<FockPath> fock_step(const FockPath& p, Dir d, int i) const;
    Weight fock_weight(const FockPath& p) const;
    bool fock_valid(const FockPath& p) const;
    bool fock_hw(const FockPath& p) const;               // e_i = NONE for all i
    bool fock_hw_description(const FockPath& p) const;   // z^(n_r) g_r with n non-decreasing
    std::optional<FockPath> fock_lower_power(const FockPath& p, int r) const;
    std::optional<FockPath> fock_raise_power(const FockPath& p, int r) const;

    FockPath embed(const LambdaPath& p) const;

    int entry(const LambdaPath& p, int r) const;
    AffineElem entry(const FockPath& p, int r) const;

    std::vector<LambdaPath> enumerate(int depth) const;
    // Highest weight paths from the n_r description, then f-closure within total depth.
    std::vector<FockPath> enumerate_fock(int depth) const;
    int fock_depth(const FockPath& p) const;

    std::string to_string(const LambdaPath& p) const;
    std::string to_string(const FockPath& p) const;

private:
    // Position acted on among tail, head[L-1], ..., head[0]: an index r < L, L for the tail, or NONE.
    int act_position(const std::vector<int>& bases, int node_after, Dir d, int i) const;
    void trim(LambdaPath& p) const;
    void trim(FockPath& p) const;

    const CartanSpec& spec_;
    const CrystalGraph& b_;
    const EnergyTable& h_;
    const GroundState& g_;
    std::vector<std::vector<int>> eps_;   // eps_[i][b]
    std::vector<std::vector<int>> phi_;
};

// All non-increasing sequences of positive integers with sum k.
std::vector<std::vector<int>> partitions_of(int k);

std::vector<int> partitions_up_to(int n);   // p(0..n)

} // namespace ew
