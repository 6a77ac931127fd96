#pragma once

#include "ew/crystal.hpp"

#include <limits>
#include <vector>

namespace ew {

struct EnergyTable {
    int n = 0;
    int seed = NONE;
    std::vector<int> values;
    int at(int left, int right) const { return values[left * n + right]; }
};

// Propagates H over B (x) B from (b*, b*) = 0 with b* the least extremal element.
EnergyTable energy_table(const CrystalGraph& b);
EnergyTable energy_table(const CrystalGraph& b, int seed);

constexpr int INF_DIST = std::numeric_limits<int>::max();

struct ZeroArrowDistance {
    int n = 0;
    std::vector<int> dist;
    int at(int from, int to) const { return dist[from * n + to]; }
};

// Minimum number of 0-arrows over directed paths, by 0/1 BFS per source.
ZeroArrowDistance zero_arrow_distance(const CrystalGraph& b);

int h_aff(const EnergyTable& h, AffineElem left, AffineElem right);

struct MaximalVector {
    int left = 0;
    int right = 0;
    int h = 0;
};

// Pairs of B (x) B killed by e_i for every i != 0.
std::vector<MaximalVector> maximal_vectors(const CrystalGraph& b, const EnergyTable& h);

// Component of a tensor graph after forgetting 0-arrows, ascending ids.
std::vector<int> classical_component(const CrystalGraph& tensor_graph, int seed);

// Ground state data of a level 1 weight: b_r = b_(lambda_r), lambda_(r+1) = eps(b_r),
// H(b_(r+1) (x) b_r) and the Fock z-powers m_r with H_aff(g_(r+1) (x) g_r) = 1.
struct GroundState {
    int node = 0;                // lambda = Lambda_node
    int offset = 0;              // position of lambda in the Lambda_0 chain
    int period = 1;
    std::vector<int> nodes;      // lambda_r for one period
    std::vector<int> b;          // b_r for one period
    std::vector<int> h;          // H(b_(r+1) (x) b_r) for one period
    std::vector<int> m;          // m_r for one period
    int drift = 0;               // m_(r+period) - m_r

    int b_at(int r) const { return b[r % period]; }
    int h_at(int r) const { return h[r % period]; }
    int node_at(int r) const { return nodes[r % period]; }
    int m_at(int r) const { return m[r % period] + (r / period) * drift; }
    AffineElem g_at(int r) const { return {b_at(r), m_at(r)}; }
};

// Follows the eps-chain from Lambda_node; m is normalised so that m_0 = 0 for Lambda_0 and
// the other weights reuse the Lambda_0 values from the point where their chain begins.
GroundState ground_state(const CartanSpec& spec, const CrystalGraph& b, const EnergyTable& h, int node);

} // namespace ew
