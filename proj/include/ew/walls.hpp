#pragma once

#include "ew/columns.hpp"
#include "ew/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ew {

enum class WallKind { reduced, fock };

// Columns r = 0 .. cols.size()-1; beyond that the wall equals the ground state wall.
struct YoungWall {
    int node = 0;
    std::vector<ColumnClass> cols;
    bool operator==(const YoungWall& o) const = default;
    auto operator<=>(const YoungWall& o) const = default;
};

struct SignatureRun {
    int column = 0;   // the tail is reported as column = cols.size()
    int minus = 0;
    int plus = 0;
};

struct Signature {
    std::vector<SignatureRun> runs;   // surviving signs, leftmost (highest column) first
    int leftmost_plus = NONE;
    int rightmost_minus = NONE;
    int plus_count = 0;
    int minus_count = 0;
};

struct RightBlockPair {
    int r = 0;                 // the pair (r+1, r)
    bool holds = false;
    int h_aff = 0;
    bool exempt = false;       // E8 pair with H_aff = 2
    int gap = 0;               // gap quantity of the right block argument, derived form
    int gap_printed = 0;       // the same quantity as printed in the text
};

class WallModel {
public:
    WallModel(const TypeModel& m, int node, WallKind kind);

    const TypeModel& model() const { return m_; }
    WallKind kind() const { return kind_; }
    int node() const { return node_; }

    YoungWall ground() const;
    ColumnClass ground_col(int r) const;
    ColumnClass col(const YoungWall& w, int r) const;
    void normalize(YoungWall& w) const;

    Signature signature(const YoungWall& w, int i) const;
    std::optional<YoungWall> step(const YoungWall& w, Dir d, int i) const;
    Weight weight(const YoungWall& w) const;

    int zero_count(const YoungWall& w, int r) const;    // |y_r|_0 from realised blocks
    int block_total(const YoungWall& w, int r) const;   // |y_r| from realised blocks
    int h_aff_pair(const YoungWall& w, int r) const;    // H_aff(col r+1 (x) col r)

    bool is_reduced(const YoungWall& w) const;
    bool normally_ordered_energy(const YoungWall& w) const;
    bool normally_ordered_blocks(const YoungWall& w) const;
    bool is_normally_ordered(const YoungWall& w) const;

    std::optional<YoungWall> insert_delta(const YoungWall& w, int r) const;
    std::optional<YoungWall> remove_delta(const YoungWall& w, int r) const;
    std::vector<int> removable_delta_columns(const YoungWall& w) const;

    bool right_block(ColumnClass next, ColumnClass here) const;
    // Derived gap for the pair (z^n psi(b), z^m psi(a)); printed_form selects the E8 formula as printed.
    int right_block_gap(int b, int a, bool printed_form = false) const;
    std::vector<RightBlockPair> right_block_report(const YoungWall& w) const;
    bool built_on_ground(const YoungWall& w) const;

    std::vector<int> to_path(const YoungWall& w) const;
    std::vector<AffineElem> to_fock_path(const YoungWall& w) const;

    // Total depth: f-steps from the highest weight ancestor plus the number of removed deltas.
    int fock_depth(const YoungWall& w) const;
    YoungWall highest_weight_ancestor(const YoungWall& w) const;

    nlohmann::json to_json(const YoungWall& w) const;

private:
    int lambda_node_at(int r) const;
    int blocks_realised(ColumnClass k, int i) const;
    bool valid(const YoungWall& w) const;
    int pair_energy(ColumnClass next, ColumnClass here) const;

    const TypeModel& m_;
    int node_;
    WallKind kind_;
    const GroundState& g_;
    std::vector<std::vector<int>> eps_;   // eps_[i][class]
    std::vector<std::vector<int>> phi_;
    std::vector<int> class_total_;        // sum over colours of counts[class]
};

// Walls within f-distance depth of the highest weight walls (reduced), or of total depth at most
// depth (Fock, with highest weight walls produced from partitions).
std::vector<YoungWall> enumerate_closure(const WallModel& wm, int depth);
// Reduced: column by column search over class sequences with sum of |y_r| at most depth.
// Fock: breadth first search over f, e and delta-column moves with total depth at most depth.
std::vector<YoungWall> enumerate_slice(const WallModel& wm, int depth);

std::vector<YoungWall> fock_highest_weight(const WallModel& wm, int k);

constexpr int DEPTH_CAP = 8;

} // namespace ew
