#pragma once

#include "ew/crystal.hpp"
#include "ew/root_data.hpp"

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ew {

// A Young column: every slot below base is filled, base itself is empty,
// and top lists the filled slots above base in ascending order.
struct Column {
    long base = 0;
    std::vector<long> top;

    static Column make(long base, std::vector<long> filled);
    bool has(long s) const;
    Column with(long s) const;
    Column without(long s) const;
    Column shifted(long d) const;
    long max_slot() const { return top.empty() ? base - 1 : top.back(); }
    bool operator==(const Column& o) const = default;
    auto operator<=>(const Column& o) const = default;
};

struct Cell {
    int x = 0;
    int y = 0;
    bool operator==(const Cell& o) const = default;
    auto operator<=>(const Cell& o) const = default;
};

struct SlotInfo {
    int color = 0;
    int cube = 0;
    std::vector<Cell> cells;
    std::vector<long> supports;   // offsets relative to the slot, all negative
    bool has_rot = false;
    int rot_residue = 0;
    int rot_period = 0;
};

struct Exceptional {
    std::string label;
    Column column;
};

struct ColumnPattern {
    TypeTag type = TypeTag::E6;
    int period = 0;
    int cubes = 0;
    int width = 0;
    bool rotating = false;
    bool two_candidate = false;   // the extra operator rules of the E8 pattern
    std::vector<SlotInfo> slots;
    std::vector<Exceptional> exceptional;
    std::string anchor_label;
    Column anchor;

    int residue(long s) const;
    long period_of(long s) const;
    int color(long s) const { return slots[residue(s)].color; }
    long cube(long s) const { return period_of(s) * cubes + slots[residue(s)].cube; }
    std::vector<Cell> cells(long s) const;
    std::vector<long> supports(long s) const;
    int reach() const;
};

ColumnPattern parse_pattern(std::istream& in, const CartanSpec& spec);
ColumnPattern load_pattern(const CartanSpec& spec, const std::string& data_dir);
std::string default_data_dir();

// Supports recomputed from the cell geometry, per residue, as relative offsets.
std::vector<std::vector<long>> geometric_supports(const ColumnPattern& p);

bool gravity_closed(const ColumnPattern& p, const Column& c);
int exceptional_index(const ColumnPattern& p, const Column& c);
bool validate(const ColumnPattern& p, const Column& c);

struct Candidates {
    std::vector<long> addable;
    std::vector<long> removable;
};

Candidates addable_removable(const ColumnPattern& p, const Column& c, int i);

// Step before the blocking rule is applied.
std::optional<Column> raw_step(const ColumnPattern& p, Dir d, int i, const Column& c);
// Colours i whose pending move (an addable i-block after an i-block was added, or the dual) blocks
// every other colour; blocked(c, j) holds when some i != j is listed.
std::vector<bool> blocking_colours(const ColumnPattern& p, const Column& c, int colors);
bool blocked(const ColumnPattern& p, const Column& c, int j);
std::optional<Column> column_step(const ColumnPattern& p, Dir d, int i, const Column& c);

struct ColumnClass {
    int cls = 0;
    int shift = 0;   // z-power
    bool operator==(const ColumnClass& o) const = default;
    auto operator<=>(const ColumnClass& o) const = default;
};

struct ColumnCrystal {
    ColumnPattern pattern;
    std::vector<int> marks;
    CrystalGraph graph;
    std::vector<Column> reps;              // canonical representatives, base in [0, period)
    std::vector<std::vector<int>> f_shift; // z-power change along each f-arrow
    std::map<Column, int> index;
    int anchor_class = NONE;
    int ground_class = NONE;
    std::vector<long> zero_period;         // z^0 representative = reps[c] shifted by zero_period[c] periods
    std::vector<std::vector<int>> step_period;   // [colour][class] period index of f_i applied to reps[c]
    std::vector<std::vector<int>> counts;  // i-blocks of the z^0 representative minus the ground column

    ColumnClass canonicalize(const Column& c) const;
    Column realize(ColumnClass k) const;
    int block_count(ColumnClass k, int i) const;
};

// Closure from the anchor column under column_step; weights from the anchor by sum (phi - eps) Lambda.
ColumnCrystal build_column_crystal(const ColumnPattern& p, const CartanSpec& spec);

// Fixes the z^0 representatives so that each has as many 0-blocks as the ground class.
void set_ground(ColumnCrystal& c, const CartanSpec& spec, int ground_class);

// Anchored isomorphism B -> C from the pattern's anchor label; throws no_iso.
std::vector<int> psi(const CrystalGraph& b, const ColumnCrystal& c);

// A rigid motion of the pattern: slot s goes to image[s mod P] + period * floor(s / P).
struct SlotMap {
    int period = 0;
    std::vector<long> image;
    bool rotate = false;
    long cube_shift = 0;
    long apply(long s) const;
};

std::vector<SlotMap> pattern_motions(const ColumnPattern& p, const std::vector<int>& color_perm);
Column map_column(const SlotMap& m, const Column& c);

struct SigmaRow {
    int b = 0;
    int c = 0;
    int p = 0;
};

// Motion sending the ground column of wall column r+1 onto that of column r.
SlotMap sigma_motion(const ColumnCrystal& c, const std::vector<int>& color_perm,
                     ColumnClass g_next, ColumnClass g_this);
// sigma(z^0 psi(b)) = z^p psi(c) for each b, in B ids.
std::vector<SigmaRow> sigma_table(const ColumnCrystal& c, const SlotMap& m,
                                  const std::vector<int>& psi_map);

std::vector<int> diagram_automorphism(const CartanSpec& spec);

std::string render_column(const ColumnPattern& p, const Column& c, long lo, long hi);

} // namespace ew
