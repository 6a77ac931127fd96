#include "ew/walls.hpp"
#include "ew/error.hpp"
#include "ew/paths.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace ew {

namespace {

// a is contained in b as sets of filled slots.
bool column_subset(const Column& a, const Column& b) {
    for (long s = std::min(a.base, b.base); s <= a.max_slot(); ++s)
        if (a.has(s) && !b.has(s)) return false;
    return true;
}

void check_depth(int depth) {
    if (depth < 0) throw Error(ErrorCode::depth_overflow, "depth must be non-negative");
    if (depth > DEPTH_CAP)
        throw Error(ErrorCode::depth_overflow,
                    "depth " + std::to_string(depth) + " is above the cap " + std::to_string(DEPTH_CAP));
}

} // namespace

WallModel::WallModel(const TypeModel& m, int node, WallKind kind)
    : m_(m), node_(node), kind_(kind), g_(m.ground(node)) {
    const CrystalGraph& c = m.c.graph;
    eps_.assign(c.colors, std::vector<int>(c.size()));
    phi_.assign(c.colors, std::vector<int>(c.size()));
    for (int i = 0; i < c.colors; ++i)
        for (int x = 0; x < c.size(); ++x) {
            eps_[i][x] = c.eps(i, x);
            phi_[i][x] = c.phi(i, x);
        }
    class_total_.assign(c.size(), 0);
    for (int x = 0; x < c.size(); ++x)
        for (int v : m.c.counts[x]) class_total_[x] += v;
}

int WallModel::lambda_node_at(int r) const { return g_.node_at(r); }

int WallModel::blocks_realised(ColumnClass k, int i) const { return m_.c.block_count(k, i); }

YoungWall WallModel::ground() const { return YoungWall{node_, {}}; }

ColumnClass WallModel::ground_col(int r) const { return {m_.psi[g_.b_at(r)], g_.m_at(r)}; }

ColumnClass WallModel::col(const YoungWall& w, int r) const {
    return r < static_cast<int>(w.cols.size()) ? w.cols[r] : ground_col(r);
}

void WallModel::normalize(YoungWall& w) const {
    while (!w.cols.empty() && w.cols.back() == ground_col(static_cast<int>(w.cols.size()) - 1)) w.cols.pop_back();
}

Signature WallModel::signature(const YoungWall& w, int i) const {
    int L = static_cast<int>(w.cols.size());
    std::vector<int> plus;
    std::vector<int> minus;
    if (lambda_node_at(L) == i) plus.push_back(L);
    for (int r = L - 1; r >= 0; --r) {
        int cls = w.cols[r].cls;
        for (int k = 0; k < eps_[i][cls]; ++k) {
            if (!plus.empty()) plus.pop_back();
            else minus.push_back(r);
        }
        for (int k = 0; k < phi_[i][cls]; ++k) plus.push_back(r);
    }
    Signature s;
    s.minus_count = static_cast<int>(minus.size());
    s.plus_count = static_cast<int>(plus.size());
    if (!plus.empty()) s.leftmost_plus = plus.front();
    if (!minus.empty()) s.rightmost_minus = minus.back();
    std::vector<int> order = minus;
    order.insert(order.end(), plus.begin(), plus.end());
    for (size_t k = 0; k < order.size(); ++k) {
        bool is_minus = k < minus.size();
        if (s.runs.empty() || s.runs.back().column != order[k]) s.runs.push_back({order[k], 0, 0});
        if (is_minus) ++s.runs.back().minus;
        else ++s.runs.back().plus;
    }
    return s;
}

std::optional<YoungWall> WallModel::step(const YoungWall& w, Dir d, int i) const {
    YoungWall y = w;
    for (;;) {
        int L = static_cast<int>(y.cols.size());
        Signature s = signature(y, i);
        int pos = d == Dir::f ? s.leftmost_plus : s.rightmost_minus;
        if (pos == NONE) return std::nullopt;
        if (pos == L) {
            y.cols.push_back(ground_col(L));
            continue;
        }
        ColumnClass& k = y.cols[pos];
        int to = m_.c.graph.step(d, i, k.cls);
        if (to == NONE) throw Error(ErrorCode::internal, "signature selected a column without an arrow");
        if (d == Dir::f) k.shift += m_.c.f_shift[i][k.cls];
        else k.shift -= m_.c.f_shift[i][to];
        k.cls = to;
        normalize(y);
        return y;
    }
}

Weight WallModel::weight(const YoungWall& w) const {
    Weight wt = m_.spec.fundamental(node_);
    for (int r = 0; r < static_cast<int>(w.cols.size()); ++r)
        for (int i = 0; i < m_.spec.nodes(); ++i) {
            int k = blocks_realised(w.cols[r], i) - blocks_realised(ground_col(r), i);
            wt -= m_.spec.alpha(i).scaled(k);
        }
    return wt;
}

int WallModel::zero_count(const YoungWall& w, int r) const {
    return blocks_realised(col(w, r), 0) - blocks_realised(ground_col(r), 0);
}

int WallModel::block_total(const YoungWall& w, int r) const {
    int t = 0;
    for (int i = 0; i < m_.spec.nodes(); ++i) t += blocks_realised(col(w, r), i) - blocks_realised(ground_col(r), i);
    return t;
}

int WallModel::pair_energy(ColumnClass next, ColumnClass here) const {
    return m_.h.at(m_.psi_inv[next.cls], m_.psi_inv[here.cls]);
}

int WallModel::h_aff_pair(const YoungWall& w, int r) const {
    ColumnClass a = col(w, r + 1), b = col(w, r);
    return pair_energy(a, b) + a.shift - b.shift;
}

bool WallModel::is_reduced(const YoungWall& w) const {
    for (int r = 0; r < static_cast<int>(w.cols.size()); ++r) {
        int lhs = pair_energy(col(w, r + 1), col(w, r)) - zero_count(w, r + 1) + zero_count(w, r);
        if (lhs != g_.h_at(r)) return false;
    }
    return true;
}

bool WallModel::normally_ordered_energy(const YoungWall& w) const {
    for (int r = 0; r < static_cast<int>(w.cols.size()); ++r)
        if (h_aff_pair(w, r) <= 0) return false;
    return true;
}

bool WallModel::normally_ordered_blocks(const YoungWall& w) const {
    for (int r = 0; r < static_cast<int>(w.cols.size()); ++r) {
        int rhs = zero_count(w, r + 1) - pair_energy(col(w, r + 1), col(w, r)) + g_.m_at(r) - g_.m_at(r + 1);
        if (!(zero_count(w, r) > rhs)) return false;
    }
    return true;
}

bool WallModel::is_normally_ordered(const YoungWall& w) const {
    bool a = normally_ordered_energy(w);
    bool b = normally_ordered_blocks(w);
    if (a != b) throw Error(ErrorCode::internal, "the two normally ordered tests disagree");
    return a;
}

bool WallModel::valid(const YoungWall& w) const {
    return kind_ == WallKind::reduced ? is_reduced(w) : is_normally_ordered(w);
}

std::optional<YoungWall> WallModel::insert_delta(const YoungWall& w, int r) const {
    YoungWall y = w;
    while (static_cast<int>(y.cols.size()) <= r) y.cols.push_back(ground_col(static_cast<int>(y.cols.size())));
    y.cols[r].shift -= 1;
    normalize(y);
    if (!is_normally_ordered(y)) return std::nullopt;
    return y;
}

std::optional<YoungWall> WallModel::remove_delta(const YoungWall& w, int r) const {
    YoungWall y = w;
    while (static_cast<int>(y.cols.size()) <= r) y.cols.push_back(ground_col(static_cast<int>(y.cols.size())));
    y.cols[r].shift += 1;
    normalize(y);
    if (!is_normally_ordered(y)) return std::nullopt;
    return y;
}

std::vector<int> WallModel::removable_delta_columns(const YoungWall& w) const {
    std::vector<int> out;
    for (int r = 0; r < static_cast<int>(w.cols.size()); ++r)
        if (remove_delta(w, r)) out.push_back(r);
    return out;
}

bool WallModel::right_block(ColumnClass next, ColumnClass here) const {
    Column moved = map_column(m_.sigma, m_.c.realize(next));
    return column_subset(moved, m_.c.realize(here));
}

int WallModel::right_block_gap(int b, int a, bool printed_form) const {
    int hba = m_.h.at(b, a);
    if (m_.spec.type == TypeTag::E8) {
        int d = m_.zero_dist.at(b, a);
        return printed_form ? 2 - hba + d : 2 - hba - d;
    }
    const SigmaRow& row = m_.sigma_rows[b];
    return row.p + 1 - hba - m_.h.at(a, row.c);
}

std::vector<RightBlockPair> WallModel::right_block_report(const YoungWall& w) const {
    std::vector<RightBlockPair> out;
    for (int r = 0; r < static_cast<int>(w.cols.size()); ++r) {
        RightBlockPair p;
        p.r = r;
        ColumnClass next = col(w, r + 1), here = col(w, r);
        p.holds = right_block(next, here);
        p.h_aff = h_aff_pair(w, r);
        p.exempt = m_.spec.type == TypeTag::E8 && p.h_aff == 2;
        int b = m_.psi_inv[next.cls], a = m_.psi_inv[here.cls];
        p.gap = right_block_gap(b, a, false);
        p.gap_printed = right_block_gap(b, a, true);
        out.push_back(p);
    }
    return out;
}

bool WallModel::built_on_ground(const YoungWall& w) const {
    for (int r = 0; r < static_cast<int>(w.cols.size()); ++r)
        if (!column_subset(m_.c.realize(ground_col(r)), m_.c.realize(w.cols[r]))) return false;
    return true;
}

std::vector<int> WallModel::to_path(const YoungWall& w) const {
    std::vector<int> out;
    for (const ColumnClass& k : w.cols) out.push_back(m_.psi_inv[k.cls]);
    return out;
}

std::vector<AffineElem> WallModel::to_fock_path(const YoungWall& w) const {
    std::vector<AffineElem> out;
    for (const ColumnClass& k : w.cols) out.push_back({m_.psi_inv[k.cls], k.shift});
    return out;
}

YoungWall WallModel::highest_weight_ancestor(const YoungWall& w) const {
    YoungWall top = w;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i < m_.spec.nodes() && !moved; ++i) {
            if (auto y = step(top, Dir::e, i)) {
                top = *y;
                moved = true;
            }
        }
    }
    return top;
}

int WallModel::fock_depth(const YoungWall& w) const {
    int k_hw = -weight(highest_weight_ancestor(w)).delta;
    int total = 0;
    for (int r = 0; r < static_cast<int>(w.cols.size()); ++r) total += block_total(w, r);
    return total - (m_.spec.coxeter() - 1) * k_hw;
}

nlohmann::json WallModel::to_json(const YoungWall& w) const {
    nlohmann::json j;
    j["lambda"] = "L" + std::to_string(node_);
    j["model"] = kind_ == WallKind::reduced ? "reduced" : "fock";
    j["columns"] = nlohmann::json::array();
    for (int r = 0; r < static_cast<int>(w.cols.size()); ++r)
        j["columns"].push_back(
            {{"r", r}, {"class_label", m_.c.graph.names[w.cols[r].cls]}, {"shift", w.cols[r].shift}});
    return j;
}

std::vector<YoungWall> fock_highest_weight(const WallModel& wm, int k) {
    std::vector<YoungWall> out;
    for (const auto& parts : partitions_of(k)) {
        YoungWall w = wm.ground();
        for (int r = 0; r < static_cast<int>(parts.size()); ++r) {
            ColumnClass g = wm.ground_col(r);
            g.shift -= parts[r];
            w.cols.push_back(g);
        }
        wm.normalize(w);
        out.push_back(w);
    }
    return out;
}

namespace {

void f_closure(const WallModel& wm, std::vector<YoungWall>& out, std::set<YoungWall>& seen, const YoungWall& start,
               int steps) {
    size_t begin = out.size();
    if (!seen.insert(start).second) return;
    out.push_back(start);
    for (int s = 0; s < steps; ++s) {
        size_t end = out.size();
        for (size_t x = begin; x < end; ++x)
            for (int i = 0; i < wm.model().spec.nodes(); ++i) {
                auto y = wm.step(out[x], Dir::f, i);
                if (y && seen.insert(*y).second) out.push_back(*y);
            }
        begin = end;
    }
}

} // namespace

std::vector<YoungWall> enumerate_closure(const WallModel& wm, int depth) {
    check_depth(depth);
    std::vector<YoungWall> out;
    std::set<YoungWall> seen;
    if (wm.kind() == WallKind::reduced) {
        f_closure(wm, out, seen, wm.ground(), depth);
        return out;
    }
    for (int k = 0; k <= depth; ++k)
        for (const YoungWall& hw : fock_highest_weight(wm, k)) f_closure(wm, out, seen, hw, depth - k);
    return out;
}

namespace {

struct SliceSearch {
    const WallModel& wm;
    const TypeModel& m;
    int depth;
    int r_max;
    std::set<YoungWall> found;
    YoungWall cur;

    int rel_blocks(ColumnClass k, int r) const {
        int t = 0;
        ColumnClass g = wm.ground_col(r);
        for (int i = 0; i < m.spec.nodes(); ++i) t += m.c.block_count(k, i) - m.c.block_count(g, i);
        return t;
    }

    bool on_ground(ColumnClass k, int r) const {
        return column_subset(m.c.realize(wm.ground_col(r)), m.c.realize(k));
    }

    void place(int r, ColumnClass k, int remaining) {
        int used = rel_blocks(k, r);
        if (used < 0 || used > remaining || !on_ground(k, r)) return;
        cur.cols.push_back(k);
        run(r + 1, remaining - used);
        cur.cols.pop_back();
    }

    void run(int r, int remaining) {
        bool closes = true;
        if (r > 0) {
            ColumnClass last = cur.cols.back();
            ColumnClass g = wm.ground_col(r);
            int h = m.h.at(m.psi_inv[g.cls], m.psi_inv[last.cls]);
            closes = h + g.shift - last.shift == 1;
        }
        if (closes || r == 0) {
            YoungWall w = cur;
            wm.normalize(w);
            found.insert(w);
        }
        if (r >= r_max) return;
        int classes = m.c.graph.size();
        int h_cox = m.spec.coxeter();
        if (r == 0) {
            for (int c = 0; c < classes; ++c) {
                // rel_blocks is affine in the shift with slope -h.
                int at_zero = rel_blocks({c, 0}, 0);
                for (int used = 0; used <= remaining; ++used) {
                    if ((at_zero - used) % h_cox != 0) continue;
                    place(0, {c, (at_zero - used) / h_cox}, remaining);
                }
            }
            return;
        }
        ColumnClass last = cur.cols.back();
        for (int c = 0; c < classes; ++c) {
            int h = m.h.at(m.psi_inv[c], m.psi_inv[last.cls]);
            place(r, {c, last.shift + 1 - h}, remaining);
        }
    }
};

} // namespace

std::vector<YoungWall> enumerate_slice(const WallModel& wm, int depth) {
    check_depth(depth);
    std::vector<YoungWall> out;
    if (wm.kind() == WallKind::reduced) {
        SliceSearch s{wm, wm.model(), depth, depth + 2, {}, wm.ground()};
        s.run(0, depth);
        for (const YoungWall& w : s.found)
            if (wm.is_reduced(w)) out.push_back(w);
        std::stable_sort(out.begin(), out.end(), [&](const YoungWall& a, const YoungWall& b) {
            int da = 0, db = 0;
            for (int r = 0; r < static_cast<int>(a.cols.size()); ++r) da += wm.block_total(a, r);
            for (int r = 0; r < static_cast<int>(b.cols.size()); ++r) db += wm.block_total(b, r);
            return da < db;
        });
        return out;
    }
    std::set<YoungWall> seen{wm.ground()};
    std::deque<YoungWall> queue{wm.ground()};
    while (!queue.empty()) {
        YoungWall w = queue.front();
        queue.pop_front();
        out.push_back(w);
        std::vector<YoungWall> next;
        for (int i = 0; i < wm.model().spec.nodes(); ++i)
            for (Dir d : {Dir::f, Dir::e})
                if (auto y = wm.step(w, d, i)) next.push_back(*y);
        int L = static_cast<int>(w.cols.size());
        for (int r = 0; r <= L; ++r)
            if (auto y = wm.insert_delta(w, r)) next.push_back(*y);
        for (int r = 0; r < L; ++r)
            if (auto y = wm.remove_delta(w, r)) next.push_back(*y);
        for (YoungWall& y : next) {
            if (seen.count(y)) continue;
            seen.insert(y);
            if (wm.fock_depth(y) <= depth) queue.push_back(y);
        }
    }
    return out;
}

} // namespace ew
