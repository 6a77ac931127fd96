#include "ew/columns.hpp"
#include "ew/error.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#ifndef EW_DATA_DIR
#define EW_DATA_DIR "data"
#endif

namespace ew {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

[[noreturn]] void bad_data(const std::string& msg) { throw Error(ErrorCode::data_invalid, msg); }

} // namespace

Column Column::make(long base, std::vector<long> filled) {
    std::set<long> s(filled.begin(), filled.end());
    while (s.count(base)) {
        s.erase(base);
        ++base;
    }
    Column c;
    c.base = base;
    for (long x : s)
        if (x > base) c.top.push_back(x);
    return c;
}

bool Column::has(long s) const { return s < base || std::binary_search(top.begin(), top.end(), s); }

Column Column::with(long s) const {
    std::vector<long> f = top;
    f.push_back(s);
    return make(base, std::move(f));
}

Column Column::without(long s) const {
    if (!has(s)) return *this;
    if (s < base) {
        std::vector<long> f = top;
        for (long x = s + 1; x < base; ++x) f.push_back(x);
        return make(s, std::move(f));
    }
    Column c = *this;
    c.top.erase(std::find(c.top.begin(), c.top.end(), s));
    return c;
}

Column Column::shifted(long d) const {
    Column c = *this;
    c.base += d;
    for (long& x : c.top) x += d;
    return c;
}

int ColumnPattern::residue(long s) const { return static_cast<int>(s - floor_div(s, period) * period); }

long ColumnPattern::period_of(long s) const { return floor_div(s, period); }

std::vector<Cell> ColumnPattern::cells(long s) const {
    std::vector<Cell> cs = slots[residue(s)].cells;
    if (rotating && (period_of(s) % 2 != 0)) {
        for (Cell& c : cs) c = {width - 1 - c.x, 1 - c.y};
        std::sort(cs.begin(), cs.end());
    }
    return cs;
}

std::vector<long> ColumnPattern::supports(long s) const {
    std::vector<long> out;
    for (long d : slots[residue(s)].supports) out.push_back(s + d);
    return out;
}

int ColumnPattern::reach() const {
    long r = 0;
    for (const SlotInfo& s : slots)
        for (long d : s.supports) r = std::max(r, -d);
    return static_cast<int>(r);
}

namespace {

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stol(item));
    return out;
}

// "<label tokens> base b filled l" after the keyword.
std::pair<std::string, Column> parse_labelled(std::istringstream& ls, const std::string& line) {
    std::string tok, label;
    while (ls >> tok && tok != "base") label += (label.empty() ? "" : " ") + tok;
    long base = 0;
    std::string kw, list;
    if (tok != "base" || !(ls >> base >> kw) || kw != "filled") bad_data("malformed line: " + line);
    ls >> list;
    return {label, Column::make(base, parse_list(list))};
}

} // namespace

ColumnPattern parse_pattern(std::istream& in, const CartanSpec& spec) {
    ColumnPattern p;
    p.type = spec.type;
    std::string line;
    bool have_type = false;
    std::vector<bool> seen;
    std::regex support_re(R"((\d+)([+-])(\d+))");
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "type") {
            std::string t;
            ls >> t;
            if (parse_type(t) != spec.type) bad_data("pattern is for " + t + ", expected " + type_name(spec.type));
            have_type = true;
        } else if (kw == "period") {
            ls >> p.period;
            seen.assign(p.period, false);
            p.slots.assign(p.period, {});
        } else if (kw == "cubes") {
            ls >> p.cubes;
        } else if (kw == "width") {
            ls >> p.width;
        } else if (kw == "rotation") {
            std::string r;
            ls >> r;
            if (r == "half-turn") p.rotating = true;
            else if (r == "none") p.rotating = false;
            else bad_data("unknown rotation '" + r + "'");
        } else if (kw == "caveats") {
            std::string c;
            while (ls >> c)
                if (c == "two-candidate") p.two_candidate = true;
        } else if (kw == "slot") {
            if (p.period <= 0) bad_data("slot line before period");
            int r = -1;
            ls >> r;
            if (r < 0 || r >= p.period || seen[r]) bad_data("bad or repeated slot index: " + line);
            seen[r] = true;
            SlotInfo& s = p.slots[r];
            std::string tok;
            if (!(ls >> tok >> s.color) || tok != "color") bad_data("missing color: " + line);
            if (!(ls >> tok >> s.cube) || tok != "cube") bad_data("missing cube: " + line);
            if (!(ls >> tok) || tok != "cells") bad_data("missing cells: " + line);
            while (ls >> tok && tok != "supports") {
                if (tok.size() != 2 || !isdigit(tok[0]) || !isdigit(tok[1])) bad_data("bad cell '" + tok + "'");
                s.cells.push_back({tok[0] - '0', tok[1] - '0'});
            }
            std::sort(s.cells.begin(), s.cells.end());
            if (tok != "supports") bad_data("missing supports: " + line);
            std::string sup;
            ls >> sup;
            if (sup != "-") {
                std::stringstream ss(sup);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    std::smatch m;
                    if (!std::regex_match(item, m, support_re)) bad_data("bad support '" + item + "'");
                    long res = std::stol(m[1]);
                    long dp = std::stol(m[3]) * (m[2] == "-" ? -1 : 1);
                    long off = res + dp * p.period - r;
                    if (off >= 0) bad_data("support above its slot: " + line);
                    s.supports.push_back(off);
                }
            }
            std::sort(s.supports.begin(), s.supports.end());
            if ((ls >> tok) && tok == "rot") {
                std::string rot;
                ls >> rot;
                if (rot != "-") {
                    std::smatch m;
                    if (!std::regex_match(rot, m, support_re)) bad_data("bad rot '" + rot + "'");
                    s.has_rot = true;
                    s.rot_residue = std::stoi(m[1]);
                    s.rot_period = std::stoi(m[3]) * (m[2] == "-" ? -1 : 1);
                }
            }
        } else if (kw == "exceptional") {
            auto [label, col] = parse_labelled(ls, line);
            p.exceptional.push_back({label, col});
        } else if (kw == "anchor") {
            auto [label, col] = parse_labelled(ls, line);
            p.anchor_label = label;
            p.anchor = col;
        } else {
            bad_data("unknown keyword '" + kw + "'");
        }
    }
    if (!have_type) bad_data("pattern has no type line");
    if (p.period <= 0 || p.cubes <= 0 || p.width <= 0) bad_data("period, cubes and width must be positive");
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) bad_data("missing slot lines");
    if (p.anchor_label.empty()) bad_data("pattern has no anchor");

    std::vector<int> census(spec.nodes(), 0);
    for (const SlotInfo& s : p.slots) {
        if (s.color < 0 || s.color >= spec.nodes()) bad_data("colour out of range");
        if (s.cube < 0 || s.cube >= p.cubes) bad_data("cube out of range");
        for (const Cell& c : s.cells)
            if (c.x < 0 || c.x >= p.width || c.y < 0 || c.y > 1) bad_data("cell out of range");
        ++census[s.color];
    }
    if (census != spec.marks) bad_data("colour census per period does not match the marks");
    for (int k = 0; k < p.cubes; ++k) {
        std::set<Cell> cells;
        size_t count = 0;
        for (const SlotInfo& s : p.slots) {
            if (s.cube != k) continue;
            count += s.cells.size();
            cells.insert(s.cells.begin(), s.cells.end());
        }
        if (count != cells.size() || static_cast<int>(count) != 2 * p.width)
            bad_data("cube " + std::to_string(k) + " is not tiled exactly once");
    }
    if (p.rotating) {
        for (int r = 0; r < p.period; ++r) {
            const SlotInfo& s = p.slots[r];
            if (!s.has_rot) bad_data("rotating pattern without rot entry at slot " + std::to_string(r));
            long img = s.rot_residue + static_cast<long>(s.rot_period) * p.period;
            std::vector<Cell> want;
            for (const Cell& c : s.cells) want.push_back({p.width - 1 - c.x, 1 - c.y});
            std::sort(want.begin(), want.end());
            if (p.color(img) != s.color || p.cube(img) != s.cube + p.cubes || p.cells(img) != want)
                bad_data("rot entry of slot " + std::to_string(r) + " is not the half-turn image");
        }
    }
    return p;
}

std::string default_data_dir() { return EW_DATA_DIR; }

ColumnPattern load_pattern(const CartanSpec& spec, const std::string& data_dir) {
    std::string path = data_dir + "/" + type_name(spec.type) + ".pattern";
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io, "cannot open " + path);
    return parse_pattern(in, spec);
}

std::vector<std::vector<long>> geometric_supports(const ColumnPattern& p) {
    std::vector<std::vector<long>> out(p.period);
    for (long r = 0; r < p.period; ++r) {
        auto mine = p.cells(r);
        for (long a = r - 2L * p.period; a < r; ++a) {
            if (p.cube(a) != p.cube(r) - 1) continue;
            auto theirs = p.cells(a);
            bool meet = std::any_of(mine.begin(), mine.end(), [&](const Cell& c) {
                return std::find(theirs.begin(), theirs.end(), c) != theirs.end();
            });
            if (meet) out[r].push_back(a - r);
        }
        std::sort(out[r].begin(), out[r].end());
    }
    return out;
}

bool gravity_closed(const ColumnPattern& p, const Column& c) {
    for (long s : c.top)
        for (long t : p.supports(s))
            if (!c.has(t)) return false;
    return true;
}

namespace {

Column canonical_key(const ColumnPattern& p, const Column& c) {
    return c.shifted(-p.period_of(c.base) * p.period);
}

} // namespace

int exceptional_index(const ColumnPattern& p, const Column& c) {
    Column key = canonical_key(p, c);
    for (size_t k = 0; k < p.exceptional.size(); ++k)
        if (canonical_key(p, p.exceptional[k].column) == key) return static_cast<int>(k);
    return -1;
}

bool validate(const ColumnPattern& p, const Column& c) { return gravity_closed(p, c) || exceptional_index(p, c) >= 0; }

Candidates addable_removable(const ColumnPattern& p, const Column& c, int i) {
    Candidates out;
    long hi = c.max_slot() + 2L * p.period;
    for (long s = c.base; s <= hi; ++s)
        if (!c.has(s) && p.color(s) == i && validate(p, c.with(s))) out.addable.push_back(s);
    for (long s = c.base - 2L * p.period; s <= c.max_slot(); ++s)
        if (c.has(s) && p.color(s) == i && validate(p, c.without(s))) out.removable.push_back(s);
    return out;
}

namespace {

bool supported_by_color(const ColumnPattern& p, long s, int color) {
    for (long t : p.supports(s))
        if (p.color(t) == color) return true;
    return false;
}

long choose(const ColumnPattern& p, Dir d, int i, const std::vector<long>& cand) {
    if (cand.size() == 1) return cand[0];
    std::string what = std::string(d == Dir::f ? "addable " : "removable ") + std::to_string(i) + "-blocks";
    if (!p.two_candidate || cand.size() > 2) bad_data(std::to_string(cand.size()) + " " + what);
    if (i == 4) {
        int mark = d == Dir::f ? 5 : 3;
        std::vector<long> pick;
        for (long s : cand)
            if (supported_by_color(p, s, mark)) pick.push_back(s);
        if (pick.size() != 1) bad_data("two " + what + " and no unique choice by supports");
        return pick[0];
    }
    long c0 = p.cube(cand[0]), c1 = p.cube(cand[1]);
    if (c0 == c1) bad_data("two " + what + " in the same cube");
    bool higher_first = c0 > c1;
    if (d == Dir::f) return higher_first ? cand[0] : cand[1];
    return higher_first ? cand[1] : cand[0];
}

} // namespace

std::optional<Column> raw_step(const ColumnPattern& p, Dir d, int i, const Column& c) {
    Candidates k = addable_removable(p, c, i);
    const auto& cand = d == Dir::f ? k.addable : k.removable;
    if (cand.empty()) return std::nullopt;
    long s = choose(p, d, i, cand);
    return d == Dir::f ? c.with(s) : c.without(s);
}

namespace {

int color_count(const ColumnPattern& p) {
    int colors = 0;
    for (const SlotInfo& s : p.slots) colors = std::max(colors, s.color + 1);
    return colors;
}

bool blocked_by(const std::vector<bool>& blocking, int j) {
    for (int i = 0; i < static_cast<int>(blocking.size()); ++i)
        if (i != j && blocking[i]) return true;
    return false;
}

} // namespace

std::vector<bool> blocking_colours(const ColumnPattern& p, const Column& c, int colors) {
    std::vector<bool> out(colors, false);
    if (!p.two_candidate) return out;
    for (int i = 0; i < colors; ++i) {
        Candidates k = addable_removable(p, c, i);
        if (!k.addable.empty())
            for (long a : k.removable)
                if (raw_step(p, Dir::f, i, c.without(a)) == c) out[i] = true;
        if (!out[i] && !k.removable.empty())
            for (long a : k.addable)
                if (raw_step(p, Dir::e, i, c.with(a)) == c) out[i] = true;
    }
    return out;
}

bool blocked(const ColumnPattern& p, const Column& c, int j) {
    return blocked_by(blocking_colours(p, c, color_count(p)), j);
}

std::optional<Column> column_step(const ColumnPattern& p, Dir d, int i, const Column& c) {
    if (blocked(p, c, i)) return std::nullopt;
    return raw_step(p, d, i, c);
}

ColumnClass ColumnCrystal::canonicalize(const Column& c) const {
    long j = pattern.period_of(c.base);
    Column key = c.shifted(-j * pattern.period);
    auto it = index.find(key);
    if (it == index.end()) bad_data("column is not in the column crystal");
    int cls = it->second;
    long z0 = zero_period.empty() ? 0 : zero_period[cls];
    return {cls, static_cast<int>(-(j - z0))};
}

Column ColumnCrystal::realize(ColumnClass k) const {
    long z0 = zero_period.empty() ? 0 : zero_period[k.cls];
    return reps[k.cls].shifted((z0 - k.shift) * pattern.period);
}

int ColumnCrystal::block_count(ColumnClass k, int i) const { return counts[k.cls][i] - k.shift * marks[i]; }

constexpr size_t MAX_CLASSES = 4096;

ColumnCrystal build_column_crystal(const ColumnPattern& p, const CartanSpec& spec) {
    ColumnCrystal cc;
    cc.pattern = p;
    cc.marks = spec.marks;
    int colors = spec.nodes();
    cc.graph = CrystalGraph(colors);
    if (!validate(p, p.anchor)) bad_data("anchor column is not a valid column");
    std::deque<int> queue;
    std::vector<std::tuple<int, int, int, int>> arrows;   // colour, from, to, period of the image
    auto intern = [&](const Column& c) {
        Column key = canonical_key(p, c);
        auto it = cc.index.find(key);
        if (it != cc.index.end()) return it->second;
        if (cc.reps.size() >= MAX_CLASSES)
            throw Error(ErrorCode::inconsistent, "the column crystal has more than " + std::to_string(MAX_CLASSES) +
                                                     " classes");
        int id = cc.graph.add_element("c" + std::to_string(cc.reps.size()), spec.zero());
        cc.index[key] = id;
        cc.reps.push_back(key);
        queue.push_back(id);
        return id;
    };
    cc.anchor_class = intern(p.anchor);
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        Column rep = cc.reps[x];
        auto blocking = blocking_colours(p, rep, colors);
        for (int i = 0; i < colors; ++i) {
            if (blocked_by(blocking, i)) continue;
            if (auto y = raw_step(p, Dir::f, i, rep)) {
                int t = intern(*y);
                arrows.emplace_back(i, x, t, static_cast<int>(p.period_of(y->base)));
            }
            if (auto y = raw_step(p, Dir::e, i, rep)) intern(*y);
        }
    }
    int n = cc.graph.size();
    cc.step_period.assign(colors, std::vector<int>(n, 0));
    for (auto [i, x, y, per] : arrows) {
        cc.graph.add_arrow(i, x, y);
        cc.step_period[i][x] = per;
    }
    std::vector<std::vector<bool>> blocking(n);
    for (int x = 0; x < n; ++x) blocking[x] = blocking_colours(p, cc.reps[x], colors);
    for (int x = 0; x < n; ++x) {
        for (int i = 0; i < colors; ++i) {
            int y = cc.graph.e[i][x];
            if (y == NONE) continue;
            std::optional<Column> back;
            if (!blocked_by(blocking[x], i)) back = raw_step(p, Dir::e, i, cc.reps[x]);
            if (!back || canonical_key(p, *back) != cc.reps[y])
                throw Error(ErrorCode::inconsistent, "e_" + std::to_string(i) + " does not invert f_" +
                                                         std::to_string(i) + " on the column crystal");
        }
    }

    // Weights: the anchor gets sum (phi - eps) Lambda, the rest follow the arrows.
    std::vector<char> set(n, 0);
    Weight w0(colors);
    for (int i = 0; i < colors; ++i) w0.lam[i] = cc.graph.phi(i, cc.anchor_class) - cc.graph.eps(i, cc.anchor_class);
    cc.graph.wt[cc.anchor_class] = w0;
    set[cc.anchor_class] = 1;
    std::deque<int> wq{cc.anchor_class};
    while (!wq.empty()) {
        int x = wq.front();
        wq.pop_front();
        for (int i = 0; i < colors; ++i) {
            Weight a = spec.alpha(i);
            a.delta = 0;
            for (Dir d : {Dir::f, Dir::e}) {
                int y = cc.graph.step(d, i, x);
                if (y == NONE) continue;
                Weight w = d == Dir::f ? cc.graph.wt[x] - a : cc.graph.wt[x] + a;
                if (!set[y]) {
                    cc.graph.wt[y] = w;
                    set[y] = 1;
                    wq.push_back(y);
                } else if (cc.graph.wt[y] != w) {
                    throw Error(ErrorCode::weight_conflict, "weight conflict at column class " + cc.graph.names[y]);
                }
            }
        }
    }
    return cc;
}

namespace {

// Number of i-coloured blocks of a minus those of b.
int block_diff(const ColumnPattern& p, const Column& a, const Column& b, int i) {
    long lo = std::min(a.base, b.base);
    long hi = std::max(a.max_slot(), b.max_slot());
    int d = 0;
    for (long s = lo; s <= hi; ++s)
        if (p.color(s) == i) d += static_cast<int>(a.has(s)) - static_cast<int>(b.has(s));
    return d;
}

} // namespace

void set_ground(ColumnCrystal& c, const CartanSpec& spec, int ground_class) {
    const ColumnPattern& p = c.pattern;
    c.ground_class = ground_class;
    int n = c.graph.size();
    c.zero_period.assign(n, 0);
    const Column& g = c.reps[ground_class];
    for (int x = 0; x < n; ++x) c.zero_period[x] = -block_diff(p, c.reps[x], g, 0);
    c.counts.assign(n, std::vector<int>(spec.nodes(), 0));
    for (int x = 0; x < n; ++x) {
        Column z = c.realize({x, 0});
        for (int i = 0; i < spec.nodes(); ++i) c.counts[x][i] = block_diff(p, z, g, i);
        if (c.counts[x][0] != 0) throw Error(ErrorCode::internal, "z^0 representative has a 0-block surplus");
    }
    c.f_shift.assign(spec.nodes(), std::vector<int>(n, 0));
    for (int i = 0; i < spec.nodes(); ++i) {
        for (int x = 0; x < n; ++x) {
            int y = c.graph.f[i][x];
            if (y == NONE) continue;
            long per = c.step_period[i][x] + c.zero_period[x];
            c.f_shift[i][x] = static_cast<int>(-(per - c.zero_period[y]));
        }
    }
}

std::vector<int> psi(const CrystalGraph& b, const ColumnCrystal& c) {
    int a = b.find(c.pattern.anchor_label);
    if (a == NONE) throw Error(ErrorCode::data_invalid, "anchor label " + c.pattern.anchor_label + " is not in B");
    IsoResult r = find_isomorphism(b, c.graph, {{a, c.anchor_class}});
    if (!r.ok) throw Error(ErrorCode::no_iso, "B and the column crystal differ: " + r.conflict);
    return r.map;
}

long SlotMap::apply(long s) const {
    long per = s >= 0 ? s / period : -((-s + period - 1) / period);
    long r = s - per * period;
    return image[r] + per * period;
}

std::vector<SlotMap> pattern_motions(const ColumnPattern& p, const std::vector<int>& color_perm) {
    std::vector<SlotMap> out;
    for (int rot = 0; rot < 2; ++rot) {
        for (long t = -2L * p.cubes; t < 2L * p.cubes; ++t) {
            SlotMap m;
            m.period = p.period;
            m.rotate = rot != 0;
            m.cube_shift = t;
            bool ok = true;
            for (long r = 0; r < p.period && ok; ++r) {
                auto cs = p.cells(r);
                if (rot) {
                    for (Cell& c : cs) c = {p.width - 1 - c.x, 1 - c.y};
                    std::sort(cs.begin(), cs.end());
                }
                long target = p.cube(r) + t;
                long per = floor_div(target, p.cubes);
                long found = 0;
                bool hit = false;
                for (long r2 = 0; r2 < p.period && !hit; ++r2) {
                    long a = per * p.period + r2;
                    if (p.cube(a) == target && p.cells(a) == cs) {
                        found = a;
                        hit = true;
                    }
                }
                if (!hit || p.color(found) != color_perm[p.color(r)]) ok = false;
                else m.image.push_back(found);
            }
            if (ok) out.push_back(m);
        }
    }
    return out;
}

Column map_column(const SlotMap& m, const Column& c) {
    long lo = (floor_div(c.base, m.period) - 2) * m.period;
    long floor_img = m.apply(lo);
    long below = m.apply(lo - 1);
    for (long s = lo; s < lo + m.period; ++s) {
        floor_img = std::min(floor_img, m.apply(s));
        below = std::max(below, m.apply(s - m.period));
    }
    if (below >= floor_img) throw Error(ErrorCode::internal, "slot map does not preserve the period order");
    std::vector<long> filled;
    for (long s = lo; s <= c.max_slot(); ++s)
        if (c.has(s)) filled.push_back(m.apply(s));
    std::vector<long> top;
    for (long x : filled)
        if (x >= floor_img) top.push_back(x);
    return Column::make(floor_img, std::move(top));
}

SlotMap sigma_motion(const ColumnCrystal& c, const std::vector<int>& color_perm, ColumnClass g_next,
                     ColumnClass g_this) {
    Column from = c.realize(g_next);
    Column to = c.realize(g_this);
    std::vector<SlotMap> hits;
    for (const SlotMap& m : pattern_motions(c.pattern, color_perm))
        if (map_column(m, from) == to) hits.push_back(m);
    if (hits.empty()) throw Error(ErrorCode::inconsistent, "no motion of the pattern carries the ground columns");
    if (hits.size() > 1) throw Error(ErrorCode::inconsistent, "several motions carry the ground columns");
    return hits[0];
}

std::vector<SigmaRow> sigma_table(const ColumnCrystal& c, const SlotMap& m, const std::vector<int>& psi_map) {
    std::vector<int> inv(c.graph.size(), NONE);
    for (size_t b = 0; b < psi_map.size(); ++b) inv[psi_map[b]] = static_cast<int>(b);
    std::vector<SigmaRow> out;
    for (size_t b = 0; b < psi_map.size(); ++b) {
        Column img = map_column(m, c.realize({psi_map[b], 0}));
        ColumnClass k = c.canonicalize(img);
        out.push_back({static_cast<int>(b), inv[k.cls], k.shift});
    }
    return out;
}

std::vector<int> diagram_automorphism(const CartanSpec& spec) {
    switch (spec.type) {
    case TypeTag::E6: return {1, 6, 3, 5, 4, 2, 0};
    case TypeTag::E7: return {7, 6, 2, 5, 4, 3, 1, 0};
    case TypeTag::E8: return {0, 1, 2, 3, 4, 5, 6, 7, 8};
    }
    throw Error(ErrorCode::bad_type, "unsupported type");
}

std::string render_column(const ColumnPattern& p, const Column& c, long lo, long hi) {
    std::ostringstream os;
    long cube_lo = p.cube(lo), cube_hi = p.cube(hi);
    for (long k = cube_hi; k >= cube_lo; --k) {
        std::vector<std::string> rows(2, std::string(p.width, ' '));
        long per = floor_div(k, p.cubes);
        for (long r = 0; r < p.period; ++r) {
            long s = per * p.period + r;
            if (p.cube(s) != k) continue;
            char ch = c.has(s) ? static_cast<char>('0' + p.color(s)) : '.';
            for (const Cell& cell : p.cells(s)) rows[cell.y][cell.x] = ch;
        }
        os << "cube " << k << "  front " << rows[0] << "  back " << rows[1] << "\n";
    }
    return os.str();
}

} // namespace ew
