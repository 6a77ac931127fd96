#include "ew/verify.hpp"
#include "ew/energy.hpp"
#include "ew/error.hpp"
#include "ew/paths.hpp"
#include "ew/perfect.hpp"
#include "ew/tables.hpp"
#include "ew/walls.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

namespace ew {

const std::vector<CheckInfo>& check_catalogue() {
    static const std::vector<CheckInfo> list = {
        {"cardinality", "sizes of the level 1 perfect crystals against Weyl orbits"},
        {"perfect", "perfectness at level 1 and the elements b^lambda, b_lambda"},
        {"energy", "energy function equals the minimum number of 0-arrows"},
        {"maximal", "maximal vectors of B8 (x) B8 and their classical components"},
        {"ground", "ground state sequences and Fock z-powers"},
        {"psi", "isomorphisms from the perfect crystals to the column crystals"},
        {"sigma", "column shift automorphism tables"},
        {"master", "wall crystals against path crystals"},
        {"character", "Fock character against partitions"},
        {"right_block", "right block property of enumerated walls"},
        {"self_path", "paths from z^n a to z^(n-1) a in the affinization of B8"},
        {"block_difference", "block count differences of reduced adjacent columns"},
    };
    return list;
}

namespace {

constexpr TypeTag ALL_TYPES[] = {TypeTag::E6, TypeTag::E7, TypeTag::E8};

int master_depth(TypeTag t) { return t == TypeTag::E8 ? 5 : 6; }
constexpr int CHARACTER_DEPTH = 6;

struct Context {
    std::string data_dir;
    std::map<TypeTag, std::unique_ptr<TypeModel>> models;
    std::map<TypeTag, std::string> model_errors;
    std::unique_ptr<ReferenceTables> tables;
    std::map<std::tuple<TypeTag, int, int, int>, std::vector<YoungWall>> walls;   // type, node, kind, depth

    const TypeModel& model(TypeTag t) {
        auto it = models.find(t);
        if (it != models.end()) return *it->second;
        auto err = model_errors.find(t);
        if (err != model_errors.end()) throw Error(ErrorCode::inconsistent, err->second);
        try {
            models[t] = std::make_unique<TypeModel>(build_model(t, data_dir));
        } catch (const Error& e) {
            model_errors[t] = type_name(t) + " model: " + error_name(e.code()) + ": " + e.what();
            throw Error(e.code(), model_errors[t]);
        }
        return *models[t];
    }

    const ReferenceTables& refs() {
        if (!tables) tables = std::make_unique<ReferenceTables>(load_tables(data_dir));
        return *tables;
    }

    const std::vector<YoungWall>& closure(const WallModel& wm, int depth) {
        auto key = std::make_tuple(wm.model().spec.type, wm.node(), static_cast<int>(wm.kind()), depth);
        auto it = walls.find(key);
        if (it != walls.end()) return it->second;
        return walls[key] = enumerate_closure(wm, depth);
    }
};

// Collects failure witnesses, keeping the first few.
struct Witness {
    int failures = 0;
    std::vector<std::string> items;
    void fail(const std::string& s) {
        ++failures;
        if (items.size() < 4) items.push_back(s);
    }
    bool ok() const { return failures == 0; }
    std::string str() const {
        std::string out;
        for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
        if (failures > static_cast<int>(items.size()))
            out += "; and " + std::to_string(failures - static_cast<int>(items.size())) + " more";
        return out;
    }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep = "; ") {
    std::string out;
    for (const auto& s : parts) out += (out.empty() ? "" : sep) + s;
    return out;
}

std::vector<int> classical_part(const Weight& w) { return std::vector<int>(w.lam.begin() + 1, w.lam.end()); }

// Weyl group orbit of a classical weight given in fundamental weight coordinates 1..n.
std::set<std::vector<int>> weyl_orbit(const CartanSpec& spec, const std::vector<int>& start) {
    std::set<std::vector<int>> seen{start};
    std::deque<std::vector<int>> queue{start};
    while (!queue.empty()) {
        auto mu = queue.front();
        queue.pop_front();
        for (int j = 1; j <= spec.n; ++j) {
            int c = mu[j - 1];
            if (c == 0) continue;
            auto nu = mu;
            for (int i = 1; i <= spec.n; ++i) nu[i - 1] -= c * spec.a[i][j];
            if (seen.insert(nu).second) queue.push_back(nu);
        }
    }
    return seen;
}

// ---------------------------------------------------------------- cardinality

CheckResult check_cardinality(Context& ctx) {
    CheckResult res;
    Witness w;
    const std::map<TypeTag, int> expected = {{TypeTag::E6, 27}, {TypeTag::E7, 56}, {TypeTag::E8, 249}};
    std::vector<std::string> notes;
    for (TypeTag t : ALL_TYPES) {
        const TypeModel& m = ctx.model(t);
        const CartanSpec& spec = m.spec;
        std::map<std::vector<int>, int> multiset;
        for (int x = 0; x < m.b.size(); ++x) ++multiset[classical_part(m.b.wt[x])];
        std::map<std::vector<int>, int> oracle;
        if (t == TypeTag::E8) {
            Weight theta = spec.root_weight(highest_root(spec));
            for (const auto& mu : weyl_orbit(spec, classical_part(theta))) oracle[mu] = 1;
            oracle[std::vector<int>(spec.n, 0)] += spec.n + 1;
        } else {
            int node = t == TypeTag::E6 ? 1 : 7;
            std::vector<int> start(spec.n, 0);
            start[node - 1] = 1;
            for (const auto& mu : weyl_orbit(spec, start)) oracle[mu] = 1;
        }
        int oracle_size = 0;
        for (const auto& [mu, k] : oracle) oracle_size += k;
        notes.push_back(type_name(t) + ": |B| = " + std::to_string(m.b.size()) + ", oracle " +
                        std::to_string(oracle_size));
        if (m.b.size() != expected.at(t)) w.fail(type_name(t) + " has " + std::to_string(m.b.size()) + " elements");
        if (oracle_size != expected.at(t)) w.fail(type_name(t) + " oracle has " + std::to_string(oracle_size));
        if (multiset != oracle) w.fail(type_name(t) + " weight multiset differs from the orbit oracle");
        std::string ax = check_axioms(spec, m.b);
        if (!ax.empty()) w.fail(type_name(t) + ": " + ax);
        res.detail[type_name(t)] = {{"size", m.b.size()}, {"oracle", oracle_size}};
    }
    res.pass = w.ok();
    res.witness = w.ok() ? join(notes) : w.str();
    return res;
}

// ---------------------------------------------------------------- perfect

CheckResult check_perfect_suite(Context& ctx) {
    CheckResult res;
    Witness w;
    const ReferenceTables& refs = ctx.refs();
    std::vector<std::string> notes;
    for (TypeTag t : ALL_TYPES) {
        const TypeModel& m = ctx.model(t);
        PerfectReport rep = check_perfect(m.spec, m.b, 1);
        for (const PerfectCheck& c : rep.checks)
            if (!c.pass) w.fail(type_name(t) + " " + c.name + ": " + c.witness);
        std::set<std::string> elements;
        int rows = 0;
        for (const PerfectEntry& e : refs.perfect) {
            if (e.type != t) continue;
            ++rows;
            Weight lam = m.spec.fundamental(e.node);
            int x = e.upper ? upper_element(m.b, lam) : lower_element(m.b, lam);
            std::string got = x == NONE ? "none" : m.b.names[x];
            if (got != e.element)
                w.fail(type_name(t) + " " + (e.upper ? "b^L" : "b_L") + std::to_string(e.node) + " = " + got +
                       ", table " + e.element);
            elements.insert(e.element);
        }
        if (rows != 2 * static_cast<int>(m.spec.minuscule.size()))
            w.fail(type_name(t) + " has " + std::to_string(rows) + " table rows");
        notes.push_back(type_name(t) + ": " + std::to_string(rep.checks.size()) + " properties, " +
                        std::to_string(elements.size()) + " identities");
        res.detail[type_name(t)] = {{"identities", elements.size()}, {"rows", rows}};
    }
    res.pass = w.ok();
    res.witness = w.ok() ? join(notes) : w.str();
    return res;
}

// ---------------------------------------------------------------- energy

CheckResult check_energy(Context& ctx) {
    CheckResult res;
    Witness w;
    std::vector<std::string> notes;
    for (TypeTag t : {TypeTag::E6, TypeTag::E7}) {
        const TypeModel& m = ctx.model(t);
        int pairs = 0;
        for (int b = 0; b < m.b.size(); ++b)
            for (int a = 0; a < m.b.size(); ++a) {
                ++pairs;
                int d = m.zero_dist.at(a, b);
                if (d != m.h.at(b, a))
                    w.fail(type_name(t) + " H(" + m.b.names[b] + " (x) " + m.b.names[a] + ") = " +
                           std::to_string(m.h.at(b, a)) + ", distance " + (d == INF_DIST ? "inf" : std::to_string(d)));
            }
        notes.push_back(type_name(t) + ": " + std::to_string(pairs) + " pairs");
        res.detail[type_name(t)] = pairs;
    }
    res.pass = w.ok();
    res.witness = w.ok() ? join(notes) : w.str();
    return res;
}

// ---------------------------------------------------------------- maximal

Root add_roots(const Root& a, const Root& b, int k = 1) {
    Root r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += k * b[i];
    return r;
}

// Shortest vertex sequence in the allowed set from a neighbour of the sources to target (inclusive).
std::vector<int> shortest_chain(const CartanSpec& spec, const std::set<int>& sources, const std::set<int>& allowed,
                                int target) {
    if (sources.count(target)) return {};
    std::map<int, int> prev;
    std::deque<int> queue;
    for (int s : sources) {
        prev[s] = NONE;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == target) break;
        for (int y = 1; y <= spec.n; ++y) {
            if (!spec.adjacent(x, y) || prev.count(y) || !allowed.count(y)) continue;
            prev[y] = x;
            queue.push_back(y);
        }
    }
    if (!prev.count(target)) return {};
    std::vector<int> chain;
    for (int x = target; x != NONE && !sources.count(x); x = prev[x]) chain.push_back(x);
    return chain;
}

// The explicit description of the component of x_theta (x) y_i.
// The pairs x_theta (x) y_i and y_i (x) x_-theta are not included.
std::vector<std::pair<Root, Root>> explicit_component_pairs(const CartanSpec& spec, int i) {
    Root theta = highest_root(spec);
    std::vector<std::pair<Root, Root>> out;
    std::set<int> nodes;
    for (int j = 1; j <= spec.n; ++j) nodes.insert(j);
    for (const Root& gamma : enumerate_roots(spec)) {
        if (!is_positive(gamma) || gamma == theta) continue;
        std::set<int> supp;
        for (int j = 1; j <= spec.n; ++j)
            if (gamma[j - 1] != 0) supp.insert(j);
        Root alpha(spec.n, 0);
        if (!supp.count(i)) {
            std::set<int> allowed;
            for (int j : nodes)
                if (!supp.count(j)) allowed.insert(j);
            for (int j : shortest_chain(spec, supp, allowed, i)) alpha[j - 1] += 1;
        }
        Root beta = add_roots(add_roots(theta, gamma, -1), alpha, -1);
        out.push_back({add_roots(theta, alpha, -1), negate(beta)});
        out.push_back({beta, add_roots(negate(theta), alpha)});
    }
    for (int j = 1; j <= spec.n; ++j) {
        Root a(spec.n, 0);
        std::set<int> from{i};
        a[i - 1] += 1;
        if (j != i)
            for (int k : shortest_chain(spec, from, nodes, j)) a[k - 1] += 1;
        out.push_back({add_roots(theta, a, -1), add_roots(negate(theta), a)});
    }
    return out;
}

CheckResult check_maximal(Context& ctx) {
    CheckResult res;
    Witness w;
    const TypeModel& m = ctx.model(TypeTag::E8);
    const ReferenceTables& refs = ctx.refs();
    CrystalGraph bb = tensor(m.b, m.b);

    std::set<std::tuple<int, int, int>> found;
    for (const MaximalVector& v : maximal_vectors(m.b, m.h)) found.insert({v.left, v.right, v.h});
    std::set<std::tuple<int, int, int>> listed;
    std::vector<std::string> hs;
    for (const MaximalEntry& e : refs.maximal) {
        if (e.type != TypeTag::E8) continue;
        int l = m.b.find(e.left), r = m.b.find(e.right);
        if (l == NONE || r == NONE) {
            w.fail("unknown element in " + e.left + " (x) " + e.right);
            continue;
        }
        listed.insert({l, r, e.h});
        hs.push_back(std::to_string(e.h));
        if (e.component_size >= 0) {
            int size = static_cast<int>(classical_component(bb, tensor_id(m.b, l, r)).size());
            if (size != e.component_size)
                w.fail("component of " + e.left + " (x) " + e.right + " has " + std::to_string(size) + " elements, listed " +
                       std::to_string(e.component_size));
        }
    }
    if (found != listed) {
        for (auto [l, r, h] : found)
            if (!listed.count({l, r, h}))
                w.fail("unlisted maximal vector " + m.b.names[l] + " (x) " + m.b.names[r] + " H " + std::to_string(h));
        for (auto [l, r, h] : listed)
            if (!found.count({l, r, h}))
                w.fail("listed vector " + m.b.names[l] + " (x) " + m.b.names[r] + " H " + std::to_string(h) + " not found");
    }

    // Explicit component of x_theta (x) y_i for the unique node next to 0.
    int i = m.spec.tilde_I.front();
    Root theta = highest_root(m.spec);
    int xt = m.b.find(root_name(theta)), xmt = m.b.find(root_name(negate(theta)));
    int yi = m.b.find("y" + std::to_string(i));
    std::set<int> described{tensor_id(m.b, xt, yi), tensor_id(m.b, yi, xmt)};
    int listed_count = 2;
    for (const auto& [l, r] : explicit_component_pairs(m.spec, i)) {
        int a = m.b.find(root_name(l)), b = m.b.find(root_name(r));
        ++listed_count;
        if (a == NONE || b == NONE) {
            w.fail("component description names a non-root " + root_name(l) + " (x) " + root_name(r));
            continue;
        }
        described.insert(tensor_id(m.b, a, b));
    }
    auto comp = classical_component(bb, tensor_id(m.b, xt, yi));
    std::set<int> actual(comp.begin(), comp.end());
    if (described != actual)
        w.fail("described component of x_theta (x) y" + std::to_string(i) + " has " + std::to_string(described.size()) +
               " elements, computed " + std::to_string(actual.size()));
    res.detail = {{"maximal_vectors", found.size()}, {"component_y", actual.size()}, {"described_terms", listed_count}};
    res.pass = w.ok();
    res.witness = w.ok() ? std::to_string(found.size()) + " maximal vectors with H " + join(hs, ",") +
                               "; component of x_theta (x) y" + std::to_string(i) + " has " +
                               std::to_string(actual.size()) + " elements as described"
                         : w.str();
    return res;
}

// ---------------------------------------------------------------- ground

CheckResult check_ground(Context& ctx) {
    CheckResult res;
    Witness w;
    const ReferenceTables& refs = ctx.refs();
    int rows = 0;
    for (TypeTag t : ALL_TYPES) {
        const TypeModel& m = ctx.model(t);
        for (int node : m.spec.minuscule) {
            const GroundRow* row = refs.ground_row(t, node);
            std::string tag = type_name(t) + " L" + std::to_string(node);
            if (!row) {
                w.fail(tag + " has no table row");
                continue;
            }
            ++rows;
            const GroundState& g = m.ground(node);
            if (row->b.size() != row->h.size() || row->b.size() != row->m.size() || row->b.empty())
                w.fail(tag + " table row lengths differ");
            for (size_t r = 0; r < row->b.size(); ++r) {
                int rr = static_cast<int>(r);
                if (m.b.names[g.b_at(rr)] != row->b[r])
                    w.fail(tag + " b_" + std::to_string(r) + " = " + m.b.names[g.b_at(rr)] + ", table " + row->b[r]);
                if (r < row->h.size() && g.h_at(rr) != row->h[r])
                    w.fail(tag + " H_" + std::to_string(r) + " = " + std::to_string(g.h_at(rr)) + ", table " +
                           std::to_string(row->h[r]));
                if (r < row->m.size() && g.m_at(rr) != row->m[r])
                    w.fail(tag + " m_" + std::to_string(r) + " = " + std::to_string(g.m_at(rr)) + ", table " +
                           std::to_string(row->m[r]));
                // the z-powers give H_aff = 1 on every adjacent ground pair
                if (h_aff(m.h, g.g_at(rr + 1), g.g_at(rr)) != 1) w.fail(tag + " H_aff != 1 at r = " + std::to_string(r));
            }
        }
    }
    if (rows != static_cast<int>(refs.ground.size())) w.fail("the table has rows for non level 1 weights");
    res.detail = {{"rows", rows}};
    res.pass = w.ok() && rows == 6;
    res.witness = w.ok() ? std::to_string(rows) + " (type, weight) rows reproduced" : w.str();
    return res;
}

// ---------------------------------------------------------------- psi

CheckResult check_psi(Context& ctx) {
    CheckResult res;
    Witness w;
    std::vector<std::string> notes;
    for (TypeTag t : ALL_TYPES) {
        const TypeModel* mp = nullptr;
        try {
            mp = &ctx.model(t);
        } catch (const Error& e) {
            w.fail(e.what());
            continue;
        }
        const TypeModel& m = *mp;
        if (m.c.graph.size() != m.b.size()) w.fail(type_name(t) + " column crystal has " + std::to_string(m.c.graph.size()));
        for (int x = 0; x < m.b.size(); ++x) {
            if (m.c.graph.wt[m.psi[x]] != m.b.wt[x]) {
                w.fail(type_name(t) + " weight of psi(" + m.b.names[x] + ")");
                break;
            }
        }
        FaultSummary f = pattern_fault_injection(m);
        for (const auto& s : f.missed) w.fail(type_name(t) + " undetected fault: " + s);
        int effective = f.edges - f.redundant;
        notes.push_back(type_name(t) + ": " + std::to_string(m.c.graph.size()) + " classes, support deletions detected " +
                        std::to_string(f.detected) + "/" + std::to_string(effective) + " (" + std::to_string(f.redundant) +
                        " implied edges skipped), recolourings detected " + std::to_string(f.recolourings_detected) + "/" +
                        std::to_string(f.recolourings));
        res.detail[type_name(t)] = {{"classes", m.c.graph.size()},
                                    {"support_edges", f.edges},
                                    {"implied_edges", f.redundant},
                                    {"deletions_detected", f.detected},
                                    {"recolourings", f.recolourings},
                                    {"recolourings_detected", f.recolourings_detected}};
    }
    res.pass = w.ok();
    res.witness = w.ok() ? join(notes) : w.str();
    return res;
}

// ---------------------------------------------------------------- sigma

struct SigmaCompare {
    int rows = 0;
    int bc_match = 0;
    int full_match = 0;
    std::map<int, int> offsets;   // computed p - printed p
    std::vector<std::string> bad;
};

SigmaCompare compare_sigma(const TypeModel& m, const std::vector<SigmaRow>& rows, const ReferenceTables& refs) {
    SigmaCompare c;
    std::set<int> seen;
    for (const SigmaEntry& e : refs.sigma) {
        if (e.type != m.spec.type) continue;
        ++c.rows;
        int b = m.b.find(e.b);
        if (b == NONE) {
            c.bad.push_back("unknown element " + e.b);
            continue;
        }
        seen.insert(b);
        const SigmaRow& r = rows[b];
        bool bc = m.b.names[r.c] == e.c;
        if (bc) ++c.bc_match;
        if (bc && r.p == e.p) ++c.full_match;
        if (bc) ++c.offsets[r.p - e.p];
        else if (c.bad.size() < 3) c.bad.push_back("sigma(" + e.b + ") = " + m.b.names[r.c] + ", table " + e.c);
    }
    if (static_cast<int>(seen.size()) != m.b.size()) c.bad.push_back("table covers " + std::to_string(seen.size()) + " elements");
    return c;
}

CheckResult check_sigma(Context& ctx) {
    CheckResult res;
    Witness w;
    const ReferenceTables& refs = ctx.refs();
    std::vector<std::string> notes;
    for (TypeTag t : {TypeTag::E6, TypeTag::E7}) {
        const TypeModel& m = ctx.model(t);
        SigmaCompare c = compare_sigma(m, m.sigma_rows, refs);
        for (const auto& s : c.bad) w.fail(type_name(t) + " " + s);
        std::string offs;
        for (auto [d, k] : c.offsets) offs += (offs.empty() ? "" : ",") + std::to_string(d) + "x" + std::to_string(k);
        std::string note = type_name(t) + ": " + std::to_string(c.full_match) + "/" + std::to_string(c.rows) +
                           " rows exact, (b,c) " + std::to_string(c.bc_match) + "/" + std::to_string(c.rows) +
                           ", computed p minus printed p: " + offs;
        if (c.full_match != c.rows || c.rows != m.b.size()) {
            int reproducing = 0, carrying = 0;
            for (const SlotMap& motion : pattern_motions(m.c.pattern, m.color_perm)) {
                try {
                    SigmaCompare alt = compare_sigma(m, sigma_table(m.c, motion, m.psi), refs);
                    if (alt.full_match == alt.rows && alt.bad.empty()) {
                        ++reproducing;
                        const GroundState& g = m.ground(0);
                        Column img = map_column(motion, m.c.realize({m.psi[g.b_at(1)], g.m_at(1)}));
                        if (img == m.c.realize({m.psi[g.b_at(0)], g.m_at(0)})) ++carrying;
                    }
                } catch (const Error&) {
                }
            }
            int violations = 0;
            for (const SigmaEntry& e : refs.sigma) {
                if (e.type != t) continue;
                int b = m.b.find(e.b), c = m.b.find(e.c);
                if (b == NONE || c == NONE) continue;
                for (int a = 0; a < m.b.size(); ++a)
                    if (e.p + 1 - m.h.at(b, a) - m.h.at(a, c) < 0) ++violations;
            }
            note += "; with the printed p the inequality p + 1 - H(b (x) a) - H(a (x) c) >= 0 fails on " +
                    std::to_string(violations) + " pairs";
            note += "; pattern motions reproducing the printed table: " + std::to_string(reproducing) + ", of which " +
                    std::to_string(carrying) + " carry the ground column r = 1 onto r = 0";
            w.fail(note);
        }
        notes.push_back(note);
        res.detail[type_name(t)] = {{"rows", c.rows}, {"exact", c.full_match}, {"bc", c.bc_match}};
    }
    {
        const TypeModel& m = ctx.model(TypeTag::E8);
        int z_rows = 0;
        for (const SigmaRow& r : m.sigma_rows)
            if (r.b == r.c && r.p == 1) ++z_rows;
        if (z_rows != m.b.size()) w.fail("E8 sigma differs from z on " + std::to_string(m.b.size() - z_rows) + " elements");
        notes.push_back("E8: sigma = z on " + std::to_string(z_rows) + " elements");
        res.detail["E8"] = {{"z_rows", z_rows}};
    }
    res.pass = w.ok();
    res.witness = w.ok() ? join(notes) : w.str();
    return res;
}

// ---------------------------------------------------------------- master

std::string weight_key(const Weight& w) { return to_string(w); }

void compare_reduced(const TypeModel& m, int node, int depth, Context& ctx, Witness& w, nlohmann::json& detail) {
    std::string tag = type_name(m.spec.type) + " L" + std::to_string(node);
    WallModel wm(m, node, WallKind::reduced);
    PathModel pm(m.spec, m.b, m.h, m.ground(node));
    const auto& closure = ctx.closure(wm, depth);
    auto slice = enumerate_slice(wm, depth);
    std::set<YoungWall> a(closure.begin(), closure.end()), s(slice.begin(), slice.end());
    if (a != s)
        w.fail(tag + " reduced: closure " + std::to_string(a.size()) + " walls, slice " + std::to_string(s.size()));
    auto paths = pm.enumerate(depth);
    std::set<LambdaPath> p(paths.begin(), paths.end()), image;
    std::map<std::string, int> wall_counts, path_counts;
    for (const YoungWall& y : a) {
        LambdaPath q{wm.to_path(y)};
        image.insert(q);
        ++wall_counts[weight_key(wm.weight(y))];
        if (!wm.is_reduced(y)) w.fail(tag + " closure wall is not reduced");
        if (wm.weight(y) != pm.weight(q)) w.fail(tag + " weight of " + pm.to_string(q));
        if (pm.embed(q).head != wm.to_fock_path(y)) w.fail(tag + " embedding differs at " + pm.to_string(q));
        for (int i = 0; i < m.spec.nodes(); ++i)
            for (Dir d : {Dir::f, Dir::e}) {
                auto wy = wm.step(y, d, i);
                auto py = pm.step(q, d, i);
                if (wy.has_value() != py.has_value() || (wy && LambdaPath{wm.to_path(*wy)} != *py))
                    w.fail(tag + std::string(d == Dir::f ? " f_" : " e_") + std::to_string(i) + " differs at " +
                           pm.to_string(q));
                if (wy && !wm.is_reduced(*wy)) w.fail(tag + " step leaves the reduced walls");
            }
    }
    for (const LambdaPath& q : p) ++path_counts[weight_key(pm.weight(q))];
    if (image != p) w.fail(tag + " reduced: " + std::to_string(image.size()) + " wall images, " + std::to_string(p.size()) + " paths");
    if (wall_counts != path_counts) w.fail(tag + " reduced: per-weight counts differ");
    detail[tag]["reduced"] = {{"walls", a.size()}, {"paths", p.size()}, {"weights", wall_counts.size()}};
}

void compare_fock(const TypeModel& m, int node, int depth, Context& ctx, Witness& w, nlohmann::json& detail) {
    std::string tag = type_name(m.spec.type) + " L" + std::to_string(node);
    WallModel wm(m, node, WallKind::fock);
    WallModel wr(m, node, WallKind::reduced);
    PathModel pm(m.spec, m.b, m.h, m.ground(node));
    const auto& closure = ctx.closure(wm, depth);
    auto slice = enumerate_slice(wm, depth);
    std::set<YoungWall> a(closure.begin(), closure.end()), s(slice.begin(), slice.end());
    if (a != s) w.fail(tag + " Fock: closure " + std::to_string(a.size()) + " walls, slice " + std::to_string(s.size()));
    auto paths = pm.enumerate_fock(depth);
    std::set<FockPath> p(paths.begin(), paths.end()), image;
    std::map<std::string, int> wall_counts, path_counts;
    int without_delta = 0;
    for (const YoungWall& y : a) {
        FockPath q{wm.to_fock_path(y)};
        image.insert(q);
        ++wall_counts[weight_key(wm.weight(y))];
        if (!wm.is_normally_ordered(y)) w.fail(tag + " Fock wall is not normally ordered");
        if (!pm.fock_valid(q)) w.fail(tag + " Fock path is not normally ordered");
        if (wm.weight(y) != pm.fock_weight(q)) w.fail(tag + " Fock weight of " + pm.to_string(q));
        if (wm.fock_depth(y) != pm.fock_depth(q)) w.fail(tag + " Fock depth of " + pm.to_string(q));
        for (int r = 0; r < static_cast<int>(y.cols.size()); ++r)
            if (wm.zero_count(y, r) != m.ground(node).m_at(r) - y.cols[r].shift)
                w.fail(tag + " 0-block count differs from m_r - n_r");
        bool reduced = wr.is_reduced(y);
        if (wm.removable_delta_columns(y).empty()) {
            ++without_delta;
            if (!reduced) w.fail(tag + " wall without removable delta column is not reduced");
        } else if (reduced) {
            w.fail(tag + " reduced wall has a removable delta column");
        }
        for (int i = 0; i < m.spec.nodes(); ++i)
            for (Dir d : {Dir::f, Dir::e}) {
                auto wy = wm.step(y, d, i);
                auto py = pm.fock_step(q, d, i);
                if (wy.has_value() != py.has_value() || (wy && FockPath{wm.to_fock_path(*wy)} != *py))
                    w.fail(tag + std::string(d == Dir::f ? " Fock f_" : " Fock e_") + std::to_string(i) + " differs at " +
                           pm.to_string(q));
                if (wy && !wm.is_normally_ordered(*wy)) w.fail(tag + " Fock step leaves the normally ordered walls");
            }
    }
    for (const FockPath& q : p) ++path_counts[weight_key(pm.fock_weight(q))];
    if (image != p) w.fail(tag + " Fock: " + std::to_string(image.size()) + " wall images, " + std::to_string(p.size()) + " paths");
    if (wall_counts != path_counts) w.fail(tag + " Fock: per-weight counts differ");
    const auto& reduced = ctx.closure(wr, depth);
    if (without_delta != static_cast<int>(reduced.size()))
        w.fail(tag + " Fock walls without removable delta column: " + std::to_string(without_delta) + ", reduced walls " +
               std::to_string(reduced.size()));
    detail[tag]["fock"] = {{"walls", a.size()}, {"paths", p.size()}, {"weights", wall_counts.size()}};
}

CheckResult check_master(Context& ctx) {
    CheckResult res;
    Witness w;
    std::vector<std::string> notes;
    for (TypeTag t : ALL_TYPES) {
        const TypeModel& m = ctx.model(t);
        int d = master_depth(t);
        for (int node : m.spec.minuscule) {
            compare_reduced(m, node, d, ctx, w, res.detail);
            compare_fock(m, node, d, ctx, w, res.detail);
        }
        std::string tag = type_name(t) + " L0";
        notes.push_back(type_name(t) + " depth " + std::to_string(d) + ": " +
                        res.detail[tag]["reduced"]["walls"].dump() + " reduced, " +
                        res.detail[tag]["fock"]["walls"].dump() + " Fock walls at L0");
    }
    res.pass = w.ok();
    res.witness = w.ok() ? join(notes) : w.str();
    return res;
}

// ---------------------------------------------------------------- character

CheckResult check_character(Context& ctx) {
    CheckResult res;
    Witness w;
    std::vector<std::string> notes;
    const int d = CHARACTER_DEPTH;
    auto p = partitions_up_to(d);
    for (TypeTag t : ALL_TYPES) {
        const TypeModel& m = ctx.model(t);
        WallModel wf(m, 0, WallKind::fock), wr(m, 0, WallKind::reduced);
        std::map<Weight, long> fock, conv;
        std::map<int, int> hw;
        for (const YoungWall& y : ctx.closure(wf, d)) {
            Weight wt = wf.weight(y);
            ++fock[wt];
            bool top = true;
            for (int i = 0; i < m.spec.nodes() && top; ++i)
                if (wf.step(y, Dir::e, i)) top = false;
            if (top) {
                Weight rest = wt - m.spec.fundamental(0);
                bool pure = std::all_of(rest.lam.begin(), rest.lam.end(), [](int v) { return v == 0; });
                if (!pure) w.fail(type_name(t) + " highest weight wall off the delta line");
                else ++hw[-rest.delta];
            }
        }
        for (const YoungWall& y : ctx.closure(wr, d)) {
            int depth = 0;
            for (int r = 0; r < static_cast<int>(y.cols.size()); ++r) depth += wr.block_total(y, r);
            Weight wt = wr.weight(y);
            for (int k = 0; depth + k <= d; ++k) conv[wt - m.spec.null_root().scaled(k)] += p[k];
        }
        if (fock != conv) {
            int diff = 0;
            std::set<Weight> keys;
            for (auto& [k, v] : fock) keys.insert(k);
            for (auto& [k, v] : conv) keys.insert(k);
            for (const Weight& k : keys)
                if ((fock.count(k) ? fock[k] : 0) != (conv.count(k) ? conv[k] : 0)) ++diff;
            w.fail(type_name(t) + " character differs at " + std::to_string(diff) + " weights");
        }
        std::string counts;
        for (int k = 0; k <= d; ++k) {
            int got = hw.count(k) ? hw[k] : 0;
            if (got != p[k])
                w.fail(type_name(t) + " " + std::to_string(got) + " highest weight walls at L0 - " + std::to_string(k) +
                       "delta, p = " + std::to_string(p[k]));
            counts += (counts.empty() ? "" : ",") + std::to_string(got);
        }
        notes.push_back(type_name(t) + ": " + std::to_string(fock.size()) + " weights, hw counts " + counts);
        res.detail[type_name(t)] = {{"weights", fock.size()}, {"hw_counts", counts}};
    }
    res.pass = w.ok();
    res.witness = w.ok() ? join(notes) : w.str();
    return res;
}

// ---------------------------------------------------------------- right block

bool column_contained(const Column& a, const Column& b) {
    for (long s = std::min(a.base, b.base); s <= a.max_slot(); ++s)
        if (a.has(s) && !b.has(s)) return false;
    return true;
}

CheckResult check_right_block(Context& ctx) {
    CheckResult res;
    Witness w;
    std::vector<std::string> notes;
    for (TypeTag t : ALL_TYPES) {
        const TypeModel& m = ctx.model(t);
        int d = master_depth(t);
        int pairs = 0, exempt_fail = 0;
        for (int node : m.spec.minuscule) {
            WallModel wr(m, node, WallKind::reduced), wf(m, node, WallKind::fock);
            std::string tag = type_name(t) + " L" + std::to_string(node);
            for (int r = 0; r < 2 * m.ground(node).period + 2; ++r)
                if (!wr.right_block(wr.ground_col(r + 1), wr.ground_col(r)))
                    w.fail(tag + " ground wall fails at r = " + std::to_string(r));
            for (const YoungWall& y : ctx.closure(wr, d)) {
                for (const RightBlockPair& q : wr.right_block_report(y)) {
                    ++pairs;
                    if (!q.holds) w.fail(tag + " reduced wall fails at r = " + std::to_string(q.r));
                }
                if (!wr.built_on_ground(y)) w.fail(tag + " reduced wall not built on the ground wall");
            }
            for (const YoungWall& y : ctx.closure(wf, d)) {
                for (const RightBlockPair& q : wf.right_block_report(y)) {
                    ++pairs;
                    if (q.holds) continue;
                    if (t == TypeTag::E8 && q.exempt) ++exempt_fail;
                    else w.fail(tag + " Fock wall fails at r = " + std::to_string(q.r) + " with H_aff " +
                                std::to_string(q.h_aff));
                }
                if (t != TypeTag::E8 && !wf.built_on_ground(y)) w.fail(tag + " Fock wall not built on the ground wall");
            }
        }
        std::string note = type_name(t) + ": " + std::to_string(pairs) + " enumerated pairs";

        WallModel wm(m, 0, WallKind::fock);
        int n = m.b.size();
        std::vector<Column> moved(n);
        for (int b = 0; b < n; ++b) moved[b] = map_column(m.sigma, m.c.realize({m.psi[b], 0}));
        auto holds = [&](int b, int a, int k) { return column_contained(moved[b], m.c.realize({m.psi[a], k})); };
        if (t != TypeTag::E8) {
            // pair (z^0 psi(b), z^k psi(a)) against k <= p - H(a (x) c)
            int scanned = 0, negative_gap = 0;
            for (int b = 0; b < n; ++b) {
                const SigmaRow& row = m.sigma_rows[b];
                for (int a = 0; a < n; ++a) {
                    int bound = row.p - m.h.at(a, row.c);
                    for (int k = bound - 2; k <= bound + 2; ++k) {
                        ++scanned;
                        if (holds(b, a, k) != (k <= bound))
                            w.fail(type_name(t) + " right block of (" + m.b.names[b] + ", z^" + std::to_string(k) + " " +
                                   m.b.names[a] + ") disagrees with the bound");
                    }
                    if (wm.right_block_gap(b, a) < 0) ++negative_gap;
                }
            }
            if (negative_gap) w.fail(type_name(t) + " gap quantity negative on " + std::to_string(negative_gap) + " pairs");
            note += ", bound verified on " + std::to_string(scanned) + " shifted pairs, gap quantity non-negative";
        } else {
            // zero[b][a] has bit c when some path b -> a in B uses exactly c 0-arrows
            constexpr int CMAX = 10;
            std::vector<std::vector<unsigned>> zero(n, std::vector<unsigned>(n, 0));
            for (int b = 0; b < n; ++b) {
                std::deque<std::pair<int, int>> queue{{b, 0}};
                zero[b][b] |= 1u;
                while (!queue.empty()) {
                    auto [x, c] = queue.front();
                    queue.pop_front();
                    for (int i = 0; i < m.b.colors; ++i) {
                        int y = m.b.f[i][x];
                        int cy = c + (i == 0 ? 1 : 0);
                        if (y == NONE || cy > CMAX || (zero[b][y] >> cy & 1u)) continue;
                        zero[b][y] |= 1u << cy;
                        queue.push_back({y, cy});
                    }
                }
            }
            // exhaustive scan of (z^0 psi(b), z^k psi(a)) with H_aff in 1..6; sigma(z^0 b) = z^1 b
            std::set<std::pair<int, int>> failing, no_path;
            std::set<int> failing_h, no_path_h;
            int scanned = 0, printed_agree = 0, derived_agree = 0;
            for (int b = 0; b < n; ++b)
                for (int a = 0; a < n; ++a) {
                    int hba = m.h.at(b, a);
                    for (int haff = 6; haff >= 1; --haff) {
                        ++scanned;
                        int k = hba - haff;
                        bool geometric = holds(b, a, k);
                        bool path = 1 - k >= 0 && (zero[b][a] >> (1 - k) & 1u);
                        if (path && !geometric)
                            w.fail("E8 path z^1 " + m.b.names[b] + " -> z^" + std::to_string(k) + " " + m.b.names[a] +
                                   " exists but the right block property fails");
                        if (!geometric) {
                            failing.insert({b, a});
                            failing_h.insert(haff);
                        }
                        if (!path) {
                            no_path.insert({b, a});
                            no_path_h.insert(haff);
                        }
                    }
                    // highest z-power with the right block property against the highest admissible one
                    int top = hba - 9;
                    for (int k = hba + 2; k >= hba - 8; --k)
                        if (holds(b, a, k)) {
                            top = k;
                            break;
                        }
                    int gap = top - (hba - 1);
                    if (gap == wm.right_block_gap(b, a, false)) ++derived_agree;
                    if (gap == wm.right_block_gap(b, a, true)) ++printed_agree;
                }
            Root theta = highest_root(m.spec);
            int e = m.b.find("empty"), xt = m.b.find(root_name(theta)), xmt = m.b.find(root_name(negate(theta)));
            std::set<std::pair<int, int>> expected = {{e, e}, {e, xt}, {xmt, e}, {xmt, xt}};
            auto names = [&](const std::set<std::pair<int, int>>& set) {
                std::string got;
                for (auto [b, a] : set) got += (got.empty() ? "" : ", ") + m.b.names[b] + " (x) " + m.b.names[a];
                return got;
            };
            if (no_path != expected) w.fail("E8 pairs without a path from sigma(z^n b): " + names(no_path));
            if (no_path_h != std::set<int>{2}) w.fail("E8 pairs without a path outside H_aff = 2");
            if (!failing_h.empty() && failing_h != std::set<int>{2}) w.fail("E8 right block failures outside H_aff = 2");
            note += ", exhaustive scan of " + std::to_string(scanned) + " shifted pairs: no path from sigma exactly for " +
                    std::to_string(no_path.size()) + " pairs at H_aff = 2, block containment fails only for " +
                    names(failing) + "; gap with the 0-arrow count subtracted matches " + std::to_string(derived_agree) +
                    "/" + std::to_string(n * n) + ", added " + std::to_string(printed_agree) + "/" +
                    std::to_string(n * n);
            res.detail["E8_exempt_candidates"] = names(no_path);
            res.detail["E8_containment_failures"] = names(failing);
            res.detail["E8_gap"] = {{"subtracted", derived_agree}, {"added", printed_agree}};
            if (exempt_fail) note += ", " + std::to_string(exempt_fail) + " exempt enumerated pairs fail";
        }
        notes.push_back(note);
    }
    res.pass = w.ok();
    res.witness = w.ok() ? join(notes) : w.str();
    return res;
}

// ---------------------------------------------------------------- self path

CheckResult check_self_path(Context& ctx) {
    CheckResult res;
    Witness w;
    const TypeModel& m = ctx.model(TypeTag::E8);
    int n = m.b.size();
    // classical reachability closure
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int s = 0; s < n; ++s) {
        std::deque<int> queue{s};
        reach[s][s] = 1;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int i = 1; i < m.b.colors; ++i) {
                int y = m.b.f[i][x];
                if (y != NONE && !reach[s][y]) {
                    reach[s][y] = 1;
                    queue.push_back(y);
                }
            }
        }
    }
    std::set<int> without;
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int u = 0; u < n && !found; ++u) {
            int v = m.b.f[0][u];
            if (v != NONE && reach[a][u] && reach[v][a]) found = true;
        }
        if (!found) without.insert(a);
    }
    Root theta = highest_root(m.spec);
    std::set<int> expected = {m.b.find("empty"), m.b.find(root_name(theta)), m.b.find(root_name(negate(theta)))};
    std::string got;
    for (int a : without) got += (got.empty() ? "" : ", ") + m.b.names[a];
    if (without != expected) w.fail("elements without a self path: " + got);
    res.detail = {{"elements", n}, {"without", without.size()}};
    res.pass = w.ok();
    res.witness = w.ok() ? "all " + std::to_string(n) + " elements scanned; no self path exactly for " + got : w.str();
    return res;
}

// ---------------------------------------------------------------- block difference

CheckResult check_block_difference(Context& ctx) {
    CheckResult res;
    Witness w;
    std::vector<std::string> notes;
    for (TypeTag t : ALL_TYPES) {
        const TypeModel& m = ctx.model(t);
        WallModel wm(m, 0, WallKind::reduced);
        const GroundState& g = m.ground(0);
        int positions = std::lcm(2, g.period);
        int n = m.b.size(), negative = 0, cases = 0;
        std::set<int> values;
        for (int r = 0; r < positions; ++r)
            for (int b = 0; b < n; ++b)
                for (int a = 0; a < n; ++a) {
                    std::optional<int> first;
                    for (int off = -2; off <= 2; ++off) {
                        YoungWall y = wm.ground();
                        for (int k = 0; k < r + 2; ++k) y.cols.push_back(wm.ground_col(k));
                        ColumnClass next{m.psi[b], g.m_at(r + 1) + off};
                        // the reduced identity fixes the shift of column r
                        int here_shift = m.h.at(b, a) - g.h_at(r) + next.shift - g.m_at(r + 1) + g.m_at(r);
                        y.cols[r + 1] = next;
                        y.cols[r] = {m.psi[a], here_shift};
                        int lhs = m.h.at(b, a) - wm.zero_count(y, r + 1) + wm.zero_count(y, r);
                        if (lhs != g.h_at(r)) w.fail(type_name(t) + " reduced identity not met by the fixed shift");
                        int diff = wm.block_total(y, r) - wm.block_total(y, r + 1);
                        if (!first) first = diff;
                        else if (*first != diff)
                            w.fail(type_name(t) + " difference depends on the shift for " + m.b.names[b] + " (x) " +
                                   m.b.names[a]);
                    }
                    ++cases;
                    values.insert(*first);
                    if (*first < 0) {
                        ++negative;
                        w.fail(type_name(t) + " negative difference " + std::to_string(*first) + " for " + m.b.names[b] +
                               " (x) " + m.b.names[a] + " at r = " + std::to_string(r));
                    }
                }
        notes.push_back(type_name(t) + ": " + std::to_string(cases) + " (pair, position) cases over " +
                        std::to_string(positions) + " positions, differences in [" + std::to_string(*values.begin()) +
                        ", " + std::to_string(*values.rbegin()) + "]");
        res.detail[type_name(t)] = {{"cases", cases}, {"negative", negative}};
    }
    res.pass = w.ok();
    res.witness = w.ok() ? join(notes) : w.str();
    return res;
}

using CheckFn = std::function<CheckResult(Context&)>;

const std::map<std::string, CheckFn>& check_functions() {
    static const std::map<std::string, CheckFn> fns = {
        {"cardinality", check_cardinality}, {"perfect", check_perfect_suite},
        {"energy", check_energy},           {"maximal", check_maximal},
        {"ground", check_ground},           {"psi", check_psi},
        {"sigma", check_sigma},             {"master", check_master},
        {"character", check_character},     {"right_block", check_right_block},
        {"self_path", check_self_path},     {"block_difference", check_block_difference},
    };
    return fns;
}

} // namespace

bool support_edge_redundant(const ColumnPattern& p, int residue, int index) {
    long target = residue + p.slots[residue].supports[index];
    std::set<long> seen;
    std::deque<long> queue;
    for (size_t k = 0; k < p.slots[residue].supports.size(); ++k)
        if (static_cast<int>(k) != index) queue.push_back(residue + p.slots[residue].supports[k]);
    while (!queue.empty()) {
        long s = queue.front();
        queue.pop_front();
        if (s == target) return true;
        if (s < target || !seen.insert(s).second) continue;
        for (long t : p.supports(s)) queue.push_back(t);
    }
    return false;
}

FaultSummary pattern_fault_injection(const TypeModel& m) {
    FaultSummary f;
    const ColumnPattern& base = m.c.pattern;
    auto detected = [&](const ColumnPattern& q) {
        try {
            ColumnCrystal c = build_column_crystal(q, m.spec);
            psi(m.b, c);
            return false;
        } catch (const Error&) {
            return true;
        }
    };
    for (int r = 0; r < base.period; ++r) {
        for (int k = 0; k < static_cast<int>(base.slots[r].supports.size()); ++k) {
            ++f.edges;
            if (support_edge_redundant(base, r, k)) {
                ++f.redundant;
                continue;
            }
            ColumnPattern q = base;
            q.slots[r].supports.erase(q.slots[r].supports.begin() + k);
            if (detected(q)) ++f.detected;
            else f.missed.push_back("slot " + std::to_string(r) + " support " + std::to_string(k));
        }
        ++f.recolourings;
        ColumnPattern q = base;
        q.slots[r].color = (q.slots[r].color + 1) % m.spec.nodes();
        if (detected(q)) ++f.recolourings_detected;
        else f.missed.push_back("slot " + std::to_string(r) + " recoloured");
    }
    return f;
}

std::vector<CheckResult> run_verification(const VerifyConfig& config) {
    const auto& fns = check_functions();
    for (const std::string& id : config.only)
        if (!fns.count(id)) throw Error(ErrorCode::data_invalid, "unknown check '" + id + "'");
    Context ctx;
    ctx.data_dir = config.data_dir.empty() ? default_data_dir() : config.data_dir;
    std::vector<CheckResult> out;
    for (const CheckInfo& info : check_catalogue()) {
        if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), info.id) == config.only.end())
            continue;
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = fns.at(info.id)(ctx);
        } catch (const Error& e) {
            r.pass = false;
            r.witness = std::string(error_name(e.code())) + ": " + e.what();
        }
        r.id = info.id;
        r.anchor = info.anchor;
        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(r);
    }
    return out;
}

nlohmann::json verification_report(const std::vector<CheckResult>& results) {
    nlohmann::json j = nlohmann::json::array();
    for (const CheckResult& r : results)
        j.push_back({{"id", r.id},
                     {"anchor", r.anchor},
                     {"status", r.pass ? "PASS" : "FAIL"},
                     {"witness", r.witness},
                     {"detail", r.detail}});
    return j;
}

} // namespace ew
