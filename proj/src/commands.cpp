#include "ew/commands.hpp"
#include "ew/energy.hpp"
#include "ew/error.hpp"
#include "ew/paths.hpp"
#include "ew/perfect.hpp"
#include "ew/tables.hpp"
#include "ew/verify.hpp"
#include "ew/walls.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ew {

Format parse_format(const std::string& s) {
    if (s == "dot") return Format::dot;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw UsageError("unknown format '" + s + "'");
}

Session::Session(std::string data_dir) : data_dir_(data_dir.empty() ? default_data_dir() : std::move(data_dir)) {}

const TypeModel& Session::model(TypeTag t) {
    auto it = models_.find(t);
    if (it == models_.end()) it = models_.emplace(t, std::make_unique<TypeModel>(build_model(t, data_dir_))).first;
    return *it->second;
}

namespace {

std::string csv_weight(const Weight& w) {
    std::string s;
    for (int v : w.lam) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s + " | " + std::to_string(w.delta);
}

nlohmann::json weight_json(const Weight& w) { return {{"lambda", w.lam}, {"delta", w.delta}}; }

std::string graph_csv(const CrystalGraph& g) {
    std::ostringstream os;
    os << "id,label,weight,eps,phi\n";
    for (int x = 0; x < g.size(); ++x) {
        std::string eps, phi;
        for (int i = 0; i < g.colors; ++i) {
            eps += (i ? " " : "") + std::to_string(g.eps(i, x));
            phi += (i ? " " : "") + std::to_string(g.phi(i, x));
        }
        os << x << ",\"" << g.names[x] << "\"," << csv_weight(g.wt[x]) << "," << eps << "," << phi << "\n";
    }
    return os.str();
}

std::string graph_text(const CrystalGraph& g, const std::string& title) {
    std::ostringstream os;
    os << title << ": " << g.size() << " elements, " << g.arrow_count() << " arrows\n";
    for (int x = 0; x < g.size(); ++x) {
        os << g.names[x] << "  wt " << to_string(g.wt[x]);
        for (int i = 0; i < g.colors; ++i)
            if (g.f[i][x] != NONE) os << "  f" << i << " -> " << g.names[g.f[i][x]];
        os << "\n";
    }
    return os.str();
}

std::string render_graph(const CrystalGraph& g, const std::string& title, Format f) {
    switch (f) {
    case Format::dot: return to_dot(g, title);
    case Format::json: {
        nlohmann::json j = to_json(g);
        j["title"] = title;
        return j.dump(1) + "\n";
    }
    case Format::csv: return graph_csv(g);
    case Format::text: return graph_text(g, title);
    }
    return {};
}

const char* mark(bool ok) { return ok ? "PASS" : "FAIL"; }

// Rows of a table: header then cells; rendered as csv, text or json.
struct Table {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool pass = true;

    std::string render(Format f) const {
        std::ostringstream os;
        if (f == Format::json) {
            nlohmann::json j;
            j["title"] = title;
            j["status"] = mark(pass);
            j["rows"] = nlohmann::json::array();
            for (const auto& r : rows) {
                nlohmann::json row;
                for (size_t k = 0; k < header.size() && k < r.size(); ++k) row[header[k]] = r[k];
                j["rows"].push_back(row);
            }
            return j.dump(1) + "\n";
        }
        if (f == Format::dot) throw UsageError("tables have no dot format");
        std::string sep = f == Format::csv ? "," : "  ";
        if (f == Format::text) os << title << ": " << mark(pass) << "\n";
        for (size_t k = 0; k < header.size(); ++k) os << (k ? sep : "") << header[k];
        os << "\n";
        for (const auto& r : rows) {
            for (size_t k = 0; k < r.size(); ++k) os << (k ? sep : "") << r[k];
            os << "\n";
        }
        return os.str();
    }
};

Table ground_table(const TypeModel& m, const ReferenceTables& refs) {
    Table t;
    t.title = type_name(m.spec.type) + " ground state sequences";
    t.header = {"weight", "r", "lambda_r", "b_r", "H_r", "m_r", "status"};
    for (int node : m.spec.minuscule) {
        const GroundState& g = m.ground(node);
        const GroundRow* row = refs.ground_row(m.spec.type, node);
        int len = row ? static_cast<int>(row->b.size()) : 2 * g.period;
        for (int r = 0; r < len; ++r) {
            bool ok = row && r < static_cast<int>(row->h.size()) && r < static_cast<int>(row->m.size()) &&
                      row->b[r] == m.b.names[g.b_at(r)] && row->h[r] == g.h_at(r) && row->m[r] == g.m_at(r);
            t.pass = t.pass && ok;
            t.rows.push_back({"L" + std::to_string(node), std::to_string(r), "L" + std::to_string(g.node_at(r)),
                              m.b.names[g.b_at(r)], std::to_string(g.h_at(r)), std::to_string(g.m_at(r)), mark(ok)});
        }
    }
    return t;
}

Table sigma_rows_table(const TypeModel& m, const ReferenceTables& refs) {
    Table t;
    t.title = type_name(m.spec.type) + " sigma table";
    t.header = {"b", "c", "p", "table_c", "table_p", "status"};
    std::map<std::string, const SigmaEntry*> printed;
    for (const SigmaEntry& e : refs.sigma)
        if (e.type == m.spec.type) printed[e.b] = &e;
    for (const SigmaRow& r : m.sigma_rows) {
        const std::string& b = m.b.names[r.b];
        auto it = printed.find(b);
        std::string tc = "-", tp = "-";
        bool ok = m.spec.type == TypeTag::E8 ? (r.b == r.c && r.p == 1) : false;
        if (it != printed.end()) {
            tc = it->second->c;
            tp = std::to_string(it->second->p);
            ok = tc == m.b.names[r.c] && it->second->p == r.p;
        }
        t.pass = t.pass && ok;
        t.rows.push_back({b, m.b.names[r.c], std::to_string(r.p), tc, tp, mark(ok)});
    }
    return t;
}

Table energy_rows_table(const TypeModel& m) {
    Table t;
    t.title = type_name(m.spec.type) + " energy function H(b (x) a)";
    t.header = {"left", "right", "H", "zero_arrows_right_to_left", "status"};
    bool lemma = m.spec.type != TypeTag::E8;
    for (int b = 0; b < m.b.size(); ++b)
        for (int a = 0; a < m.b.size(); ++a) {
            int d = m.zero_dist.at(a, b);
            bool ok = !lemma || d == m.h.at(b, a);
            t.pass = t.pass && ok;
            t.rows.push_back({m.b.names[b], m.b.names[a], std::to_string(m.h.at(b, a)),
                              d == INF_DIST ? "inf" : std::to_string(d), lemma ? mark(ok) : "-"});
        }
    return t;
}

Table maximal_table(const TypeModel& m, const ReferenceTables& refs) {
    Table t;
    t.title = type_name(m.spec.type) + " maximal vectors";
    t.header = {"left", "right", "H", "component_size", "status"};
    CrystalGraph bb = tensor(m.b, m.b);
    std::set<std::tuple<std::string, std::string, int>> listed;
    for (const MaximalEntry& e : refs.maximal)
        if (e.type == m.spec.type) listed.insert({e.left, e.right, e.h});
    auto found = maximal_vectors(m.b, m.h);
    for (const MaximalVector& v : found) {
        int size = static_cast<int>(classical_component(bb, tensor_id(m.b, v.left, v.right)).size());
        bool ok = listed.count({m.b.names[v.left], m.b.names[v.right], v.h}) > 0;
        for (const MaximalEntry& e : refs.maximal)
            if (e.type == m.spec.type && e.left == m.b.names[v.left] && e.right == m.b.names[v.right] &&
                e.component_size >= 0)
                ok = ok && e.component_size == size;
        t.pass = t.pass && ok;
        t.rows.push_back({m.b.names[v.left], m.b.names[v.right], std::to_string(v.h), std::to_string(size), mark(ok)});
    }
    if (found.size() != listed.size()) t.pass = false;
    return t;
}

Table perfect_table(const TypeModel& m, const ReferenceTables& refs) {
    Table t;
    t.title = type_name(m.spec.type) + " elements b^lambda and b_lambda";
    t.header = {"kind", "weight", "element", "table", "status"};
    for (const PerfectEntry& e : refs.perfect) {
        if (e.type != m.spec.type) continue;
        Weight lam = m.spec.fundamental(e.node);
        int x = e.upper ? upper_element(m.b, lam) : lower_element(m.b, lam);
        std::string got = x == NONE ? "none" : m.b.names[x];
        bool ok = got == e.element;
        t.pass = t.pass && ok;
        t.rows.push_back({e.upper ? "upper" : "lower", "L" + std::to_string(e.node), got, e.element, mark(ok)});
    }
    return t;
}

std::string wall_string(const WallModel& wm, const YoungWall& w) {
    const TypeModel& m = wm.model();
    std::string s = "...";
    for (int r = static_cast<int>(w.cols.size()) - 1; r >= 0; --r)
        s += " | z^" + std::to_string(w.cols[r].shift) + " " + m.c.graph.names[w.cols[r].cls];
    return s;
}

struct Fragment {
    std::vector<std::string> labels;
    std::vector<Weight> weights;
    std::vector<std::vector<int>> f;   // f[i][x], NONE outside the fragment
    std::vector<nlohmann::json> items;
};

template <class T, class Step>
void fill_arrows(Fragment& fr, const std::vector<T>& items, int colors, Step step) {
    std::map<T, int> index;
    for (size_t x = 0; x < items.size(); ++x) index[items[x]] = static_cast<int>(x);
    fr.f.assign(colors, std::vector<int>(items.size(), NONE));
    for (int i = 0; i < colors; ++i)
        for (size_t x = 0; x < items.size(); ++x)
            if (auto y = step(items[x], i)) {
                auto it = index.find(*y);
                if (it != index.end()) fr.f[i][x] = it->second;
            }
}

std::string render_fragment(const Fragment& fr, const EnumerateRequest& r, Format f) {
    std::ostringstream os;
    std::map<Weight, int> counts;
    for (const Weight& w : fr.weights) ++counts[w];
    int n = static_cast<int>(fr.labels.size());
    switch (f) {
    case Format::dot: {
        os << "digraph \"" << r.type << " " << r.model << " " << r.lambda << " depth " << r.depth << "\" {\n";
        for (int x = 0; x < n; ++x) os << "  n" << x << " [label=\"" << fr.labels[x] << "\"];\n";
        for (size_t i = 0; i < fr.f.size(); ++i)
            for (int x = 0; x < n; ++x)
                if (fr.f[i][x] != NONE)
                    os << "  n" << x << " -> n" << fr.f[i][x] << " [label=\"" << i << "\", color=" << color_name(static_cast<int>(i))
                       << "];\n";
        os << "}\n";
        break;
    }
    case Format::json: {
        nlohmann::json j;
        j["type"] = r.type;
        j["lambda"] = r.lambda;
        j["model"] = r.model;
        j["depth"] = r.depth;
        j["hw_only"] = r.hw_only;
        j["count"] = n;
        j["weights"] = nlohmann::json::array();
        for (const auto& [w, k] : counts) j["weights"].push_back({{"weight", weight_json(w)}, {"count", k}});
        j["elements"] = fr.items;
        return j.dump(1) + "\n";
    }
    case Format::csv:
        os << "id,weight,element\n";
        for (int x = 0; x < n; ++x) os << x << "," << csv_weight(fr.weights[x]) << ",\"" << fr.labels[x] << "\"\n";
        break;
    case Format::text:
        os << r.type << " " << r.model << " " << r.lambda << " depth " << r.depth << (r.hw_only ? " highest weight" : "")
           << ": " << n << " elements\n";
        for (const auto& [w, k] : counts) os << "  " << to_string(w) << ": " << k << "\n";
        for (int x = 0; x < n; ++x) os << fr.labels[x] << "\n";
        break;
    }
    return os.str();
}

} // namespace

std::string cmd_build(Session& s, const std::string& type, const std::string& what, Format f) {
    const TypeModel& m = s.model(parse_type(type));
    if (what == "B") return render_graph(m.b, type + " B", f);
    if (what == "C") return render_graph(m.c.graph, type + " column crystal", f);
    if (what == "BB") {
        CrystalGraph t = tensor(m.b, m.b);
        for (int x = 0; x < t.size(); ++x)
            t.names[x] = m.b.names[x / m.b.size()] + " (x) " + m.b.names[x % m.b.size()];
        return render_graph(t, type + " B (x) B", f);
    }
    throw UsageError("unknown crystal '" + what + "', expected B, C or BB");
}

std::string cmd_tables(Session& s, const std::string& type, const std::string& which, Format f) {
    const TypeModel& m = s.model(parse_type(type));
    ReferenceTables refs = load_tables(s.data_dir());
    if (which == "ground") return ground_table(m, refs).render(f);
    if (which == "sigma") return sigma_rows_table(m, refs).render(f);
    if (which == "energy") return energy_rows_table(m).render(f);
    if (which == "perfect") return perfect_table(m, refs).render(f);
    if (which == "maximal") {
        if (m.spec.type != TypeTag::E8) throw UsageError("maximal vectors are tabulated for E8 only");
        return maximal_table(m, refs).render(f);
    }
    throw UsageError("unknown table '" + which + "'");
}

std::string cmd_enumerate(Session& s, const EnumerateRequest& r) {
    const TypeModel& m = s.model(parse_type(r.type));
    int node = parse_lambda(m.spec, r.lambda);
    if (r.depth < 0 || r.depth > DEPTH_CAP)
        throw Error(ErrorCode::depth_overflow,
                    "depth " + std::to_string(r.depth) + " is outside 0.." + std::to_string(DEPTH_CAP));
    int colors = m.spec.nodes();
    Fragment fr;
    if (r.model == "reduced" || r.model == "fock") {
        WallModel wm(m, node, r.model == "reduced" ? WallKind::reduced : WallKind::fock);
        std::vector<YoungWall> walls;
        for (const YoungWall& w : enumerate_closure(wm, r.depth)) {
            bool hw = true;
            for (int i = 0; i < colors && hw && r.hw_only; ++i)
                if (wm.step(w, Dir::e, i)) hw = false;
            if (hw) walls.push_back(w);
        }
        for (const YoungWall& w : walls) {
            fr.labels.push_back(wall_string(wm, w));
            fr.weights.push_back(wm.weight(w));
            fr.items.push_back(wm.to_json(w));
        }
        fill_arrows(fr, walls, colors, [&](const YoungWall& w, int i) { return wm.step(w, Dir::f, i); });
    } else if (r.model == "path" || r.model == "fock-path") {
        PathModel pm(m.spec, m.b, m.h, m.ground(node));
        if (r.model == "path") {
            std::vector<LambdaPath> paths;
            for (const LambdaPath& p : pm.enumerate(r.depth)) {
                bool hw = true;
                for (int i = 0; i < colors && hw && r.hw_only; ++i)
                    if (pm.step(p, Dir::e, i)) hw = false;
                if (hw) paths.push_back(p);
            }
            for (const LambdaPath& p : paths) {
                fr.labels.push_back(pm.to_string(p));
                fr.weights.push_back(pm.weight(p));
                nlohmann::json j = {{"model", "path"}, {"lambda", r.lambda}, {"entries", nlohmann::json::array()}};
                for (int x : p.head) j["entries"].push_back(m.b.names[x]);
                fr.items.push_back(j);
            }
            fill_arrows(fr, paths, colors, [&](const LambdaPath& p, int i) { return pm.step(p, Dir::f, i); });
        } else {
            std::vector<FockPath> paths;
            for (const FockPath& p : pm.enumerate_fock(r.depth))
                if (!r.hw_only || pm.fock_hw(p)) paths.push_back(p);
            for (const FockPath& p : paths) {
                fr.labels.push_back(pm.to_string(p));
                fr.weights.push_back(pm.fock_weight(p));
                nlohmann::json j = {{"model", "path"}, {"lambda", r.lambda}, {"entries", nlohmann::json::array()}};
                for (const AffineElem& e : p.head) j["entries"].push_back({{"element", m.b.names[e.base]}, {"power", e.power}});
                fr.items.push_back(j);
            }
            fill_arrows(fr, paths, colors, [&](const FockPath& p, int i) { return pm.fock_step(p, Dir::f, i); });
        }
    } else {
        throw UsageError("unknown model '" + r.model + "', expected reduced, fock, path or fock-path");
    }
    return render_fragment(fr, r, r.format);
}

VerifyOutcome cmd_verify(Session& s, const std::vector<std::string>& only) {
    std::set<std::string> known;
    for (const CheckInfo& c : check_catalogue()) known.insert(c.id);
    for (const std::string& id : only)
        if (!known.count(id)) throw UsageError("unknown check '" + id + "'");
    VerifyConfig config;
    config.data_dir = s.data_dir();
    config.only = only;
    auto results = run_verification(config);
    VerifyOutcome out;
    out.pass = !results.empty();
    std::ostringstream os;
    for (const CheckResult& r : results) {
        out.pass = out.pass && r.pass;
        os << mark(r.pass) << " " << r.id << ": " << r.witness << "\n";
    }
    out.summary = os.str();
    out.report = verification_report(results).dump(1) + "\n";
    return out;
}

std::string cmd_column_show(Session& s, const std::string& type, const std::string& element, int shift) {
    const TypeModel& m = s.model(parse_type(type));
    int x = m.b.find(element);
    if (x == NONE) throw UsageError("no element '" + element + "' in " + type);
    const ColumnPattern& p = m.c.pattern;
    Column c = m.c.realize({m.psi[x], shift});
    Column g = m.c.realize({m.c.ground_class, 0});
    long lo = std::min(c.base, g.base) - p.period / 2;
    long hi = std::max(c.max_slot(), g.max_slot()) + p.period / 2;
    std::ostringstream os;
    os << type << " column z^" << shift << " psi(" << element << "), base slot " << c.base << "\n";
    os << "blocks relative to the ground column:";
    for (int i = 0; i < m.spec.nodes(); ++i) os << " " << m.c.block_count({m.psi[x], shift}, i);
    os << "\n";
    os << render_column(p, c, lo, hi);
    return os.str();
}

std::string cmd_energy_dump(Session& s, const std::string& type, Format f) {
    const TypeModel& m = s.model(parse_type(type));
    if (f == Format::text || f == Format::dot) {
        if (f == Format::dot) throw UsageError("the energy table has no dot format");
        std::ostringstream os;
        os << type << " energy H(b (x) a), rows b, columns a, seed " << m.b.names[m.h.seed] << "\n";
        for (int b = 0; b < m.b.size(); ++b) {
            os << m.b.names[b] << ":";
            for (int a = 0; a < m.b.size(); ++a) os << " " << m.h.at(b, a);
            os << "\n";
        }
        return os.str();
    }
    return energy_rows_table(m).render(f);
}

} // namespace ew
