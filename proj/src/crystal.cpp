#include "ew/crystal.hpp"
#include "ew/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace ew {

int CrystalGraph::add_element(const std::string& name, const Weight& w) {
    int id = size();
    wt.push_back(w);
    names.push_back(name);
    for (int i = 0; i < colors; ++i) {
        f[i].push_back(NONE);
        e[i].push_back(NONE);
    }
    return id;
}

void CrystalGraph::add_arrow(int i, int from, int to) {
    if (f[i][from] != NONE && f[i][from] != to)
        throw Error(ErrorCode::inconsistent, "two " + std::to_string(i) + "-arrows out of " + names[from]);
    if (e[i][to] != NONE && e[i][to] != from)
        throw Error(ErrorCode::inconsistent, "two " + std::to_string(i) + "-arrows into " + names[to]);
    f[i][from] = to;
    e[i][to] = from;
}

int CrystalGraph::eps(int i, int x) const {
    int k = 0;
    for (int y = e[i][x]; y != NONE; y = e[i][y]) {
        if (++k > size()) throw Error(ErrorCode::inconsistent, "infinite e-string");
    }
    return k;
}

int CrystalGraph::phi(int i, int x) const {
    int k = 0;
    for (int y = f[i][x]; y != NONE; y = f[i][y]) {
        if (++k > size()) throw Error(ErrorCode::inconsistent, "infinite f-string");
    }
    return k;
}

Weight CrystalGraph::eps_weight(int x) const {
    Weight w(colors);
    for (int i = 0; i < colors; ++i) w.lam[i] = eps(i, x);
    return w;
}

Weight CrystalGraph::phi_weight(int x) const {
    Weight w(colors);
    for (int i = 0; i < colors; ++i) w.lam[i] = phi(i, x);
    return w;
}

int CrystalGraph::find(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? NONE : static_cast<int>(it - names.begin());
}

int CrystalGraph::arrow_count(int i) const {
    return static_cast<int>(std::count_if(f[i].begin(), f[i].end(), [](int y) { return y != NONE; }));
}

int CrystalGraph::arrow_count() const {
    int total = 0;
    for (int i = 0; i < colors; ++i) total += arrow_count(i);
    return total;
}

std::string check_axioms(const CartanSpec& spec, const CrystalGraph& g) {
    for (int i = 0; i < g.colors; ++i) {
        Weight a = spec.alpha(i);
        a.delta = 0;
        for (int x = 0; x < g.size(); ++x) {
            int y = g.f[i][x];
            if (y != NONE) {
                if (g.e[i][y] != x) return "e_" + std::to_string(i) + " is not inverse to f at " + g.names[x];
                if (g.wt[y] != g.wt[x] - a)
                    return "wt(f_" + std::to_string(i) + " " + g.names[x] + ") != wt - alpha_" + std::to_string(i);
            }
            if (g.phi(i, x) - g.eps(i, x) != g.wt[x].lam[i])
                return "phi - eps != <wt, h_" + std::to_string(i) + "> at " + g.names[x];
        }
    }
    return {};
}

CrystalGraph tensor(const CrystalGraph& a, const CrystalGraph& b) {
    CrystalGraph t(a.colors);
    int nb = b.size();
    std::vector<std::vector<int>> ea(a.colors), pa(a.colors), eb(b.colors), pb(b.colors);
    for (int i = 0; i < a.colors; ++i) {
        for (int x = 0; x < a.size(); ++x) { ea[i].push_back(a.eps(i, x)); pa[i].push_back(a.phi(i, x)); }
        for (int x = 0; x < nb; ++x) { eb[i].push_back(b.eps(i, x)); pb[i].push_back(b.phi(i, x)); }
    }
    t.wt.reserve(static_cast<size_t>(a.size()) * nb);
    for (int l = 0; l < a.size(); ++l)
        for (int r = 0; r < nb; ++r) t.add_element(a.names[l] + " (x) " + b.names[r], a.wt[l] + b.wt[r]);
    for (int i = 0; i < a.colors; ++i) {
        for (int l = 0; l < a.size(); ++l) {
            for (int r = 0; r < nb; ++r) {
                int to = NONE;
                if (pa[i][l] > eb[i][r]) {
                    if (a.f[i][l] != NONE) to = a.f[i][l] * nb + r;
                } else if (b.f[i][r] != NONE) {
                    to = l * nb + b.f[i][r];
                }
                if (to != NONE) t.add_arrow(i, l * nb + r, to);
            }
        }
    }
    return t;
}

std::optional<AffineElem> aff_step(const CrystalGraph& g, Dir d, int i, AffineElem x) {
    int y = g.step(d, i, x.base);
    if (y == NONE) return std::nullopt;
    int shift = (i == 0) ? (d == Dir::f ? -1 : 1) : 0;
    return AffineElem{y, x.power + shift};
}

Weight aff_weight(const CrystalGraph& g, AffineElem x) {
    Weight w = g.wt[x.base];
    w.delta += x.power;
    return w;
}

std::vector<std::vector<int>> components(const CrystalGraph& g, const std::vector<int>& forget) {
    std::vector<int> parent(g.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < g.colors; ++i) {
        if (std::find(forget.begin(), forget.end(), i) != forget.end()) continue;
        for (int x = 0; x < g.size(); ++x) {
            int y = g.f[i][x];
            if (y == NONE) continue;
            int rx = root(x), ry = root(y);
            if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
        }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> slot(g.size(), NONE);
    for (int x = 0; x < g.size(); ++x) {
        int r = root(x);
        if (slot[r] == NONE) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[r]].push_back(x);
    }
    return out;
}

IsoResult find_isomorphism(const CrystalGraph& a, const CrystalGraph& b,
                           const std::vector<std::pair<int, int>>& anchors,
                           const std::vector<int>& color_perm, bool check_weights) {
    IsoResult res;
    if (a.colors != b.colors) {
        res.conflict = "colour sets differ";
        return res;
    }
    std::vector<int> perm = color_perm;
    if (perm.empty()) {
        perm.resize(a.colors);
        std::iota(perm.begin(), perm.end(), 0);
    }
    res.map.assign(a.size(), NONE);
    std::vector<int> inverse(b.size(), NONE);
    std::deque<int> queue;
    auto weights_match = [&](int x, int y) {
        if (!check_weights) return true;
        for (int j = 0; j < a.colors; ++j)
            if (a.wt[x].lam[j] != b.wt[y].lam[perm[j]]) return false;
        return true;
    };
    auto bind = [&](int x, int y, const std::string& via) {
        if (res.map[x] == NONE && inverse[y] == NONE) {
            if (!weights_match(x, y)) {
                res.conflict = "weight mismatch " + a.names[x] + " -> " + b.names[y] + via;
                return false;
            }
            res.map[x] = y;
            inverse[y] = x;
            queue.push_back(x);
            return true;
        }
        if (res.map[x] == y) return true;
        res.conflict = "conflict at " + a.names[x] + " -> " + b.names[y] + via;
        return false;
    };
    for (auto [x, y] : anchors)
        if (!bind(x, y, " (anchor)")) return res;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        int y = res.map[x];
        for (int i = 0; i < a.colors; ++i) {
            for (Dir d : {Dir::f, Dir::e}) {
                int xs = a.step(d, i, x);
                int ys = b.step(d, perm[i], y);
                std::string via = std::string(" via ") + (d == Dir::f ? "f_" : "e_") + std::to_string(i) +
                                  " from " + a.names[x];
                if ((xs == NONE) != (ys == NONE)) {
                    res.conflict = "arrow mismatch" + via;
                    return res;
                }
                if (xs != NONE && !bind(xs, ys, via)) return res;
            }
        }
    }
    if (a.size() != b.size()) {
        res.conflict = "sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
        return res;
    }
    for (int x = 0; x < a.size(); ++x) {
        if (res.map[x] == NONE) {
            res.conflict = "element not reached: " + a.names[x];
            return res;
        }
    }
    res.ok = true;
    return res;
}

const char* color_name(int i) {
    static const char* names[] = {"black", "red", "gold", "green", "purple", "blue", "orange", "pink", "brown"};
    return (i >= 0 && i < 9) ? names[i] : "gray";
}

std::string to_dot(const CrystalGraph& g, const std::string& title) {
    std::ostringstream os;
    os << "digraph \"" << title << "\" {\n";
    for (int x = 0; x < g.size(); ++x) os << "  n" << x << " [label=\"" << g.names[x] << "\"];\n";
    for (int i = 0; i < g.colors; ++i)
        for (int x = 0; x < g.size(); ++x)
            if (g.f[i][x] != NONE)
                os << "  n" << x << " -> n" << g.f[i][x] << " [label=\"" << i << "\", color=" << color_name(i)
                   << "];\n";
    os << "}\n";
    return os.str();
}

nlohmann::json to_json(const CrystalGraph& g) {
    nlohmann::json j;
    j["elements"] = nlohmann::json::array();
    for (int x = 0; x < g.size(); ++x)
        j["elements"].push_back({{"id", x}, {"weight", {{"lambda", g.wt[x].lam}, {"delta", g.wt[x].delta}}},
                                 {"label", g.names[x]}});
    j["arrows"] = nlohmann::json::array();
    for (int i = 0; i < g.colors; ++i)
        for (int x = 0; x < g.size(); ++x)
            if (g.f[i][x] != NONE) j["arrows"].push_back({{"color", i}, {"from", x}, {"to", g.f[i][x]}});
    return j;
}

} // namespace ew
