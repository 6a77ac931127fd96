#include "ew/energy.hpp"
#include "ew/error.hpp"
#include "ew/perfect.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ew {

EnergyTable energy_table(const CrystalGraph& b) {
    auto ext = extremal_elements(b);
    if (ext.empty()) throw Error(ErrorCode::inconsistent, "no extremal element to normalise the energy");
    return energy_table(b, ext.front());
}

EnergyTable energy_table(const CrystalGraph& b, int seed) {
    CrystalGraph t = tensor(b, b);
    int n = b.size();
    const int unset = INF_DIST;
    EnergyTable h;
    h.n = n;
    h.seed = seed;
    h.values.assign(static_cast<size_t>(n) * n, unset);
    std::deque<int> queue;
    int start = seed * n + seed;
    h.values[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int i = 0; i < t.colors; ++i) {
            for (Dir d : {Dir::f, Dir::e}) {
                int y = t.step(d, i, x);
                if (y == NONE) continue;
                int delta = 0;
                if (i == 0) {
                    bool left_moved = (y / n) != (x / n);
                    delta = left_moved ? 1 : -1;
                    if (d == Dir::e) delta = -delta;
                }
                int v = h.values[x] + delta;
                if (h.values[y] == unset) {
                    h.values[y] = v;
                    queue.push_back(y);
                } else if (h.values[y] != v) {
                    throw Error(ErrorCode::inconsistent, "energy propagation disagrees at " + t.names[y]);
                }
            }
        }
    }
    for (int v : h.values)
        if (v == unset) throw Error(ErrorCode::inconsistent, "B (x) B is not connected");
    return h;
}

ZeroArrowDistance zero_arrow_distance(const CrystalGraph& b) {
    ZeroArrowDistance z;
    z.n = b.size();
    z.dist.assign(static_cast<size_t>(z.n) * z.n, INF_DIST);
    for (int s = 0; s < z.n; ++s) {
        int* d = &z.dist[static_cast<size_t>(s) * z.n];
        std::deque<int> queue;
        d[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int i = 0; i < b.colors; ++i) {
                int y = b.f[i][x];
                if (y == NONE) continue;
                int w = (i == 0) ? 1 : 0;
                if (d[x] + w < d[y]) {
                    d[y] = d[x] + w;
                    if (w == 0) queue.push_front(y);
                    else queue.push_back(y);
                }
            }
        }
    }
    return z;
}

int h_aff(const EnergyTable& h, AffineElem left, AffineElem right) {
    return h.at(left.base, right.base) + left.power - right.power;
}

std::vector<MaximalVector> maximal_vectors(const CrystalGraph& b, const EnergyTable& h) {
    CrystalGraph t = tensor(b, b);
    std::vector<MaximalVector> out;
    int n = b.size();
    for (int x = 0; x < t.size(); ++x) {
        bool killed = true;
        for (int i = 1; i < t.colors && killed; ++i) killed = t.e[i][x] == NONE;
        if (killed) out.push_back({x / n, x % n, h.at(x / n, x % n)});
    }
    return out;
}

std::vector<int> classical_component(const CrystalGraph& t, int seed) {
    std::vector<char> seen(t.size(), 0);
    std::vector<int> out;
    std::deque<int> queue{seed};
    seen[seed] = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        out.push_back(x);
        for (int i = 1; i < t.colors; ++i) {
            for (Dir d : {Dir::f, Dir::e}) {
                int y = t.step(d, i, x);
                if (y != NONE && !seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int fundamental_node(const Weight& w) {
    int node = NONE;
    for (size_t i = 0; i < w.lam.size(); ++i) {
        if (w.lam[i] == 0) continue;
        if (w.lam[i] != 1 || node != NONE) return NONE;
        node = static_cast<int>(i);
    }
    return node;
}

} // namespace

GroundState ground_state(const CartanSpec& spec, const CrystalGraph& b, const EnergyTable& h, int node) {
    if (std::find(spec.minuscule.begin(), spec.minuscule.end(), node) == spec.minuscule.end())
        throw Error(ErrorCode::bad_weight, "Lambda_" + std::to_string(node) + " is not a level 1 dominant weight");
    GroundState chain;
    std::vector<int> seen_at(spec.nodes(), NONE);
    int cur = 0;
    while (seen_at[cur] == NONE) {
        seen_at[cur] = static_cast<int>(chain.nodes.size());
        int x = lower_element(b, spec.fundamental(cur));
        if (x == NONE) throw Error(ErrorCode::inconsistent, "no element with phi = Lambda_" + std::to_string(cur));
        chain.nodes.push_back(cur);
        chain.b.push_back(x);
        int next = fundamental_node(b.eps_weight(x));
        if (next == NONE) throw Error(ErrorCode::inconsistent, "eps(b_lambda) is not a fundamental weight");
        cur = next;
    }
    if (seen_at[cur] != 0) throw Error(ErrorCode::inconsistent, "the Lambda_0 chain is not periodic from r = 0");
    int q = static_cast<int>(chain.b.size());
    chain.period = q;
    int m = 0;
    for (int r = 0; r < q; ++r) {
        int hv = h.at(chain.b[(r + 1) % q], chain.b[r]);
        chain.h.push_back(hv);
        chain.m.push_back(m);
        m += 1 - hv;
    }
    chain.drift = m;
    if (node == 0) return chain;

    int o = seen_at[node];
    if (o == NONE) throw Error(ErrorCode::bad_weight, "Lambda_" + std::to_string(node) + " is not on the ground chain");
    GroundState g;
    g.node = node;
    g.offset = o;
    g.period = q;
    g.drift = chain.drift;
    for (int r = 0; r < q; ++r) {
        g.nodes.push_back(chain.node_at(o + r));
        g.b.push_back(chain.b_at(o + r));
        g.h.push_back(chain.h_at(o + r));
        g.m.push_back(chain.m_at(o + r));
    }
    return g;
}

} // namespace ew
