#include "ew/paths.hpp"
#include "ew/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ew {

PathModel::PathModel(const CartanSpec& spec, const CrystalGraph& b, const EnergyTable& h, const GroundState& g)
    : spec_(spec), b_(b), h_(h), g_(g) {
    eps_.assign(b.colors, std::vector<int>(b.size()));
    phi_.assign(b.colors, std::vector<int>(b.size()));
    for (int i = 0; i < b.colors; ++i)
        for (int x = 0; x < b.size(); ++x) {
            eps_[i][x] = b.eps(i, x);
            phi_[i][x] = b.phi(i, x);
        }
}

int PathModel::act_position(const std::vector<int>& bases, int node_after, Dir d, int i) const {
    int L = static_cast<int>(bases.size());
    std::vector<int> plus;        // positions of unmatched + signs, left to right
    int last_minus = NONE;
    if (node_after == i) plus.push_back(L);
    for (int r = L - 1; r >= 0; --r) {
        for (int k = 0; k < eps_[i][bases[r]]; ++k) {
            if (!plus.empty()) plus.pop_back();
            else last_minus = r;
        }
        for (int k = 0; k < phi_[i][bases[r]]; ++k) plus.push_back(r);
    }
    if (d == Dir::f) return plus.empty() ? NONE : plus.front();
    return last_minus;
}

int PathModel::entry(const LambdaPath& p, int r) const {
    return r < static_cast<int>(p.head.size()) ? p.head[r] : g_.b_at(r);
}

AffineElem PathModel::entry(const FockPath& p, int r) const {
    return r < static_cast<int>(p.head.size()) ? p.head[r] : g_.g_at(r);
}

void PathModel::trim(LambdaPath& p) const {
    while (!p.head.empty() && p.head.back() == g_.b_at(static_cast<int>(p.head.size()) - 1)) p.head.pop_back();
}

void PathModel::trim(FockPath& p) const {
    while (!p.head.empty() && p.head.back() == g_.g_at(static_cast<int>(p.head.size()) - 1)) p.head.pop_back();
}

std::optional<LambdaPath> PathModel::step(const LambdaPath& p, Dir d, int i) const {
    LambdaPath q = p;
    for (;;) {
        int L = static_cast<int>(q.head.size());
        int pos = act_position(q.head, g_.node_at(L), d, i);
        if (pos == NONE) return std::nullopt;
        if (pos == L) {
            q.head.push_back(g_.b_at(L));
            continue;
        }
        int y = b_.step(d, i, q.head[pos]);
        if (y == NONE) throw Error(ErrorCode::internal, "signature selected an entry without an arrow");
        q.head[pos] = y;
        trim(q);
        return q;
    }
}

int PathModel::eps(const LambdaPath& p, int i) const {
    int plus = g_.node_at(static_cast<int>(p.head.size())) == i ? 1 : 0;
    int minus = 0;
    for (int r = static_cast<int>(p.head.size()) - 1; r >= 0; --r) {
        int e = eps_[i][p.head[r]];
        int cancel = std::min(plus, e);
        plus -= cancel;
        minus += e - cancel;
        plus += phi_[i][p.head[r]];
    }
    return minus;
}

int PathModel::phi(const LambdaPath& p, int i) const {
    int plus = g_.node_at(static_cast<int>(p.head.size())) == i ? 1 : 0;
    for (int r = static_cast<int>(p.head.size()) - 1; r >= 0; --r) {
        plus -= std::min(plus, eps_[i][p.head[r]]);
        plus += phi_[i][p.head[r]];
    }
    return plus;
}

Weight PathModel::weight(const LambdaPath& p) const {
    Weight w = spec_.fundamental(g_.node);
    int L = static_cast<int>(p.head.size());
    for (int r = 0; r < L; ++r) {
        w += b_.wt[p.head[r]];
        w -= b_.wt[g_.b_at(r)];
        w.delta += (r + 1) * (h_.at(entry(p, r + 1), p.head[r]) - g_.h_at(r));
    }
    return w;
}

std::optional<FockPath> PathModel::fock_step(const FockPath& p, Dir d, int i) const {
    FockPath q = p;
    for (;;) {
        int L = static_cast<int>(q.head.size());
        std::vector<int> bases;
        for (const AffineElem& s : q.head) bases.push_back(s.base);
        int pos = act_position(bases, g_.node_at(L), d, i);
        if (pos == NONE) return std::nullopt;
        if (pos == L) {
            q.head.push_back(g_.g_at(L));
            continue;
        }
        auto y = aff_step(b_, d, i, q.head[pos]);
        if (!y) throw Error(ErrorCode::internal, "signature selected an entry without an arrow");
        q.head[pos] = *y;
        trim(q);
        return q;
    }
}

Weight PathModel::fock_weight(const FockPath& p) const {
    Weight w = spec_.fundamental(g_.node);
    for (int r = 0; r < static_cast<int>(p.head.size()); ++r) {
        w += b_.wt[p.head[r].base];
        w -= b_.wt[g_.b_at(r)];
        w.delta += p.head[r].power - g_.m_at(r);
    }
    return w;
}

bool PathModel::fock_valid(const FockPath& p) const {
    for (int r = 0; r < static_cast<int>(p.head.size()); ++r)
        if (h_aff(h_, entry(p, r + 1), entry(p, r)) <= 0) return false;
    return true;
}

bool PathModel::fock_hw(const FockPath& p) const {
    for (int i = 0; i < spec_.nodes(); ++i)
        if (fock_step(p, Dir::e, i)) return false;
    return true;
}

bool PathModel::fock_hw_description(const FockPath& p) const {
    int L = static_cast<int>(p.head.size());
    int next = 0;
    for (int r = L - 1; r >= 0; --r) {
        if (p.head[r].base != g_.b_at(r)) return false;
        int n = p.head[r].power - g_.m_at(r);
        if (n > next) return false;
        next = n;
    }
    return true;
}

std::optional<FockPath> PathModel::fock_lower_power(const FockPath& p, int r) const {
    FockPath q = p;
    while (static_cast<int>(q.head.size()) <= r) q.head.push_back(g_.g_at(static_cast<int>(q.head.size())));
    q.head[r].power -= 1;
    trim(q);
    if (!fock_valid(q)) return std::nullopt;
    return q;
}

std::optional<FockPath> PathModel::fock_raise_power(const FockPath& p, int r) const {
    FockPath q = p;
    while (static_cast<int>(q.head.size()) <= r) q.head.push_back(g_.g_at(static_cast<int>(q.head.size())));
    q.head[r].power += 1;
    trim(q);
    if (!fock_valid(q)) return std::nullopt;
    return q;
}

FockPath PathModel::embed(const LambdaPath& p) const {
    int L = static_cast<int>(p.head.size());
    FockPath q;
    q.head.resize(L);
    int n = g_.m_at(L);
    for (int r = L - 1; r >= 0; --r) {
        n = n - 1 + h_.at(entry(p, r + 1), p.head[r]);
        q.head[r] = {p.head[r], n};
    }
    trim(q);
    return q;
}

std::vector<LambdaPath> PathModel::enumerate(int depth) const {
    if (depth > 8) throw Error(ErrorCode::depth_overflow, "depth " + std::to_string(depth) + " is above the cap 8");
    std::vector<LambdaPath> out{ground()};
    std::set<LambdaPath> seen{ground()};
    size_t begin = 0;
    for (int k = 0; k < depth; ++k) {
        size_t end = out.size();
        for (size_t x = begin; x < end; ++x) {
            for (int i = 0; i < spec_.nodes(); ++i) {
                auto y = step(out[x], Dir::f, i);
                if (y && seen.insert(*y).second) out.push_back(*y);
            }
        }
        begin = end;
    }
    return out;
}

std::vector<FockPath> PathModel::enumerate_fock(int depth) const {
    if (depth > 8) throw Error(ErrorCode::depth_overflow, "depth " + std::to_string(depth) + " is above the cap 8");
    std::vector<FockPath> out;
    std::set<FockPath> seen;
    for (int k = 0; k <= depth; ++k) {
        for (const auto& parts : partitions_of(k)) {
            FockPath hw;
            for (int r = 0; r < static_cast<int>(parts.size()); ++r) {
                AffineElem g = g_.g_at(r);
                g.power -= parts[r];
                hw.head.push_back(g);
            }
            size_t begin = out.size();
            if (seen.insert(hw).second) out.push_back(hw);
            for (int s = 0; s < depth - k; ++s) {
                size_t end = out.size();
                for (size_t x = begin; x < end; ++x) {
                    for (int i = 0; i < spec_.nodes(); ++i) {
                        auto y = fock_step(out[x], Dir::f, i);
                        if (y && seen.insert(*y).second) out.push_back(*y);
                    }
                }
                begin = end;
            }
        }
    }
    return out;
}

int PathModel::fock_depth(const FockPath& p) const {
    FockPath top = p;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i < spec_.nodes() && !moved; ++i) {
            if (auto y = fock_step(top, Dir::e, i)) {
                top = *y;
                moved = true;
            }
        }
    }
    int k_hw = -fock_weight(top).delta;
    std::vector<int> k;
    if (!affine_root_coords(spec_, spec_.fundamental(g_.node) - fock_weight(p), k))
        throw Error(ErrorCode::internal, "path weight is not in the root lattice");
    int total = 0;
    for (int v : k) total += v;
    return total - (spec_.coxeter() - 1) * k_hw;
}

std::string PathModel::to_string(const LambdaPath& p) const {
    std::ostringstream os;
    os << "...";
    for (int r = static_cast<int>(p.head.size()) - 1; r >= 0; --r) os << " (x) " << b_.names[p.head[r]];
    return os.str();
}

std::string PathModel::to_string(const FockPath& p) const {
    std::ostringstream os;
    os << "...";
    for (int r = static_cast<int>(p.head.size()) - 1; r >= 0; --r)
        os << " (x) z^" << p.head[r].power << " " << b_.names[p.head[r].base];
    return os.str();
}

std::vector<std::vector<int>> partitions_of(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(left, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, left - part, part);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

std::vector<int> partitions_up_to(int n) {
    std::vector<int> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s) p[s] += p[s - part];
    return p;
}

} // namespace ew
