#include "ew/root_data.hpp"
#include "ew/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ew {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::bad_type: return "BAD_TYPE";
    case ErrorCode::bad_weight: return "BAD_WEIGHT";
    case ErrorCode::node_not_minuscule: return "NODE_NOT_MINUSCULE";
    case ErrorCode::strings_too_long: return "STRINGS_TOO_LONG";
    case ErrorCode::data_invalid: return "DATA_INVALID";
    case ErrorCode::weight_conflict: return "WEIGHT_CONFLICT";
    case ErrorCode::no_iso: return "NO_ISO";
    case ErrorCode::inconsistent: return "INCONSISTENT";
    case ErrorCode::table_mismatch: return "TABLE_MISMATCH";
    case ErrorCode::depth_overflow: return "DEPTH_OVERFLOW";
    case ErrorCode::io: return "IO";
    case ErrorCode::internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

TypeTag parse_type(const std::string& name) {
    if (name == "E6" || name == "e6") return TypeTag::E6;
    if (name == "E7" || name == "e7") return TypeTag::E7;
    if (name == "E8" || name == "e8") return TypeTag::E8;
    throw Error(ErrorCode::bad_type, "unknown type '" + name + "' (expected E6, E7 or E8)");
}

std::string type_name(TypeTag t) {
    switch (t) {
    case TypeTag::E6: return "E6";
    case TypeTag::E7: return "E7";
    case TypeTag::E8: return "E8";
    }
    return "?";
}

Weight& Weight::operator+=(const Weight& o) {
    for (size_t i = 0; i < lam.size(); ++i) lam[i] += o.lam[i];
    delta += o.delta;
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (size_t i = 0; i < lam.size(); ++i) lam[i] -= o.lam[i];
    delta -= o.delta;
    return *this;
}

Weight Weight::scaled(int k) const {
    Weight w = *this;
    for (int& x : w.lam) x *= k;
    w.delta *= k;
    return w;
}

std::string to_string(const Weight& w) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < w.lam.size(); ++i) {
        int c = w.lam[i];
        if (c == 0) continue;
        if (c < 0) os << "-";
        else if (!first) os << "+";
        if (std::abs(c) != 1) os << std::abs(c);
        os << "L" << i;
        first = false;
    }
    if (w.delta != 0) {
        int c = w.delta;
        if (c < 0) os << "-";
        else if (!first) os << "+";
        if (std::abs(c) != 1) os << std::abs(c);
        os << "d";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

int CartanSpec::coxeter() const { return std::accumulate(marks.begin(), marks.end(), 0); }

Weight CartanSpec::fundamental(int i) const {
    Weight w(nodes());
    w.lam[i] = 1;
    return w;
}

Weight CartanSpec::alpha(int i) const {
    Weight w(nodes());
    for (int j = 0; j < nodes(); ++j) w.lam[j] = a[j][i];
    w.delta = (i == 0) ? 1 : 0;
    return w;
}

Weight CartanSpec::null_root() const {
    Weight w(nodes());
    w.delta = 1;
    return w;
}

int CartanSpec::level(const Weight& w) const {
    int l = 0;
    for (int i = 0; i < nodes(); ++i) l += comarks[i] * w.lam[i];
    return l;
}

Weight CartanSpec::root_weight(const Root& r) const {
    Weight w(nodes());
    for (int j = 1; j <= n; ++j)
        for (int k = 0; k < nodes(); ++k) w.lam[k] += r[j - 1] * a[k][j];
    return w;
}

int pairing(const Weight& w, int i) { return w.lam[i]; }

CartanSpec build_cartan(TypeTag t) {
    CartanSpec s;
    s.type = t;
    switch (t) {
    case TypeTag::E6:
        s.n = 6;
        s.edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {0, 2}};
        s.marks = {1, 1, 2, 2, 3, 2, 1};
        s.minuscule = {0, 1, 6};
        break;
    case TypeTag::E7:
        s.n = 7;
        s.edges = {{0, 1}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}};
        s.marks = {1, 2, 2, 3, 4, 3, 2, 1};
        s.minuscule = {0, 7};
        break;
    case TypeTag::E8:
        s.n = 8;
        s.edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}, {0, 8}};
        s.marks = {1, 2, 3, 4, 6, 5, 4, 3, 2};
        s.minuscule = {0};
        break;
    }
    s.comarks = s.marks;
    s.a.assign(s.nodes(), std::vector<int>(s.nodes(), 0));
    for (int i = 0; i < s.nodes(); ++i) s.a[i][i] = 2;
    for (auto [i, j] : s.edges) s.a[i][j] = s.a[j][i] = -1;
    for (int j = 1; j < s.nodes(); ++j)
        if (s.a[0][j] != 0) s.tilde_I.push_back(j);
    return s;
}

Root simple_root(const CartanSpec& spec, int i) {
    Root r(spec.n, 0);
    r[i - 1] = 1;
    return r;
}

std::vector<Root> enumerate_roots(const CartanSpec& spec) {
    std::set<Root> seen;
    std::vector<Root> queue;
    for (int i = 1; i <= spec.n; ++i) {
        queue.push_back(simple_root(spec, i));
        seen.insert(queue.back());
    }
    while (!queue.empty()) {
        Root r = queue.back();
        queue.pop_back();
        for (int i = 1; i <= spec.n; ++i) {
            int c = 0;
            for (int j = 1; j <= spec.n; ++j) c += r[j - 1] * spec.a[i][j];
            Root s = r;
            s[i - 1] -= c;
            if (seen.insert(s).second) queue.push_back(s);
        }
    }
    return {seen.begin(), seen.end()};
}

Root highest_root(const CartanSpec& spec) {
    Root r(spec.marks.begin() + 1, spec.marks.end());
    return r;
}

bool is_positive(const Root& r) {
    return std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
}

Root negate(const Root& r) {
    Root s = r;
    for (int& c : s) c = -c;
    return s;
}

int phi_layer(const CartanSpec& spec, const Root& r) {
    int l = 0;
    for (int i : spec.tilde_I) l += r[i - 1];
    return l;
}

std::string root_name(const Root& r) {
    std::ostringstream os;
    os << "x[";
    for (size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
    os << "]";
    return os.str();
}

std::vector<Weight> dominant_weights(const CartanSpec& spec, int level) {
    std::vector<Weight> out;
    Weight w(spec.nodes());
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == spec.nodes()) {
            if (remaining == 0) out.push_back(w);
            return;
        }
        for (int c = 0; c * spec.comarks[i] <= remaining; ++c) {
            w.lam[i] = c;
            self(self, i + 1, remaining - c * spec.comarks[i]);
        }
        w.lam[i] = 0;
    };
    rec(rec, 0, level);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Frac {
    long long num = 0;
    long long den = 1;
    void reduce() {
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (den < 0) { num = -num; den = -den; }
    }
};

Frac sub_mul(Frac a, Frac f, Frac b) {
    // a - f * b
    Frac r{a.num * f.den * b.den - f.num * b.num * a.den, a.den * f.den * b.den};
    r.reduce();
    return r;
}

} // namespace

bool classical_root_coords(const CartanSpec& spec, const Weight& w, std::vector<int>& out) {
    int n = spec.n;
    // Solve sum_j c_j a[i][j] = w.lam[i] for i = 1..n.
    std::vector<std::vector<Frac>> m(n, std::vector<Frac>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = {spec.a[i + 1][j + 1], 1};
        m[i][n] = {w.lam[i + 1], 1};
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m[piv][col].num == 0) ++piv;
        if (piv == n) return false;
        std::swap(m[piv], m[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].num == 0) continue;
            Frac f{m[r][col].num * m[col][col].den, m[r][col].den * m[col][col].num};
            f.reduce();
            for (int k = col; k <= n; ++k) m[r][k] = sub_mul(m[r][k], f, m[col][k]);
        }
    }
    out.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        Frac v{m[i][n].num * m[i][i].den, m[i][n].den * m[i][i].num};
        v.reduce();
        if (v.den != 1) return false;
        out[i] = static_cast<int>(v.num);
    }
    return true;
}

bool affine_root_coords(const CartanSpec& spec, const Weight& w, std::vector<int>& out) {
    int k0 = w.delta;
    Weight rest = w - spec.alpha(0).scaled(k0);
    std::vector<int> k;
    if (!classical_root_coords(spec, rest, k)) return false;
    Weight check(spec.nodes());
    check.delta = 0;
    for (int i = 1; i <= spec.n; ++i) check += spec.alpha(i).scaled(k[i - 1]);
    if (check != rest) return false;
    out.assign(1, k0);
    out.insert(out.end(), k.begin(), k.end());
    return true;
}

} // namespace ew
