#pragma once

#include "ew/root_data.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ew {

constexpr int NONE = -1;

enum class Dir { e, f };

// Finite crystal graph with partial injections per colour.
struct CrystalGraph {
    int colors = 0;
    std::vector<std::vector<int>> f;   // f[i][x]
    std::vector<std::vector<int>> e;   // e[i][x]
    std::vector<Weight> wt;
    std::vector<std::string> names;

    CrystalGraph() = default;
    explicit CrystalGraph(int colors_) : colors(colors_), f(colors_), e(colors_) {}

    int size() const { return static_cast<int>(wt.size()); }
    int add_element(const std::string& name, const Weight& w);
    void add_arrow(int i, int from, int to);
    int step(Dir d, int i, int x) const { return d == Dir::f ? f[i][x] : e[i][x]; }
    int eps(int i, int x) const;
    int phi(int i, int x) const;
    std::pair<int, int> string_stats(int i, int x) const { return {eps(i, x), phi(i, x)}; }
    Weight eps_weight(int x) const;
    Weight phi_weight(int x) const;
    int find(const std::string& name) const;
    int arrow_count() const;
    int arrow_count(int i) const;
};

// Returns an empty string when wt(f_i b) = wt(b) - alpha_i and phi - eps = <wt, h_i> hold everywhere.
std::string check_axioms(const CartanSpec& spec, const CrystalGraph& g);

// Tensor product with the factor order of the text: f_i acts on the left factor
// when phi_i(b) > eps_i(b'), e_i when phi_i(b) >= eps_i(b'). Element id is left * |B'| + right.
CrystalGraph tensor(const CrystalGraph& a, const CrystalGraph& b);
inline int tensor_id(const CrystalGraph& right, int l, int r) { return l * right.size() + r; }

struct AffineElem {
    int base = 0;
    int power = 0;
    bool operator==(const AffineElem& o) const = default;
    auto operator<=>(const AffineElem& o) const = default;
};

std::optional<AffineElem> aff_step(const CrystalGraph& g, Dir d, int i, AffineElem x);
Weight aff_weight(const CrystalGraph& g, AffineElem x);

std::vector<std::vector<int>> components(const CrystalGraph& g, const std::vector<int>& forget);

struct IsoResult {
    bool ok = false;
    std::vector<int> map;
    std::string conflict;
};

// Anchored propagation along arrows; color_perm maps colours of a to colours of b.
IsoResult find_isomorphism(const CrystalGraph& a, const CrystalGraph& b,
                           const std::vector<std::pair<int, int>>& anchors,
                           const std::vector<int>& color_perm = {}, bool check_weights = true);

const char* color_name(int i);
std::string to_dot(const CrystalGraph& g, const std::string& title);
nlohmann::json to_json(const CrystalGraph& g);

} // namespace ew
