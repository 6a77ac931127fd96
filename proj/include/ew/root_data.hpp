#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ew {

enum class TypeTag { E6, E7, E8 };

TypeTag parse_type(const std::string& name);
std::string type_name(TypeTag t);

// An affine weight in the basis of fundamental weights plus a multiple of delta.
struct Weight {
    std::vector<int> lam;
    int delta = 0;

    Weight() = default;
    explicit Weight(int nodes) : lam(nodes, 0) {}

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    Weight scaled(int k) const;
    bool operator==(const Weight& o) const = default;
    auto operator<=>(const Weight& o) const = default;
};

std::string to_string(const Weight& w);

// Coefficients over the simple roots alpha_1..alpha_n of the finite subsystem.
using Root = std::vector<int>;

struct CartanSpec {
    TypeTag type = TypeTag::E6;
    int n = 0;                              // rank of the finite subsystem
    std::vector<std::vector<int>> a;        // a[i][j] = <alpha_j, h_i>
    std::vector<int> marks;
    std::vector<int> comarks;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> tilde_I;
    std::vector<int> minuscule;

    int nodes() const { return n + 1; }
    int coxeter() const;
    Weight zero() const { return Weight(nodes()); }
    Weight fundamental(int i) const;
    Weight alpha(int i) const;
    Weight null_root() const;
    int level(const Weight& w) const;
    // Level 0 weight of a root of the finite subsystem, delta part zero.
    Weight root_weight(const Root& r) const;
    bool adjacent(int i, int j) const { return i != j && a[i][j] != 0; }
};

CartanSpec build_cartan(TypeTag t);

int pairing(const Weight& w, int i);

std::vector<Root> enumerate_roots(const CartanSpec& spec);
Root highest_root(const CartanSpec& spec);
bool is_positive(const Root& r);
Root negate(const Root& r);
Root simple_root(const CartanSpec& spec, int i);
int phi_layer(const CartanSpec& spec, const Root& r);
std::string root_name(const Root& r);

// Level l dominant weights of level exactly l (delta part zero).
std::vector<Weight> dominant_weights(const CartanSpec& spec, int level);

// Express a level 0 classical weight as a combination of alpha_1..alpha_n.
// Returns false when the coefficients are not integral.
bool classical_root_coords(const CartanSpec& spec, const Weight& w, std::vector<int>& out);

// Coefficients k_0..k_n with w = sum k_i alpha_i (affine roots); false if w is not in the root lattice.
bool affine_root_coords(const CartanSpec& spec, const Weight& w, std::vector<int>& out);

} // namespace ew
