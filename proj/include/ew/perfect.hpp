#pragma once

#include "ew/crystal.hpp"
#include "ew/root_data.hpp"

#include <string>
#include <vector>

namespace ew {

// Orbit construction of the level 0 fundamental crystal at a nonzero minuscule node.
CrystalGraph build_minuscule(const CartanSpec& spec, int node);

// Uniform construction on {x_alpha} + {y_i} + {empty}.
CrystalGraph build_bfkl(const CartanSpec& spec);

// B6, B7 or B8 according to the type, with element names set to the labels of labels().
CrystalGraph build_perfect(const CartanSpec& spec);

struct Label {
    std::vector<int> in;
    std::vector<int> out;
    std::string str() const;
    bool operator==(const Label& o) const = default;
};

// Incoming and outgoing colours; throws strings_too_long if some string has length above 1.
std::vector<Label> labels(const CrystalGraph& g);

std::vector<int> extremal_elements(const CrystalGraph& g);

struct PerfectCheck {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct PerfectReport {
    bool pass = false;
    int level = 0;
    std::vector<PerfectCheck> checks;
    std::vector<Weight> weights;   // level l dominant weights
    std::vector<int> upper;        // b^lambda per weight, NONE if absent or not unique
    std::vector<int> lower;        // b_lambda per weight
    std::string caveat;
};

PerfectReport check_perfect(const CartanSpec& spec, const CrystalGraph& g, int level);

// Unique element with phi(b) = lambda (resp. eps(b) = lambda), NONE otherwise.
int lower_element(const CrystalGraph& g, const Weight& lambda);
int upper_element(const CrystalGraph& g, const Weight& lambda);

} // namespace ew
