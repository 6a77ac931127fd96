#pragma once

#include "ew/columns.hpp"
#include "ew/crystal.hpp"
#include "ew/energy.hpp"
#include "ew/root_data.hpp"

#include <string>
#include <vector>

namespace ew {

// Everything built for one type: B, H, C, psi, the ground states and sigma.
struct TypeModel {
    CartanSpec spec;
    CrystalGraph b;
    EnergyTable h;
    ColumnCrystal c;
    std::vector<int> psi;       // B id -> C class
    std::vector<int> psi_inv;   // C class -> B id
    std::vector<GroundState> grounds;   // one per minuscule node, in spec.minuscule order
    std::vector<int> color_perm;        // colour action of sigma
    SlotMap sigma;
    std::vector<SigmaRow> sigma_rows;   // indexed by B id
    ZeroArrowDistance zero_dist;

    const GroundState& ground(int node) const;
};

TypeModel build_model(TypeTag t, const std::string& data_dir);
TypeModel build_model(const CartanSpec& spec, const ColumnPattern& pattern);

// Parses "L0", "Lambda0" or "0" into a minuscule node; throws bad_weight otherwise.
int parse_lambda(const CartanSpec& spec, const std::string& s);

} // namespace ew
