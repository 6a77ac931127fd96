#include "ew/model.hpp"
#include "ew/error.hpp"
#include "ew/perfect.hpp"

#include <algorithm>

namespace ew {

const GroundState& TypeModel::ground(int node) const {
    for (size_t k = 0; k < spec.minuscule.size(); ++k)
        if (spec.minuscule[k] == node) return grounds[k];
    throw Error(ErrorCode::bad_weight, "Lambda_" + std::to_string(node) + " is not a level 1 dominant weight");
}

TypeModel build_model(TypeTag t, const std::string& data_dir) {
    CartanSpec spec = build_cartan(t);
    return build_model(spec, load_pattern(spec, data_dir));
}

TypeModel build_model(const CartanSpec& spec, const ColumnPattern& pattern) {
    TypeModel m;
    m.spec = spec;
    m.b = build_perfect(spec);
    m.h = energy_table(m.b);
    for (int node : spec.minuscule) m.grounds.push_back(ground_state(spec, m.b, m.h, node));

    m.c = build_column_crystal(pattern, spec);
    m.psi = psi(m.b, m.c);
    m.psi_inv.assign(m.c.graph.size(), NONE);
    for (int x = 0; x < m.b.size(); ++x) {
        m.psi_inv[m.psi[x]] = x;
        m.c.graph.names[m.psi[x]] = m.b.names[x];
    }

    const GroundState& g = m.grounds.front();
    int ground_class = m.psi[g.b_at(0)];
    for (int i = 1; i < spec.nodes() && spec.type == TypeTag::E8; ++i)
        if (m.c.graph.f[i][ground_class] != NONE || m.c.graph.e[i][ground_class] != NONE)
            throw Error(ErrorCode::inconsistent, "the ground column has an arrow of colour " + std::to_string(i));
    set_ground(m.c, spec, ground_class);

    m.color_perm = diagram_automorphism(spec);
    ColumnClass next{m.psi[g.b_at(1)], g.m_at(1)};
    ColumnClass here{m.psi[g.b_at(0)], g.m_at(0)};
    m.sigma = sigma_motion(m.c, m.color_perm, next, here);
    m.sigma_rows = sigma_table(m.c, m.sigma, m.psi);
    m.zero_dist = zero_arrow_distance(m.b);
    return m;
}

int parse_lambda(const CartanSpec& spec, const std::string& s) {
    std::string digits = s;
    for (const char* prefix : {"Lambda_", "Lambda", "L_", "L"}) {
        std::string p = prefix;
        if (digits.rfind(p, 0) == 0) {
            digits = digits.substr(p.size());
            break;
        }
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw Error(ErrorCode::bad_weight, "cannot read weight '" + s + "'");
    int node = std::stoi(digits);
    if (std::find(spec.minuscule.begin(), spec.minuscule.end(), node) == spec.minuscule.end())
        throw Error(ErrorCode::bad_weight, "'" + s + "' is not a level 1 dominant weight of " + type_name(spec.type));
    return node;
}

} // namespace ew
