#include "common.hpp"

#include "ew/energy.hpp"
#include "ew/perfect.hpp"

#include <gtest/gtest.h>

using namespace ew;

TEST(Energy, EqualsZeroArrowDistanceOnE6AndE7) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7}) {
        const TypeModel& m = model_of(t);
        for (int b = 0; b < m.b.size(); ++b)
            for (int a = 0; a < m.b.size(); ++a) ASSERT_EQ(m.h.at(b, a), m.zero_dist.at(a, b));
    }
}

TEST(Energy, SeedIndependent) {
    const TypeModel& m = model_of(TypeTag::E6);
    for (int seed : extremal_elements(m.b)) {
        EnergyTable h = energy_table(m.b, seed);
        EXPECT_EQ(h.values, m.h.values) << m.b.names[seed];
    }
}

TEST(Energy, AffineShift) {
    const TypeModel& m = model_of(TypeTag::E8);
    for (int b = 0; b < m.b.size(); b += 17)
        for (int a = 0; a < m.b.size(); a += 13)
            EXPECT_EQ(h_aff(m.h, {b, 3}, {a, 1}), m.h.at(b, a) + 2);
}

TEST(Energy, GroundStatesHaveAffineEnergyOne) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        const TypeModel& m = model_of(t);
        for (const GroundState& g : m.grounds)
            for (int r = 0; r < 3 * g.period; ++r) EXPECT_EQ(h_aff(m.h, g.g_at(r + 1), g.g_at(r)), 1);
    }
}

TEST(Energy, E8GroundPowersDecrease) {
    const GroundState& g = model_of(TypeTag::E8).ground(0);
    for (int r = 0; r < 6; ++r) EXPECT_EQ(g.m_at(r), -r);
}

TEST(Energy, E8MaximalVectors) {
    const TypeModel& m = model_of(TypeTag::E8);
    auto v = maximal_vectors(m.b, m.h);
    EXPECT_EQ(v.size(), 8u);
    int empty = m.b.find("empty");
    CrystalGraph bb = tensor(m.b, m.b);
    int theta = NONE;
    for (const MaximalVector& x : v)
        if (x.left == empty && x.right != empty) theta = x.right;
    ASSERT_NE(theta, NONE);
    EXPECT_EQ(classical_component(bb, tensor_id(m.b, empty, theta)).size(), 248u);
    EXPECT_EQ(classical_component(bb, tensor_id(m.b, empty, empty)).size(), 1u);
}
