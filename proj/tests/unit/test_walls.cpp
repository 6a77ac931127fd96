#include "common.hpp"

#include "ew/error.hpp"
#include "ew/paths.hpp"
#include "ew/walls.hpp"

#include <gtest/gtest.h>

using namespace ew;

TEST(Walls, ReducedE6DepthOne) {
    WallModel wm(model_of(TypeTag::E6), 0, WallKind::reduced);
    EXPECT_EQ(enumerate_closure(wm, 1).size(), 2u);
}

TEST(Walls, ClosureEqualsSlice) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8})
        for (WallKind k : {WallKind::reduced, WallKind::fock}) {
            WallModel wm(model_of(t), 0, k);
            auto a = enumerate_closure(wm, 3), b = enumerate_slice(wm, 3);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            EXPECT_EQ(a, b) << type_name(t);
        }
}

TEST(Walls, E8FockHighestWeightCounts) {
    WallModel wm(model_of(TypeTag::E8), 0, WallKind::fock);
    EXPECT_EQ(fock_highest_weight(wm, 2).size(), 2u);
    auto p = partitions_up_to(5);
    for (int k = 0; k <= 5; ++k) EXPECT_EQ(static_cast<int>(fock_highest_weight(wm, k).size()), p[k]);
}

TEST(Walls, ZeroBlocksMatchGroundPowers) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        const TypeModel& m = model_of(t);
        WallModel wm(m, 0, WallKind::fock);
        for (const YoungWall& y : enumerate_closure(wm, 3))
            for (int r = 0; r < static_cast<int>(y.cols.size()); ++r)
                EXPECT_EQ(wm.zero_count(y, r), m.ground(0).m_at(r) - y.cols[r].shift);
    }
}

TEST(Walls, GroundWallIsHighestWeight) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        const TypeModel& m = model_of(t);
        for (int node : m.spec.minuscule) {
            WallModel wm(m, node, WallKind::reduced);
            YoungWall g = wm.ground();
            for (int i = 0; i < m.spec.nodes(); ++i) EXPECT_FALSE(wm.step(g, Dir::e, i).has_value());
            EXPECT_EQ(wm.weight(g), m.spec.fundamental(node));
        }
    }
}

TEST(Walls, DepthCapIsEnforced) {
    WallModel wm(model_of(TypeTag::E6), 0, WallKind::reduced);
    try {
        enumerate_closure(wm, DEPTH_CAP + 1);
        FAIL() << "no exception";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::depth_overflow);
    }
}

TEST(Walls, BadLambdaIsRejected) {
    const CartanSpec& s = model_of(TypeTag::E6).spec;
    EXPECT_EQ(parse_lambda(s, "L6"), 6);
    EXPECT_THROW(parse_lambda(s, "L2"), Error);
    EXPECT_THROW(parse_lambda(s, "M0"), Error);
}
