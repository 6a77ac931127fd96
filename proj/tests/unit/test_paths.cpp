#include "common.hpp"

#include "ew/paths.hpp"
#include "ew/walls.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ew;

TEST(Paths, PartitionNumbers) {
    EXPECT_EQ(partitions_up_to(6), (std::vector<int>{1, 1, 2, 3, 5, 7, 11}));
    EXPECT_EQ(partitions_of(4).size(), 5u);
}

TEST(Paths, WallsMapOntoPaths) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        const TypeModel& m = model_of(t);
        for (int node : m.spec.minuscule) {
            WallModel wm(m, node, WallKind::reduced);
            PathModel pm(m.spec, m.b, m.h, m.ground(node));
            std::set<std::vector<int>> from_walls;
            for (const YoungWall& y : enumerate_closure(wm, 3)) from_walls.insert(wm.to_path(y));
            std::set<std::vector<int>> paths;
            for (const LambdaPath& p : pm.enumerate(3)) paths.insert(p.head);
            EXPECT_EQ(from_walls, paths) << type_name(t) << " L" << node;
        }
    }
}

TEST(Paths, FockHighestWeightDescription) {
    const TypeModel& m = model_of(TypeTag::E7);
    PathModel pm(m.spec, m.b, m.h, m.ground(0));
    for (const FockPath& p : pm.enumerate_fock(4)) EXPECT_EQ(pm.fock_hw(p), pm.fock_hw_description(p));
}

TEST(Paths, GroundPathWeight) {
    const TypeModel& m = model_of(TypeTag::E6);
    PathModel pm(m.spec, m.b, m.h, m.ground(1));
    EXPECT_EQ(pm.weight(pm.ground()), m.spec.fundamental(1));
}

TEST(Paths, FockWeightAgreesWithEnergySum) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        const TypeModel& m = model_of(t);
        for (int node : m.spec.minuscule) {
            PathModel pm(m.spec, m.b, m.h, m.ground(node));
            for (const LambdaPath& p : pm.enumerate(4)) EXPECT_EQ(pm.fock_weight(pm.embed(p)), pm.weight(p));
        }
    }
}
