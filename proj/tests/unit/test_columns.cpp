#include "common.hpp"

#include "ew/error.hpp"
#include "ew/perfect.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace ew;

TEST(Columns, ClassCountMatchesB) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        const TypeModel& m = model_of(t);
        EXPECT_EQ(m.c.graph.size(), m.b.size());
        std::set<int> image(m.psi.begin(), m.psi.end());
        EXPECT_EQ(static_cast<int>(image.size()), m.b.size());
    }
}

TEST(Columns, PsiCommutesWithArrows) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        const TypeModel& m = model_of(t);
        for (int x = 0; x < m.b.size(); ++x)
            for (int i = 0; i < m.b.colors; ++i) {
                int y = m.b.f[i][x];
                EXPECT_EQ(m.c.graph.f[i][m.psi[x]], y == NONE ? NONE : m.psi[y]);
            }
    }
}

TEST(Columns, StepsAreInverse) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        const TypeModel& m = model_of(t);
        for (int k = 0; k < m.c.graph.size(); ++k) {
            Column c = m.c.realize({k, 0});
            for (int i = 0; i < m.spec.nodes(); ++i)
                if (auto d = column_step(m.c.pattern, Dir::f, i, c)) {
                    auto back = column_step(m.c.pattern, Dir::e, i, *d);
                    ASSERT_TRUE(back.has_value());
                    EXPECT_EQ(*back, c);
                }
        }
    }
}

TEST(Columns, SupportsMatchCellGeometry) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        const ColumnPattern& p = model_of(t).c.pattern;
        auto geo = geometric_supports(p);
        for (int r = 0; r < p.period; ++r) {
            std::set<long> a(geo[r].begin(), geo[r].end()), b(p.slots[r].supports.begin(), p.slots[r].supports.end());
            EXPECT_EQ(a, b) << type_name(t) << " slot " << r;
        }
    }
}

TEST(Columns, FaultInjectionIsDetected) {
    // every support edge deletion and every recolouring makes the construction fail
    TypeTag t = TypeTag::E6;
    CartanSpec spec = build_cartan(t);
    ColumnPattern p = load_pattern(spec, default_data_dir());
    ColumnPattern broken = p;
    broken.slots[2].supports.pop_back();
    bool detected = false;
    try {
        ColumnCrystal c = build_column_crystal(broken, spec);
        psi(build_perfect(spec), c);
    } catch (const Error&) {
        detected = true;
    }
    EXPECT_TRUE(detected);
}

TEST(Columns, MalformedPatternLineIsRejected) {
    std::istringstream in("slot 0 color 9 cube 0\n");
    try {
        parse_pattern(in, build_cartan(TypeTag::E6));
        FAIL() << "no exception";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::data_invalid);
    }
}

TEST(Columns, E8SigmaIsZ) {
    const TypeModel& m = model_of(TypeTag::E8);
    for (const SigmaRow& r : m.sigma_rows) {
        EXPECT_EQ(r.b, r.c);
        EXPECT_EQ(r.p, 1);
    }
}
