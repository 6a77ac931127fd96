#include "common.hpp"

#include "ew/error.hpp"
#include "ew/perfect.hpp"

#include <gtest/gtest.h>

using namespace ew;

TEST(Crystal, Cardinalities) {
    EXPECT_EQ(build_perfect(build_cartan(TypeTag::E6)).size(), 27);
    EXPECT_EQ(build_perfect(build_cartan(TypeTag::E7)).size(), 56);
    EXPECT_EQ(build_perfect(build_cartan(TypeTag::E8)).size(), 249);
}

TEST(Crystal, AxiomsHold) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        CartanSpec s = build_cartan(t);
        EXPECT_EQ(check_axioms(s, build_perfect(s)), "") << type_name(t);
    }
}

TEST(Crystal, PerfectAtLevelOne) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        CartanSpec s = build_cartan(t);
        PerfectReport r = check_perfect(s, build_perfect(s), 1);
        EXPECT_TRUE(r.pass) << type_name(t);
        EXPECT_EQ(r.level, 1);
    }
}

TEST(Crystal, EmptyElementOfE8) {
    CartanSpec s = build_cartan(TypeTag::E8);
    CrystalGraph b = build_perfect(s);
    int x = lower_element(b, s.fundamental(0));
    ASSERT_NE(x, NONE);
    EXPECT_EQ(b.names[x], "empty");
    EXPECT_EQ(upper_element(b, s.fundamental(0)), x);
}

TEST(Crystal, TensorRuleActsOnLeftWhenPhiExceedsEps) {
    const TypeModel& m = model_of(TypeTag::E6);
    CrystalGraph t = tensor(m.b, m.b);
    ASSERT_EQ(t.size(), 27 * 27);
    for (int l = 0; l < m.b.size(); ++l)
        for (int r = 0; r < m.b.size(); ++r)
            for (int i = 0; i < t.colors; ++i) {
                int y = t.f[i][tensor_id(m.b, l, r)];
                if (m.b.phi(i, l) > m.b.eps(i, r)) {
                    EXPECT_EQ(y, m.b.f[i][l] == NONE ? NONE : tensor_id(m.b, m.b.f[i][l], r));
                } else {
                    EXPECT_EQ(y, m.b.f[i][r] == NONE ? NONE : tensor_id(m.b, l, m.b.f[i][r]));
                }
            }
}

TEST(Crystal, StringsHaveLengthOne) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7}) {
        const TypeModel& m = model_of(t);
        EXPECT_EQ(labels(m.b).size(), static_cast<size_t>(m.b.size()));
    }
}

TEST(Crystal, E8HasAZeroStringOfLengthTwo) {
    const TypeModel& m = model_of(TypeTag::E8);
    try {
        labels(m.b);
        FAIL() << "no exception";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::strings_too_long);
    }
    int empty = m.b.find("empty");
    EXPECT_EQ(m.b.eps(0, empty), 1);
    EXPECT_EQ(m.b.phi(0, empty), 1);
}
