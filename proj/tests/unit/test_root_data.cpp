#include "ew/error.hpp"
#include "ew/root_data.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace ew;

TEST(RootData, RootCounts) {
    EXPECT_EQ(enumerate_roots(build_cartan(TypeTag::E6)).size(), 72u);
    EXPECT_EQ(enumerate_roots(build_cartan(TypeTag::E7)).size(), 126u);
    EXPECT_EQ(enumerate_roots(build_cartan(TypeTag::E8)).size(), 240u);
}

TEST(RootData, HighestRootOfE8) {
    EXPECT_EQ(highest_root(build_cartan(TypeTag::E8)), (Root{2, 3, 4, 6, 5, 4, 3, 2}));
}

TEST(RootData, MarksSumToCoxeterNumber) {
    int expected[] = {12, 18, 30};
    int k = 0;
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        CartanSpec s = build_cartan(t);
        EXPECT_EQ(std::accumulate(s.marks.begin(), s.marks.end(), 0), expected[k]);
        EXPECT_EQ(s.coxeter(), expected[k]);
        ++k;
    }
}

TEST(RootData, MinusculeNodes) {
    EXPECT_EQ(build_cartan(TypeTag::E6).minuscule, (std::vector<int>{0, 1, 6}));
    EXPECT_EQ(build_cartan(TypeTag::E7).minuscule, (std::vector<int>{0, 7}));
    EXPECT_EQ(build_cartan(TypeTag::E8).minuscule, (std::vector<int>{0}));
}

TEST(RootData, NullRootPairsToZero) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        CartanSpec s = build_cartan(t);
        Weight d = s.null_root();
        for (int i = 0; i < s.nodes(); ++i) EXPECT_EQ(pairing(d, i), 0);
    }
}

TEST(RootData, BadTypeIsRejected) {
    try {
        parse_type("E9");
        FAIL() << "no exception";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::bad_type);
    }
}

TEST(RootData, DominantLevelOneWeightsAreMinuscule) {
    for (TypeTag t : {TypeTag::E6, TypeTag::E7, TypeTag::E8}) {
        CartanSpec s = build_cartan(t);
        EXPECT_EQ(dominant_weights(s, 1).size(), s.minuscule.size());
    }
}
