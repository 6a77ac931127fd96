#include "ew/columns.hpp"
#include "ew/error.hpp"
#include "ew/tables.hpp"

#include <gtest/gtest.h>

using namespace ew;

TEST(Tables, RowCounts) {
    ReferenceTables t = load_tables(default_data_dir());
    EXPECT_EQ(t.ground.size(), 6u);
    EXPECT_EQ(t.sigma.size(), 27u + 56u);
    EXPECT_EQ(t.perfect.size(), 12u);
    EXPECT_EQ(t.maximal.size(), 8u);
}

TEST(Tables, GroundRowLookup) {
    ReferenceTables t = load_tables(default_data_dir());
    const GroundRow* r = t.ground_row(TypeTag::E8, 0);
    ASSERT_NE(r, nullptr);
    EXPECT_EQ(r->b.size(), r->m.size());
    EXPECT_EQ(t.ground_row(TypeTag::E8, 3), nullptr);
}

TEST(Tables, MissingDirectoryIsAnIoError) {
    try {
        load_tables("/nonexistent/ewall-data");
        FAIL() << "no exception";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::io);
    }
}
