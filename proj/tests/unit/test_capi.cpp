#include "ewall.h"

#include <gtest/gtest.h>

#include <string>

namespace {

struct Ctx {
    ew_context* ctx = nullptr;
    Ctx() { EXPECT_EQ(ew_context_new(nullptr, &ctx), EW_OK); }
    ~Ctx() { ew_context_free(ctx); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    ew_free_string(s);
    return out;
}

} // namespace

TEST(CApi, MissingDataDirectory) {
    ew_context* ctx = nullptr;
    EXPECT_EQ(ew_context_new("/nonexistent/ewall-data", &ctx), EW_IO);
    EXPECT_EQ(ctx, nullptr);
}

TEST(CApi, BuildJson) {
    Ctx c;
    char* out = nullptr;
    ASSERT_EQ(ew_build(c.ctx, "E8", "B", "json", &out), EW_OK);
    std::string s = take(out);
    EXPECT_NE(s.find("\"empty\""), std::string::npos);
}

TEST(CApi, BuildDotHas27Vertices) {
    Ctx c;
    char* out = nullptr;
    ASSERT_EQ(ew_build(c.ctx, "E6", "B", "dot", &out), EW_OK);
    std::string s = take(out);
    EXPECT_EQ(s.rfind("digraph", 0), 0u);
}

TEST(CApi, ErrorCodes) {
    Ctx c;
    char* out = nullptr;
    EXPECT_EQ(ew_build(c.ctx, "E9", "B", "dot", &out), EW_BAD_TYPE);
    EXPECT_EQ(out, nullptr);
    EXPECT_STRNE(ew_last_error(c.ctx), "");
    EXPECT_EQ(ew_build(c.ctx, "E6", "B", "png", &out), EW_USAGE);
    ew_enumerate_options o{"E6", "L0", "reduced", 9, 0, "text"};
    EXPECT_EQ(ew_enumerate(c.ctx, &o, &out), EW_DEPTH_OVERFLOW);
    o.depth = 1;
    o.lambda = "L2";
    EXPECT_EQ(ew_enumerate(c.ctx, &o, &out), EW_BAD_WEIGHT);
    EXPECT_STREQ(ew_status_name(EW_DEPTH_OVERFLOW), "DEPTH_OVERFLOW");
    EXPECT_STREQ(ew_status_name(EW_USAGE), "USAGE");
}

TEST(CApi, EnumerateCounts) {
    Ctx c;
    char* out = nullptr;
    ew_enumerate_options o{"E8", "L0", "fock", 3, 1, "json"};
    ASSERT_EQ(ew_enumerate(c.ctx, &o, &out), EW_OK);
    EXPECT_NE(take(out).find("\"count\": 7"), std::string::npos);
}

TEST(CApi, VerifySubset) {
    Ctx c;
    const char* only[] = {"energy"};
    char* report = nullptr;
    char* summary = nullptr;
    int pass = 0;
    ASSERT_EQ(ew_verify(c.ctx, only, 1, &report, &summary, &pass), EW_OK);
    EXPECT_EQ(pass, 1);
    std::string s = take(summary);
    EXPECT_EQ(s.rfind("PASS energy", 0), 0u);
    EXPECT_NE(take(report).find("\"status\": \"PASS\""), std::string::npos);
    const char* bad[] = {"nope"};
    EXPECT_EQ(ew_verify(c.ctx, bad, 1, &report, &summary, &pass), EW_USAGE);
}
