#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SumPrintsAgreeingRoutes) {
    auto r = run({"sum", "3", "7"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("-1/14,-1/14,-1/14,-1/14,true"), std::string::npos) << r.out;
}

TEST(Cli, CfShowsBothExpansions) {
    auto r = run({"cf", "3/7"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("3/7,2 3,2 4,2,2,2,3,-1,0,"), std::string::npos) << r.out;
}

TEST(Cli, NonReducedAlphaIsReducedWithWarning) {
    auto r = run({"average", "--stat", "ell", "--alpha", "2/4", "--qmax", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_NE(r.out.find("3,1/2,lower,ell,5,2,2/1,0.4"), std::string::npos) << r.out;
}

TEST(Cli, AverageHasHeaderAndOneRowPerGridPoint) {
    auto r = run({"average", "--stat", "s", "--alpha", "1/3", "--grid", "50,100,200"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line.rfind("Q,alpha,side,stat,count,cut_count,total,mean,predicted,residual", 0), 0u);
    int n = 0;
    while (std::getline(lines, line)) ++n;
    EXPECT_EQ(n, 3);
}

TEST(Cli, OutputIndependentOfWorkerCount) {
    auto a = run({"average", "--stat", "ell", "--alpha", "2/5", "--grid", "100,300", "--workers", "1"});
    auto b = run({"average", "--stat", "ell", "--alpha", "2/5", "--grid", "100,300", "--workers", "4"});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JsonMirrorsCsvFields) {
    auto r = run({"average", "--stat", "ell", "--alpha", "1/2", "--qmax", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["Q"], 3);
    EXPECT_EQ(j[0]["total"], "2/1");
    EXPECT_TRUE(j[0].contains("provenance"));
}

TEST(Cli, TsvUsesTabs) {
    auto r = run({"constants", "--format", "tsv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("name\tvalue\tspread\tprovenance"), std::string::npos);
}

TEST(Cli, VerifyIdentitiesPasses) {
    auto r = run({"verify", "--suite", "identities", "--qmax", "60"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("three-routes,PASS"), std::string::npos);
}

TEST(Cli, VerifyCountingAndConstantsPass) {
    EXPECT_EQ(run({"verify", "--suite", "counting", "--qmax", "50"}).code, 0);
    EXPECT_EQ(run({"verify", "--suite", "constants"}).code, 0);
}

TEST(Cli, UsageErrorsReturnTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"sum", "3"}).code, 2);
    EXPECT_EQ(run({"average", "--alpha", "3/2", "--qmax", "10"}).code, 2);
    EXPECT_EQ(run({"average", "--alpha", "1/2", "--grid", "10,5"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
    EXPECT_EQ(run({"average", "--format", "xml", "--qmax", "10"}).code, 2);
}

TEST(Cli, BudgetGuardReturnsThree) {
    auto r = run({"counts", "--alpha", "1/2", "--qmax", "61"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, CountsAndCases) {
    auto r = run({"counts", "--alpha", "1/1", "--qmax", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("N,10,1/1,113"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("T,10,1/1,68"), std::string::npos) << r.out;
    r = run({"counts", "--alpha", "1/1", "--cases", "3"});
    EXPECT_NE(r.out.find("3,1/1,1,0,17,8,3,29,29"), std::string::npos) << r.out;
}

TEST(Cli, DeltaAndTail) {
    auto r = run({"delta", "--beta", "1/1", "--beta-prime", "1/1", "--qmax", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("3,1/1,1/1,5,4/1,4/1,0"), std::string::npos) << r.out;
    r = run({"tail", "--grid", "50,100"});
    EXPECT_EQ(r.code, 0);
}

TEST(Cli, VerifyAsymptoticsOnSmallGrid) {
    auto r = run({"verify", "--suite", "asymptotics", "--grid", "200,400,800"});
    EXPECT_NE(r.out.find("dedekind-slope alpha=1/2"), std::string::npos) << r.out;
    EXPECT_TRUE(r.code == 0 || r.code == 1);
}

TEST(Cli, OutWritesFile) {
    const std::string path = testing::TempDir() + "dlab_constants.csv";
    auto r = run({"constants", "--out", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "name,value,spread,provenance");
}

TEST(Cli, IrrationalDeltaTable) {
    auto r = run({"delta", "--cf", "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1", "--grid", "100,300"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("convergent sandwich"), std::string::npos);
}
