#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(SOMOS_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

TEST(CliExpand, Y) {
    const auto r = run("expand --order 6 --what y");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0,1,1,1,3,8,23\n");
    EXPECT_EQ(run("expand --order 1 --what y").out, "0,1\n");
}

TEST(CliExpand, Q) { EXPECT_EQ(run("expand --order 4 --what q").out, "1,1,3,8,23\n"); }

TEST(CliExpand, UsageErrors) {
    EXPECT_EQ(run("expand --order 0").code, 2);
    EXPECT_EQ(run("expand --order 4 --what w").code, 2);
    EXPECT_EQ(run("expand").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
}

TEST(CliHankel, Listings) {
    EXPECT_EQ(run("hankel --n 3").out, "1,1,2,3\n");
    EXPECT_EQ(run("hankel --n 7").out, "1,1,2,3,7,23,59,314\n");
    EXPECT_EQ(run("hankel --n 0").out, "1\n");
    EXPECT_EQ(run("hankel --n 5 --method condensation").out, "1,1,2,3,7,23\n");
    EXPECT_EQ(run("hankel --n 5 --method cofactor").out, "1,1,2,3,7,23\n");
}

TEST(CliHankel, Bounds) {
    EXPECT_EQ(run("hankel --n 201").code, 2);
    EXPECT_EQ(run("hankel --n 21 --method cofactor").code, 2);
}

TEST(CliHankel, CsvAndJson) {
    EXPECT_EQ(run("hankel --n 2 --format csv").out, "n,det,method\n0,1,bareiss\n1,1,bareiss\n2,2,bareiss\n");
    const auto j = nlohmann::json::parse(run("hankel --n 4 --format json").out);
    EXPECT_EQ(j["values"].back(), "7");
}

TEST(CliTransform, Rows) {
    const auto one = nlohmann::json::parse(run("transform --steps 1 --format json").out);
    EXPECT_EQ(one["rows"][1]["a"], "2");
    EXPECT_EQ(one["rows"][1]["f"], "1");
    const auto three = nlohmann::json::parse(run("transform --steps 3 --format json").out);
    std::string products;
    for (const auto& row : three["rows"]) products += row["product"].get<std::string>() + ",";
    EXPECT_EQ(products, "1,1,2,3,");
    const auto zero = nlohmann::json::parse(run("transform --steps 0 --format json").out);
    ASSERT_EQ(zero["rows"].size(), 1U);
    EXPECT_EQ(zero["rows"][0]["a"], "1");
    EXPECT_EQ(zero["rows"][0]["b"], "-1");
    EXPECT_EQ(zero["rows"][0]["d"], "0");
    EXPECT_EQ(zero["rows"][0]["f"], "0");
    EXPECT_EQ(zero["c"], "-2");
    EXPECT_EQ(zero["e0"], "-1");
}

TEST(CliTransform, PlainAndCsv) {
    const auto plain = run("transform --steps 2");
    EXPECT_EQ(plain.code, 0);
    EXPECT_NE(plain.out.find("c = -2"), std::string::npos);
    EXPECT_NE(plain.out.find("2\t3/4\t"), std::string::npos);
    EXPECT_NE(run("transform --steps 2 --format csv").out.find("n,a,b,d,f,product\n0,1,-1,0,0,1\n"), std::string::npos);
}

TEST(CliTransform, VanishingAReportsAndFails) {
    const auto r = run("transform --steps 3 --start 1,0,0,1,-1,0 --format csv");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("\n1,0,"), std::string::npos);
    EXPECT_EQ(run("transform --steps 3 --start 1,2,3").code, 2);
}

TEST(CliSomos, Listings) {
    EXPECT_EQ(run("somos --count 7").out, "1,1,2,3,7,23,59,314\n");
    EXPECT_EQ(run("somos --count 4").out, "1,1,2,3,7\n");
    EXPECT_EQ(run("somos --count 3").out, "1,1,2,3\n");
    EXPECT_EQ(run("somos --count 3 --format csv").out, "index,s\n0,1\n1,1\n2,2\n3,3\n");
}

TEST(CliVerify, PassesAndWritesJson) {
    const auto r = run("verify --n 10 --format json");
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["overall"], "pass");
    EXPECT_EQ(j["route_recurrence"][10], "83313");
}

TEST(CliVerify, BelowMinimumIsUsageError) { EXPECT_EQ(run("verify --n 2").code, 2); }

TEST(CliVerify, CorruptedBuildFails) {
    const auto r = run("verify --n 6 --corrupt-q 4 --format json");
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["overall"], "fail");
    EXPECT_NE(j["first_failure"].get<std::string>().find("route determinant"), std::string::npos);
}

TEST(CliVerify, OutputFileAndIoError) {
    const auto path = std::filesystem::temp_directory_path() / "somos_cli_test_report.csv";
    std::filesystem::remove(path);
    const auto ok = run("verify --n 4 --format csv --output " + path.string());
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(ok.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_NE(ss.str().find("4,7,7,7"), std::string::npos);
    std::filesystem::remove(path);
    EXPECT_EQ(run("verify --n 4 --output /nonexistent-dir/report.json").code, 3);
}

TEST(CliVerify, CatalanFixture) {
    const auto j = nlohmann::json::parse(run("verify --fixture catalan --n 8 --format json").out);
    EXPECT_EQ(j["overall"], "pass");
    EXPECT_EQ(j["route_determinant"].size(), 9U);
}

}  // namespace
