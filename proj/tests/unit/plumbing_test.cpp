#include "focalforge/keyvalue.hpp"
#include "focalforge/parallel.hpp"
#include "focalforge/process.hpp"
#include "focalforge/stats.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>
#include <fstream>

using namespace focalforge;

TEST(KeyValueFile, ValuesSectionsAndStrings) {
    auto kv = KeyValueFile::parse(
        "# comment\n"
        "timeout = 60   # trailing\n"
        "cmd = \"javac \\\"a b\\\" {class_file}\"\n"
        "raw = 'c:\\path'\n"
        "flag = true\n"
        "block = \"\"\"\nline one\nline two\n\"\"\"\n"
        "[api]\n"
        "junit = \"assertTrue\"\n");
    EXPECT_EQ(kv.get_number("timeout"), 60.0);
    EXPECT_EQ(kv.get("cmd"), "javac \"a b\" {class_file}");
    EXPECT_EQ(kv.get("raw"), "c:\\path");
    EXPECT_EQ(kv.get_bool("flag"), true);
    EXPECT_EQ(kv.get("block"), "line one\nline two\n");
    EXPECT_EQ(kv.get("api.junit"), "assertTrue");
    EXPECT_FALSE(kv.has("junit"));
    EXPECT_EQ(kv.get_or("missing", "x"), "x");
}

TEST(KeyValueFile, Errors) {
    EXPECT_THROW(KeyValueFile::parse("novalue\n"), ConfigError);
    EXPECT_THROW(KeyValueFile::parse("a = \"open\n"), ConfigError);
    EXPECT_THROW(KeyValueFile::parse("a = 1\na = 2\n"), ConfigError);
    EXPECT_THROW(KeyValueFile::parse("a = \"\"\"\nnever closed\n"), ConfigError);
    EXPECT_THROW(KeyValueFile::parse("t = soon\n").get_number("t"), ConfigError);
    EXPECT_THROW(KeyValueFile::load("/nonexistent/file.toml"), ConfigError);
    try {
        KeyValueFile::parse("a = 1\nbroken line\n", "cfg.toml");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("cfg.toml:2"), std::string::npos);
    }
}

TEST(RunCommand, ExitCodeAndOutput) {
    support::TempDir dir;
    auto r = run_command("echo out; echo err 1>&2; pwd; exit 3", dir.path(), 10);
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_FALSE(r.timed_out);
    EXPECT_NE(r.output.find("out\n"), std::string::npos);
    EXPECT_NE(r.output.find("err\n"), std::string::npos);
    EXPECT_NE(r.output.find(std::filesystem::canonical(dir.path()).string()), std::string::npos);
}

TEST(RunCommand, TimeoutKillsTheProcessGroup) {
    support::TempDir dir;
    const auto start = std::chrono::steady_clock::now();
    auto r = run_command("sleep 30 & sleep 30; echo done", dir.path(), 0.3);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_TRUE(r.timed_out);
    EXPECT_LT(elapsed, 5.0);
    EXPECT_EQ(r.output.find("done"), std::string::npos);
}

TEST(RunCommand, OutputCap) {
    support::TempDir dir;
    auto r = run_command("yes x | head -c 100000", dir.path(), 10, 1000);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_LE(r.output.size(), 1000u);
}

TEST(Stats, QuantilesMatchHandValues) {
    // Type 7 on 1..4: q1 = 1.75, median 2.5, q3 = 3.25.
    std::vector<double> v{1, 2, 3, 4};
    EXPECT_DOUBLE_EQ(quantile(v, 0.25), 1.75);
    EXPECT_DOUBLE_EQ(quantile(v, 0.5), 2.5);
    EXPECT_DOUBLE_EQ(quantile(v, 0.75), 3.25);
    EXPECT_DOUBLE_EQ(quantile(v, 0), 1);
    EXPECT_DOUBLE_EQ(quantile(v, 1), 4);
    auto s = summarize({4, 1, 3, 2, 10});
    EXPECT_EQ(s.n, 5u);
    EXPECT_DOUBLE_EQ(s.median, 3);
    EXPECT_DOUBLE_EQ(s.mean, 4);
    EXPECT_DOUBLE_EQ(s.min, 1);
    EXPECT_DOUBLE_EQ(s.max, 10);
    EXPECT_EQ(summarize({}).n, 0u);
}

TEST(Parallel, EveryIndexOnceAndErrorsPropagate) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 8, [&](std::size_t i) { hits[i] += 1; });
    EXPECT_EQ(std::count(hits.begin(), hits.end(), 1), 1000);
    EXPECT_THROW(parallel_for(50, 4, [](std::size_t i) {
                     if (i == 17) throw std::runtime_error("boom");
                 }),
                 std::runtime_error);
}

TEST(Parallel, JobsFromEnvironment) {
    ::setenv("FOCALFORGE_JOBS", "3", 1);
    EXPECT_EQ(jobs_from_environment(1), 3);
    ::setenv("FOCALFORGE_JOBS", "zero", 1);
    EXPECT_EQ(jobs_from_environment(2), 2);
    ::setenv("FOCALFORGE_JOBS", "0", 1);
    EXPECT_EQ(jobs_from_environment(2), 2);
    ::unsetenv("FOCALFORGE_JOBS");
    EXPECT_EQ(jobs_from_environment(5), 5);
}
