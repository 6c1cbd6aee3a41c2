#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>

#include "ringlab/cli.hpp"

using namespace ringlab;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "ringlab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected) {
    args.push_back("--format");
    args.push_back("json");
    const CliRun r = run(args);
    EXPECT_EQ(r.code, expected) << r.out << r.err;
    return Json::parse(r.out);
}

}  // namespace

TEST(Cli, CheckAlmostFullMatrix) {
    const Json j = run_json({"check", "almost", "M(2, Z/2)", "--max-deg", "1"}, 1);
    EXPECT_EQ(j["schema"], kReportSchema);
    EXPECT_EQ(j["verdict"]["kind"], "Refuted");
    EXPECT_TRUE(j["verdict"]["witness"]["revalidated"].get<bool>());
    EXPECT_EQ(j["verdict"]["witness"]["f"].size(), 2u);
    EXPECT_EQ(j["ring"]["size"], 16);
}

TEST(Cli, CheckAlmostTriangular) {
    const Json j = run_json({"check", "almost", "T(2, Z/2)", "--max-deg", "2"}, 0);
    EXPECT_EQ(j["verdict"]["kind"], "HoldsUpTo");
    EXPECT_EQ(j["verdict"]["bounds"]["degree"], 2);
    EXPECT_TRUE(j["verdict"]["witness"].is_null());
}

TEST(Cli, TextOutputUsesBracketedRows) {
    const CliRun r = run({"check", "armendariz", "T(2, Z/2)", "--max-deg", "1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("Refuted(1)"), std::string::npos);
    EXPECT_NE(r.out.find("[[0,1],[0,0]]"), std::string::npos);
}

TEST(Cli, StructuralAndExtensions) {
    EXPECT_EQ(run({"check", "reduced", "Z/6"}).code, 0);
    EXPECT_EQ(run({"check", "2primal", "M(2, Z/2)"}).code, 1);
    EXPECT_EQ(run({"check", "almost", "Z/4", "--bivariate", "1,1"}).code, 0);
    EXPECT_EQ(run({"check", "almost", "M(2, Z/2)", "--bivariate", "0,1"}).code, 1);
    EXPECT_EQ(run({"check", "almost", "M(2, Z/2)", "--laurent", "1"}).code, 1);
    EXPECT_EQ(run({"check", "weak", "Z/4", "--laurent", "1"}).code, 2);
    EXPECT_EQ(run({"check", "almost", "Z/4", "--bivariate", "1;1"}).code, 2);
}

TEST(Cli, Radical) {
    const Json j = run_json({"radical", "Z/4"}, 0);
    for (const char* k : {"nil", "nilradical", "prime_radical"}) {
        ASSERT_EQ(j["radicals"][k].size(), 2u);
        EXPECT_EQ(j["radicals"][k][0]["index"], 0);
        EXPECT_EQ(j["radicals"][k][1]["index"], 2);
    }
    EXPECT_TRUE(j["radicals"]["oracles"]["agree"].get<bool>());
}

TEST(Cli, Witness) {
    const Json j = run_json({"witness", "almost", "armendariz", "T(2, Z/2)", "--max-deg", "1"}, 1);
    EXPECT_TRUE(j["witness"]["revalidated"].get<bool>());
    EXPECT_EQ(run({"witness", "almost", "armendariz", "Z/4", "--max-deg", "1"}).code, 0);
    EXPECT_EQ(run({"witness", "armendariz", "almost", "Z/4"}).code, 2);
}

TEST(Cli, ErrorsAndExitCodes) {
    const Json p = run_json({"check", "almost", "M(2 Z/2"}, 2);
    EXPECT_EQ(p["error"]["kind"], "parse");
    EXPECT_EQ(p["error"]["offset"], 4);
    EXPECT_EQ(run({"check", "bogus", "Z/2"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"check", "almost", "Z/2", "--format", "xml"}).code, 2);
    const Json b = run_json({"check", "almost", "T(2, Z/3)", "--max-deg", "2", "--budget", "100"}, 3);
    EXPECT_EQ(b["error"]["kind"], "budget");
    EXPECT_EQ(run({"check", "almost", "M(3, Z/2)"}).code, 3);
    EXPECT_EQ(run({"check", "almost", "quot(Z/4, [9])"}).code, 2);
}

TEST(Cli, SamplingIsSeededAndInconclusiveWhenNothingFound) {
    const CliRun a = run({"check", "almost", "Z/4", "--samples", "5", "--seed", "7", "--format", "json"});
    EXPECT_EQ(a.code, 3);
    const CliRun m1 = run({"check", "almost", "M(2, Z/2)", "--max-deg", "1", "--samples", "200", "--seed", "3",
                        "--format", "json"});
    const CliRun m2 = run({"check", "almost", "M(2, Z/2)", "--max-deg", "1", "--samples", "200", "--seed", "3",
                        "--format", "json"});
    EXPECT_EQ(m1.code, m2.code);
    EXPECT_EQ(strip_timing(Json::parse(m1.out)).dump(), strip_timing(Json::parse(m2.out)).dump());
}

TEST(Cli, JsonIsStableAcrossRunsAndJobs) {
    const CliRun a = run({"check", "almost", "T(2, Z/3)", "--max-deg", "1", "--format", "json", "--jobs", "1"});
    const CliRun b = run({"check", "almost", "T(2, Z/3)", "--max-deg", "1", "--format", "json", "--jobs", "4"});
    Json ja = strip_timing(Json::parse(a.out)), jb = strip_timing(Json::parse(b.out));
    ja.erase("command");
    jb.erase("command");
    EXPECT_EQ(ja.dump(), jb.dump());
}

TEST(Cli, ExportAndImport) {
    const std::string path = testing::TempDir() + "ringlab_cli_export.json";
    EXPECT_EQ(run({"export", "trivext(Z/2)", "--out", path}).code, 0);
    const Json a = run_json({"describe", "file(" + path + ")"}, 0);
    const Json b = run_json({"describe", "trivext(Z/2)"}, 0);
    EXPECT_EQ(a["ring"]["digest"], b["ring"]["digest"]);
    EXPECT_EQ(a["elements"], b["elements"]);
    const CliRun stdout_export = run({"export", "Z/3"});
    EXPECT_EQ(stdout_export.out, export_ring(*cyclic(3)));
    std::remove(path.c_str());
}

TEST(Cli, Describe) {
    const CliRun r = run({"describe", "T(2, Z/2)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("2      [[0,1],[0,0]]  nilpotent"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("one = 5"), std::string::npos);
}

TEST(Cli, VerifyPaperCorpusFile) {
    const std::string path = testing::TempDir() + "ringlab_cli_corpus.txt";
    {
        std::ofstream f(path);
        f << "# two rings\nZ/4\n  M(2, Z/2)  # full matrices\n\n";
    }
    EXPECT_EQ(read_corpus_file(path), (std::vector<std::string>{"Z/4", "M(2, Z/2)"}));
    const Json j = run_json({"verify-paper", "--corpus", path, "--max-deg", "1"}, 0);
    EXPECT_TRUE(j["suite"]["summary"]["passed"].get<bool>());
    EXPECT_EQ(j["suite"]["config"]["corpus"].size(), 2u);
    std::remove(path.c_str());
    EXPECT_EQ(run({"verify-paper", "--corpus", "/nonexistent/corpus.txt"}).code, 2);
}
