#include "interlacing/cli.hpp"
#include "interlacing/json_io.hpp"
#include "interlacing/suite.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace interlacing;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("interlacing_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        return cli::run(args, out_, err_);
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    static std::string slurp(const std::string& p) {
        std::ifstream f(p, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    void write(const std::string& p, const std::string& text) const { std::ofstream(p) << text; }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

}  // namespace

TEST_F(CliTest, GenWritesReparseableHermitianFileDeterministically) {
    ASSERT_EQ(run({"gen", "--seed", "42", "--size-min", "3", "--size-max", "3", "--bound", "5", "--trials", "1",
                   "--out", path("a.json")}),
              cli::kPass);
    ASSERT_EQ(run({"gen", "--seed", "42", "--size-min", "3", "--size-max", "3", "--bound", "5", "--trials", "1",
                   "--out", path("b.json")}),
              cli::kPass);
    const std::string a = slurp(path("a.json"));
    EXPECT_EQ(a, slurp(path("b.json")));
    const auto m = matrix_from_json(Json::parse(a));
    EXPECT_EQ(m.size(), 3u);
    EXPECT_TRUE(is_hermitian(m.matrix()));
}

TEST_F(CliTest, GenSeveralTrialsNumbersFiles) {
    ASSERT_EQ(run({"gen", "--trials", "3", "--out", path("m.json")}), cli::kPass);
    for (int i = 0; i < 3; ++i) EXPECT_TRUE(fs::exists(path("m_" + std::to_string(i) + ".json")));
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
    EXPECT_EQ(run({"gen", "--bound", "0", "--out", path("z.json")}), cli::kInputError);
    EXPECT_NE(err_.str().find("bound"), std::string::npos);
    EXPECT_EQ(run({"gen"}), cli::kInputError);
    EXPECT_EQ(run({}), cli::kInputError);
    EXPECT_EQ(run({"check", "--frobnicate"}), cli::kInputError);
    EXPECT_EQ(run({"check", "--mode", "nonsense"}), cli::kInputError);
    EXPECT_EQ(run({"check", "--width", "1/0"}), cli::kInputError);
    EXPECT_EQ(run({"check", "--mode", "cauchy", "--size-min", "1"}), cli::kInputError);
    EXPECT_EQ(run({"gen", "--trials", "1", "--out", path("missing_dir/x.json")}), cli::kInputError);
}

TEST_F(CliTest, IdentitySuiteOnTwoHundredTrials) {
    ASSERT_EQ(run({"check", "--mode", "identity", "--trials", "200", "--size-min", "2", "--size-max", "6", "--out",
                   path("r.json")}),
              cli::kPass)
        << err_.str();
    const Json report = Json::parse(slurp(path("r.json")));
    EXPECT_EQ(report["summary"]["total"], 200);
    EXPECT_EQ(report["summary"]["passed"], 200);
    int exact = 0;
    for (const auto& r : report["results"]) exact += r["details"]["identity"]["exact_match"].get<bool>() ? 1 : 0;
    EXPECT_EQ(exact, 200);
}

TEST_F(CliTest, CauchyOnMatrixFile) {
    write(path("swap.json"), R"({"n":2,"entries":[[["0","0"],["1","0"]],[["1","0"],["0","0"]]]})");
    ASSERT_EQ(run({"check", "--mode", "cauchy", path("swap.json")}), cli::kPass) << err_.str();
    const Json report = Json::parse(out_.str());
    ASSERT_EQ(report["results"].size(), 1u);
    for (const auto& k : report["results"][0]["details"]["cauchy"]) EXPECT_EQ(k["interlace"]["verdict"], "Interlaces");
}

TEST_F(CliTest, PencilOnNonInterlacingPair) {
    write(path("pair.json"), R"({"f":["0","-2","1"],"g":["-3","1"]})");
    ASSERT_EQ(run({"check", "--mode", "pencil", path("pair.json")}), cli::kPass) << err_.str();
    const Json report = Json::parse(out_.str());
    const Json& cross = report["results"][0]["details"]["crosscheck"];
    EXPECT_EQ(cross["verdict"], "Consistent");
    EXPECT_EQ(cross["interlace"]["verdict"], "DoesNotInterlace");
    EXPECT_EQ(cross["pencil"]["witness"], "-1");
}

TEST_F(CliTest, MalformedInputsNameFileAndField) {
    write(path("bad.json"), R"({"n":2,"entries":[[["0","0"],["1","0"]],[["2","0"],["0","0"]]]})");
    EXPECT_EQ(run({"check", "--mode", "cauchy", path("bad.json")}), cli::kInputError);
    EXPECT_NE(err_.str().find("bad.json"), std::string::npos);
    EXPECT_NE(err_.str().find("(0, 1)"), std::string::npos);

    write(path("broken.json"), "{not json");
    EXPECT_EQ(run({"check", path("broken.json")}), cli::kInputError);
    EXPECT_NE(err_.str().find("broken.json"), std::string::npos);

    write(path("pair.json"), R"({"f":["1","1/0"],"g":["1"]})");
    EXPECT_EQ(run({"check", path("pair.json")}), cli::kInputError);
    EXPECT_NE(err_.str().find("pair.f"), std::string::npos);

    EXPECT_EQ(run({"check", path("does_not_exist.json")}), cli::kInputError);
    write(path("pair2.json"), R"({"f":["0","-2","1"],"g":["-3","1"]})");
    EXPECT_EQ(run({"check", "--mode", "identity", path("pair2.json")}), cli::kInputError);
}

TEST_F(CliTest, SameSeedSameReportModuloTiming) {
    const std::vector<std::string> base{"check", "--mode", "all", "--seed", "7", "--trials", "4", "--size-max", "4"};
    auto a = base;
    a.insert(a.end(), {"--out", path("a.json")});
    auto b = base;
    b.insert(b.end(), {"--out", path("b.json")});
    ASSERT_EQ(run(a), cli::kPass);
    ASSERT_EQ(run(b), cli::kPass);
    const Json ra = Json::parse(slurp(path("a.json")));
    const Json rb = Json::parse(slurp(path("b.json")));
    EXPECT_EQ(strip_timing(ra), strip_timing(rb));
    EXPECT_EQ(ra["config"]["mode"], "all");
    EXPECT_EQ(ra["summary"]["failed"], 0);
}
