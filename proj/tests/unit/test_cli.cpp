#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// Runs the CLI with stdout captured; stderr is discarded unless requested.
Run run(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(WCIDP_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("wcidp_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

}  // namespace

TEST_F(Cli, CheckExamples) {
    auto r = run("check 3 4 5 6 7 10 12");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "del Pezzo: yes, I=3\n");
    r = run("check 1 1 1 1 2 2 3");
    EXPECT_EQ(r.status, 3);
    EXPECT_EQ(r.out, "rejected: linear cone (d1 = a4)\n");
    EXPECT_EQ(run("check 1 1 1 1 1 0 2").status, 2);
    EXPECT_EQ(run("check 1 1 1 1 1 2").status, 2);
    EXPECT_EQ(run("check 1 1 1 1 x 2 2").status, 2);
}

TEST_F(Cli, CheckAcceptsAnyOrderAndExplains) {
    EXPECT_EQ(run("check 7 6 5 4 3 12 10").out, "del Pezzo: yes, I=3\n");
    const auto r = run("check --explain 1 1 1 1 3 2 4");
    EXPECT_EQ(r.status, 3);
    EXPECT_NE(r.out.find("singleton {4}"), std::string::npos);
    const auto j = run("check --json 1 1 1 1 1 2 2");
    EXPECT_EQ(j.status, 0);
    EXPECT_NE(j.out.find("\"del_pezzo\":true"), std::string::npos);
}

TEST_F(Cli, EnumerateExamples) {
    auto r = run("enumerate --max-a4 3 --max-d2 6 --exclude-families --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "a0,a1,a2,a3,a4,d1,d2\n1,2,2,3,3,4,6\n2,2,3,3,3,6,6\n");
    r = run("enumerate --max-a4 1 --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "a0,a1,a2,a3,a4,d1,d2\n1,1,1,1,1,2,2\n");
}

TEST_F(Cli, EnumerateModesWriteIdenticalFiles) {
    const auto a = dir_ / "exhaustive.csv";
    const auto b = dir_ / "shaped.csv";
    ASSERT_EQ(run("enumerate --max-a4 14 --mode exhaustive -o " + a.string()).status, 0);
    ASSERT_EQ(run("enumerate --max-a4 14 --mode shaped --jobs 3 -o " + b.string()).status, 0);
    const auto text = slurp(a);
    EXPECT_GT(std::count(text.begin(), text.end(), '\n'), 20);
    EXPECT_EQ(text, slurp(b));
}

TEST_F(Cli, EnumerateJsonlCarriesVerdicts) {
    const auto r = run("enumerate --max-a4 3 --max-d2 6 --format jsonl");
    EXPECT_EQ(r.status, 0);
    std::istringstream in(r.out);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        EXPECT_NE(line.find("\"del_pezzo\":true"), std::string::npos) << line;
    }
    const auto csv = run("enumerate --max-a4 3 --max-d2 6 --format csv").out;
    EXPECT_EQ(n + 1, std::count(csv.begin(), csv.end(), '\n'));
}

TEST_F(Cli, EnumerateErrors) {
    EXPECT_EQ(run("enumerate").status, 2);
    EXPECT_EQ(run("enumerate --max-a4 0").status, 2);
    EXPECT_EQ(run("enumerate --max-a4 3 --format xml").status, 2);
    EXPECT_EQ(run("enumerate --max-a4 61 --mode exhaustive").status, 2);
    EXPECT_EQ(run("enumerate --max-a4 3 -o " + (dir_ / "missing" / "x.csv").string()).status, 1);
}

TEST_F(Cli, FamiliesExamples) {
    auto r = run("families instantiate 15 t=2");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "1,1,2,2,3,4,4\n");
    r = run("families instantiate 26 t=4", true);
    EXPECT_EQ(r.status, 3);
    EXPECT_NE(r.out.find("t ≢ 1 (mod 3)"), std::string::npos);
    r = run("families match 1 3 3 4 5 6 8");
    EXPECT_EQ(r.status, 0);
    for (const char* id : {"family 1:", "family 2:", "family 11:", "family 12:", "family 19:"}) {
        EXPECT_NE(r.out.find(id), std::string::npos) << id;
    }
    EXPECT_EQ(run("families match 1 2 2 3 3 4 6").status, 3);
    EXPECT_EQ(run("families instantiate 46 t=1").status, 2);
    EXPECT_EQ(run("families instantiate 15 s=1").status, 2);
    const auto list = run("families list");
    EXPECT_EQ(list.status, 0);
    EXPECT_EQ(std::count(list.out.begin(), list.out.end(), '\n'), 45);
}

TEST_F(Cli, VerifyExamples) {
    auto r = run("verify --max-a4 7 --max-d2 12");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);

    // Drop one in-bounds row from a copy of the table.
    std::ifstream in(std::string(WCIDP_DATA_DIR) + "/table2.csv");
    std::ofstream out(dir_ / "table2.csv");
    std::string line;
    while (std::getline(in, line)) {
        if (line != "3,4,5,6,7,10,12") out << line << '\n';
    }
    out.close();
    r = run("verify --max-a4 7 --max-d2 12 --table2 " + (dir_ / "table2.csv").string());
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("3,4,5,6,7,10,12"), std::string::npos);

    EXPECT_EQ(run("verify --max-a4 7 --table2 " + (dir_ / "nope.csv").string()).status, 2);
}
