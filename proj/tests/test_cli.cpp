#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless merged.
CliRun cli(const std::string& args, const std::string& input = "", bool merge_stderr = false) {
    std::string cmd = std::string(OVR_CLI_PATH) + " " + args;
    std::string in_file;
    if (!input.empty()) {
        in_file = testing::TempDir() + "ovr_cli_input.txt";
        std::ofstream(in_file) << input;
        cmd += " < " + in_file;
    } else {
        cmd += " < /dev/null";
    }
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(OVR_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, DensityOfTriangle) {
    CliRun r = cli("density --graph " + data("k3.el") + " --colors 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "m1_star = 4/3  (theta_star = 3/4)\n");
}

TEST(Cli, DensityOfPathReportsKStar) {
    CliRun r = cli("density --graph " + data("p3.el") + " --colors 2 --emit-alpha");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("m1_star = 8/9  (theta_star = 9/8)"), std::string::npos);
    EXPECT_NE(r.out.find("k_star = 9"), std::string::npos);
    EXPECT_NE(r.out.find("alpha = "), std::string::npos);
}

TEST(Cli, LambdaBelowRootIsPositive) {
    CliRun r = cli("lambda --graph " + data("k3.el") + " --colors 2 --theta 1/2");
    EXPECT_EQ(r.code, 0);
    ASSERT_EQ(r.out.rfind("lambda = ", 0), 0u);
    std::string value = r.out.substr(9, r.out.find('\n') - 9);
    EXPECT_NE(value[0], '-');
    EXPECT_NE(value, "0");
}

TEST(Cli, OracleWinnerFollowsMinimumDensity) {
    EXPECT_EQ(cli("oracle --graph " + data("k2.el") + " --colors 2 --density 1/2 --max-steps 6").out.substr(0, 16),
              "winner: painter\n");
    EXPECT_EQ(cli("oracle --graph " + data("k2.el") + " --colors 2 --density 3/4 --max-steps 6").out.substr(0, 16),
              "winner: builder\n");
}

TEST(Cli, ValidationErrorsExitWithTwo) {
    EXPECT_EQ(cli("density --graph " + data("malformed.el") + " --colors 2").code, 2);
    EXPECT_EQ(cli("density --graph /nonexistent.el --colors 2").code, 2);
    EXPECT_EQ(cli("density --graph " + data("k3.el") + " --colors 2 --bogus").code, 2);
    EXPECT_EQ(cli("lambda --graph " + data("k3.el") + " --colors 2 --theta 0.5").code, 2);
    EXPECT_EQ(cli("oracle --graph " + data("k2.el") + " --colors 2 --density 3/0").code, 2);
    EXPECT_EQ(cli("play --mode painter --graph " + data("k3.el") + " --colors 2 --density 1 --theta 1/2").code, 2);
    EXPECT_EQ(cli("").code, 2);
    CliRun r = cli("lambda --graph " + data("k3.el") + " --colors 2 --theta x/y", "", true);
    EXPECT_NE(r.out.find("malformed rational"), std::string::npos);
}

TEST(Cli, ResourceGuardExitsWithThree) {
    EXPECT_EQ(cli("density --graph " + data("k3.el") + " --colors 2 --max-den 2").code, 3);
}

TEST(Cli, ExportedStrategyReproducesPainterDecisions) {
    std::string list = testing::TempDir() + "ovr_k3_list.txt";
    ASSERT_EQ(cli("strategy --graph " + data("k3.el") + " --colors 2 --out " + list).code, 0);
    std::string script = ".\n1\n1 2\n.\n3 4\n2 4\n1 5\n.\n7 8\n";
    std::string base = "play --mode painter --graph " + data("k3.el") + " --colors 2 --density 131/100";
    CliRun direct = cli(base, script);
    CliRun imported = cli(base + " --list " + list, script);
    EXPECT_EQ(direct.code, 0);
    EXPECT_EQ(direct.out, imported.out);
    EXPECT_NE(direct.out.find("step 9 color"), std::string::npos);
}

TEST(Cli, PainterRejectsIllegalMoves) {
    CliRun r = cli("play --mode painter --graph " + data("k3.el") + " --colors 2 --density 1/2", ".\n1\n1 2\n");
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, BuilderPlayWins) {
    CliRun r = cli("play --mode builder --graph " + data("k2.el") + " --colors 2 --density 3/4 --opponent greedy");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("step 1 attach - edges -\n", 0), 0u);
    EXPECT_NE(r.out.find("winner: builder"), std::string::npos);
    // Colors from standard input.
    std::string ones;
    for (int i = 0; i < 200; ++i) ones += "1\n";
    CliRun s = cli("play --mode builder --graph " + data("k2.el") + " --colors 2 --density 3/4", ones);
    EXPECT_NE(s.out.find("winner: builder"), std::string::npos);
    EXPECT_EQ(cli("play --mode builder --graph " + data("k2.el") + " --colors 2 --density 2/3").code, 2);
}

TEST(Cli, SimulationIsReproducibleAcrossJobs) {
    std::string points = testing::TempDir() + "ovr_points.txt";
    std::string base = "simulate --graph " + data("k3.el") + " --colors 2 --n 200 --p-exp 0.9,0.6 --trials 8 --seed 5";
    CliRun a = cli(base + " --jobs 1 --emit-points " + points);
    CliRun b = cli(base + " --jobs 3");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("n,p_exponent,p,trials,survivals,rate\n", 0), 0u);
    EXPECT_FALSE(slurp(points).empty());
    EXPECT_EQ(cli(base + " --p 0.1").code, 2);
}
