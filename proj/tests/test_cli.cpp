#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

struct CliResult {
    int status;
    std::string out;
};

CliResult run(const std::string& args) {
    const std::string cmd = std::string(HOMALG_CLI_PATH) + " " + args + " 2>&1";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    const int raw = pclose(pipe.release());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, Act) {
    EXPECT_EQ(run("act X y").out, "x\n");
    EXPECT_EQ(run("act X y --deformed").out, "q^2*x\n");
    EXPECT_EQ(run("act 1 x^2").out, "x^2\n");
    EXPECT_EQ(run("act X y --deformed --q-value 1").out, "x\n");
    EXPECT_EQ(run("act 'Y X' x").out, "0\n");
}

TEST(Cli, VerifySl2Passes) {
    const CliResult r = run("verify sl2-q --bound-h 3 --bound-a 4");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("sl2-q: 16/16 suites passed"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, NegativeControlFails) {
    const CliResult r = run("verify sl2-q --negative-control --bound-h 2 --bound-a 2 --suite module-hom-algebra");
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("FAIL module-hom-algebra"), std::string::npos);
    EXPECT_NE(r.out.find("counterexample: (X, x, y)"), std::string::npos);
}

TEST(Cli, VerifyFinalg) {
    EXPECT_EQ(run("verify finalg --file m2-example").status, 0);
    const CliResult r = run(std::string("verify finalg --file ") + HOMALG_DATA_DIR + "/m2-example.txt");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("finalg: 11/11 suites passed"), std::string::npos);
}

TEST(Cli, JsonReport) {
    const std::string path = testing::TempDir() + "homalg_report.json";
    ASSERT_EQ(run("verify finalg --file m2-example --suite module-hom-algebra --report " + path).status, 0);
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    EXPECT_NE(s.str().find("\"axiom\": \"module-hom-algebra\""), std::string::npos);
    EXPECT_NE(s.str().find("\"status\": \"pass\""), std::string::npos);
}

TEST(Cli, Twist) {
    const CliResult r = run("twist --sl2");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("X . Y = X*Y\n"), std::string::npos);
    EXPECT_NE(r.out.find("X -> q*(X⊗1 + 1⊗X)\n"), std::string::npos);
    const CliResult id = run("twist --sl2 --identity");
    EXPECT_NE(id.out.find("X -> X⊗1 + 1⊗X\n"), std::string::npos);
    EXPECT_NE(id.out.find("Y . X = X*Y - Z\n"), std::string::npos);
    EXPECT_EQ(run("twist --sl2").out, r.out);
    EXPECT_NE(run("twist --file m2-example").out.find("e12 . e21 = e11\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("verify sl2-q --suite bogus").status, 2);
    EXPECT_EQ(run("verify sl2-q --bound-h 0").status, 2);
    EXPECT_EQ(run("verify finalg --file /nonexistent").status, 2);
    EXPECT_EQ(run("act 'X+' y").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("twist").status, 2);
}

TEST(Cli, EnvironmentBounds) {
    const CliResult r = run("verify sl2-q --suite hom-associativity");
    EXPECT_NE(r.out.find("3375 cases"), std::string::npos);
    const CliResult env = run("verify sl2-q --suite hom-associativity --bound-a 1");
    EXPECT_NE(env.out.find("27 cases"), std::string::npos);
    const std::string cmd_env = "HOMALG_BOUND_A=1 ";
    // flag wins over the environment
    const std::string cmd = cmd_env + HOMALG_CLI_PATH + " verify sl2-q --suite hom-associativity --bound-a 2";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    char buf[256];
    while (fgets(buf, sizeof buf, pipe.get())) out += buf;
    EXPECT_NE(out.find("216 cases"), std::string::npos);
}
