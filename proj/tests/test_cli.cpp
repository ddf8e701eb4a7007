#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "quadratica/serialize.hpp"

using namespace quadratica;

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliRun run(const std::string& args)
{
    const auto err_path = std::filesystem::temp_directory_path() / ("quadratica_cli_" + std::to_string(::getpid()) + ".err");
    const std::string cmd = std::string("'") + QUADRATICA_CLI + "' " + args + " 2>'" + err_path.string() + "'";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return {-1, "", "popen failed"};
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, n);
    }
    const int raw = ::pclose(pipe);
    CliRun r{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out, slurp(err_path)};
    std::filesystem::remove(err_path);
    return r;
}

json run_json(const std::string& args)
{
    const CliRun r = run(args + " --json");
    EXPECT_EQ(r.status, 0) << args << "\n" << r.err;
    return json::parse(r.out);
}

} // namespace

TEST(Cli, SolveGoldenJson)
{
    const json j = run_json("solve 1 -1 -1");
    EXPECT_EQ(j["roots"]["kind"], "RealDistinct");
    const QuadElem r1 = quad_from_json(j["roots"]["r1"]);
    const QuadElem r2 = quad_from_json(j["roots"]["r2"]);
    EXPECT_EQ(r1, QuadElem::make(BigRational(1, 2), BigRational(1, 2), 5));
    EXPECT_EQ(r2, r1.conj());
    EXPECT_EQ(rational_from_json(j["discriminant"]), BigRational(5));
}

TEST(Cli, NegativeCoefficientsParseAsPositionals)
{
    const json j = run_json("solve 2 -3 -5");
    EXPECT_EQ(quad_from_json(j["roots"]["r1"]), BigRational(5, 2));
    EXPECT_EQ(quad_from_json(j["roots"]["r2"]), BigRational(-1));
}

TEST(Cli, GoldbachWitnessText)
{
    const CliRun r = run("goldbach witness 24");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("I: 1"), std::string::npos);
    EXPECT_NE(r.out.find("p: 13"), std::string::npos);
    EXPECT_NE(r.out.find("q: 11"), std::string::npos);
}

TEST(Cli, DomainErrorExitsOneWithEnvelope)
{
    const CliRun r = run("goldbach witness 7 --json");
    EXPECT_EQ(r.status, 1);
    const json e = json::parse(r.err);
    EXPECT_EQ(e["error"]["code"], "InvalidArgument");
    EXPECT_FALSE(e["error"]["message"].get<std::string>().empty());

    const CliRun s = run("solve 0 1 1 --json");
    EXPECT_EQ(s.status, 1);
    EXPECT_EQ(json::parse(s.err)["error"]["code"], "DegenerateLeadingCoefficient");
}

TEST(Cli, UsageErrorExitsTwo)
{
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("solve 1 2").status, 2);
    EXPECT_EQ(run("solve 1 2 3 --precision 99").status, 2);
    EXPECT_EQ(run("goldbach witness 24 --no-such-flag").status, 2);
}

TEST(Cli, QfieldRoundTrip)
{
    const json j = run_json("qfield mul '1/2+1/2√5' '1/2 + 1/2√5'");
    const QuadElem phi = golden_ratio();
    EXPECT_EQ(quad_from_json(j["result"]), phi * phi);
    EXPECT_EQ(QuadElem::parse(j["result"]["text"].get<std::string>()), phi + BigRational(1));
}

TEST(Cli, ErrataMatchesDataFile)
{
    json j = run_json("errata");
    std::ifstream in(std::string(QUADRATICA_DATA_DIR) + "/errata.json");
    const json file = json::parse(in);
    ASSERT_EQ(j["entries"].size(), file["entries"].size());
    for (auto& e : j["entries"]) {
        EXPECT_TRUE(e["confirmed"].get<bool>()) << e["id"];
        e.erase("confirmed");
    }
    EXPECT_EQ(j, file);
}

TEST(Cli, PerfectPlotCsvStrictlyIncreasing)
{
    const CliRun r = run("perfect plot --from -2 --to 1 --step 1/100 --csv");
    ASSERT_EQ(r.status, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "x,f(x)");
    BigRational prev(-1000);
    int rows = 0;
    while (std::getline(in, line)) {
        const BigRational x = BigRational::parse(line.substr(0, line.find(',')));
        const BigRational fx = BigRational::parse(line.substr(line.find(',') + 1));
        EXPECT_GT(x, prev);
        if (rows > 0) {
            EXPECT_EQ(x - prev, BigRational(1, 100));
        }
        EXPECT_EQ(fx, BigRational(2) * x * x + BigRational(3) * x + BigRational(1));
        prev = x;
        ++rows;
    }
    EXPECT_EQ(rows, 301);
}

TEST(Cli, TrajectoryCsvStrictlyIncreasing)
{
    const CliRun r = run("geom trajectory 10 0.7853981633974483 9.8 --samples 50 --csv");
    ASSERT_EQ(r.status, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "x,y");
    double prev = -1;
    int rows = 0;
    while (std::getline(in, line)) {
        const double x = std::stod(line.substr(0, line.find(',')));
        EXPECT_GT(x, prev);
        prev = x;
        ++rows;
    }
    EXPECT_EQ(rows, 50);
    EXPECT_NEAR(prev, 10.204081632653, 1e-6);
}

TEST(Cli, OutFlagWritesFile)
{
    const auto path = std::filesystem::temp_directory_path() / "quadratica_cli_out.json";
    std::filesystem::remove(path);
    const CliRun r = run("pnum associate 120 --json --out '" + path.string() + "'");
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_NO_THROW(json::parse(slurp(path)));
    std::filesystem::remove(path);
}

TEST(Cli, ModulesAnswer)
{
    const char* commands[] = {
        "fib reduce --case I --n 10",
        "fib group --case III",
        "metallic table --max-p 4",
        "phi ledger --n 20",
        "cong solve 1 1 1 7",
        "cong twosquares 13",
        "perfect table --max-exp 13",
        "perfect preimage 8128",
        "perfect areas -1 -1/2",
        "goldbach areas 17 7",
        "goldbach verify --to 2000",
        "pnum parabola 7 3",
        "geom platonic tetra --edge 1",
        "geom cut 1",
    };
    for (const char* c : commands) {
        const CliRun r = run(std::string(c) + " --json");
        EXPECT_EQ(r.status, 0) << c << "\n" << r.err;
        EXPECT_NO_THROW(json::parse(r.out)) << c;
        EXPECT_EQ(run(c).status, 0) << c;
    }
}

TEST(Cli, VerifyQuickPasses)
{
    const CliRun r = run("verify --scale quick");
    EXPECT_EQ(r.status, 0) << r.out << r.err;
    EXPECT_EQ(run("verify --scale quick --inject-fault").status, 1);
}
