#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fmx/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "")
{
    args.insert(args.begin(), "fmx");
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = fmx::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string sc = R"({"meixner":{"a":"0","b":"0"}})";

TEST(Cli, Moments)
{
    EXPECT_EQ(run({"moments", "--measure", sc, "--order", "8"}).out, R"(["1","0","1","0","2","0","5","0","14"])" "\n");
    EXPECT_EQ(run({"moments", "--measure", R"({"meixner":{"a":"1","b":"0"}})", "--order", "6"}).out,
              R"(["1","0","1","1","3","6","15"])" "\n");
    EXPECT_EQ(run({"moments", "--measure", R"({"jacobi":{"alpha":["1"],"omega":["0","0"]}})", "--order", "4"}).out,
              R"(["1","1","1","1","1"])" "\n");
    const auto csv = run({"moments", "--measure", sc, "--order", "2", "--format", "csv"});
    EXPECT_EQ(csv.out, "n,moment\n0,1\n1,0\n2,1\n");
    EXPECT_EQ(run({"moments", "--measure", sc, "--order", "2", "--format", "table"}).code, 0);
}

TEST(Cli, MeasureFromStdinAndIntegers)
{
    EXPECT_EQ(run({"moments", "--measure", "-", "--order", "4"}, R"({"moments":{"values":[1,0,1,0,2]}})").out,
              R"(["1","0","1","0","2"])" "\n");
}

TEST(Cli, InvalidInputExitsTwo)
{
    EXPECT_EQ(run({"moments", "--measure", R"({"meixner":{"a":"x","b":"0"}})"}).code, 2);
    EXPECT_EQ(run({"moments", "--measure", R"({"meixner":{"a":"0","b":"0"},"moments":{"values":["1"]}})"}).code, 2);
    EXPECT_EQ(run({"moments", "--measure", R"({"meixner":{"a":"0","b":"-2"}})"}).code, 2);
    EXPECT_EQ(run({"moments", "--measure", R"({"moments":{"values":["2"]}})"}).code, 2);
    EXPECT_EQ(run({"moments", "--measure", "{not json"}).code, 2);
    EXPECT_EQ(run({"moments", "--measure", "/nonexistent/file.json"}).code, 2);
    EXPECT_EQ(run({"moments", "--measure", sc, "--order", "0"}).code, 2);
    EXPECT_EQ(run({"moments", "--measure", sc, "--tolerance", "0"}).code, 2);
    EXPECT_EQ(run({"moments", "--measure", sc, "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    const auto r = run({"moments", "--measure", R"({"meixner":{"a":"1/0","b":"0"}})"});
    EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, Ortho)
{
    EXPECT_EQ(run({"ortho", "--measure", sc, "--order", "3"}).out,
              R"({"order":3,"polys":[["1"],["0","1"],["-1","0","1"],["0","-2","0","1"]],"norms":["1","1","1","1"]})"
              "\n");
    EXPECT_EQ(run({"ortho", "--measure", sc, "--order", "0"}).out, R"({"order":0,"polys":[["1"]],"norms":["1"]})" "\n");
    EXPECT_EQ(run({"ortho", "--measure", R"({"meixner":{"a":"1","b":"0"}})", "--order", "2"}).out,
              R"({"order":2,"polys":[["1"],["0","1"],["-1","-1","1"]],"norms":["1","1","1"]})" "\n");
}

TEST(Cli, Check)
{
    const std::string m11 = R"({"meixner":{"a":"1","b":"1"}})";
    const auto phi = run({"check", "phi", "--measure", m11, "--order", "16"});
    EXPECT_EQ(phi.code, 0);
    EXPECT_EQ(phi.out, R"({"check":"phi","params":{"a":"1","b":"1"},"order":16,"pass":true,"witness":null})" "\n");
    EXPECT_EQ(run({"check", "levy", "--measure", m11}).code, 0);
    EXPECT_EQ(run({"check", "diffq", "--measure", m11, "--order", "8"}).code, 0);
    EXPECT_EQ(run({"check", "negb", "--measure", R"({"meixner":{"a":"1/2","b":"-1/4"}})", "--order", "12"}).code, 0);
    EXPECT_EQ(run({"check", "akk", "--measure", m11, "--order", "6"}).code, 0);

    const auto akk = run({"check", "akk", "--measure", R"({"jacobi":{"omega":["1","2","3"]}})", "--order", "6"});
    EXPECT_EQ(akk.code, 1);
    EXPECT_NE(akk.out.find(R"("pass":false)"), std::string::npos);

    // a jacobi description that is Meixner is found by the search
    const auto found = run({"check", "akk", "--measure", R"({"jacobi":{"alpha":["0"],"omega":["1"],"tail":{"alpha":"1/2","omega":"5/4"}}})", "--order", "4"});
    EXPECT_EQ(found.code, 0);
    EXPECT_NE(found.out.find(R"("rho":{"s":"1/2","t":"5/4"})"), std::string::npos);

    EXPECT_EQ(run({"check", "levy", "--measure", R"({"meixner":{"a":"0","b":"-1/2"}})"}).code, 2);
    EXPECT_EQ(run({"check", "negb", "--measure", m11}).code, 2);
    EXPECT_EQ(run({"check", "phi", "--measure", R"({"jacobi":{"omega":["1","1","2"]}})"}).code, 2);
    EXPECT_EQ(run({"check", "nope", "--measure", m11}).code, 2);
}

TEST(Cli, Classify)
{
    EXPECT_EQ(run({"classify", "--measure", R"({"jacobi":{"alpha":["0","1/2","1/2"],"omega":["1","5/4","5/4"]}})"}).out,
              R"({"meixner":true,"a":"1/2","b":"1/4"})" "\n");
    EXPECT_EQ(run({"classify", "--measure", R"({"jacobi":{"omega":["1","1","2"]}})"}).out, R"({"meixner":false})" "\n");
    EXPECT_EQ(run({"classify", "--measure", R"({"moments":{"values":["1","0","1","0","2","0","5","0","14"]}})"}).out,
              R"({"meixner":true,"a":"0","b":"0"})" "\n");
    const auto ns = run({"classify", "--measure", R"({"jacobi":{"alpha":["1"],"omega":["1"],"tail":{"alpha":"0","omega":"1"}}})"});
    EXPECT_EQ(ns.code, 2);
    EXPECT_NE(ns.err.find("standardize first"), std::string::npos);
}

TEST(Cli, MomentsRoundTrip)
{
    const std::string m = R"({"meixner":{"a":"1/2","b":"-1/2"}})";
    const auto moments = run({"moments", "--measure", m, "--order", "16"});
    const std::string spec = R"({"moments":{"values":)" + moments.out + "}}";
    EXPECT_EQ(run({"classify", "--measure", spec}).out, run({"classify", "--measure", m}).out);
    EXPECT_EQ(run({"ortho", "--measure", spec, "--order", "8"}).out, run({"ortho", "--measure", m, "--order", "8"}).out);
}

TEST(Cli, Cumulants)
{
    EXPECT_EQ(run({"cumulants", "--measure", R"({"meixner":{"a":"1","b":"1"}})", "--order", "5"}).out,
              R"(["0","1","1","2","4"])" "\n");
}

TEST(Cli, Psi)
{
    const auto r = run({"psi", "--measure", sc, "--order", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find(R"("q_polys":[["1"],["0","1"],["-1","0","1"],["0","-2","0","1"]])"), std::string::npos);
    EXPECT_EQ(run({"psi", "--measure", sc, "--order", "3", "--rho", "0,1"}).out, r.out);
    EXPECT_EQ(run({"psi", "--measure", sc, "--rho", "0"}).code, 2);
}

TEST(Cli, Density)
{
    const auto r = run({"density", "--measure", sc, "--xmin", "-3", "--xmax", "3", "--npts", "7"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x,density\n-3,0\n-2,0\n-1,0.275664448\n0,0.318309886\n1,0.275664448\n2,0\n3,0\n");
    EXPECT_EQ(run({"density", "--measure", R"({"meixner":{"a":"0","b":"-1"}})"}).code, 2);
    EXPECT_EQ(run({"density", "--measure", sc, "--npts", "1"}).code, 2);
    EXPECT_EQ(run({"density", "--measure", sc, "--xmin", "1", "--xmax", "0"}).code, 2);
}

TEST(Cli, Deterministic)
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"moments", "--measure", sc}, {"check", "akk", "--measure", R"({"jacobi":{"omega":["1","2","3"]}})", "--order", "4"}}) {
        EXPECT_EQ(run(args).out, run(args).out);
    }
}

} // namespace
