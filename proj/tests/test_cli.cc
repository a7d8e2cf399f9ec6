#include <doctest.h>

#include <qreliab/cli.hh>

#include <cstdlib>
#include <sstream>

using namespace qreliab;

namespace
{
    struct Result
    {
        int code;
        std::string out, err;
    };

    Result run(std::vector<std::string> args)
    {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return {code, out.str(), err.str()};
    }

    std::string data(const std::string & name)
    {
        return std::string(QRELIAB_TEST_DATA) + "/" + name;
    }
}

TEST_CASE("classify")
{
    auto q1 = run({"classify", "R(x), S(x,y), T(y)"});
    CHECK(q1.code == 0);
    CHECK(q1.out == "non-hierarchical witness=(x,y) rst=(1,1,1)\n");
    CHECK(run({"classify", "R(x), S(x,y)"}).out == "hierarchical\n");
    CHECK(run({"classify", "R1(x), R2(x), S1(x,y), T1(y), T2(y), T3(y)"}).out
            == "non-hierarchical witness=(x,y) rst=(2,1,3)\n");

    auto bad = run({"classify", "R(x"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error:") == 0);
}

TEST_CASE("ur and pqe")
{
    CHECK(run({"ur", "R(x), S(x,y), T(y)", data("five.facts")}).out == "7\n");
    CHECK(run({"ur", "R(x), S(x,y)", data("five.facts"), "--method", "safe"}).out
            == run({"ur", "R(x), S(x,y)", data("five.facts"), "--method", "brute"}).out);
    CHECK(run({"ur", "R(x), S(x,y), T(y)", data("five.facts"), "--method", "safe"}).code == 1);

    CHECK(run({"pqe", "R(x), S(x,y), T(y)", data("five.facts"), "--uniform", "1/2"}).out == "7/32\n");
    CHECK(run({"pqe", "R(x), S(x,y), T(y)", data("five.facts"), "--probs", data("q1.probs")}).out == "3/8\n");
    // 1/3 * (1 - (1 - 1/2*2/3)(1 - 1*1/4)) = 1/3 * 1/2
    CHECK(run({"pqe", "R(x), S(x,y), T(y)", data("five.facts"), "--probs", data("five_fact.probs")}).out == "1/6\n");
    CHECK(run({"pqe", "R(x), S(x,y)", data("five.facts"), "--uniform", "1/2", "--method", "safe"}).out == "3/8\n");
    CHECK(run({"pqe", "R(x), S(x,y), T(y)", data("five.facts")}).code == 2);
    CHECK(run({"pqe", "R(x), S(x,y), T(y)", data("five.facts"), "--uniform", "x"}).code == 2);
    CHECK(run({"pqe", "R(x), S(x,y), T(y)", data("five.facts"), "--uniform", "3/2"}).code == 1);
}

TEST_CASE("gadgets and lemmas")
{
    auto g = run({"gadgets", "--rst", "1,1,1", "--check-brute"});
    CHECK(g.code == 0);
    CHECK(g.out
            == "lambda_R=3\nlambda_bar_R=4\nlambda_T=3\nlambda_bar_T=4\ngamma=17\ndelta_R=22\ndelta_T=22\n"
               "delta_bot=28\nkappa=8\nbrute=agree\n");
    CHECK(run({"gadgets", "--rst", "1,1"}).code == 2);
    CHECK(run({"gadgets", "--rst", "0,1,1"}).code == 2);

    auto l = run({"lemmas", "--max-rst", "2"});
    CHECK(l.code == 0);
    CHECK(l.out.find("rst=(1,1,1) pass brute=agree\n") == 0);
    CHECK(l.out.find("all=pass\n") != std::string::npos);
}

TEST_CASE("graphs and reductions")
{
    CHECK(run({"isets", data("path.bg")}).out == "5\n");
    CHECK(run({"reduce-ur", data("edge.bg"), "--rst", "1,1,1", "--oracle", "analytic"}).out == "P=3\n");
    CHECK(run({"reduce-ur", data("path.bg"), "--rst", "2,1,1"}).out == "P=5\n");
    auto detailed = run({"reduce-ur", data("edge.bg"), "--rst", "1,1,1", "--details"});
    CHECK(detailed.out.find("M1=5\nM2=26\nM3=84\nM=32\nunknowns=16\n") == 0);
    CHECK(detailed.out.find("Y(0,0,0,0,0)=1\n") != std::string::npos);

    CHECK(run({"reduce-pqe", data("edge.bg"), "--r", "1/2", "--t", "1/2"}).out == "P=3\n");
    auto pqe = run({"reduce-pqe", data("edge.bg"), "--r", "1/3", "--t", "2/3", "--oracle", "formula", "--details"});
    CHECK(pqe.out.find("X(1,1)=0\nP=3\n") != std::string::npos);
    CHECK(run({"reduce-pqe", data("edge.bg"), "--r", "1", "--t", "1/2"}).code == 1);
    CHECK(run({"reduce-pqe", data("bad.bg"), "--r", "1/2", "--t", "1/2"}).code == 1);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"ur", "R(x)"}).code == 2);
    CHECK(run({"ur", "R(x)", "/nonexistent/file"}).code == 2);
    CHECK(run({"reduce-ur", data("edge.bg"), "--rst", "1,1,1", "--oracle", "psychic"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("brute cap from the environment")
{
    setenv("QRELIAB_BRUTE_CAP", "3", 1);
    auto capped = run({"ur", "R(x), S(x,y), T(y)", data("five.facts"), "--method", "brute"});
    unsetenv("QRELIAB_BRUTE_CAP");
    CHECK(capped.code == 1);
    setenv("QRELIAB_BRUTE_CAP", "nonsense", 1);
    CHECK(run({"ur", "R(x), S(x,y), T(y)", data("five.facts")}).code == 2);
    unsetenv("QRELIAB_BRUTE_CAP");
}

TEST_CASE("the installed binary maps errors to exit codes")
{
    auto status = [](const std::string & args) {
        int raw = std::system((std::string(QRELIAB_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    CHECK(status("classify 'R(x), S(x,y), T(y)'") == 0);
    CHECK(status("classify 'R(x'") == 1);
    CHECK(status("nothing") == 2);
}
