#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tricon/commands.hpp"
#include "tricon/io.hpp"
#include "tricon/states.hpp"

using namespace tricon;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "tricon");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "tricon_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("state files round-trip exactly")
    {
        const PureState psi = random_pure({2, 3, 2}, 5);
        const LoadedState back = parse_state(serialize_state(psi), "mem");
        REQUIRE(std::holds_alternative<PureState>(back));
        CHECK(std::get<PureState>(back).coeffs() == psi.coeffs());

        const DensityMatrix rho = random_mixed({2, 2, 2}, 3, 6);
        const LoadedState back_rho = parse_state(serialize_state(rho), "mem");
        REQUIRE(std::holds_alternative<DensityMatrix>(back_rho));
        CHECK(std::get<DensityMatrix>(back_rho).matrix() == rho.matrix());
    }

    TEST_CASE("parse errors carry context")
    {
        auto message = [](const std::string& text) {
            try {
                parse_state(text, "input.json");
            } catch (const ParseError& e) {
                return std::string(e.what());
            }
            return std::string("no error");
        };
        CHECK(message("{\n  \"dims\": [2, 2,\n}").find("line 3") != std::string::npos);
        CHECK(message(R"({"dims": [2, 2], "kind": "pure", "data": []})").find("'dims'") != std::string::npos);
        CHECK(message(R"({"dims": [1, 1, 1], "kind": "bogus", "data": []})").find("'kind'") != std::string::npos);
        CHECK(message(R"({"dims": [1, 1, 2], "kind": "pure", "data": [[1, 0], [0]]})").find("'data[1]'")
              != std::string::npos);
        CHECK(message(R"({"dims": [1, 1, 2], "kind": "pure", "data": [[1, 0], [1, 0]]})").find("input.json")
              != std::string::npos);
        CHECK(message(R"({"dims": [1, 1, 2], "kind": "mixed", "data": [[[1, 0], [1, 0]], [[0, 0], [0, 0]]]})")
                  .find("invalid state")
              != std::string::npos);
    }

    TEST_CASE("bound command exit codes")
    {
        const fs::path bad = scratch("bad.json");
        spit(bad, "{ not json");
        const Result parse = invoke({"bound", "--state", bad.string(), "--method", "g2"});
        CHECK(parse.code == cli::kParse);
        CHECK(parse.err.find("bad.json") != std::string::npos);

        CHECK(invoke({"bound", "--state", scratch("missing.json").string(), "--method", "g2"}).code == cli::kParse);
        CHECK(invoke({"bound"}).code == cli::kUsage);
        CHECK(invoke({"frobnicate"}).code == cli::kUsage);
        CHECK(invoke({}).code == cli::kUsage);
    }

    TEST_CASE("bound on generated states")
    {
        const fs::path mm = scratch("mm.json");
        REQUIRE(invoke({"make-state", "--family", "max-mixed", "--dims", "2,2,2", "--out", mm.string()}).code == 0);
        const Result r = invoke({"bound", "--state", mm.string(), "--method", "g2"});
        CHECK(r.code == 0);
        CHECK(r.out.find("bound C^2 >= 0\n") != std::string::npos);

        const fs::path ghz = scratch("ghz.json");
        REQUIRE(invoke({"make-state", "--family", "ghz", "--dims", "2,2,2", "--out", ghz.string()}).code == 0);
        const fs::path report = scratch("ghz_report.json");
        const Result g = invoke({"bound", "--state", ghz.string(), "--method", "g2", "--out", report.string()});
        CHECK(g.code == 0);
        const auto at = g.out.find("bound C^2 >= ");
        REQUIRE(at != std::string::npos);
        CHECK(std::stod(g.out.substr(at + 13)) == doctest::Approx(1.5).epsilon(1e-12));
        CHECK(slurp(report).find("\"method\": \"g2\"") != std::string::npos);

        const fs::path ex = scratch("example.json");
        REQUIRE(invoke({"make-state", "--family", "paper-example", "--t", "0.5", "--out", ex.string()}).code == 0);
        const Result s = invoke({"bound", "--state", ex.string(), "--method", "tau-sss", "--s", "2"});
        CHECK(s.code == 0);
        CHECK(s.out.find("coefficient 1/3") != std::string::npos);
        CHECK(s.out.find("substates   6") != std::string::npos);

        const Result c = invoke({"bound", "--state", ex.string(), "--method", "convex", "--weights", "g2=0.5",
                                 "--weights", "2=0.5"});
        CHECK(c.code == 0);
        CHECK(c.out.find("weight      sss:2 = 0.5") != std::string::npos);

        CHECK(invoke({"bound", "--state", ex.string(), "--method", "tau-sss"}).code == cli::kUsage);
        CHECK(invoke({"bound", "--state", ex.string(), "--method", "tau-sss", "--s", "3"}).code == cli::kUsage);
        CHECK(invoke({"bound", "--state", ex.string(), "--method", "tau-sss", "--s", "2", "--inner", "pure-exact"})
                  .code
              == cli::kUsage);
        CHECK(invoke({"bound", "--state", ex.string(), "--method", "convex", "--weights", "g2=0.7"}).code
              == cli::kUsage);
    }

    TEST_CASE("scan writes the expected CSV")
    {
        const fs::path csv = scratch("scan.csv");
        const Result r = invoke({"scan", "--family", "paper-example", "--t-min", "0.15", "--t-max", "0.5", "--steps",
                                 "2", "--out", csv.string()});
        CHECK(r.code == 0);
        const std::string text = slurp(csv);
        std::istringstream lines(text);
        std::string header, first, second, extra;
        std::getline(lines, header);
        std::getline(lines, first);
        std::getline(lines, second);
        CHECK(header == "t,bound,reference,branch");
        CHECK(first.rfind("0.14999999999999999,", 0) == 0);
        CHECK(first.find("," + format_double(example_curve(0.15).value) + ",middle") != std::string::npos);
        CHECK(second.rfind("0.5,", 0) == 0);
        CHECK(second.find(",upper") != std::string::npos);
        CHECK(!std::getline(lines, extra));
        CHECK(text.back() == '\n');
    }

    TEST_CASE("scan output is reproducible across thread counts")
    {
        const fs::path a = scratch("scan_a.csv");
        const fs::path b = scratch("scan_b.csv");
        const std::vector<std::string> common{"scan", "--family", "paper-example", "--t-min", "0", "--t-max", "1",
                                              "--steps", "11"};
        auto with = [&](const fs::path& out, const std::string& threads) {
            auto args = common;
            args.insert(args.end(), {"--out", out.string(), "--threads", threads});
            return invoke(args).code;
        };
        CHECK(with(a, "1") == 0);
        CHECK(with(b, "3") == 0);
        CHECK(slurp(a) == slurp(b));
    }

    TEST_CASE("scan argument errors")
    {
        const fs::path csv = scratch("scan_err.csv");
        CHECK(invoke({"scan", "--family", "paper-example", "--t-min", "0.5", "--t-max", "0.2", "--steps", "3", "--out",
                      csv.string()})
                  .code
              == cli::kUsage);
        CHECK(invoke({"scan", "--family", "other", "--t-min", "0", "--t-max", "1", "--steps", "3", "--out",
                      csv.string()})
                  .code
              == cli::kUsage);
    }

    TEST_CASE("selfcheck")
    {
        const Result empty = invoke({"selfcheck", "--trials", "0"});
        CHECK(empty.code == 0);
        const Result small = invoke({"selfcheck", "--trials", "2", "--oracle-samples", "20", "--seed", "7"});
        CHECK(small.code == 0);
        CHECK(small.out.find("FAIL") == std::string::npos);
        CHECK(invoke({"selfcheck", "--trials", "-1"}).code == cli::kUsage);
    }
}
