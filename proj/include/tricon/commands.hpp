#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tricon::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kParse = 3, kPropertyFailure = 4 };

struct BoundArgs {
    std::filesystem::path state;
    std::string method = "tau-sss";
    std::optional<int> s;
    std::optional<std::string> shape;
    /// "KEY=W" entries; KEY is "g2", an integer s, or a shape "LxMxN" (commas also accepted).
    std::vector<std::string> weights;
    std::string inner = "g2";
    std::optional<std::filesystem::path> out;
    unsigned threads = 1;
};

struct ScanArgs {
    std::string family = "paper-example";
    double t_min = 0.0;
    double t_max = 1.0;
    int steps = 101;
    std::optional<int> oracle_samples;
    std::uint64_t seed = 0;
    std::filesystem::path out;
    std::optional<std::filesystem::path> discrepancy_report;
    unsigned threads = 1;
};

struct SelfcheckArgs {
    std::uint64_t seed = 20240601;
    int trials = 50;
    int oracle_samples = 500;
    unsigned threads = 1;
};

struct MakeStateArgs {
    /// "paper-example", "ghz", "w", "product", "max-mixed", "random-pure", "random-mixed".
    std::string family = "paper-example";
    double t = 0.5;
    std::string dims = "2,2,2";
    int rank = 2;
    std::uint64_t seed = 0;
    /// Write named pure states as density matrices.
    bool mixed = false;
    std::filesystem::path out;
};

int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanArgs& args, std::ostream& out, std::ostream& err);
int cmd_selfcheck(const SelfcheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_make_state(const MakeStateArgs& args, std::ostream& out, std::ostream& err);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tricon::cli
