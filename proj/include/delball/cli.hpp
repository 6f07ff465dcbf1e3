#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace delball::cli {

// Exit-code contract: 0 ok/verified, 1 usage error, 2 verification mismatch,
// 3 invalid input or budget refusal.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitInvalid = 3;

struct IntRange {
    long long lo = 0;
    long long hi = -1;  // lo > hi means empty
};

struct RunConfig {
    std::string subcommand;
    IntRange n, ell, t;
    int threads = 1;
    std::uint64_t seed = 0;
    std::string format = "csv";  // csv | json (json = one object per line)
    std::string out_path;        // empty: stdout
    std::string x_text;
    std::string reads_path;
    std::string certificates_path;  // verify: also write one text certificate per row
    std::optional<std::uint64_t> sample_m;
    bool assert_roundtrip = false;
    bool use_symmetry = true;
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

}  // namespace delball::cli
