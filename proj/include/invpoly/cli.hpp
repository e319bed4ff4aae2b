#pragma once

// Command-line front end. run_cli is the whole program minus main(), so
// tests can drive every subcommand in-process.

#include "invpoly/core.hpp"
#include "invpoly/enumeration.hpp"
#include "invpoly/json_io.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invpoly::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInadmissible = 2,
    kParseError = 3,
    kBoundExceeded = 4,
};

/// A problem instance as read from --h/--s/--n or a --spec file:
/// {"h": HSequence, "S": PairSet, "n": N, "options": {...}}.
struct ProblemSpec {
    std::optional<HSequence> h;
    std::optional<PairSet> S;
    std::optional<int> n;
    Json options = Json::object();
};

ProblemSpec problem_from_json(const Json& j);

/// "--h" argument: an integer t means h(i) = i + t, otherwise HSequence JSON.
HSequence parse_h_argument(std::string_view text);

/// Settings from an optional config file ({"max_n", "jobs", "seed"}), then
/// INVPOLY_MAX_N.
struct Settings {
    Limits limits;
    std::uint64_t seed = 20240601;
};
Settings load_settings(const std::optional<std::filesystem::path>& config_file);

/// JSON result of a subcommand. Commands: enumerate, eval, expand, graded,
/// poset, admissible, poincare, qbinom. Errors propagate as exceptions.
Json command_json(std::string_view command, const ProblemSpec& spec, const Settings& settings);

/// `expected` is contained in `actual`: object keys recurse, everything else
/// must be equal. On mismatch `where` names the first differing path.
bool json_contains(const Json& expected, const Json& actual, std::string& where);

struct GoldenOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Replay every *.json fixture in `dir` (sorted by file name).
std::vector<GoldenOutcome> replay_golden(const std::filesystem::path& dir, const Settings& settings);

/// Entry point; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invpoly::cli
