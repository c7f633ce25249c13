#pragma once

// The command-line surface as a library, so it can be driven in-process.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperquot/profile.hpp"

namespace hq::app {

enum class Realization { motivic, euler, poincare, chi_y };
enum class Format { text, json };
enum class Suite { oracle, genus0, euler_spec, lemma_h, duality, zeta_rat, b0 };

/// Exit codes: success / passed, verification failure, invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

struct RunConfig {
    int genus = 0;
    std::vector<int> degrees;
    std::vector<int> s;
    std::vector<int> dmax;
    std::optional<std::vector<int>> dmin;
    Realization realization = Realization::motivic;
    Format format = Format::text;
    bool parallel = false;
    bool assume_smooth = false;
};

/// Parses "1,-2, 3". Throws InvalidInput.
std::vector<int> parse_int_list(const std::string& text);

Realization parse_realization(const std::string& name);
Suite parse_suite(const std::string& name);
std::string to_string(Realization r);
std::string to_string(Suite s);

/// The echo of a config in JSON reports (excludes output-only settings).
nlohmann::json config_json(const RunConfig& config);

int run_compute(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, Suite suite, std::ostream& out, std::ostream& err);
int run_info(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace hq::app
