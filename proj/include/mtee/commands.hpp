#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtee/code.hpp"

namespace mtee {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DecoderKind { kBmd, kGs, kTangent };
enum class OutputFormat { kCsv, kJson };

/// Fully resolved run configuration. Every field has a usable default;
/// precedence is CLI flags > config file > defaults.
struct RunConfig {
    OuterCode code;                    // 255,144 over GF(2^8), poly 0x11D
    double p = 0.02;
    double rate_inner = 0.5;
    int n_inner = 0;                   // 0 = auto: round(m / rate_inner)
    DecoderKind decoder = DecoderKind::kBmd;
    std::optional<int> kappa;          // tangent point when decoder == kTangent
    bool auto_kappa = false;           // pick kappa* via the tangent search
    std::optional<double> lambda;      // single-lambda threshold table
    std::vector<double> lambda_sweep;  // thresholds command sweep (default 1.1..2.0)
    long long z = 1;
    std::optional<double> s_override;
    std::uint64_t words = 100000;
    std::uint64_t seed = 42;
    int chunks = 1;
    OutputFormat format = OutputFormat::kCsv;
    std::string out;                   // empty = stdout
    bool inject_fault = false;         // validate self-test hook

    int resolved_n_inner() const;
};

struct CommandResult {
    int exit_code = 0;   // 0 ok, 1 usage/config, 2 validation discrepancy
    std::string output;  // report body (CSV or JSON)
};

// merge a JSON config document (see README for the schema) over base
RunConfig apply_config_json(RunConfig base, const std::string& json_text);

CommandResult cmd_thresholds(const RunConfig& cfg);
CommandResult cmd_tangent(const RunConfig& cfg);
CommandResult cmd_analyze(const RunConfig& cfg);
CommandResult cmd_simulate(const RunConfig& cfg);
CommandResult cmd_validate(const RunConfig& cfg);

// write result.output to cfg.out or stdout; returns result.exit_code
int emit_result(const RunConfig& cfg, const CommandResult& result);

}  // namespace mtee
