#pragma once

// Verification suites. Each check yields one JSON record
//   {check, params, status, samples, seed, witness | counterexample, values}
// and a run ends with a summary record. Output is a pure function of the config.

#include "sgk/json_io.hpp"
#include "sgk/scalar.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgk {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
    int r = 1;
    int q = 2;
    /// lemmas | charts | orbits | sections | tower | all
    std::string suite = "all";
    int samples = 100;
    std::uint64_t seed = 0;
    Field field = Field::rational();

    /// Throws ConfigError on q < 2, r < 1, samples < 1 or an unknown suite.
    void validate() const;
};

struct VerifyReport {
    /// Check records sorted by (check, r, q), then the summary record.
    std::vector<Json> records;
    bool passed = true;

    /// One compact JSON document per line.
    std::string to_jsonl() const;
};

VerifyReport run_verify(const SuiteConfig& cfg);

/// Suite names in canonical order, excluding "all".
const std::vector<std::string>& suite_names();

} // namespace sgk
