#pragma once

// Seeded property suites that certify the library's identities and bounds.
// Each suite draws its parameters from SeededRng streams indexed by trial,
// so a (seed, trials, tol) triple always yields the same report.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gstruve {

struct CheckResult {
    std::string suite;
    std::string check;
    std::size_t trial;
    double value;
    double tol;
    bool passed;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::optional<std::size_t> trials;  ///< suite default when empty
    std::optional<double> tol;          ///< suite default when empty
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    std::size_t failures() const noexcept;
    bool passed() const noexcept { return failures() == 0; }
};

/// Suite names in run order (without "all").
const std::vector<std::string>& suite_names();

/// Runs one suite; throws InvalidArgument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

nlohmann::json to_json(const CheckResult& c);
nlohmann::json summary_json(const SuiteReport& r);

}  // namespace gstruve
