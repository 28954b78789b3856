#pragma once

// JSON encodings shared by the CLI and the Python bindings.
//   complex        [re, im]
//   PowerSeries    [[re, im], ...]   index = power of z
//   Verdict        {passed, witness: [re, im] | null, margin, samples_used}
//   BoundReport    {theorem_id, params, lower, upper, certificate_margin}

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gstruve/bounds.hpp"
#include "gstruve/classes.hpp"
#include "gstruve/series.hpp"

namespace gstruve {

using json = nlohmann::json;

json to_json(cplx z);
json to_json(const PowerSeries& f);
json to_json(const Verdict& v);

/// Throws InvalidArgument on anything other than a nonempty array of [re, im] pairs.
PowerSeries series_from_json(const json& j);
PowerSeries read_series_file(const std::string& path);

/// Parses "1.5", "-2i", "0.3+0.1i", "1e-3-2.5e-1i", "i".
std::optional<cplx> parse_complex(std::string_view text);

struct BoundReport {
    std::string theorem_id;
    json params;
    double lower;
    double upper;
    std::optional<double> certificate_margin;
};

json to_json(const BoundReport& r);

}  // namespace gstruve
