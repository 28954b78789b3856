#include "gstruve/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>

namespace gstruve {

namespace {

// Non-finite doubles have no JSON representation; they are written as null.
json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::optional<double> parse_real(std::string_view s) {
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::optional<double> parse_imag_coefficient(std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
}

}  // namespace

json to_json(cplx z) { return json::array({number(z.real()), number(z.imag())}); }

json to_json(const PowerSeries& f) {
    json out = json::array();
    for (const cplx& c : f.coeffs()) out.push_back(to_json(c));
    return out;
}

json to_json(const Verdict& v) {
    return json{{"passed", v.passed},
                {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
                {"margin", number(v.margin)},
                {"samples_used", v.samples_used}};
}

PowerSeries series_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw Error(ErrorKind::InvalidArgument, "series JSON must be a nonempty array");
    std::vector<cplx> coeffs;
    coeffs.reserve(j.size());
    for (const json& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
            throw Error(ErrorKind::InvalidArgument, "series entries must be [re, im] number pairs");
        coeffs.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
    return PowerSeries(std::move(coeffs));
}

PowerSeries read_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open coefficient file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed coefficient file: ") + e.what());
    }
    return series_from_json(j);
}

std::optional<cplx> parse_complex(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    if (text.back() != 'i') {
        const auto re = parse_real(text);
        if (!re) return std::nullopt;
        return cplx{*re, 0.0};
    }
    text.remove_suffix(1);
    // split at the last sign that is not a leading sign or an exponent sign
    std::size_t split = std::string_view::npos;
    for (std::size_t i = text.size(); i-- > 1;) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        const auto im = parse_imag_coefficient(text);
        if (!im) return std::nullopt;
        return cplx{0.0, *im};
    }
    const auto re = parse_real(text.substr(0, split));
    const auto im = parse_imag_coefficient(text.substr(split));
    if (!re || !im) return std::nullopt;
    return cplx{*re, *im};
}

json to_json(const BoundReport& r) {
    return json{{"theorem_id", r.theorem_id},
                {"params", r.params},
                {"lower", number(r.lower)},
                {"upper", number(r.upper)},
                {"certificate_margin", r.certificate_margin ? number(*r.certificate_margin) : json(nullptr)}};
}

}  // namespace gstruve
