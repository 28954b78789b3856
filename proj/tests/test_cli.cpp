#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "gstruve");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = gstruve::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json first_line(const std::string& s) { return json::parse(s.substr(0, s.find('\n'))); }

std::string write_tmp(const std::string& name, const std::string& content) {
    const std::string path = std::string(GSTRUVE_TEST_TMP) + "/" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("eval") {
    auto o = run({"eval", "f21", "--a", "1", "--b", "1", "--c", "2", "--z", "0.5"});
    REQUIRE(o.code == 0);
    json j = first_line(o.out);
    CHECK(j["value"][0].get<double>() == doctest::Approx(1.3862943611198906).epsilon(1e-14));
    CHECK(j["value"][1] == 0.0);
    CHECK(j.contains("input"));
    CHECK(j.contains("terms_or_nodes"));
    CHECK(j.contains("est_error"));

    o = run({"eval", "struve-n", "--p", "0.5", "--b", "1", "--c", "0", "--z", "0.3"});
    REQUIRE(o.code == 0);
    CHECK(first_line(o.out)["value"] == json::array({1.0, 0.0}));

    o = run({"eval", "q", "--A", "1", "--B", "0", "--beta", "1", "--z", "0.5"});
    REQUIRE(o.code == 0);
    CHECK(first_line(o.out)["value"][0].get<double>() == doctest::Approx(1.25).epsilon(1e-14));

    o = run({"eval", "struve-h", "--p", "0.3+0.1i", "--z", "0.5-0.2i"});
    CHECK(o.code == 0);
    o = run({"eval", "h-bound", "--A", "1", "--B", "-1", "--beta", "1", "--z", "0.5"});
    CHECK(first_line(o.out)["value"][0].get<double>() == doctest::Approx(1.772588722239781238).epsilon(1e-13));
    o = run({"eval", "phi", "--p", "0.5", "--z", "0.2"});
    CHECK(o.code == 0);
    o = run({"eval", "struve-m", "--p", "0.25", "--z", "0.4"});
    CHECK(o.code == 0);
    o = run({"eval", "struve-l", "--p", "0", "--z", "0.5"});
    CHECK(first_line(o.out)["value"][0].get<double>() == doctest::Approx(0.327240699394180780).epsilon(1e-14));
}

TEST_CASE("eval errors") {
    CHECK(run({"eval", "bessel"}).code == 2);
    CHECK(run({"eval", "f21", "--z", "zz"}).code == 2);
    CHECK(run({"eval", "f21", "--c", "0", "--z", "0.1"}).code == 3);  // pole
    CHECK(run({"eval", "f21", "--z", "2"}).code == 3);                  // domain
    CHECK(run({"eval", "struve-m", "--p", "-2", "--b", "0"}).code == 3);
    CHECK(run({"eval", "q", "--A", "0.5", "--B", "0.5"}).code == 2);    // invalid target
    CHECK(run({}).code == 2);
    const auto bad = run({"eval", "f21", "--c", "0", "--z", "0.1"});
    CHECK(bad.err.find("pole") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("member") {
    const std::string id = write_tmp("identity.json", "[[0,0],[1,0]]");
    auto o = run({"member", id, "--lambda", "2", "--mu", "0.5", "--A", "1", "--B", "-1"});
    CHECK(o.code == 0);
    json j = first_line(o.out);
    CHECK(j["passed"] == true);
    CHECK(j["margin"].get<double>() > 0.0);
    CHECK(j["mode"] == "half-plane");

    o = run({"member", id, "--A", "0.5", "--B", "-0.5"});
    CHECK(first_line(o.out)["mode"] == "disk");

    const std::string bad = write_tmp("counter.json", "[[0,0],[1,0],[8,0]]");
    const std::string dump = std::string(GSTRUVE_TEST_TMP) + "/dump.csv";
    o = run({"member", bad, "--lambda", "10", "--mu", "0.5", "--p", "0.5", "--A", "1", "--B", "-1", "--points", "90",
             "--dump", dump});
    CHECK(o.code == 1);
    j = first_line(o.out);
    CHECK(j["passed"] == false);
    CHECK(j["witness"].is_array());
    CHECK(j["margin"].get<double>() < 0.0);
    std::ifstream csv(dump);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "z_re,z_im,j_re,j_im");
    std::size_t rows = 0;
    for (std::string line; std::getline(csv, line);) ++rows;
    CHECK(rows == 10 * 90);

    CHECK(run({"member", write_tmp("broken.json", "[[0,0],[1,")}).code == 2);
    CHECK(run({"member", write_tmp("shape.json", "{\"a\":1}")}).code == 2);
    CHECK(run({"member", "/nonexistent.json"}).code == 2);
    CHECK(run({"member", id, "--mu", "1.5"}).code == 2);
    CHECK(run({"member", id, "--radii", "0.5", "0.2"}).code == 2);
}

TEST_CASE("verify") {
    auto o = run({"verify", "--suite", "recurrence", "--trials", "100", "--seed", "42", "--tol", "1e-10"});
    CHECK(o.code == 0);
    std::istringstream lines(o.out);
    std::size_t checks = 0;
    json last;
    for (std::string line; std::getline(lines, line);) {
        last = json::parse(line);
        if (!last.contains("summary")) {
            ++checks;
            CHECK(last["passed"] == true);
            CHECK(last["value"].get<double>() <= 1e-10);
        }
    }
    CHECK(checks > 0);
    CHECK(last["summary"]["failures"] == 0);

    CHECK(run({"verify", "--suite", "radius", "--tol", "1e-12"}).code == 0);
    CHECK(run({"verify", "--suite", "bogus"}).code == 2);

    // a tolerance nobody can meet is a certified failure, not an error
    CHECK(run({"verify", "--suite", "recurrence", "--trials", "3", "--tol", "0"}).code == 1);
}

TEST_CASE("verify all is deterministic") {
    const auto a = run({"verify", "--suite", "all", "--seed", "1"});
    const auto b = run({"verify", "--suite", "all", "--seed", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto c = run({"verify", "--suite", "all", "--seed", "2"});
    CHECK(c.code == 0);
    CHECK(c.out != a.out);
}

TEST_CASE("bounds") {
    auto o = run({"bounds", "--A", "0.5", "--B", "0.25", "--beta", "1", "--r", "0.5"});
    REQUIRE(o.code == 0);
    std::istringstream lines(o.out);
    std::vector<json> reports;
    for (std::string line; std::getline(lines, line);) reports.push_back(json::parse(line));
    REQUIRE(reports.size() == 4);
    CHECK(reports[0]["theorem_id"] == "re_bounds");
    CHECK(reports[0]["lower"].get<double>() == doctest::Approx(0.849271710192876290).epsilon(1e-14));
    CHECK(reports[1]["upper"].get<double>() == doctest::Approx(1.057735714748932364).epsilon(1e-14));
    for (const json& r : reports)
        for (const char* key : {"theorem_id", "params", "lower", "upper", "certificate_margin"}) CHECK(r.contains(key));

    o = run({"bounds", "--lambda", "1", "--mu", "0.5", "--k", "2"});
    REQUIRE(o.code == 0);
    CHECK(o.out.find("\"radius\"") != std::string::npos);
    CHECK(run({"bounds", "--A", "1"}).code == 2);
}
