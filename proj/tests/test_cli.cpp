#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "ternrep/cli.hpp"

using namespace ternrep;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("represent golden instance as JSON") {
    const Run r = run({"represent", "--form", "x2+2y2+2z2", "--m", "3", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    const std::vector<std::string> expected{"form", "m", "eligible", "verdict", "case", "k", "s",
                                            "core", "q", "t", "b", "h", "point", "R",
                                            "binary_value", "binary_rep", "representation", "verified"};
    CHECK(keys == expected);
    CHECK(j["representation"] == nlohmann::json::array({1, 0, 1}));
    CHECK(j["point"] == nlohmann::json::array({1, -4, -2}));
    CHECK(j["q"] == 73);
    CHECK(j["R"] == -1);
    CHECK(j["verified"] == true);
    CHECK(j["eligible"] == true);
}

TEST_CASE("exit codes") {
    CHECK(run({"represent", "--form", "x2+2y2+2z2", "--m", "7"}).code == 1);
    const Run r14 = run({"represent", "--form", "x2+y2+2z2", "--m", "14"});
    CHECK(r14.code == 1);
    CHECK(r14.out.find("16l+14") != std::string::npos);
    CHECK(run({"represent", "--form", "x2+y2+7z2", "--m", "11"}).code == 2);
    const Run fb = run({"represent", "--form", "x2+y2+7z2", "--m", "11", "--fallback-oracle", "--json"});
    CHECK(fb.code == 0);
    CHECK(nlohmann::json::parse(fb.out)["representation"] == nlohmann::json::array({0, 2, 1}));
    CHECK(run({"represent", "--form", "x2+y2+7z2", "--m", "3", "--fallback-oracle"}).code == 1);
    CHECK(run({"represent", "--form", "x2+2y2+2z2", "--m", "6", "--max-prime-candidates", "1"}).code == 5);
    CHECK(run({"check", "--form", "x2+y2+3z2", "--m", "9"}).code == 0);
    CHECK(run({"check", "--form", "x2+y2+3z2", "--m", "3"}).code == 2);
    CHECK(run({"oracle", "--form", "x2+2y2+2z2", "--m", "7"}).code == 1);
    CHECK(run({"oracle", "--form", "x2+y2+7z2", "--m", "11"}).out == "(0, 2, 1)\n");
}

TEST_CASE("JSON for non-eligible values keeps the field set") {
    const Run r = run({"represent", "--form", "x2+y2+2z2", "--m", "14", "--json"});
    CHECK(r.code == 1);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.size() == 18);
    CHECK(j["eligible"] == false);
    CHECK(j["representation"].is_null());
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 4);
    CHECK(run({"represent", "--form", "x2+y2+z2", "--m", "3"}).code == 4);
    CHECK(run({"represent", "--form", "x2+2y2+2z2"}).code == 4);
    CHECK(run({"represent", "--form", "x2+2y2+2z2", "--m", "0"}).code == 4);
    CHECK(run({"represent", "--form", "x2+2y2+2z2", "--m", "abc"}).code == 4);
    CHECK(run({"represent", "--form", "x2+2y2+2z2", "--m", "3", "--fallback-oracle"}).code == 4);
    CHECK(run({"scan", "--form", "x2+2y2+2z2", "--lo", "5", "--hi", "4"}).code == 4);
    CHECK(run({"frobnicate"}).code == 4);
    const Run r = run({"represent", "--m", "3"});
    CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("witness prints an audit trail") {
    const Run r = run({"witness", "--form", "x2+y2+2z2", "--m", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("T2D") != std::string::npos);
    CHECK(r.out.find("T1A") != std::string::npos);
}

TEST_CASE("scan CSV") {
    const Run r = run({"scan", "--form", "x2+y2+7z2", "--lo", "1", "--hi", "40"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "m,verdict,pipeline_found,oracle_found,agree,x,y,z,q,elapsed_micros");
    std::size_t count = 0;
    for (std::string line; std::getline(lines, line);) ++count;
    CHECK(count == 40);

    const Run again = run({"scan", "--form", "x2+y2+7z2", "--lo", "1", "--hi", "40", "--jobs", "4"});
    CHECK(again.out == r.out);

    const auto path = std::filesystem::temp_directory_path() / "ternrep_cli_scan.csv";
    const Run to_file = run({"scan", "--form", "x2+y2+7z2", "--lo", "1", "--hi", "40", "--out", path.string()});
    CHECK(to_file.code == 0);
    std::ifstream in(path, std::ios::binary);
    const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == r.out);
    std::filesystem::remove(path);
}

TEST_CASE("selftest") {
    const Run r = run({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
