#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <unistd.h>

#include "netarc/cli.hpp"
#include "netarc/serialize.hpp"

using namespace netarc;
using njson = nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& contents) {
    static int counter = 0;
    auto path = std::filesystem::temp_directory_path() /
                ("netarc_cli_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++) + ".txt");
    std::ofstream(path) << contents;
    return path.string();
}

bool has(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("construct emits a verified record in every format") {
    CliRun text = cli({"construct", "gf8-quadfree-hyperoval"});
    CHECK(text.code == 0);
    CHECK(has(text.out, "kind: hyperoval"));
    CHECK(has(text.out, "degree: 7"));

    CliRun json = cli({"construct", "gf8-quadfree-hyperoval", "--format", "json"});
    CHECK(json.code == 0);
    njson j = njson::parse(json.out);
    CHECK(j["schema"] == 1);
    CHECK(j["record"] == "construction");
    CHECK(j["name"] == "gf8_quadfree_hyperoval");
    CHECK(j["field"] == "2^3");
    CHECK(j["kind"] == "hyperoval");
    CHECK(j["degree"] == 7);
    CHECK(j["points"].size() == 8);
    CHECK(j["slopes"].size() == 7);

    CliRun csv = cli({"construct", "gf8-quadfree-hyperoval", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(has(csv.out, "name,field,kind,degree,params,slopes,points\n"));
}

TEST_CASE("construct rejects unknown names listing the valid ones") {
    CliRun r = cli({"construct", "no-such-thing"});
    CHECK(r.code == 2);
    CHECK(has(r.out, "valid names"));
    CHECK(has(r.out, "conic_oval"));
    CHECK(has(r.out, "subgroup_hyperoval"));
}

TEST_CASE("construct needs a field except for the fixed GF(8) example") {
    CHECK(cli({"construct", "subgroup_hyperoval", "--param", "k=2"}).code == 2);
    CHECK(cli({"construct", "gf8_quadfree_hyperoval"}).code == 0);
    CHECK(cli({"construct", "subgroup_hyperoval", "--field", "2^3", "--param",
               "k=2"})
              .code == 0);
}

TEST_CASE("hyphenated and underscored construction names print identically") {
    CliRun a = cli({"construct", "standard-5net-oval", "--field", "11"});
    CliRun b = cli({"construct", "standard_5net_oval", "--field", "11"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("verify reads points from a file or inline") {
    Construction c = standard_5net_hyperoval(Field::make(2, 2));
    std::string path = temp_file(points_file_text(c.points));
    CliRun file = cli({"verify", "--points", path, "--slopes", "0,1,2,3,inf",
                       "--expect", "hyperoval"});
    CHECK(file.code == 0);
    CHECK(has(file.out, "kind: hyperoval"));

    std::string inline_pts;
    for (const Point& p : c.points) {
        if (!inline_pts.empty()) inline_pts += ' ';
        inline_pts += point_token(p);
    }
    CliRun inl = cli({"verify", "--field", "2^2", "--points-inline", inline_pts,
                      "--slopes", "0,1,2,3,inf"});
    CHECK(inl.code == 0);
    CHECK(has(inl.out, "kind: hyperoval"));

    // the header field and --field must agree when both are given
    CHECK(cli({"verify", "--points", path, "--field", "5", "--slopes", "0,1,inf"})
              .code == 2);
}

TEST_CASE("verify flags non-arcs with exit 1 and a witness") {
    CliRun tri = cli({"verify", "--field", "5", "--points-inline", "0,0 1,1 2,2",
                      "--slopes", "0,1,inf", "--format", "json"});
    CHECK(tri.code == 1);
    njson j = njson::parse(tri.out);
    CHECK(j["kind"] == "not-arc");
    REQUIRE(j.contains("witness"));
    CHECK(j["witness"].size() == 3);
    CHECK_FALSE(j.contains("missing_slope"));

    CliRun pair = cli({"verify", "--field", "7", "--points-inline",
                       "0,0 1,1 2,4 3,2", "--slopes", "0,1,2,3,4,inf"});
    CHECK(pair.code == 1);
    CHECK(has(pair.out, "missing slope: 5"));
    CHECK(has(pair.out, "unjoined pair"));

    // expectation mismatch on a genuine arc
    CliRun wrong = cli({"verify", "--field", "5", "--points-inline", "0,0 1,1 2,0",
                        "--slopes", "0,1,4,inf", "--expect", "oval"});
    CHECK(wrong.code == 1);
}

TEST_CASE("search output is byte-stable and timing stays opt-in") {
    std::vector<std::string> req = {"search",  "--field", "2^3",   "--r", "7",
                                    "--kind",  "hyperoval", "--format", "json"};
    CliRun a = cli(req);
    CliRun b = cli(req);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    njson j = njson::parse(a.out);
    CHECK(j["status"] == "found");
    CHECK_FALSE(j.contains("millis"));
    CHECK(j["witness"]["points"].size() == 8);

    CliRun timed = cli({"search", "--field", "2^3", "--r", "7", "--kind",
                        "hyperoval", "--format", "json", "--timing"});
    CHECK(njson::parse(timed.out).contains("millis"));

    CliRun none = cli({"search", "--field", "3^2", "--r", "7", "--kind",
                       "hyperoval"});
    CHECK(none.code == 0);
    CHECK(has(none.out, "exhausted-none"));
}

TEST_CASE("search budget exhaustion exits 3") {
    CliRun r = cli({"search", "--field", "11", "--r", "9", "--kind", "oval",
                    "--max-nodes", "100"});
    CHECK(r.code == 3);
    CHECK(has(r.out, "budget-exceeded"));
}

TEST_CASE("search orbit mode reports equivalence classes") {
    CliRun r = cli({"search", "--field", "2^2", "--r", "5", "--kind", "hyperoval",
                    "--orbits", "--format", "json"});
    CHECK(r.code == 0);
    njson j = njson::parse(r.out);
    CHECK(j["mode"] == "enumerate-orbits");
    CHECK(j["orbits"] == 1);
    CHECK(cli({"search", "--field", "13", "--r", "5", "--kind", "oval",
               "--orbits"})
              .code == 2);
}

TEST_CASE("table renders ranges, lists and failure modes") {
    CliRun text = cli({"table", "--kind", "oval", "--q", "2..5"});
    CHECK(text.code == 0);
    CHECK(has(text.out, "O_2 = {3}\n"));
    CHECK(has(text.out, "O_5 = {3,4,5,6}\n"));

    // ranges skip non prime powers
    CliRun range = cli({"table", "--kind", "oval", "--q", "5..8", "--format",
                        "csv"});
    CHECK(range.code == 0);
    CHECK(has(range.out, "q,r,kind,status,nodes\n"));
    CHECK_FALSE(has(range.out, "\n6,"));

    CliRun json = cli({"table", "--kind", "hyperoval", "--q", "8", "--format",
                       "json"});
    njson j = njson::parse(json.out);
    CHECK(j["degrees"]["8"] == njson::array({3, 7, 9}));

    CHECK(cli({"table", "--kind", "oval", "--q", "6"}).code == 2);
    CHECK(cli({"table", "--kind", "oval", "--q", "13"}).code == 2);
    CHECK(cli({"table", "--kind", "hyperoval", "--q", "13", "--max-nodes",
               "1000"})
              .code == 3);
}

TEST_CASE("equiv certifies matches and distinguishes the rest") {
    auto f5 = Field::make(5, 1);
    std::string quad = temp_file("5\n0,0\n1,0\n0,1\n1,1\n");
    std::string scaled = temp_file("5\n0,0\n2,0\n0,2\n2,2\n");
    CliRun same = cli({"equiv", quad, scaled});
    CHECK(same.code == 0);
    CHECK(has(same.out, "equivalent: yes"));

    Construction sub = subgroup_hyperoval(Field::make(2, 3), 3);
    Construction qf = gf8_quadfree_hyperoval();
    std::string a = temp_file(points_file_text(sub.points));
    std::string b = temp_file(points_file_text(qf.points));
    CliRun diff = cli({"equiv", a, b, "--format", "json"});
    CHECK(diff.code == 1);
    njson j = njson::parse(diff.out);
    CHECK(j["equivalent"] == false);
    CHECK_FALSE(j.contains("map"));

    std::string other = temp_file("7\n0,0\n1,1\n");
    CHECK(cli({"equiv", quad, other}).code == 2);
    CHECK(cli({"equiv", quad, "/no/such/file"}).code == 2);
    (void)f5;
}

TEST_CASE("environment variables set the default budget") {
    setenv("NETS_BUDGET_NODES", "100", 1);
    CliRun limited = cli({"search", "--field", "11", "--r", "9", "--kind", "oval"});
    CHECK(limited.code == 3);
    // an explicit flag wins over the environment
    CliRun full = cli({"search", "--field", "11", "--r", "9", "--kind", "oval",
                       "--max-nodes", "1000000000"});
    CHECK(full.code == 0);
    CHECK(has(full.out, "exhausted-none"));
    setenv("NETS_BUDGET_NODES", "not-a-number", 1);
    CHECK(cli({"search", "--field", "11", "--r", "9", "--kind", "oval"}).code == 2);
    unsetenv("NETS_BUDGET_NODES");
}

TEST_CASE("constructions re-verify through the verify subcommand") {
    struct Req {
        std::vector<std::string> args;
    };
    std::vector<std::vector<std::string>> reqs = {
        {"construct", "conic_oval", "--field", "7", "--param", "line=exterior"},
        {"construct", "subgroup_hyperoval", "--field", "2^3", "--param", "k=3"},
        {"construct", "root_of_unity_oval", "--field", "11", "--param", "r=5"},
        {"construct", "standard_5net_hyperoval", "--field", "2^4"},
        {"construct", "oval_7net", "--field", "13"},
    };
    for (auto req : reqs) {
        req.push_back("--format");
        req.push_back("json");
        CliRun made = cli(req);
        REQUIRE(made.code == 0);
        njson j = njson::parse(made.out);
        std::string file = std::string(j["field"]) + "\n";
        for (const auto& p : j["points"]) file += std::string(p) + "\n";
        std::string slopes;
        for (const auto& s : j["slopes"]) {
            if (!slopes.empty()) slopes += ',';
            slopes += std::string(s);
        }
        CliRun checked = cli({"verify", "--points", temp_file(file), "--slopes",
                              slopes, "--expect", std::string(j["kind"])});
        CAPTURE(req[1]);
        CHECK(checked.code == 0);
    }
}

TEST_CASE("help is reachable and bare invocations point to it") {
    CliRun bare = cli({});
    CHECK(bare.code == 2);
    CHECK(has(bare.out, "Usage"));
    CliRun help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(has(help.out, "construct"));
    CHECK(has(help.out, "suite"));
    CHECK(cli({"suite", "--help"}).code == 0);
}

TEST_CASE("errors come back as structured records in the chosen format") {
    CliRun j = cli({"search", "--field", "6", "--r", "3", "--kind", "oval",
                    "--format", "json"});
    CHECK(j.code == 2);
    njson rec = njson::parse(j.out);
    CHECK(rec["schema"] == 1);
    CHECK(rec["record"] == "error");
    CHECK_FALSE(j.err.empty());

    CliRun c = cli({"search", "--field", "6", "--r", "3", "--kind", "oval",
                    "--format", "csv"});
    CHECK(c.code == 2);
    CHECK(has(c.out, "error\n"));

    CliRun unknown_flag = cli({"search", "--no-such-flag"});
    CHECK(unknown_flag.code == 2);
}
