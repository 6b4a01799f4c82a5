/*
 * Copyright 2026 the ratchip authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ratchip/chip_config.hpp"
#include "ratchip/cli.hpp"
#include "ratchip/lattice_path.hpp"

using namespace ratchip;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("stabilize") {
    CliRun r = run({"stabilize", "--a", "5", "--b", "3", "--k", "0", "--config", "5,5,5"});
    CHECK(r.code == 0);
    CHECK(r.out == "3,3,3\n");
    CHECK(r.err == "strategy: greedy-max\n");

    CliRun lex = run({"stabilize", "--a", "7", "--b", "5", "--k", "2", "--config", "0,0,3,5,5",
                      "--strategy", "lex-min"});
    CHECK(lex.out == "2,2,5,0,0\n");
    CHECK(lex.err == "strategy: lex-min\n");
}

TEST_CASE("stabilize with json output") {
    CliRun r = run({"stabilize", "--a", "5", "--b", "3", "--k", "0", "--config", "5,5,5", "--json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["config"] == json({3, 3, 3}));
    CHECK(doc["strategy"] == "greedy-max");
    CHECK(doc["trace"].is_array());
    CHECK(!doc["trace"].empty());
}

TEST_CASE("skeletal, superstabilize, dual") {
    CHECK(run({"skeletal", "--a", "7", "--b", "5", "--k", "2", "--config", "0,0,3,5,5"}).out ==
          "4,4,0,2,2\n");
    CHECK(run({"superstabilize", "--a", "5", "--b", "3", "--config", "5,5,5"}).out == "0,0,0\n");
    CHECK(run({"dual", "--a", "7", "--b", "5", "--config", "0,0,0,0,0"}).out == "5,5,5,5,5\n");
}

TEST_CASE("count") {
    CHECK(run({"count", "--a", "7", "--b", "5", "--what", "orbits"}).out == "66\n");
    CHECK(run({"count", "--a", "7", "--b", "5", "--what", "dyck"}).out == "66\n");
    CHECK(run({"count", "--a", "7", "--b", "5", "--what", "skeletal"}).out == "2401\n");
    CHECK(run({"count", "--a", "5", "--b", "3", "--what", "labeled"}).out == "25\n");
    CHECK(run({"count", "--a", "5", "--b", "3", "--what", "paths"}).out == "56\n");
    CHECK(run({"count", "--a", "5", "--b", "3", "--what", "widgets"}).code == 1);
}

TEST_CASE("fire and borrow on the implicit complete graph") {
    CHECK(run({"fire", "--a", "5", "--b", "3", "--config", "5,5,5", "--set", "3"}).out == "6,6,1\n");
    CHECK(run({"borrow", "--a", "8", "--b", "5", "--config", "1,3,0,3,5", "--set", "1,3"}).out ==
          "6,0,5,0,2\n");
}

TEST_CASE("fire with an explicit graph file") {
    std::string path = "cli_test_graph.txt";
    {
        std::ofstream f(path);
        f << "6\n1 3\n1 5\n2 5\n3 5\n3 6\n4 5\n";
    }
    CliRun r = run({"fire", "--a", "2", "--b", "5", "--c", "1", "--graph", path,
                    "--config", "1,1,2,1,0,0", "--set", "1,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,0,2,1,0,0\n");
    std::remove(path.c_str());

    CHECK(run({"fire", "--a", "2", "--b", "5", "--graph", "no_such_file_here",
               "--config", "0,0,0,0,0", "--set", "1"}).code == 1);
}

TEST_CASE("enumerate") {
    CliRun r = run({"enumerate", "--a", "5", "--b", "3", "--what", "dyck"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> all;
    while (std::getline(lines, line)) all.push_back(line);
    CHECK(all.size() == 7);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& s : all) CHECK_NOTHROW(LatticePath::parse(5, 3, s));

    CliRun sup = run({"enumerate", "--a", "5", "--b", "3", "--what", "superstable"});
    CHECK(std::count(sup.out.begin(), sup.out.end(), '\n') == 25);

    CliRun skel = run({"enumerate", "--a", "5", "--b", "3", "--what", "skeletal-configs",
                       "--k", "1", "--json"});
    json doc = json::parse(skel.out);
    CHECK(doc.size() == 25);
    for (const auto& item : doc) CHECK_NOTHROW(ChipConfig::parse(item.get<std::string>()));
}

TEST_CASE("group subcommands") {
    CHECK(run({"group", "canon", "--a", "3", "--b", "2", "--config", "1,2"}).out == "2,0\n");
    CHECK(run({"group", "add", "--a", "3", "--b", "2", "--x", "1,0", "--y", "2,0"}).out == "0,0\n");
    CHECK(run({"group", "equiv", "--a", "7", "--b", "5", "--x", "2,2,5,0,0",
               "--y", "4,4,0,2,2"}).out == "true\n");
    CHECK(run({"group", "equiv", "--a", "7", "--b", "5", "--x", "0,0,0,0,0",
               "--y", "1,0,0,0,0"}).out == "false\n");

    CliRun trace = run({"group", "trace", "--a", "7", "--b", "5", "--x", "2,2,5,0,0",
                        "--y", "4,4,0,2,2", "--json"});
    REQUIRE(trace.code == 0);
    json doc = json::parse(trace.out);
    CHECK(!doc.empty());
    for (const auto& m : doc) {
        CHECK((m["move"] == "fire" || m["move"] == "borrow"));
        CHECK(m["set"].is_array());
    }
}

TEST_CASE("render") {
    CliRun ascii = run({"render", "--a", "4", "--b", "3", "--config", "2,0,2"});
    CHECK(ascii.code == 0);
    CHECK(ascii.out.find('|') != std::string::npos);
    CHECK(ascii.out.find("(2)") != std::string::npos);

    std::string path = "cli_test_render.svg";
    CliRun svg = run({"render", "--a", "8", "--b", "5", "--path", "NENEENNEENEEE",
                      "--format", "svg", "--levels", "--out", path});
    CHECK(svg.code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str().find("<svg") != std::string::npos);
    std::remove(path.c_str());

    CHECK(run({"render", "--a", "4", "--b", "3"}).code == 1);
    CHECK(run({"render", "--a", "4", "--b", "3", "--config", "1,1,1",
               "--format", "png"}).code == 1);
}

TEST_CASE("verify") {
    CliRun r = run({"verify", "--a", "3", "--b", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"stabilize", "--a", "4", "--b", "2", "--k", "0", "--config", "1,1"}).code == 1);
    CHECK(run({"skeletal", "--a", "7", "--b", "5", "--k", "9", "--config", "0,0,0,0,0"}).code == 1);
    CHECK(run({"fire", "--a", "5", "--b", "3", "--config", "1,1,x", "--set", "1"}).code == 1);
    CHECK(run({"stabilize", "--a", "5", "--b", "3", "--k", "0", "--config", "5,5,5",
               "--wat", "1"}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE
