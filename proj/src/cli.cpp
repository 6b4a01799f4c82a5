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
#include "ratchip/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratchip/complete_model.hpp"
#include "ratchip/core_model.hpp"
#include "ratchip/group.hpp"
#include "ratchip/labeled_path.hpp"
#include "ratchip/lattice_path.hpp"
#include "ratchip/oracles.hpp"
#include "ratchip/render.hpp"
#include "ratchip/skeletal.hpp"

namespace ratchip {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json move_json(const Move& m) {
    return json{{"move", m.kind == Move::Kind::Fire ? "fire" : "borrow"}, {"set", m.verts}};
}

/// Entries 0..max_chip at every vertex, odometer order.
template <class Fn>
void for_each_config(int b, Chips max_chip, Fn&& fn) {
    std::vector<Chips> v(static_cast<std::size_t>(b), 0);
    for (;;) {
        fn(ChipConfig(v));
        std::size_t i = 0;
        while (i < v.size() && v[i] == max_chip) {
            v[i] = 0;
            ++i;
        }
        if (i == v.size()) break;
        ++v[i];
    }
}

struct CliState {
    Chips a = 0;
    Chips b = 0;
    Chips c = 1;
    int k = 0;
    std::string config;
    std::string config2;
    std::string graph_file;
    std::string set;
    std::string strategy = "greedy-max";
    std::string what;
    std::string path;
    std::string labeled;
    std::string format = "ascii";
    std::string out_file;
    Chips max_chips = -1;
    bool json_out = false;
    bool levels = false;
    bool no_labels = false;
};

void emit_config(const CliState& st, std::ostream& out, const ChipConfig& r) {
    if (st.json_out) {
        out << json{{"config", r.counts()}}.dump() << "\n";
    } else {
        out << r.str() << "\n";
    }
}

int run_verify(const CliState& st, std::ostream& out) {
    RatParams rp(st.a, st.b);
    SinkedGraph complete = SinkedGraph::complete(rp.vertex_count());
    GeneralParams gp(st.a, st.b, 1);
    Chips max_chip = st.max_chips >= 0 ? st.max_chips : st.a;
    const int b = rp.vertex_count();
    long mismatches = 0;
    long configs = 0;

    for_each_config(b, max_chip, [&](const ChipConfig& d) {
        ++configs;
        bool in_band = true;
        for (Chips c : d.counts()) in_band = in_band && c < rp.a();
        for (int k = 0; k < b; ++k) {
            bool fast_stable = is_k_stable(rp, d, k);
            if (fast_stable != brute_is_k_stable(complete, gp, d, k) ||
                fast_stable != is_k_stable_general(complete, gp, d, k)) {
                ++mismatches;
                out << "MISMATCH stability at " << d.str() << " k=" << k << "\n";
            }
            bool fast_skel = is_k_skeletal_config(rp, d, k);
            if (fast_skel != brute_is_k_skeletal(rp, d, k)) {
                ++mismatches;
                out << "MISMATCH skeletality at " << d.str() << " k=" << k << "\n";
            }
            if (in_band && fast_skel != is_k_skeletal_labeled(lpath(rp, d), k)) {
                ++mismatches;
                out << "MISMATCH path-route skeletality at " << d.str() << " k=" << k << "\n";
            }
        }
        bool park = is_superstable_parking(rp, d);
        if (park != brute_superstable_parking(rp, d) || park != is_k_stable(rp, d, b - 1)) {
            ++mismatches;
            out << "MISMATCH parking at " << d.str() << "\n";
        }
    });
    out << "configurations: " << configs << " in {0.." << max_chip << "}^" << b
        << ", k = 0.." << (b - 1) << ": " << (mismatches ? "FAILED" : "ok") << "\n";

    long paths = 0;
    long path_mismatches = 0;
    for_each_path(rp.a(), rp.b(), [&](const LatticePath& q) {
        ++paths;
        for (int k = 0; k < b; ++k) {
            if (is_k_skeletal_path(q, k) != brute_path_skeletal(q, k)) {
                ++path_mismatches;
                out << "MISMATCH path skeletality at " << q.str() << " k=" << k << "\n";
            }
            if (is_k_stable_path(q, k) != (pos_stat(q) > k)) {
                ++path_mismatches;
                out << "MISMATCH pos statistic at " << q.str() << " k=" << k << "\n";
            }
        }
    });
    out << "paths: " << paths << ", k = 0.." << (b - 1) << ": "
        << (path_mismatches ? "FAILED" : "ok") << "\n";

    if (mismatches + path_mismatches == 0) {
        out << "all checks passed for a=" << st.a << " b=" << st.b << "\n";
        return 0;
    }
    return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quantized rational chip-firing toolkit"};
    app.require_subcommand(1);
    CliState st;
    int exit_code = 0;

    auto add_ab = [&](CLI::App* sub) {
        sub->add_option("--a", st.a, "slope numerator a")->required();
        sub->add_option("--b", st.b, "slope denominator b (= vertex count)")->required();
    };
    auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", st.json_out, "machine-readable output");
    };

    auto resolve_graph = [&]() -> std::pair<SinkedGraph, GeneralParams> {
        if (!st.graph_file.empty()) {
            return {SinkedGraph::parse(read_file(st.graph_file)), GeneralParams(st.a, st.b, st.c)};
        }
        if (st.c != 1) {
            throw InputError("c must be 1 on the implicit complete graph; pass --graph for general parameters");
        }
        RatParams rp(st.a, st.b);  // validates coprimality
        return {SinkedGraph::complete(rp.vertex_count()), GeneralParams(st.a, st.b, 1)};
    };

    // fire / borrow
    for (bool is_fire : {true, false}) {
        auto* sub = app.add_subcommand(is_fire ? "fire" : "borrow",
                                       is_fire ? "cluster-fire a vertex set"
                                               : "borrow (inverse fire) a vertex set");
        add_ab(sub);
        sub->add_option("--c", st.c, "sink edge capacity (general model only)");
        sub->add_option("--graph", st.graph_file, "graph file; omit for the complete graph");
        sub->add_option("--config", st.config, "chip configuration")->required();
        sub->add_option("--set", st.set, "vertex set, e.g. 1,2")->required();
        add_json(sub);
        sub->callback([&, is_fire]() {
            auto [g, gp] = resolve_graph();
            ChipConfig d = ChipConfig::parse(st.config);
            VertexSet s = parse_vertex_set(st.set);
            ChipConfig r = is_fire ? cluster_fire(g, gp, d, s) : borrow_general(g, gp, d, s);
            emit_config(st, out, r);
        });
    }

    {
        auto* sub = app.add_subcommand("stabilize", "drive a configuration k-stable by legal fires");
        add_ab(sub);
        sub->add_option("--c", st.c, "sink edge capacity (general model only)");
        sub->add_option("--graph", st.graph_file, "graph file; omit for the complete graph");
        sub->add_option("--k", st.k, "stability order k")->required();
        sub->add_option("--config", st.config, "chip configuration")->required();
        sub->add_option("--strategy", st.strategy, "greedy-max | lex-min | random:SEED");
        add_json(sub);
        sub->callback([&]() {
            auto [g, gp] = resolve_graph();
            StrategySpec strat = StrategySpec::parse(st.strategy);
            StabilizeResult res = k_stabilize_general(g, gp, ChipConfig::parse(st.config), st.k, strat);
            if (st.json_out) {
                json trace = json::array();
                for (const auto& s : res.fired) trace.push_back(s);
                out << json{{"config", res.config.counts()},
                            {"strategy", strat.str()},
                            {"trace", trace}}.dump()
                    << "\n";
            } else {
                out << res.config.str() << "\n";
                err << "strategy: " << strat.str() << "\n";
            }
        });
    }

    {
        auto* sub = app.add_subcommand("skeletal", "the unique k-skeletal configuration equivalent to the input");
        add_ab(sub);
        sub->add_option("--k", st.k, "skeletality order k")->required();
        sub->add_option("--config", st.config, "chip configuration")->required();
        add_json(sub);
        sub->callback([&]() {
            RatParams rp(st.a, st.b);
            emit_config(st, out, find_k_skeletal_config(rp, ChipConfig::parse(st.config), st.k));
        });
    }

    {
        auto* sub = app.add_subcommand("superstabilize", "the unique superstable configuration equivalent to the input");
        add_ab(sub);
        sub->add_option("--config", st.config, "chip configuration")->required();
        add_json(sub);
        sub->callback([&]() {
            RatParams rp(st.a, st.b);
            emit_config(st, out, superstabilize(rp, ChipConfig::parse(st.config)));
        });
    }

    {
        auto* sub = app.add_subcommand("dual", "superstable <-> 0-skeletal complement");
        add_ab(sub);
        sub->add_option("--config", st.config, "chip configuration")->required();
        add_json(sub);
        sub->callback([&]() {
            RatParams rp(st.a, st.b);
            emit_config(st, out, dual_config(rp, ChipConfig::parse(st.config)));
        });
    }

    {
        auto* sub = app.add_subcommand("count", "exact counts");
        add_ab(sub);
        sub->add_option("--what", st.what, "orbits | dyck | skeletal | labeled | paths")->required();
        add_json(sub);
        sub->callback([&]() {
            RatParams rp(st.a, st.b);
            Chips value;
            if (st.what == "orbits" || st.what == "dyck") {
                value = rational_catalan(rp);
            } else if (st.what == "skeletal" || st.what == "labeled") {
                value = checked_pow(rp.a(), rp.b() - 1);
            } else if (st.what == "paths") {
                value = binomial(rp.a() + rp.b(), rp.a());
            } else {
                throw InputError("unknown count '" + st.what + "'");
            }
            if (st.json_out) out << json{{"count", value}}.dump() << "\n";
            else out << value << "\n";
        });
    }

    {
        auto* sub = app.add_subcommand("enumerate", "stream objects, one per line");
        add_ab(sub);
        sub->add_option("--what", st.what,
                        "dyck | paths | skeletal-paths | skeletal-configs | superstable")->required();
        sub->add_option("--k", st.k, "skeletality order (skeletal-* only)");
        add_json(sub);
        sub->callback([&]() {
            RatParams rp(st.a, st.b);
            std::vector<std::string> lines;
            if (st.what == "dyck") {
                for_each_path(rp.a(), rp.b(), [&](const LatticePath& q) {
                    if (is_dyck(q)) lines.push_back(q.str());
                });
            } else if (st.what == "paths") {
                for_each_path(rp.a(), rp.b(), [&](const LatticePath& q) { lines.push_back(q.str()); });
            } else if (st.what == "skeletal-paths") {
                for (const auto& q : enumerate_k_skeletal(rp, st.k)) lines.push_back(q.str());
            } else if (st.what == "skeletal-configs" || st.what == "superstable") {
                if (checked_pow(rp.a(), rp.b()) > 20'000'000) {
                    throw ResourceError("configuration space too large to enumerate");
                }
                for_each_config(rp.vertex_count(), rp.a() - 1, [&](const ChipConfig& d) {
                    bool keep = (st.what == "superstable") ? is_superstable_parking(rp, d)
                                                           : is_k_skeletal_config(rp, d, st.k);
                    if (keep) lines.push_back(d.str());
                });
            } else {
                throw InputError("unknown enumeration '" + st.what + "'");
            }
            if (st.json_out) {
                out << json(lines).dump() << "\n";
            } else {
                for (const auto& line : lines) out << line << "\n";
            }
        });
    }

    {
        auto* grp = app.add_subcommand("group", "critical group arithmetic");
        grp->require_subcommand(1);

        auto* canon = grp->add_subcommand("canon", "canonical class representative");
        add_ab(canon);
        canon->add_option("--config", st.config, "chip configuration")->required();
        add_json(canon);
        canon->callback([&]() {
            RatParams rp(st.a, st.b);
            emit_config(st, out, canonical_rep(rp, ChipConfig::parse(st.config)).rep());
        });

        auto* addcmd = grp->add_subcommand("add", "sum of two classes");
        add_ab(addcmd);
        addcmd->add_option("--x", st.config, "first configuration")->required();
        addcmd->add_option("--y", st.config2, "second configuration")->required();
        add_json(addcmd);
        addcmd->callback([&]() {
            RatParams rp(st.a, st.b);
            GroupElement x = canonical_rep(rp, ChipConfig::parse(st.config));
            GroupElement y = canonical_rep(rp, ChipConfig::parse(st.config2));
            emit_config(st, out, add(x, y).rep());
        });

        auto* equiv = grp->add_subcommand("equiv", "fire/borrow equivalence of two configurations");
        add_ab(equiv);
        equiv->add_option("--x", st.config, "first configuration")->required();
        equiv->add_option("--y", st.config2, "second configuration")->required();
        add_json(equiv);
        equiv->callback([&]() {
            RatParams rp(st.a, st.b);
            bool eq = equivalent(rp, ChipConfig::parse(st.config), ChipConfig::parse(st.config2));
            if (st.json_out) out << json{{"equivalent", eq}}.dump() << "\n";
            else out << (eq ? "true" : "false") << "\n";
        });

        auto* trace = grp->add_subcommand("trace", "an all-legal move sequence between equivalent configurations");
        add_ab(trace);
        trace->add_option("--x", st.config, "source configuration")->required();
        trace->add_option("--y", st.config2, "target configuration")->required();
        add_json(trace);
        trace->callback([&]() {
            RatParams rp(st.a, st.b);
            auto moves = legal_move_sequence(rp, ChipConfig::parse(st.config),
                                             ChipConfig::parse(st.config2));
            if (st.json_out) {
                json arr = json::array();
                for (const auto& m : moves) arr.push_back(move_json(m));
                out << arr.dump() << "\n";
            } else {
                for (const auto& m : moves) {
                    out << (m.kind == Move::Kind::Fire ? "fire " : "borrow ")
                        << vertex_set_str(m.verts) << "\n";
                }
            }
        });
    }

    {
        auto* sub = app.add_subcommand("render", "draw a path as an ascii grid or SVG");
        add_ab(sub);
        sub->add_option("--config", st.config, "configuration to encode and draw");
        sub->add_option("--path", st.path, "unlabeled step string, e.g. NENEENNEENEEE");
        sub->add_option("--labeled", st.labeled, "labeled step string, e.g. N(2)EEN(1)N(3)EE");
        sub->add_option("--format", st.format, "ascii | svg");
        sub->add_flag("--levels", st.levels, "annotate visited lattice points with levels");
        sub->add_flag("--no-labels", st.no_labels, "suppress north-step labels");
        sub->add_option("--out", st.out_file, "write to file instead of stdout");
        sub->callback([&]() {
            RenderOptions opts{st.levels, !st.no_labels};
            int sources = (!st.config.empty()) + (!st.path.empty()) + (!st.labeled.empty());
            if (sources != 1) {
                throw InputError("render needs exactly one of --config, --path, --labeled");
            }
            std::string doc;
            bool svg = st.format == "svg";
            if (!svg && st.format != "ascii") throw InputError("unknown format '" + st.format + "'");
            if (!st.config.empty()) {
                RatParams rp(st.a, st.b);
                LabeledPath q = lpath(rp, ChipConfig::parse(st.config));
                doc = svg ? render_svg(q, opts) : render_ascii(q, opts);
            } else if (!st.path.empty()) {
                LatticePath q = LatticePath::parse(st.a, st.b, st.path);
                doc = svg ? render_svg(q, opts) : render_ascii(q, opts);
            } else {
                LabeledPath q = LabeledPath::parse(st.a, st.b, st.labeled);
                doc = svg ? render_svg(q, opts) : render_ascii(q, opts);
            }
            if (st.out_file.empty()) {
                out << doc;
            } else {
                std::ofstream f(st.out_file);
                if (!f) throw InputError("cannot write file '" + st.out_file + "'");
                f << doc;
                err << "wrote " << st.out_file << "\n";
            }
        });
    }

    {
        auto* sub = app.add_subcommand("verify", "run the oracle agreement suite for (a, b)");
        add_ab(sub);
        sub->add_option("--max-chips", st.max_chips, "sweep configurations in {0..M}^b (default M = a)");
        sub->callback([&]() { exit_code = run_verify(st, out); });
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ratchip");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace ratchip
