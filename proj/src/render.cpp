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
#include "ratchip/render.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace ratchip {

namespace {

struct Geometry {
    Chips a;
    Chips b;
    std::string steps;
    std::vector<int> labels;  // empty for unlabeled paths
};

struct NorthStep {
    Chips x;
    Chips y;  // starting row
    int label;  // 0 when unlabeled
};

struct Walk {
    Chips max_x = 0;
    std::vector<NorthStep> norths;
    std::vector<std::pair<Chips, Chips>> easts;          // (x, y): edge x -> x+1 at height y
    std::vector<std::pair<LatticePoint, Chips>> levels;  // visited point -> level
};

Walk walk(const Geometry& g) {
    Walk w;
    LatticePoint cur{0, 0};
    w.levels.push_back({cur, 0});
    std::size_t row = 0;
    for (char c : g.steps) {
        if (c == 'N') {
            int label = g.labels.empty() ? 0 : g.labels[row];
            w.norths.push_back({cur.x, cur.y, label});
            ++row;
            ++cur.y;
        } else {
            w.easts.push_back({cur.x, cur.y});
            ++cur.x;
        }
        w.max_x = std::max(w.max_x, cur.x);
        w.levels.push_back({cur, level(g.a, g.b, cur)});
    }
    w.max_x = std::max(w.max_x, g.a);
    return w;
}

std::string ascii_impl(const Geometry& g, RenderOptions opts) {
    Walk w = walk(g);
    const int cw = opts.show_levels ? 6 : 4;
    const auto cols = static_cast<std::size_t>(w.max_x) + 1;
    const std::size_t width = cols * static_cast<std::size_t>(cw) + 4;
    const bool overflow = w.max_x > g.a;

    auto node_col = [&](Chips x) { return static_cast<std::size_t>(x) * static_cast<std::size_t>(cw); };

    std::vector<std::string> node_lines(static_cast<std::size_t>(g.b) + 1, std::string(width, ' '));
    std::vector<std::string> strip_lines(static_cast<std::size_t>(g.b), std::string(width, ' '));
    auto node_line = [&](Chips y) -> std::string& { return node_lines[static_cast<std::size_t>(y)]; };

    for (Chips y = 0; y <= g.b; ++y) {
        for (Chips x = 0; x <= w.max_x; ++x) {
            node_line(y)[node_col(x)] = (overflow && x == g.a) ? '#' : '.';
        }
    }
    for (auto [x, y] : w.easts) {
        for (int i = 1; i < cw; ++i) node_line(y)[node_col(x) + static_cast<std::size_t>(i)] = '-';
        node_line(y)[node_col(x)] = '+';
        node_line(y)[node_col(x + 1)] = '+';
    }
    for (const auto& n : w.norths) {
        node_line(n.y)[node_col(n.x)] = '+';
        node_line(n.y + 1)[node_col(n.x)] = '+';
        auto& strip = strip_lines[static_cast<std::size_t>(n.y)];
        strip[node_col(n.x)] = '|';
        if (opts.show_labels && n.label > 0) {
            std::string tag = "(" + std::to_string(n.label) + ")";
            for (std::size_t i = 0; i < tag.size() && node_col(n.x) + 1 + i < width; ++i) {
                strip[node_col(n.x) + 1 + i] = tag[i];
            }
        }
    }
    // The diagonal bx = ay, one marker per strip.
    for (Chips y = 0; y < g.b; ++y) {
        double xm = static_cast<double>(g.a) * (static_cast<double>(y) + 0.5) / static_cast<double>(g.b);
        auto col = static_cast<std::size_t>(std::llround(xm * cw));
        if (col < width && strip_lines[static_cast<std::size_t>(y)][col] == ' ') {
            strip_lines[static_cast<std::size_t>(y)][col] = '/';
        }
    }
    if (opts.show_levels) {
        for (const auto& [pt, lvl] : w.levels) {
            std::string tag = std::to_string(lvl);
            for (std::size_t i = 0; i < tag.size() && node_col(pt.x) + i < width; ++i) {
                node_line(pt.y)[node_col(pt.x) + i] = tag[i];
            }
        }
    }

    std::string out;
    for (Chips y = g.b; y >= 0; --y) {
        std::string& line = node_line(y);
        line.erase(line.find_last_not_of(' ') + 1);
        out += line;
        out += '\n';
        if (y > 0) {
            std::string& strip = strip_lines[static_cast<std::size_t>(y - 1)];
            strip.erase(strip.find_last_not_of(' ') + 1);
            out += strip;
            out += '\n';
        }
    }
    return out;
}

std::string svg_impl(const Geometry& g, RenderOptions opts) {
    Walk w = walk(g);
    const Chips unit = 40;
    const Chips margin = 50;
    const bool overflow = w.max_x > g.a;
    auto px = [&](double x) { return margin + x * unit; };
    auto py = [&](double y) { return margin + (static_cast<double>(g.b) - y) * unit; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << 2 * margin + unit * w.max_x << "\" height=\"" << 2 * margin + unit * g.b << "\">\n";

    for (Chips x = 0; x <= w.max_x; ++x) {
        svg << "  <line x1=\"" << px(static_cast<double>(x)) << "\" y1=\"" << py(0)
            << "\" x2=\"" << px(static_cast<double>(x)) << "\" y2=\"" << py(static_cast<double>(g.b))
            << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
    for (Chips y = 0; y <= g.b; ++y) {
        svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(static_cast<double>(y))
            << "\" x2=\"" << px(static_cast<double>(w.max_x)) << "\" y2=\"" << py(static_cast<double>(y))
            << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
    svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(static_cast<double>(g.a))
        << "\" y2=\"" << py(static_cast<double>(g.b))
        << "\" stroke=\"#5b8dd9\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
    if (overflow) {
        svg << "  <line x1=\"" << px(static_cast<double>(g.a)) << "\" y1=\"" << py(0)
            << "\" x2=\"" << px(static_cast<double>(g.a)) << "\" y2=\"" << py(static_cast<double>(g.b))
            << "\" stroke=\"#cc3333\" stroke-width=\"2\" stroke-dasharray=\"3,3\"/>\n";
    }

    svg << "  <polyline fill=\"none\" stroke=\"#222222\" stroke-width=\"3\" points=\"";
    for (std::size_t i = 0; i < w.levels.size(); ++i) {
        if (i > 0) svg << ' ';
        svg << px(static_cast<double>(w.levels[i].first.x)) << ','
            << py(static_cast<double>(w.levels[i].first.y));
    }
    svg << "\"/>\n";

    if (opts.show_labels) {
        for (const auto& n : w.norths) {
            if (n.label == 0) continue;
            svg << "  <text x=\"" << px(static_cast<double>(n.x)) + 6 << "\" y=\""
                << py(static_cast<double>(n.y) + 0.5) + 5
                << "\" font-size=\"16\" font-family=\"sans-serif\">" << n.label << "</text>\n";
        }
    }
    if (opts.show_levels) {
        for (const auto& [pt, lvl] : w.levels) {
            svg << "  <text x=\"" << px(static_cast<double>(pt.x)) + 3 << "\" y=\""
                << py(static_cast<double>(pt.y)) - 4
                << "\" font-size=\"11\" font-family=\"sans-serif\" fill=\"#555555\">" << lvl
                << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace

std::string render_ascii(const LatticePath& q, RenderOptions opts) {
    return ascii_impl({q.a(), q.b(), q.steps(), {}}, opts);
}

std::string render_ascii(const LabeledPath& q, RenderOptions opts) {
    return ascii_impl({q.a(), q.b(), q.steps(), q.labels()}, opts);
}

std::string render_svg(const LatticePath& q, RenderOptions opts) {
    return svg_impl({q.a(), q.b(), q.steps(), {}}, opts);
}

std::string render_svg(const LabeledPath& q, RenderOptions opts) {
    return svg_impl({q.a(), q.b(), q.steps(), q.labels()}, opts);
}

}  // namespace ratchip
