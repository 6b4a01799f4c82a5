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
#include "ratchip/labeled_path.hpp"

#include <algorithm>
#include <charconv>

namespace ratchip {

LabeledPath::LabeledPath(Chips a, Chips b, std::string steps, std::vector<int> labels)
    : a_(a), b_(b), steps_(std::move(steps)), labels_(std::move(labels)) {
    if (a < 1 || b < 1) throw InputError("path parameters must be positive");
    Chips norths = 0, easts = 0;
    for (char c : steps_) {
        if (c == 'N') ++norths;
        else if (c == 'E') ++easts;
        else throw InputError(std::string("invalid step character '") + c + "'");
    }
    if (norths != b) {
        throw InputError("labeled path must have exactly " + std::to_string(b) + " north steps");
    }
    if (easts < a) {
        throw InputError("labeled path must have at least " + std::to_string(a) + " east steps");
    }
    if (easts > a && steps_.back() != 'N') {
        throw InputError("a path running past x = " + std::to_string(a) +
                         " cannot carry east steps after its top north step");
    }
    if (static_cast<Chips>(labels_.size()) != b) {
        throw InputError("expected " + std::to_string(b) + " labels");
    }
    std::vector<char> seen(static_cast<std::size_t>(b) + 1, 0);
    for (int label : labels_) {
        if (label < 1 || label > b || seen[static_cast<std::size_t>(label)]) {
            throw InputError("labels must form a permutation of 1.." + std::to_string(b));
        }
        seen[static_cast<std::size_t>(label)] = 1;
    }
    // Within each run of consecutive norths, labels increase bottom to top.
    std::size_t row = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (steps_[i] != 'N') continue;
        if (i > 0 && steps_[i - 1] == 'N' && labels_[row] <= labels_[row - 1]) {
            throw InputError("labels must increase within each run of north steps");
        }
        ++row;
    }
}

LabeledPath LabeledPath::parse(Chips a, Chips b, std::string_view text) {
    std::string steps;
    std::vector<int> labels;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == 'E') {
            steps += 'E';
            ++i;
        } else if (c == 'N') {
            if (i + 1 >= text.size() || text[i + 1] != '(') {
                throw InputError("north step without '(label)' in labeled path text");
            }
            std::size_t close = text.find(')', i + 2);
            if (close == std::string_view::npos) {
                throw InputError("unterminated label in labeled path text");
            }
            std::string_view num = text.substr(i + 2, close - i - 2);
            int label = 0;
            auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), label);
            if (ec != std::errc{} || ptr != num.data() + num.size()) {
                throw InputError("malformed label '" + std::string(num) + "'");
            }
            steps += 'N';
            labels.push_back(label);
            i = close + 1;
        } else {
            throw InputError(std::string("invalid character '") + c + "' in labeled path text");
        }
    }
    return LabeledPath(a, b, std::move(steps), std::move(labels));
}

std::string LabeledPath::str() const {
    std::string out;
    std::size_t row = 0;
    for (char c : steps_) {
        if (c == 'N') {
            out += "N(" + std::to_string(labels_[row++]) + ")";
        } else {
            out += 'E';
        }
    }
    return out;
}

std::vector<Chips> LabeledPath::north_columns() const {
    std::vector<Chips> cols;
    cols.reserve(labels_.size());
    Chips x = 0;
    for (char c : steps_) {
        if (c == 'N') cols.push_back(x);
        else ++x;
    }
    return cols;
}

LatticePath LabeledPath::unlabeled() const {
    if (is_overflow()) {
        throw InputError("overflow path (a chip count exceeds a) has no unlabeled form");
    }
    return LatticePath(a_, b_, steps_);
}

LabeledPath lpath(const RatParams& p, const ChipConfig& d) {
    if (d.size() != p.vertex_count()) {
        throw InputError("configuration has " + std::to_string(d.size()) +
                         " entries but b = " + std::to_string(p.b()));
    }
    if (!d.nonnegative()) throw InputError("lpath requires a nonnegative configuration");
    std::vector<int> order = poorest_to_richest(d);
    std::string steps;
    Chips x = 0;
    for (int v : order) {
        for (; x < d.at(v); ++x) steps += 'E';
        steps += 'N';
    }
    for (; x < p.a(); ++x) steps += 'E';
    return LabeledPath(p.a(), p.b(), std::move(steps), std::move(order));
}

ChipConfig decode(const LabeledPath& q) {
    std::vector<Chips> counts(q.labels().size(), 0);
    std::vector<Chips> cols = q.north_columns();
    for (std::size_t row = 0; row < cols.size(); ++row) {
        counts[static_cast<std::size_t>(q.labels()[row] - 1)] = cols[row];
    }
    return ChipConfig(std::move(counts));
}

namespace {

// Rotate so that the first `t` steps move to the back. The cut must land
// after an east step (t == 0 is the identity); the caller guarantees the
// path ends in an east step so the seam never joins two north runs.
LabeledPath rotate_steps(const LabeledPath& q, std::size_t t) {
    if (t == 0 || t == q.steps().size()) {
        return q;
    }
    std::string steps = q.steps().substr(t) + q.steps().substr(0, t);
    std::size_t norths_cut = static_cast<std::size_t>(
        std::count(q.steps().begin(), q.steps().begin() + static_cast<std::ptrdiff_t>(t), 'N'));
    std::vector<int> labels(q.labels().begin() + static_cast<std::ptrdiff_t>(norths_cut),
                            q.labels().end());
    labels.insert(labels.end(), q.labels().begin(),
                  q.labels().begin() + static_cast<std::ptrdiff_t>(norths_cut));
    return LabeledPath(q.a(), q.b(), std::move(steps), std::move(labels));
}

}  // namespace

LabeledPath run_preserving_shift(const LabeledPath& q, Chips j) {
    if (!q.ends_in_east()) {
        throw InputError("run-preserving shifts require a path ending in an east step");
    }
    if (j < 0 || j >= q.a()) {
        throw InputError("shift amount " + std::to_string(j) + " out of range 0.." +
                         std::to_string(q.a() - 1));
    }
    // Locate the (j+1)-th east step from the end; it becomes the last step.
    Chips remaining = j + 1;
    for (std::size_t i = q.steps().size(); i-- > 0;) {
        if (q.steps()[i] == 'E' && --remaining == 0) {
            return rotate_steps(q, (i + 1) % q.steps().size());
        }
    }
    throw std::logic_error("east step count below a");
}

LabeledPath cyclic_shift(const LabeledPath& q, LatticePoint v) {
    LatticePoint cur;
    if (v == cur) return q;
    for (std::size_t i = 0; i < q.steps().size(); ++i) {
        if (q.steps()[i] == 'N') ++cur.y;
        else ++cur.x;
        if (cur == v) {
            if (i + 1 == q.steps().size()) return q;
            if (q.steps()[i] != 'E') {
                throw InputError("shift point is reached by a north step; the shift would break a run");
            }
            if (!q.ends_in_east()) {
                throw InputError("run-preserving shifts require a path ending in an east step");
            }
            return rotate_steps(q, i + 1);
        }
    }
    throw InputError("point (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                     ") does not lie on the path");
}

std::vector<int> run_multiset(const LabeledPath& q) {
    std::vector<int> runs;
    int len = 0;
    for (char c : q.steps()) {
        if (c == 'N') {
            ++len;
        } else if (len > 0) {
            runs.push_back(len);
            len = 0;
        }
    }
    if (len > 0) runs.push_back(len);
    std::sort(runs.begin(), runs.end());
    return runs;
}

std::vector<int> run_multiset(const LatticePath& q) {
    std::vector<int> runs;
    int len = 0;
    for (char c : q.steps()) {
        if (c == 'N') {
            ++len;
        } else if (len > 0) {
            runs.push_back(len);
            len = 0;
        }
    }
    if (len > 0) runs.push_back(len);
    std::sort(runs.begin(), runs.end());
    return runs;
}

bool is_k_skeletal_labeled(const LabeledPath& q, int k) {
    if (!q.ends_in_east()) {
        throw InputError("path encodes a chip count >= a; such paths are never k-skeletal");
    }
    return is_k_skeletal_path(q.unlabeled(), k);
}

LabeledPath find_k_skeletal_labeled(const LabeledPath& q, int k) {
    if (!q.ends_in_east()) {
        throw InputError("path encodes a chip count >= a; such paths are never k-skeletal");
    }
    for (Chips j = 0; j < q.a(); ++j) {
        LabeledPath candidate = run_preserving_shift(q, j);
        if (is_k_skeletal_path(candidate.unlabeled(), k)) return candidate;
    }
    throw std::logic_error("no k-skeletal shift found");
}

}  // namespace ratchip
