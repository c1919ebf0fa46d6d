// Copyright 2026 The bellrate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellrate/protocol_text.h"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace bellrate {

namespace {

void write(const ProtocolTree &tree, size_t depth, std::string &out) {
    out.append(2 * depth, ' ');
    std::visit(
        [&](const auto &node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ParityCheckNode>) {
                out += "PC " + node.mask.str() + "\n";
                write(node.child0, depth + 1, out);
                write(node.child1, depth + 1, out);
            } else if constexpr (std::is_same_v<T, MeasureNode>) {
                out += "MEAS " + std::to_string(node.pair) + (node.which == BellBit::amp ? " amp\n" : " phase\n");
                write(node.child0, depth + 1, out);
                write(node.child1, depth + 1, out);
            } else if constexpr (std::is_same_v<T, RelabelNode>) {
                out += "RELABEL " + node.map.linear_bits() + ":" + node.map.translation_bits() + "\n";
                write(node.child, depth + 1, out);
            } else if constexpr (std::is_same_v<T, HashNode>) {
                out += "HASH\n";
            } else {
                out += "DISCARD\n";
            }
        },
        tree->op);
}

struct Line {
    size_t depth;
    std::string_view body;
    size_t number;
};

[[noreturn]] void fail(const Line &line, const std::string &why) {
    throw std::invalid_argument("Protocol text line " + std::to_string(line.number) + ": " + why);
}

LabelMap parse_relabel(const Line &line, std::string_view arg) {
    auto colon = arg.find(':');
    if (colon == std::string_view::npos) {
        fail(line, "RELABEL needs '<matrix bits>:<translation bits>'.");
    }
    std::string_view matrix = arg.substr(0, colon);
    std::string_view shift = arg.substr(colon + 1);
    size_t n = shift.size();
    if (n == 0 || n % 2 != 0 || matrix.size() != n * n) {
        fail(line, "RELABEL matrix must be 2m x 2m for a 2m-bit translation.");
    }
    size_t pairs = n / 2;
    std::vector<LabelIndex> rows(n, 0);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            char ch = matrix[r * n + c];
            if (ch != '0' && ch != '1') {
                fail(line, "RELABEL matrix bits must be '0' or '1'.");
            }
            if (ch == '1') {
                rows[r] |= LabelIndex{1} << string_position_bit(pairs, c);
            }
        }
    }
    try {
        return LabelMap::from_rows(pairs, rows, LabelString::parse(shift).index());
    } catch (const std::invalid_argument &e) {
        fail(line, e.what());
    }
}

struct Parser {
    std::vector<Line> lines;
    size_t next = 0;

    ProtocolTree node(size_t depth) {
        if (next >= lines.size()) {
            throw std::invalid_argument("Protocol text ended before the tree was complete.");
        }
        const Line &line = lines[next++];
        if (line.depth != depth) {
            fail(line, "expected indentation depth " + std::to_string(depth) + ", got " + std::to_string(line.depth) + ".");
        }
        std::string_view body = line.body;
        auto space = body.find(' ');
        std::string_view op = body.substr(0, space);
        std::string_view arg = space == std::string_view::npos ? std::string_view{} : body.substr(space + 1);
        if (op == "HASH" || op == "DISCARD") {
            if (!arg.empty() || space != std::string_view::npos) {
                fail(line, std::string(op) + " takes no arguments.");
            }
            return op == "HASH" ? protocol::hash() : protocol::discard();
        }
        if (op == "PC") {
            ParityMask mask = [&] {
                try {
                    return ParityMask::parse(arg);
                } catch (const std::invalid_argument &e) {
                    fail(line, e.what());
                }
            }();
            auto c0 = node(depth + 1);
            auto c1 = node(depth + 1);
            return protocol::parity_check(mask, c0, c1);
        }
        if (op == "MEAS") {
            auto sp = arg.find(' ');
            if (sp == std::string_view::npos) {
                fail(line, "MEAS needs '<pair> <amp|phase>'.");
            }
            std::string_view pair_text = arg.substr(0, sp);
            std::string_view which_text = arg.substr(sp + 1);
            size_t pair = 0;
            auto r = std::from_chars(pair_text.data(), pair_text.data() + pair_text.size(), pair);
            if (r.ec != std::errc() || r.ptr != pair_text.data() + pair_text.size() || pair_text.empty()) {
                fail(line, "bad pair index.");
            }
            BellBit which;
            if (which_text == "amp") {
                which = BellBit::amp;
            } else if (which_text == "phase") {
                which = BellBit::phase;
            } else {
                fail(line, "measured bit must be 'amp' or 'phase'.");
            }
            auto c0 = node(depth + 1);
            auto c1 = node(depth + 1);
            return protocol::measure(pair, which, c0, c1);
        }
        if (op == "RELABEL") {
            LabelMap map = parse_relabel(line, arg);
            return protocol::relabel(map, node(depth + 1));
        }
        fail(line, "unknown node '" + std::string(op) + "'.");
    }
};

}  // namespace

std::string to_text(const ProtocolTree &tree) {
    std::string out;
    write(tree, 0, out);
    return out;
}

ProtocolTree tree_from_text(std::string_view text) {
    Parser parser;
    size_t number = 0;
    while (!text.empty()) {
        number++;
        auto nl = text.find('\n');
        if (nl == std::string_view::npos) {
            throw std::invalid_argument("Protocol text line " + std::to_string(number) + " is missing its newline.");
        }
        std::string_view raw = text.substr(0, nl);
        text.remove_prefix(nl + 1);
        size_t spaces = raw.find_first_not_of(' ');
        Line line{0, {}, number};
        if (spaces == std::string_view::npos || spaces % 2 != 0) {
            fail(line, "blank line or odd indentation.");
        }
        line.depth = spaces / 2;
        line.body = raw.substr(spaces);
        parser.lines.push_back(line);
    }
    auto tree = parser.node(0);
    if (parser.next != parser.lines.size()) {
        fail(parser.lines[parser.next], "trailing lines after a complete tree.");
    }
    return tree;
}

}  // namespace bellrate
