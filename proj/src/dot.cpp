#include "swlearn/dot.hpp"

#include <algorithm>
#include <sstream>

namespace swlearn {

namespace {

std::string quoted(const std::string& name) { return "\"" + name + "\""; }

std::string emit(const std::vector<std::string>& names, int initial,
                 const std::vector<LabeledEdge>& edges) {
    std::ostringstream out;
    out << "digraph automaton {\n";
    out << "  rankdir=LR;\n";
    out << "  __start [shape=point];\n";
    for (const auto& name : names) {
        out << "  " << quoted(name) << " [shape=circle];\n";
    }
    out << "  __start -> " << quoted(names[static_cast<std::size_t>(initial)]) << ";\n";
    for (const auto& e : edges) {
        out << "  " << quoted(names[static_cast<std::size_t>(e.src)]) << " -> "
            << quoted(names[static_cast<std::size_t>(e.dst)]) << " [label=\"" << e.label
            << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string to_dot(const HypothesisAutomaton& h) {
    std::vector<std::string> names(static_cast<std::size_t>(h.node_count()));
    for (int v = 0; v < h.node_count(); ++v) {
        names[static_cast<std::size_t>(v)] = "v'" + std::to_string(v);
    }
    return emit(names, h.initial(), h.edges());
}

std::string to_dot(const RestrictionAutomaton& g) {
    return emit(g.node_names, g.initial, g.edges);
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

// Reads "name" or bare name; advances past it.
std::string read_name(std::string_view& s) {
    s = strip(s);
    if (s.empty()) throw ParseError("dot: expected a node name");
    if (s.front() == '"') {
        const auto close = s.find('"', 1);
        if (close == std::string_view::npos) throw ParseError("dot: unterminated quote");
        std::string name(s.substr(1, close - 1));
        s.remove_prefix(close + 1);
        return name;
    }
    std::size_t end = 0;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t' && s[end] != ';' &&
           s[end] != '[' && s[end] != '-') {
        ++end;
    }
    std::string name(s.substr(0, end));
    s.remove_prefix(end);
    if (name.empty()) throw ParseError("dot: empty node name");
    return name;
}

} // namespace

ParsedDigraph parse_dot(std::string_view text) {
    ParsedDigraph out;
    std::istringstream in{std::string(text)};
    std::string raw;
    bool header_seen = false;
    bool closed = false;
    auto register_node = [&](const std::string& name) {
        if (std::find(out.node_names.begin(), out.node_names.end(), name) ==
            out.node_names.end()) {
            out.node_names.push_back(name);
        }
    };
    while (std::getline(in, raw)) {
        std::string_view line = strip(raw);
        if (line.empty()) continue;
        if (!header_seen) {
            if (!line.starts_with("digraph")) throw ParseError("dot: missing digraph header");
            header_seen = true;
            continue;
        }
        if (line == "}") {
            closed = true;
            continue;
        }
        if (line.starts_with("rankdir")) continue;
        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos) {
            // Node statement.
            std::string_view rest = line;
            const std::string name = read_name(rest);
            if (name != "__start") register_node(name);
            continue;
        }
        std::string_view lhs = line.substr(0, arrow);
        std::string_view rhs = line.substr(arrow + 2);
        const std::string src = read_name(lhs);
        const std::string dst = read_name(rhs);
        rhs = strip(rhs);
        if (src == "__start") {
            if (!out.initial.empty()) throw ParseError("dot: more than one initial marker");
            out.initial = dst;
            register_node(dst);
            continue;
        }
        const auto label_pos = rhs.find("label=\"");
        if (label_pos == std::string_view::npos) {
            throw ParseError("dot: edge " + src + " -> " + dst + " is missing its label");
        }
        std::string_view label_text = rhs.substr(label_pos + 7);
        const auto label_end = label_text.find('"');
        if (label_end == std::string_view::npos) throw ParseError("dot: unterminated label");
        int label = 0;
        try {
            label = std::stoi(std::string(label_text.substr(0, label_end)));
        } catch (const std::exception&) {
            throw ParseError("dot: edge label is not an integer");
        }
        register_node(src);
        register_node(dst);
        out.edges.emplace_back(src, dst, label);
    }
    if (!header_seen || !closed) throw ParseError("dot: truncated document");
    if (out.initial.empty()) throw ParseError("dot: no initial marker found");
    return out;
}

HypothesisAutomaton hypothesis_from_dot(std::string_view text) {
    const ParsedDigraph parsed = parse_dot(text);
    int alphabet = 1;
    for (const auto& [src, dst, label] : parsed.edges) alphabet = std::max(alphabet, label);

    auto index_of = [&](const std::string& name) {
        const auto it = std::find(parsed.node_names.begin(), parsed.node_names.end(), name);
        return static_cast<int>(it - parsed.node_names.begin());
    };
    HypothesisAutomaton h(parsed.node_names, index_of(parsed.initial), alphabet);
    for (const auto& [src, dst, label] : parsed.edges) {
        h.add_edge(index_of(src), index_of(dst), label);
    }
    return h;
}

} // namespace swlearn
