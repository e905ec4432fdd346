#include "swlearn/spec_io.hpp"

#include <fstream>

namespace swlearn {

namespace {

using nlohmann::json;

const json& require(const json& doc, const std::string& key, const std::string& where) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw ParseError(where + ": missing field \"" + key + "\"");
    }
    return doc.at(key);
}

int require_int(const json& doc, const std::string& key, const std::string& where) {
    const json& v = require(doc, key, where);
    if (!v.is_number_integer()) {
        throw ParseError(where + ": field \"" + key + "\" must be an integer");
    }
    return v.get<int>();
}

} // namespace

SwitchedSystemSpec spec_from_json(const json& doc) {
    SwitchedSystemSpec spec;
    spec.subsystem_count = require_int(doc, "N", "spec");
    spec.dimension = require_int(doc, "d", "spec");
    spec.order = require_int(doc, "m", "spec");
    spec.max_word_length = require_int(doc, "M", "spec");

    const json& subsystems = require(doc, "subsystems", "spec");
    if (!subsystems.is_array()) throw ParseError("spec: field \"subsystems\" must be an array");
    for (std::size_t idx = 0; idx < subsystems.size(); ++idx) {
        const std::string where = "subsystems[" + std::to_string(idx) + "]";
        const json& entry = subsystems.at(idx);
        PolynomialVectorField field;
        field.subsystem = require_int(entry, "p", where);
        field.dimension = spec.dimension;
        field.order = spec.order;
        const json& coeffs = require(entry, "coeffs", where);
        if (!coeffs.is_array()) throw ParseError(where + ": field \"coeffs\" must be an array");
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const json& row = coeffs.at(i);
            if (!row.is_array()) {
                throw ParseError(where + ".coeffs[" + std::to_string(i) + "] must be an array");
            }
            std::vector<double> values;
            for (const json& v : row) {
                if (!v.is_number()) {
                    throw ParseError(where + ".coeffs[" + std::to_string(i) +
                                     "] must contain numbers");
                }
                values.push_back(v.get<double>());
            }
            field.coeffs.push_back(std::move(values));
        }
        spec.fields.push_back(std::move(field));
    }

    const json& automaton = require(doc, "automaton", "spec");
    const json& nodes = require(automaton, "nodes", "automaton");
    if (!nodes.is_array()) throw ParseError("automaton: field \"nodes\" must be an array");
    for (const json& n : nodes) {
        if (!n.is_string()) throw ParseError("automaton: node names must be strings");
        spec.automaton.node_names.push_back(n.get<std::string>());
    }
    auto node_index = [&](const std::string& name, const std::string& where) {
        for (std::size_t i = 0; i < spec.automaton.node_names.size(); ++i) {
            if (spec.automaton.node_names[i] == name) return static_cast<int>(i);
        }
        throw ParseError(where + ": unknown node \"" + name + "\"");
    };
    const json& initial = require(automaton, "initial", "automaton");
    if (!initial.is_string()) throw ParseError("automaton: field \"initial\" must be a string");
    spec.automaton.initial = node_index(initial.get<std::string>(), "automaton.initial");
    spec.automaton.alphabet_size = spec.subsystem_count;

    const json& edges = require(automaton, "edges", "automaton");
    if (!edges.is_array()) throw ParseError("automaton: field \"edges\" must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "automaton.edges[" + std::to_string(i) + "]";
        const json& e = edges.at(i);
        const json& src = require(e, "src", where);
        const json& dst = require(e, "dst", where);
        if (!src.is_string() || !dst.is_string()) {
            throw ParseError(where + ": \"src\" and \"dst\" must be node names");
        }
        LabeledEdge edge;
        edge.src = node_index(src.get<std::string>(), where);
        edge.dst = node_index(dst.get<std::string>(), where);
        edge.label = require_int(e, "label", where);
        spec.automaton.edges.push_back(edge);
    }

    try {
        spec.validate();
    } catch (const Error& e) {
        throw ParseError(std::string("spec: ") + e.what());
    }
    return spec;
}

json spec_to_json(const SwitchedSystemSpec& spec) {
    json doc;
    doc["N"] = spec.subsystem_count;
    doc["d"] = spec.dimension;
    doc["m"] = spec.order;
    doc["M"] = spec.max_word_length;
    doc["subsystems"] = json::array();
    for (const auto& f : spec.fields) {
        doc["subsystems"].push_back({{"p", f.subsystem}, {"coeffs", f.coeffs}});
    }
    json automaton;
    automaton["nodes"] = spec.automaton.node_names;
    automaton["initial"] = spec.automaton.node_names[static_cast<std::size_t>(spec.automaton.initial)];
    automaton["edges"] = json::array();
    for (const auto& e : spec.automaton.edges) {
        automaton["edges"].push_back(
            {{"src", spec.automaton.node_names[static_cast<std::size_t>(e.src)]},
             {"dst", spec.automaton.node_names[static_cast<std::size_t>(e.dst)]},
             {"label", e.label}});
    }
    doc["automaton"] = std::move(automaton);
    return doc;
}

SwitchedSystemSpec load_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError("spec file " + path.string() + " is not valid JSON: " + e.what());
    }
    return spec_from_json(doc);
}

json models_report(const std::vector<PolynomialVectorField>& fields,
                   const OracleStats& stats) {
    json doc;
    doc["eval_queries"] = stats.eval_queries;
    doc["subsystems"] = json::array();
    for (const auto& f : fields) {
        doc["subsystems"].push_back({{"p", f.subsystem}, {"coeffs", f.coeffs}});
    }
    if (!fields.empty()) {
        doc["d"] = fields.front().dimension;
        doc["m"] = fields.front().order;
        doc["N"] = static_cast<int>(fields.size());
    }
    return doc;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw Error("failed writing " + path.string());
}

} // namespace swlearn
