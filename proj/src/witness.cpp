#include "selp/witness.hpp"

#include <json.hpp>

#include "selp/error.hpp"

namespace selp {

GroundAtomView parse_ground_atom(const std::string& text) {
    GroundAtomView out;
    auto open = text.find('(');
    if (open == std::string::npos) {
        if (text.empty()) throw Error("empty atom");
        out.pred = text;
        return out;
    }
    if (open == 0) throw Error("atom has no predicate name: " + text);
    if (text.back() != ')') throw Error("unbalanced parentheses in atom: " + text);
    out.pred = text.substr(0, open);
    int depth = 0;
    std::string cur;
    for (size_t i = open + 1; i + 1 < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') {
            --depth;
            if (depth < 0) throw Error("unbalanced parentheses in atom: " + text);
        }
        if (c == ',' && depth == 0) {
            out.args.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw Error("unbalanced parentheses in atom: " + text);
    if (cur.empty()) throw Error("empty argument in atom: " + text);
    out.args.push_back(cur);
    return out;
}

namespace {

std::vector<std::string> string_list(const nlohmann::json& arr, const char* what) {
    if (!arr.is_array()) throw Error(std::string(what) + " is not an array");
    std::vector<std::string> out;
    for (const auto& item : arr) {
        if (!item.is_string()) throw Error(std::string(what) + " contains a non-string entry");
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

WitnessSet parse_witness_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid JSON: ") + e.what());
    }
    WitnessSet out;
    if (doc.is_array()) {
        for (const auto& w : doc) out.witnesses.push_back(string_list(w, "witness"));
        return out;
    }
    if (!doc.is_object() || !doc.contains("Call"))
        throw Error("expected a JSON array of witnesses or a solver output object with \"Call\"");
    const auto& calls = doc["Call"];
    if (!calls.is_array()) throw Error("\"Call\" is not an array");
    for (const auto& call : calls) {
        if (!call.is_object() || !call.contains("Witnesses")) continue;
        const auto& ws = call["Witnesses"];
        if (!ws.is_array()) throw Error("\"Witnesses\" is not an array");
        for (const auto& w : ws) {
            if (!w.is_object() || !w.contains("Value"))
                throw Error("witness entry has no \"Value\" array");
            out.witnesses.push_back(string_list(w["Value"], "witness \"Value\""));
        }
    }
    return out;
}

}  // namespace selp
