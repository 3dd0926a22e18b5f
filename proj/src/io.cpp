#include "slsc/io.hpp"

#include "slsc/error.hpp"
#include "slsc/formula.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace slsc {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& message)
{
    throw Error(ErrorCode::InvalidDocument, message);
}

std::vector<std::string> string_array(const json& value, const std::string& where)
{
    if (!value.is_array()) {
        invalid(where + " must be an array of strings");
    }
    std::vector<std::string> out;
    for (const auto& item : value) {
        if (!item.is_string()) {
            invalid(where + " must be an array of strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace

ModelDocument parse_document(std::string_view text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
        throw Error(ErrorCode::ParseError, "malformed JSON", position_in(text, std::min(offset, text.size())));
    }
    if (!root.is_object()) {
        invalid("top level must be an object");
    }
    for (const auto& [key, value] : root.items()) {
        if (key != "atoms" && key != "simplices" && key != "closure" && key != "description") {
            invalid("unexpected key '" + key + "'");
        }
    }
    ModelDocument doc;
    if (!root.contains("atoms")) {
        invalid("missing key 'atoms'");
    }
    doc.atoms = string_array(root["atoms"], "'atoms'");
    if (!root.contains("simplices") || !root["simplices"].is_array()) {
        invalid("'simplices' must be an array");
    }
    std::size_t index = 0;
    for (const auto& entry : root["simplices"]) {
        const std::string where = "simplices[" + std::to_string(index++) + "]";
        if (!entry.is_object()) {
            invalid(where + " must be an object");
        }
        for (const auto& [key, value] : entry.items()) {
            if (key != "vertices" && key != "atoms") {
                invalid(where + ": unexpected key '" + key + "'");
            }
        }
        if (!entry.contains("vertices")) {
            invalid(where + ": missing key 'vertices'");
        }
        SimplexEntry e;
        e.vertices = string_array(entry["vertices"], where + ".vertices");
        if (entry.contains("atoms")) {
            e.atoms = string_array(entry["atoms"], where + ".atoms");
        }
        doc.simplices.push_back(std::move(e));
    }
    if (root.contains("closure")) {
        const auto& c = root["closure"];
        if (c == "auto") {
            doc.closure = ClosureMode::automatic;
        } else if (c == "strict") {
            doc.closure = ClosureMode::strict;
        } else {
            invalid("'closure' must be \"auto\" or \"strict\"");
        }
    }
    if (root.contains("description")) {
        if (!root["description"].is_string()) {
            invalid("'description' must be a string");
        }
        doc.description = root["description"].get<std::string>();
    }
    return doc;
}

SimplicialModel build_model(const ModelDocument& doc)
{
    std::set<AtomName> atoms;
    for (const auto& a : doc.atoms) {
        if (!is_valid_atom_name(a)) {
            invalid("invalid atom name '" + a + "'");
        }
        if (!atoms.insert(a).second) {
            invalid("atom '" + a + "' declared twice");
        }
    }
    std::vector<Simplex> listed;
    std::map<AtomName, std::set<Simplex>> valuation;
    std::set<Simplex> seen;
    for (const auto& entry : doc.simplices) {
        auto s = make_simplex(entry.vertices);
        if (!seen.insert(s).second) {
            throw Error(ErrorCode::DuplicateSimplex, "simplex " + s.to_string() + " is listed twice");
        }
        for (const auto& a : entry.atoms) {
            if (atoms.count(a) == 0) {
                throw Error(ErrorCode::UnknownAtomRef,
                            "simplex " + s.to_string() + " refers to undeclared atom '" + a + "'");
            }
            valuation[a].insert(s);
        }
        listed.push_back(std::move(s));
    }
    auto complex = doc.closure == ClosureMode::strict ? SimplicialComplex::from_closed(std::move(listed))
                                                      : close(listed);
    return SimplicialModel(std::move(complex), std::move(atoms), valuation);
}

SimplicialModel load_model_text(std::string_view text)
{
    return build_model(parse_document(text));
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        invalid("cannot read '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SimplicialModel load_model_file(const std::filesystem::path& path)
{
    return load_model_text(read_text_file(path));
}

ModelDocument to_document(const SimplicialModel& model)
{
    ModelDocument doc;
    doc.closure = ClosureMode::strict;
    doc.atoms.assign(model.atoms().begin(), model.atoms().end());
    for (const auto& s : model.complex().simplices()) {
        SimplexEntry e;
        e.vertices = s.vertices();
        for (const auto& a : label_of(model, s)) {
            e.atoms.push_back(a);
        }
        doc.simplices.push_back(std::move(e));
    }
    return doc;
}

std::string save_model(const SimplicialModel& model)
{
    const auto doc = to_document(model);
    nlohmann::ordered_json root;
    root["atoms"] = doc.atoms;
    root["closure"] = "strict";
    root["simplices"] = nlohmann::ordered_json::array();
    for (const auto& e : doc.simplices) {
        nlohmann::ordered_json item;
        item["vertices"] = e.vertices;
        item["atoms"] = e.atoms;
        root["simplices"].push_back(std::move(item));
    }
    return root.dump(2) + "\n";
}

std::vector<std::string> validate_document(std::string_view text)
{
    ModelDocument doc;
    try {
        doc = parse_document(text);
    } catch (const Error& e) {
        return {e.what()};
    }
    std::vector<std::string> out;
    std::vector<Simplex> listed;
    std::set<Simplex> seen;
    const std::set<AtomName> atoms(doc.atoms.begin(), doc.atoms.end());
    if (atoms.size() != doc.atoms.size()) {
        out.push_back("an atom is declared twice");
    }
    for (const auto& a : atoms) {
        if (!is_valid_atom_name(a)) {
            out.push_back("invalid atom name '" + a + "'");
        }
    }
    for (const auto& entry : doc.simplices) {
        try {
            auto s = make_simplex(entry.vertices);
            if (!seen.insert(s).second) {
                out.push_back("simplex " + s.to_string() + " is listed twice");
            }
            for (const auto& a : entry.atoms) {
                if (atoms.count(a) == 0) {
                    out.push_back("simplex " + s.to_string() + " refers to undeclared atom '" + a + "'");
                }
            }
            listed.push_back(std::move(s));
        } catch (const Error& e) {
            out.push_back(e.what());
        }
    }
    if (doc.closure == ClosureMode::strict) {
        for (const auto& m : validate(listed)) {
            out.push_back("missing face " + m.face.to_string() + " of " + m.parent.to_string());
        }
    }
    return out;
}

} // namespace slsc
