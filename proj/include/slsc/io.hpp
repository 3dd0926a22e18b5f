#pragma once

#include "slsc/model.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace slsc {

enum class ClosureMode { automatic, strict };

struct SimplexEntry {
    std::vector<VertexId> vertices;
    std::vector<AtomName> atoms;
};

// JSON model file:
//   {"atoms": [...], "closure": "auto" | "strict",
//    "simplices": [{"vertices": [...], "atoms": [...]}, ...],
//    "description": "..."}
// "closure", "description" and per-simplex "atoms" are optional.
struct ModelDocument {
    std::vector<AtomName> atoms;
    std::vector<SimplexEntry> simplices;
    ClosureMode closure = ClosureMode::automatic;
    std::string description;
};

// Checks JSON syntax and document shape only. Throws Error{ParseError} with
// line and column, or Error{InvalidDocument}.
ModelDocument parse_document(std::string_view text);

// In automatic mode the complex is the face closure of the listed simplices
// and generated faces carry no atoms; in strict mode the listing must already
// be face-closed. Throws Error{ClosureViolation}, Error{UnknownAtomRef},
// Error{DuplicateSimplex}, Error{InvalidDocument} and simplex construction
// errors.
SimplicialModel build_model(const ModelDocument& doc);

SimplicialModel load_model_text(std::string_view text);
// Throws Error{InvalidDocument} when the file cannot be read.
SimplicialModel load_model_file(const std::filesystem::path& path);

// Canonical strict-mode document listing every simplex in complex order.
ModelDocument to_document(const SimplicialModel& model);
std::string save_model(const SimplicialModel& model);

// Every problem found in the text, one message per line of output; empty
// iff the text loads.
std::vector<std::string> validate_document(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

} // namespace slsc
