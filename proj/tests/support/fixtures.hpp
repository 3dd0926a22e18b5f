#pragma once

#include "slsc/io.hpp"

#include <string>

namespace slsc::testing {

inline std::string model_path(const std::string& name) { return std::string(SLSC_MODELS_DIR) + "/" + name; }

inline SimplicialModel load_fixture(const std::string& name) { return load_model_file(model_path(name)); }

inline Simplex sx(std::initializer_list<const char*> vertices)
{
    return make_simplex(std::vector<VertexId>(vertices.begin(), vertices.end()));
}

} // namespace slsc::testing
