#pragma once

#include <map>
#include <string>
#include <variant>

#include "json.hpp"

#include "homcat/complex.hpp"
#include "homcat/vect.hpp"
#include "homcat/zmod.hpp"

// Workspace files: a single JSON document naming the backend, its parameters,
// and named objects, morphisms, complexes and cochain maps. Matrices are
// nested row-major integer arrays. Parsing resolves every reference and
// shape-checks every matrix against its endpoints; mathematical conditions
// (d o d = 0, commuting squares) are left to the validate command.

namespace homcat {

class WorkspaceError : public CategoryError {
public:
    using CategoryError::CategoryError;
};

template <CategoryBackend Cat>
struct WorkspaceData {
    Cat cat;
    std::map<std::string, typename Cat::Object> objects;
    std::map<std::string, typename Cat::Morphism> morphisms;
    std::map<std::string, CochainComplex<Cat>> complexes;
    std::map<std::string, CochainMap<Cat>> maps;
};

using VectWorkspace = WorkspaceData<VectCategory>;
using ModWorkspace = WorkspaceData<ZModCategory>;
using Workspace = std::variant<VectWorkspace, ModWorkspace>;

Workspace workspace_from_json(const nlohmann::json& doc);
Workspace parse_workspace(const std::string& text);
Workspace load_workspace_file(const std::string& path);

nlohmann::json workspace_to_json(const Workspace& ws);
std::string serialize_workspace(const Workspace& ws);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols);

nlohmann::json object_to_json(const VectObject& a);
nlohmann::json object_to_json(const ZModObject& a);

}  // namespace homcat
