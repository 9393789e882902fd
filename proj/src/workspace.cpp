#include "homcat/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace homcat {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const std::string& key, const std::string& context)
{
    auto it = j.find(key);
    if (it == j.end())
        throw WorkspaceError("missing field '" + key + "' in " + context);
    return *it;
}

VectObject parse_object(const VectCategory& cat, const json& j, const std::string& name)
{
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        throw WorkspaceError("object '" + name + "': vect descriptor must be a dimension >= 0");
    return cat.object(j.get<std::int64_t>());
}

ZModObject parse_object(const ZModCategory& cat, const json& j, const std::string& name)
{
    if (!j.is_array())
        throw WorkspaceError("object '" + name + "': mod descriptor must be an exponent array");
    std::vector<int> inv;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw WorkspaceError("object '" + name + "': exponents must be integers");
        inv.push_back(e.get<int>());
    }
    if (!std::is_sorted(inv.begin(), inv.end()))
        throw WorkspaceError("object '" + name +
                             "': exponents must be listed in canonical ascending order");
    try {
        return cat.object(std::move(inv));
    } catch (const CategoryError& e) {
        throw WorkspaceError("object '" + name + "': " + e.what());
    }
}

template <CategoryBackend Cat>
WorkspaceData<Cat> parse_body(Cat cat, const json& doc)
{
    WorkspaceData<Cat> ws{std::move(cat), {}, {}, {}, {}};
    const Cat& C = ws.cat;

    if (doc.contains("objects")) {
        if (!doc["objects"].is_object())
            throw WorkspaceError("'objects' must be a name -> descriptor table");
        for (const auto& [name, desc] : doc["objects"].items())
            ws.objects.emplace(name, parse_object(C, desc, name));
    }

    if (doc.contains("morphisms")) {
        for (const auto& [name, body] : doc["morphisms"].items()) {
            const std::string ctx = "morphism '" + name + "'";
            const auto src_name = require_field(body, "src", ctx).template get<std::string>();
            const auto dst_name = require_field(body, "dst", ctx).template get<std::string>();
            auto src = ws.objects.find(src_name);
            auto dst = ws.objects.find(dst_name);
            if (src == ws.objects.end())
                throw WorkspaceError(ctx + ": unknown object '" + src_name + "'");
            if (dst == ws.objects.end())
                throw WorkspaceError(ctx + ": unknown object '" + dst_name + "'");
            Matrix mat;
            try {
                std::size_t rows, cols;
                if constexpr (std::is_same_v<Cat, VectCategory>) {
                    rows = static_cast<std::size_t>(dst->second.dim);
                    cols = static_cast<std::size_t>(src->second.dim);
                } else {
                    rows = dst->second.invariants.size();
                    cols = src->second.invariants.size();
                }
                mat = matrix_from_json(require_field(body, "matrix", ctx), rows, cols);
                ws.morphisms.emplace(name, C.morphism(src->second, dst->second, std::move(mat)));
            } catch (const WorkspaceError&) {
                throw;
            } catch (const CategoryError& e) {
                throw WorkspaceError(ctx + ": " + e.what());
            }
        }
    }

    if (doc.contains("complexes")) {
        for (const auto& [name, body] : doc["complexes"].items()) {
            const std::string ctx = "complex '" + name + "'";
            const int lo = require_field(body, "lo", ctx).template get<int>();
            std::vector<typename Cat::Object> objs;
            for (const auto& oname : require_field(body, "objects", ctx)) {
                auto it = ws.objects.find(oname.template get<std::string>());
                if (it == ws.objects.end())
                    throw WorkspaceError(ctx + ": unknown object '" + oname.template get<std::string>() +
                                         "'");
                objs.push_back(it->second);
            }
            std::vector<typename Cat::Morphism> diffs;
            for (const auto& mname : require_field(body, "differentials", ctx)) {
                auto it = ws.morphisms.find(mname.template get<std::string>());
                if (it == ws.morphisms.end())
                    throw WorkspaceError(ctx + ": unknown morphism '" + mname.template get<std::string>() +
                                         "'");
                diffs.push_back(it->second);
            }
            try {
                ws.complexes.emplace(
                    name, CochainComplex<Cat>(C, lo, std::move(objs), std::move(diffs)));
            } catch (const CategoryError& e) {
                throw WorkspaceError(ctx + ": " + e.what());
            }
        }
    }

    if (doc.contains("maps")) {
        for (const auto& [name, body] : doc["maps"].items()) {
            const std::string ctx = "map '" + name + "'";
            const auto src_name = require_field(body, "src", ctx).template get<std::string>();
            const auto dst_name = require_field(body, "dst", ctx).template get<std::string>();
            auto src = ws.complexes.find(src_name);
            auto dst = ws.complexes.find(dst_name);
            if (src == ws.complexes.end())
                throw WorkspaceError(ctx + ": unknown complex '" + src_name + "'");
            if (dst == ws.complexes.end())
                throw WorkspaceError(ctx + ": unknown complex '" + dst_name + "'");
            const int lo = require_field(body, "lo", ctx).template get<int>();
            std::vector<typename Cat::Morphism> comps;
            for (const auto& mname : require_field(body, "components", ctx)) {
                auto it = ws.morphisms.find(mname.template get<std::string>());
                if (it == ws.morphisms.end())
                    throw WorkspaceError(ctx + ": unknown morphism '" + mname.template get<std::string>() +
                                         "'");
                comps.push_back(it->second);
            }
            try {
                ws.maps.emplace(name,
                                CochainMap<Cat>(src->second, dst->second, lo, std::move(comps)));
            } catch (const CategoryError& e) {
                throw WorkspaceError(ctx + ": " + e.what());
            }
        }
    }
    return ws;
}

template <CategoryBackend Cat>
std::string find_object_name(const WorkspaceData<Cat>& ws, const typename Cat::Object& obj)
{
    for (const auto& [name, o] : ws.objects)
        if (ws.cat.obj_eq(o, obj)) return name;
    throw WorkspaceError("serialize: object without a name in the workspace");
}

template <CategoryBackend Cat>
std::string find_morphism_name(const WorkspaceData<Cat>& ws, const typename Cat::Morphism& mor)
{
    for (const auto& [name, m] : ws.morphisms)
        if (ws.cat.mor_eq(m, mor)) return name;
    throw WorkspaceError("serialize: morphism without a name in the workspace");
}

template <CategoryBackend Cat>
std::string find_complex_name(const WorkspaceData<Cat>& ws, const CochainComplex<Cat>& cx)
{
    for (const auto& [name, c] : ws.complexes)
        if (same_complex(c, cx)) return name;
    throw WorkspaceError("serialize: complex without a name in the workspace");
}

template <CategoryBackend Cat>
json body_to_json(const WorkspaceData<Cat>& ws)
{
    json doc;
    json objs = json::object();
    for (const auto& [name, obj] : ws.objects)
        objs[name] = object_to_json(obj);
    doc["objects"] = std::move(objs);

    json mors = json::object();
    for (const auto& [name, mor] : ws.morphisms)
        mors[name] = {{"src", find_object_name(ws, mor.src)},
                      {"dst", find_object_name(ws, mor.dst)},
                      {"matrix", matrix_to_json(mor.mat)}};
    doc["morphisms"] = std::move(mors);

    json cxs = json::object();
    for (const auto& [name, cx] : ws.complexes) {
        json objnames = json::array();
        json diffnames = json::array();
        for (int n = cx.lo(); n <= cx.hi(); ++n) {
            objnames.push_back(find_object_name(ws, cx.object_at(n)));
            if (n < cx.hi()) diffnames.push_back(find_morphism_name(ws, cx.differential_at(n)));
        }
        cxs[name] = {{"lo", cx.lo()}, {"objects", objnames}, {"differentials", diffnames}};
    }
    doc["complexes"] = std::move(cxs);

    json maps = json::object();
    for (const auto& [name, mp] : ws.maps) {
        json comps = json::array();
        for (const auto& comp : mp.stored_components())
            comps.push_back(find_morphism_name(ws, comp));
        maps[name] = {{"src", find_complex_name(ws, mp.src())},
                      {"dst", find_complex_name(ws, mp.dst())},
                      {"lo", mp.stored_lo()},
                      {"components", comps}};
    }
    doc["maps"] = std::move(maps);
    return doc;
}

}  // namespace

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols)
{
    if (!j.is_array())
        throw WorkspaceError("matrix must be an array of rows");
    if (j.size() != rows)
        throw WorkspaceError("matrix has " + std::to_string(j.size()) + " rows, expected " +
                             std::to_string(rows));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw WorkspaceError("matrix row " + std::to_string(i) + " must have " +
                                 std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_number_integer())
                throw WorkspaceError("matrix entries must be integers");
            m(i, c) = row[c].get<std::int64_t>();
        }
    }
    return m;
}

json matrix_to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(i, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json object_to_json(const VectObject& a)
{
    return a.dim;
}

json object_to_json(const ZModObject& a)
{
    return a.invariants;
}

Workspace workspace_from_json(const json& doc)
{
    if (!doc.is_object())
        throw WorkspaceError("workspace root must be a JSON object");
    try {
        const auto backend = require_field(doc, "backend", "workspace").get<std::string>();
        const auto p = require_field(doc, "p", "workspace").get<std::int64_t>();
        if (backend == "vect")
            return parse_body(VectCategory(p), doc);
        if (backend == "mod") {
            const int k = require_field(doc, "k", "workspace").get<int>();
            return parse_body(ZModCategory(p, k), doc);
        }
        throw WorkspaceError("unknown backend '" + backend + "' (expected \"vect\" or \"mod\")");
    } catch (const WorkspaceError&) {
        throw;
    } catch (const json::exception& e) {
        throw WorkspaceError(std::string("workspace: malformed field: ") + e.what());
    } catch (const CategoryError& e) {
        throw WorkspaceError(std::string("workspace: ") + e.what());
    }
}

Workspace parse_workspace(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw WorkspaceError(std::string("JSON parse error: ") + e.what());
    }
    return workspace_from_json(doc);
}

Workspace load_workspace_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw WorkspaceError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_workspace(buf.str());
}

json workspace_to_json(const Workspace& ws)
{
    return std::visit(
        [](const auto& w) {
            json doc = body_to_json(w);
            using Cat = std::decay_t<decltype(w.cat)>;
            if constexpr (std::is_same_v<Cat, VectCategory>) {
                doc["backend"] = "vect";
                doc["p"] = w.cat.characteristic();
            } else {
                doc["backend"] = "mod";
                doc["p"] = w.cat.prime();
                doc["k"] = w.cat.exponent_bound();
            }
            return doc;
        },
        ws);
}

std::string serialize_workspace(const Workspace& ws)
{
    return workspace_to_json(ws).dump(2) + "\n";
}

}  // namespace homcat
