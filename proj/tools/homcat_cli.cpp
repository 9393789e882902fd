// homcat: load workspaces of objects, morphisms, complexes and cochain maps;
// validate them, compute cohomology, build injective resolutions, compute Ext.
//
// Exit codes: 0 success, 1 mathematical check failed, 2 input error.

#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "homcat/derived.hpp"
#include "homcat/workspace.hpp"

using namespace homcat;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

struct DegreeRange {
    int lo;
    int hi;
};

DegreeRange parse_degrees(const std::string& text)
{
    const auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        const int lo = std::stoi(text.substr(0, sep));
        const int hi = std::stoi(text.substr(sep + 2));
        if (lo > hi) throw WorkspaceError("--degrees: empty range " + text);
        return {lo, hi};
    } catch (const WorkspaceError&) {
        throw;
    } catch (const std::exception&) {
        throw WorkspaceError("--degrees: expected an integer or a..b, got '" + text + "'");
    }
}

template <CategoryBackend Cat>
int run_validate(const WorkspaceData<Cat>& ws, bool as_json)
{
    const Cat& C = ws.cat;
    json report = json::array();
    int violations = 0;

    for (const auto& [name, cx] : ws.complexes) {
        for (int n = cx.lo() - 1; n <= cx.hi(); ++n) {
            auto dd = C.compose(cx.differential_at(n + 1), cx.differential_at(n));
            if (is_zero(dd.mat)) continue;
            ++violations;
            json entry = {{"kind", "complex"},
                          {"name", name},
                          {"degree", n},
                          {"expected", matrix_to_json(Matrix(dd.mat.rows(), dd.mat.cols()))},
                          {"actual", matrix_to_json(dd.mat)}};
            report.push_back(entry);
            if (!as_json)
                std::cout << "complex '" << name << "': d o d != 0 at degree " << n
                          << "\n  expected " << to_string(Matrix(dd.mat.rows(), dd.mat.cols()))
                          << "\n  actual   " << to_string(dd.mat) << "\n";
        }
    }
    for (const auto& [name, mp] : ws.maps) {
        for (int n = mp.window_lo() - 1; n <= mp.window_hi(); ++n) {
            auto lhs = C.compose(mp.dst().differential_at(n), mp.component_at(n));
            auto rhs = C.compose(mp.component_at(n + 1), mp.src().differential_at(n));
            if (C.mor_eq(lhs, rhs)) continue;
            ++violations;
            json entry = {{"kind", "map"},
                          {"name", name},
                          {"degree", n},
                          {"expected", matrix_to_json(lhs.mat)},
                          {"actual", matrix_to_json(rhs.mat)}};
            report.push_back(entry);
            if (!as_json)
                std::cout << "map '" << name << "': square at degree " << n
                          << " does not commute\n  d o f[n]   = " << to_string(lhs.mat)
                          << "\n  f[n+1] o d = " << to_string(rhs.mat) << "\n";
        }
    }

    if (as_json) {
        std::cout << json{{"violations", report}, {"ok", violations == 0}}.dump(2) << "\n";
    } else if (violations == 0) {
        std::cout << "ok: " << ws.complexes.size() << " complex(es), " << ws.maps.size()
                  << " map(s) pass all checks\n";
    }
    return violations == 0 ? kExitOk : kExitMathFailure;
}

template <CategoryBackend Cat>
int run_cohomology(const WorkspaceData<Cat>& ws, const std::string& name,
                   const std::optional<DegreeRange>& degrees, bool as_json)
{
    auto it = ws.complexes.find(name);
    if (it == ws.complexes.end())
        throw WorkspaceError("unknown complex '" + name + "'");
    const auto& cx = it->second;
    const DegreeRange range = degrees.value_or(DegreeRange{cx.lo(), cx.hi()});

    json out = json::array();
    for (int n = range.lo; n <= range.hi; ++n) {
        auto h = cohomology_object(cx, n);
        if (as_json)
            out.push_back({{"degree", n},
                           {"object", object_to_json(h.obj)},
                           {"name", ws.cat.object_name(h.obj)}});
        else
            std::cout << "H^" << n << " ≅ " << ws.cat.object_name(h.obj) << "\n";
    }
    if (as_json)
        std::cout << json{{"complex", name}, {"cohomology", out}}.dump(2) << "\n";
    return kExitOk;
}

template <CategoryBackend Cat>
int run_resolve(const WorkspaceData<Cat>& ws, const std::string& name, int degree, bool as_json)
{
    auto it = ws.objects.find(name);
    if (it == ws.objects.end())
        throw WorkspaceError("unknown object '" + name + "'");
    const Cat& C = ws.cat;
    auto res = build_injective_resolution(C, it->second, degree);
    verify_injective_resolution(C, res);

    if (as_json) {
        json objs = json::array();
        json diffs = json::array();
        for (int n = 0; n <= degree; ++n) {
            objs.push_back({{"degree", n},
                            {"object", object_to_json(res.complex.object_at(n))},
                            {"name", C.object_name(res.complex.object_at(n))}});
            if (n < degree) diffs.push_back(matrix_to_json(res.complex.differential_at(n).mat));
        }
        std::cout << json{{"object", name},
                          {"base", object_to_json(res.base)},
                          {"aug", matrix_to_json(res.aug.mat)},
                          {"terms", objs},
                          {"differentials", diffs}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }

    std::cout << "injective resolution of " << C.object_name(res.base) << " to degree " << degree
              << "\n";
    std::cout << "aug : " << C.object_name(res.base) << " -> " << C.object_name(res.aug.dst)
              << "  " << to_string(res.aug.mat) << "\n";
    for (int n = 0; n <= degree; ++n) {
        std::cout << "I^" << n << " = " << C.object_name(res.complex.object_at(n)) << "\n";
        if (n < degree) {
            auto d = res.complex.differential_at(n);
            std::cout << "d^" << n << " : " << C.object_name(d.src) << " -> "
                      << C.object_name(d.dst) << "  " << to_string(d.mat) << "\n";
        }
    }
    return kExitOk;
}

template <CategoryBackend Cat>
int run_ext(const WorkspaceData<Cat>& ws, const std::string& m_name, const std::string& n_name,
            int degree, bool as_json)
{
    auto mi = ws.objects.find(m_name);
    auto ni = ws.objects.find(n_name);
    if (mi == ws.objects.end())
        throw WorkspaceError("unknown object '" + m_name + "'");
    if (ni == ws.objects.end())
        throw WorkspaceError("unknown object '" + n_name + "'");
    ResolutionCache<Cat> cache;
    auto ext = ext_object(ws.cat, mi->second, ni->second, degree, cache);
    if (as_json)
        std::cout << json{{"M", m_name},
                          {"N", n_name},
                          {"degree", degree},
                          {"object", object_to_json(ext)},
                          {"name", ws.cat.object_name(ext)}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "Ext^" << degree << "(" << m_name << ", " << n_name << ") ≅ "
                  << ws.cat.object_name(ext) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"computational homological algebra over F_p and Z/p^k"};
    app.require_subcommand(1);

    std::string file;
    std::string complex_name, object_name, m_name, n_name, degrees_text;
    int degree = 0;
    bool as_json = false;

    auto* validate = app.add_subcommand("validate", "check d o d = 0 and commuting squares");
    validate->add_option("file", file, "workspace file")->required();
    validate->add_flag("--json", as_json, "machine-readable output");

    auto* cohomology = app.add_subcommand("cohomology", "print H^n of a named complex");
    cohomology->add_option("file", file)->required();
    cohomology->add_option("--complex", complex_name, "complex name")->required();
    cohomology->add_option("--degrees", degrees_text, "degree or range a..b");
    cohomology->add_flag("--json", as_json);

    auto* resolve = app.add_subcommand("resolve", "build an injective resolution");
    resolve->add_option("file", file)->required();
    resolve->add_option("--object", object_name, "object name")->required();
    resolve->add_option("--degree", degree, "truncation degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    resolve->add_flag("--json", as_json);

    auto* ext = app.add_subcommand("ext", "compute Ext^i(M, N) = R^i Hom(M,-)(N)");
    ext->add_option("file", file)->required();
    ext->add_option("--M", m_name, "source object name")->required();
    ext->add_option("--N", n_name, "argument object name")->required();
    ext->add_option("--degree", degree, "derived degree i")
        ->required()
        ->check(CLI::NonNegativeNumber);
    ext->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        Workspace ws = load_workspace_file(file);
        std::optional<DegreeRange> degrees;
        if (!degrees_text.empty()) degrees = parse_degrees(degrees_text);

        return std::visit(
            [&](const auto& w) -> int {
                if (validate->parsed()) return run_validate(w, as_json);
                if (cohomology->parsed()) return run_cohomology(w, complex_name, degrees, as_json);
                if (resolve->parsed()) return run_resolve(w, object_name, degree, as_json);
                return run_ext(w, m_name, n_name, degree, as_json);
            },
            ws);
    } catch (const WorkspaceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const CategoryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
}
