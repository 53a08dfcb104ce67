#include "stardil/io.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace stardil::io {

namespace {

void expect(bool cond, const std::string& path, const std::string& msg) {
    if (!cond) throw ParseError(path, msg);
}

int get_int(const json& j, const std::string& key, const std::string& path) {
    expect(j.contains(key), path, "missing key '" + key + "'");
    expect(j[key].is_number_integer(), path + "/" + key, "expected an integer");
    return j[key].get<int>();
}

void expect_format(const json& j, const std::string& fmt) {
    expect(j.is_object(), "/", "expected a JSON object");
    expect(j.contains("format") && j["format"] == fmt, "/format",
           "expected format '" + fmt + "'");
}

std::complex<double> complex_from(const json& j, const std::string& path) {
    expect(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
           path, "complex numbers are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            entries.push_back({m(r, c).real(), m(r, c).imag()});
    j["entries"] = std::move(entries);
    return j;
}

CMatrix matrix_from_json(const json& j, const std::string& path) {
    const int rows = get_int(j, "rows", path);
    const int cols = get_int(j, "cols", path);
    expect(rows >= 0 && cols >= 0, path, "negative matrix shape");
    expect(j.contains("entries") && j["entries"].is_array(), path,
           "missing entries array");
    const json& e = j["entries"];
    expect(static_cast<int>(e.size()) == rows * cols, path + "/entries",
           "entry count does not match shape");
    CMatrix m(rows, cols);
    int k = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c, ++k)
            m(r, c) = complex_from(e[k], path + "/entries/" + std::to_string(k));
    return m;
}

json sgd_to_json(const SemigroupoidTable& t) {
    json j;
    j["format"] = "sgd";
    j["version"] = 1;
    j["objects"] = t.n_objects;
    j["truncated"] = t.truncated;
    json elements = json::array();
    for (int a = 0; a < t.n_elements; ++a)
        elements.push_back({{"id", a}, {"d", t.src[a]}, {"c", t.tgt[a]}});
    j["elements"] = std::move(elements);
    json mul = json::array();
    for (int a = 0; a < t.n_elements; ++a)
        for (int b = 0; b < t.n_elements; ++b)
            if (t.product(a, b) >= 0) mul.push_back({a, b, t.product(a, b)});
    j["mul"] = std::move(mul);
    json star = json::array();
    if (t.has_star())
        for (int a = 0; a < t.n_elements; ++a) star.push_back({a, t.star[a]});
    j["star"] = std::move(star);
    json units = json::array();
    if (t.has_units())
        for (int s = 0; s < t.n_objects; ++s) units.push_back({s, t.units[s]});
    j["units"] = std::move(units);
    return j;
}

SemigroupoidTable sgd_from_json(const json& j) {
    expect_format(j, "sgd");
    SemigroupoidTable t;
    t.n_objects = get_int(j, "objects", "/");
    expect(t.n_objects >= 0, "/objects", "negative object count");
    t.truncated = j.value("truncated", false);
    expect(j.contains("elements") && j["elements"].is_array(), "/elements",
           "missing elements array");
    t.n_elements = static_cast<int>(j["elements"].size());
    t.src.assign(t.n_elements, -1);
    t.tgt.assign(t.n_elements, -1);
    for (size_t i = 0; i < j["elements"].size(); ++i) {
        const std::string path = "/elements/" + std::to_string(i);
        const json& e = j["elements"][i];
        const int id = get_int(e, "id", path);
        expect(id >= 0 && id < t.n_elements, path + "/id", "element id out of range");
        expect(t.src[id] == -1, path + "/id", "duplicate element id");
        const int d = get_int(e, "d", path);
        const int c = get_int(e, "c", path);
        expect(d >= 0 && d < t.n_objects, path + "/d", "object id out of range");
        expect(c >= 0 && c < t.n_objects, path + "/c", "object id out of range");
        t.src[id] = d;
        t.tgt[id] = c;
    }
    t.init_mul();
    expect(j.contains("mul") && j["mul"].is_array(), "/mul", "missing mul array");
    for (size_t i = 0; i < j["mul"].size(); ++i) {
        const std::string path = "/mul/" + std::to_string(i);
        const json& m = j["mul"][i];
        expect(m.is_array() && m.size() == 3, path, "mul entries are [a, b, ab]");
        const int a = m[0].get<int>(), b = m[1].get<int>(), ab = m[2].get<int>();
        expect(a >= 0 && a < t.n_elements && b >= 0 && b < t.n_elements && ab >= 0 &&
                   ab < t.n_elements,
               path, "mul entry references an unknown element id");
        const int prev = t.product(a, b);
        expect(prev == -1 || prev == ab, path,
               "conflicting duplicate mul entry for the pair [" +
                   std::to_string(a) + ", " + std::to_string(b) + "]");
        t.set_product(a, b, ab);
    }
    if (j.contains("star") && !j["star"].empty()) {
        t.star.assign(t.n_elements, -1);
        for (size_t i = 0; i < j["star"].size(); ++i) {
            const std::string path = "/star/" + std::to_string(i);
            const json& p = j["star"][i];
            expect(p.is_array() && p.size() == 2, path, "star entries are [a, a*]");
            const int a = p[0].get<int>(), as = p[1].get<int>();
            expect(a >= 0 && a < t.n_elements && as >= 0 && as < t.n_elements, path,
                   "star entry references an unknown element id");
            t.star[a] = as;
        }
        for (int a = 0; a < t.n_elements; ++a)
            expect(t.star[a] >= 0, "/star", "star map does not cover every element");
    }
    if (j.contains("units") && !j["units"].empty()) {
        t.units.assign(t.n_objects, -1);
        for (size_t i = 0; i < j["units"].size(); ++i) {
            const std::string path = "/units/" + std::to_string(i);
            const json& p = j["units"][i];
            expect(p.is_array() && p.size() == 2, path, "unit entries are [s, e]");
            const int s = p[0].get<int>(), e = p[1].get<int>();
            expect(s >= 0 && s < t.n_objects && e >= 0 && e < t.n_elements, path,
                   "unit entry references an unknown id");
            t.units[s] = e;
        }
        for (int s = 0; s < t.n_objects; ++s)
            expect(t.units[s] >= 0, "/units", "units map does not cover every object");
    }
    return t;
}

json graph_to_json(const DirectedGraph& g) {
    json j;
    j["format"] = "graph";
    j["version"] = 1;
    j["vertices"] = g.n_vertices;
    json edges = json::array();
    for (auto [s, r] : g.edges) edges.push_back({s, r});
    j["edges"] = std::move(edges);
    return j;
}

DirectedGraph graph_from_json(const json& j) {
    expect_format(j, "graph");
    DirectedGraph g;
    g.n_vertices = get_int(j, "vertices", "/");
    expect(g.n_vertices >= 0, "/vertices", "negative vertex count");
    expect(j.contains("edges") && j["edges"].is_array(), "/edges",
           "missing edges array");
    for (size_t i = 0; i < j["edges"].size(); ++i) {
        const std::string path = "/edges/" + std::to_string(i);
        const json& e = j["edges"][i];
        expect(e.is_array() && e.size() == 2, path, "edges are [source, range]");
        const int s = e[0].get<int>(), r = e[1].get<int>();
        expect(s >= 0 && s < g.n_vertices && r >= 0 && r < g.n_vertices, path,
               "edge endpoint out of range");
        g.edges.emplace_back(s, r);
    }
    return g;
}

json map_to_json(const CoherentMap& t) {
    json j;
    j["format"] = "map";
    j["version"] = 1;
    j["sgd"] = sgd_to_json(t.table);
    j["X"] = t.bundle.n_points();
    json tau = json::array();
    for (int s = 0; s < t.table.n_objects; ++s) tau.push_back({s, t.tau.tau[s]});
    j["tau"] = std::move(tau);
    json dims = json::array();
    for (int x = 0; x < t.bundle.n_points(); ++x) dims.push_back({x, t.bundle.dim[x]});
    j["dims"] = std::move(dims);
    json mats = json::array();
    for (int a = 0; a < t.table.n_elements; ++a) {
        json m = matrix_to_json(t.mats[a]);
        json entry;
        entry["element"] = a;
        entry["rows"] = m["rows"];
        entry["cols"] = m["cols"];
        entry["entries"] = m["entries"];
        mats.push_back(std::move(entry));
    }
    j["mats"] = std::move(mats);
    return j;
}

CoherentMap map_from_json(const json& j) {
    expect_format(j, "map");
    CoherentMap t;
    expect(j.contains("sgd"), "/sgd", "missing embedded sgd document");
    t.table = sgd_from_json(j["sgd"]);
    const int nx = get_int(j, "X", "/");
    expect(nx >= 0, "/X", "negative bundle size");
    t.bundle.dim.assign(nx, -1);
    expect(j.contains("dims") && j["dims"].is_array(), "/dims", "missing dims");
    for (size_t i = 0; i < j["dims"].size(); ++i) {
        const json& p = j["dims"][i];
        const std::string path = "/dims/" + std::to_string(i);
        expect(p.is_array() && p.size() == 2, path, "dims entries are [x, dim]");
        const int x = p[0].get<int>(), d = p[1].get<int>();
        expect(x >= 0 && x < nx && d >= 0, path, "dims entry out of range");
        t.bundle.dim[x] = d;
    }
    for (int x = 0; x < nx; ++x)
        expect(t.bundle.dim[x] >= 0, "/dims", "dims do not cover every bundle point");
    t.tau.tau.assign(t.table.n_objects, -1);
    expect(j.contains("tau") && j["tau"].is_array(), "/tau", "missing tau");
    for (size_t i = 0; i < j["tau"].size(); ++i) {
        const json& p = j["tau"][i];
        const std::string path = "/tau/" + std::to_string(i);
        expect(p.is_array() && p.size() == 2, path, "tau entries are [s, x]");
        const int s = p[0].get<int>(), x = p[1].get<int>();
        expect(s >= 0 && s < t.table.n_objects && x >= 0 && x < nx, path,
               "tau entry out of range");
        t.tau.tau[s] = x;
    }
    for (int s = 0; s < t.table.n_objects; ++s)
        expect(t.tau.tau[s] >= 0, "/tau", "tau does not cover every object");
    t.mats.assign(t.table.n_elements, CMatrix());
    expect(j.contains("mats") && j["mats"].is_array(), "/mats", "missing mats");
    std::vector<bool> seen(t.table.n_elements, false);
    for (size_t i = 0; i < j["mats"].size(); ++i) {
        const std::string path = "/mats/" + std::to_string(i);
        const json& m = j["mats"][i];
        const int a = get_int(m, "element", path);
        expect(a >= 0 && a < t.table.n_elements, path + "/element",
               "unknown element id");
        expect(!seen[a], path + "/element", "duplicate matrix for element");
        seen[a] = true;
        t.mats[a] = matrix_from_json(m, path);
        expect(t.mats[a].rows() == t.dim_c(a) && t.mats[a].cols() == t.dim_d(a),
               path, "matrix shape violates the coherence rule");
    }
    for (int a = 0; a < t.table.n_elements; ++a)
        expect(seen[a], "/mats", "mats do not cover every element");
    return t;
}

json dilation_to_json(const Dilation& d) {
    json j;
    j["format"] = "dilation";
    j["version"] = 1;
    const int nx = static_cast<int>(d.dim_k.size());
    j["X"] = nx;
    j["dim_K"] = d.dim_k;
    json tau = json::array();
    for (size_t s = 0; s < d.tau.tau.size(); ++s)
        tau.push_back({static_cast<int>(s), d.tau.tau[s]});
    j["tau"] = std::move(tau);
    j["layout"] = d.layout;
    j["block_offset"] = d.block_offset;
    j["factor_rank"] = d.factor_rank;
    json factors = json::array();
    for (size_t s = 0; s < d.factors.size(); ++s) {
        json m = matrix_to_json(d.factors[s]);
        factors.push_back({{"object", static_cast<int>(s)},
                           {"rows", m["rows"]},
                           {"cols", m["cols"]},
                           {"entries", m["entries"]}});
    }
    j["factors"] = std::move(factors);
    json rep = json::array();
    for (size_t a = 0; a < d.rep.size(); ++a) {
        json m = matrix_to_json(d.rep[a]);
        rep.push_back({{"element", static_cast<int>(a)},
                       {"rows", m["rows"]},
                       {"cols", m["cols"]},
                       {"entries", m["entries"]}});
    }
    j["rep"] = std::move(rep);
    json v = json::array();
    for (size_t s = 0; s < d.v.size(); ++s) {
        json m = matrix_to_json(d.v[s]);
        v.push_back({{"object", static_cast<int>(s)},
                     {"rows", m["rows"]},
                     {"cols", m["cols"]},
                     {"entries", m["entries"]}});
    }
    j["V"] = std::move(v);
    return j;
}

Dilation dilation_from_json(const json& j) {
    expect_format(j, "dilation");
    Dilation d;
    const int nx = get_int(j, "X", "/");
    expect(j.contains("dim_K") && j["dim_K"].is_array() &&
               static_cast<int>(j["dim_K"].size()) == nx,
           "/dim_K", "dim_K size mismatch");
    d.dim_k = j["dim_K"].get<std::vector<int>>();
    expect(j.contains("tau") && j["tau"].is_array(), "/tau", "missing tau");
    const int n_obj = static_cast<int>(j["tau"].size());
    d.tau.tau.assign(n_obj, -1);
    for (const json& p : j["tau"]) {
        expect(p.is_array() && p.size() == 2, "/tau", "tau entries are [s, x]");
        const int s = p[0].get<int>(), x = p[1].get<int>();
        expect(s >= 0 && s < n_obj && x >= 0 && x < nx, "/tau", "tau out of range");
        d.tau.tau[s] = x;
    }
    d.layout = j.at("layout").get<std::vector<std::vector<int>>>();
    d.block_offset = j.at("block_offset").get<std::vector<int>>();
    d.factor_rank = j.at("factor_rank").get<std::vector<int>>();
    expect(static_cast<int>(d.layout.size()) == nx, "/layout", "layout size mismatch");
    expect(static_cast<int>(d.block_offset.size()) == n_obj, "/block_offset",
           "block_offset size mismatch");
    expect(static_cast<int>(d.factor_rank.size()) == n_obj, "/factor_rank",
           "factor_rank size mismatch");
    d.factors.assign(n_obj, CMatrix());
    for (size_t i = 0; i < j.at("factors").size(); ++i) {
        const std::string path = "/factors/" + std::to_string(i);
        const json& m = j["factors"][i];
        const int s = get_int(m, "object", path);
        expect(s >= 0 && s < n_obj, path, "object id out of range");
        d.factors[s] = matrix_from_json(m, path);
    }
    d.rep.assign(j.at("rep").size(), CMatrix());
    for (size_t i = 0; i < j["rep"].size(); ++i) {
        const std::string path = "/rep/" + std::to_string(i);
        const json& m = j["rep"][i];
        const int a = get_int(m, "element", path);
        expect(a >= 0 && a < static_cast<int>(d.rep.size()), path,
               "element id out of range");
        d.rep[a] = matrix_from_json(m, path);
    }
    d.v.assign(n_obj, CMatrix());
    for (size_t i = 0; i < j.at("V").size(); ++i) {
        const std::string path = "/V/" + std::to_string(i);
        const json& m = j["V"][i];
        const int s = get_int(m, "object", path);
        expect(s >= 0 && s < n_obj, path, "object id out of range");
        d.v[s] = matrix_from_json(m, path);
    }
    return d;
}

json family_to_json(const CKTFamily& f) {
    json j;
    j["format"] = "family";
    j["version"] = 1;
    j["vertices"] = f.graph.n_vertices;
    json edges = json::array();
    for (auto [s, r] : f.graph.edges) edges.push_back({s, r});
    j["edges"] = std::move(edges);
    j["dim"] = f.dim_h;
    json p = json::array();
    for (const CMatrix& m : f.p) p.push_back(matrix_to_json(m));
    j["P"] = std::move(p);
    json s = json::array();
    for (const CMatrix& m : f.s) s.push_back(matrix_to_json(m));
    j["S"] = std::move(s);
    return j;
}

CKTFamily family_from_json(const json& j) {
    expect_format(j, "family");
    CKTFamily f;
    f.graph.n_vertices = get_int(j, "vertices", "/");
    expect(j.contains("edges") && j["edges"].is_array(), "/edges", "missing edges");
    for (const json& e : j["edges"]) {
        expect(e.is_array() && e.size() == 2, "/edges", "edges are [source, range]");
        const int s = e[0].get<int>(), r = e[1].get<int>();
        expect(s >= 0 && s < f.graph.n_vertices && r >= 0 && r < f.graph.n_vertices,
               "/edges", "edge endpoint out of range");
        f.graph.edges.emplace_back(s, r);
    }
    f.dim_h = get_int(j, "dim", "/");
    expect(j.contains("P") && j["P"].is_array() &&
               static_cast<int>(j["P"].size()) == f.graph.n_vertices,
           "/P", "P must have one matrix per vertex");
    for (size_t i = 0; i < j["P"].size(); ++i)
        f.p.push_back(matrix_from_json(j["P"][i], "/P/" + std::to_string(i)));
    expect(j.contains("S") && j["S"].is_array() &&
               j["S"].size() == f.graph.edges.size(),
           "/S", "S must have one matrix per edge");
    for (size_t i = 0; i < j["S"].size(); ++i)
        f.s.push_back(matrix_from_json(j["S"][i], "/S/" + std::to_string(i)));
    return f;
}

json formal_to_json(const FormalElement& e) {
    json j;
    j["format"] = "formal";
    j["version"] = 1;
    j["fiber"] = {e.s, e.t};
    json terms = json::array();
    for (const auto& [elem, coeff] : e.coeffs)
        terms.push_back({elem, coeff.real(), coeff.imag()});
    j["terms"] = std::move(terms);
    return j;
}

FormalElement formal_from_json(const json& j) {
    expect_format(j, "formal");
    FormalElement e;
    expect(j.contains("fiber") && j["fiber"].is_array() && j["fiber"].size() == 2,
           "/fiber", "fiber is [s, t]");
    e.s = j["fiber"][0].get<int>();
    e.t = j["fiber"][1].get<int>();
    expect(j.contains("terms") && j["terms"].is_array(), "/terms", "missing terms");
    for (size_t i = 0; i < j["terms"].size(); ++i) {
        const json& t = j["terms"][i];
        expect(t.is_array() && t.size() == 3, "/terms/" + std::to_string(i),
               "terms are [element, re, im]");
        e.coeffs[t[0].get<int>()] += std::complex<double>(t[1].get<double>(), t[2].get<double>());
    }
    return e;
}

json amplified_to_json(const AmplifiedElement& a) {
    json j;
    j["format"] = "amplified";
    j["version"] = 1;
    j["n"] = a.n;
    j["s_tuple"] = a.s_tuple;
    j["t_tuple"] = a.t_tuple;
    json entries = json::array();
    for (const FormalElement& e : a.entries) {
        json terms = json::array();
        for (const auto& [elem, coeff] : e.coeffs)
            terms.push_back({elem, coeff.real(), coeff.imag()});
        entries.push_back({{"terms", std::move(terms)}});
    }
    j["entries"] = std::move(entries);
    return j;
}

AmplifiedElement amplified_from_json(const json& j) {
    expect_format(j, "amplified");
    AmplifiedElement a;
    a.n = get_int(j, "n", "/");
    expect(a.n >= 1, "/n", "amplification order must be positive");
    a.s_tuple = j.at("s_tuple").get<std::vector<int>>();
    a.t_tuple = j.at("t_tuple").get<std::vector<int>>();
    expect(static_cast<int>(a.s_tuple.size()) == a.n &&
               static_cast<int>(a.t_tuple.size()) == a.n,
           "/s_tuple", "tuple length must equal n");
    expect(j.contains("entries") && j["entries"].is_array() &&
               static_cast<int>(j["entries"].size()) == a.n * a.n,
           "/entries", "expected n*n row-major entries");
    for (int i = 0; i < a.n; ++i)
        for (int jj = 0; jj < a.n; ++jj) {
            const json& cell = j["entries"][i * a.n + jj];
            FormalElement e;
            e.s = a.s_tuple[jj];
            e.t = a.t_tuple[i];
            const std::string path =
                "/entries/" + std::to_string(i * a.n + jj) + "/terms";
            expect(cell.contains("terms") && cell["terms"].is_array(), path,
                   "missing terms");
            for (const json& t : cell["terms"]) {
                expect(t.is_array() && t.size() == 3, path,
                       "terms are [element, re, im]");
                e.coeffs[t[0].get<int>()] += std::complex<double>(t[1].get<double>(), t[2].get<double>());
            }
            a.entries.push_back(std::move(e));
        }
    return a;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace stardil::io
