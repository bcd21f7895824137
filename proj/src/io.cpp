#include "sweeprec/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sweeprec/error.hpp"

namespace sweeprec {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
}

Scalar scalar_from(const json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Scalar(mpz_class(std::to_string(j.get<std::uint64_t>())))
                                      : Scalar(mpz_class(std::to_string(j.get<std::int64_t>())));
    }
    malformed("coordinate must be a rational string or an integer, got " + j.dump());
}

Vector vector_from(const json& j) {
    if (!j.is_array()) malformed("expected a coordinate array, got " + j.dump());
    Vector v;
    for (const json& x : j) v.push_back(scalar_from(x));
    return v;
}

json vector_to(const Vector& v) {
    json out = json::array();
    for (const Scalar& x : v) out.push_back(format_scalar(x));
    return out;
}

Simplex simplex_from(const json& j) {
    if (!j.is_array() || j.empty()) malformed("expected a nonempty id array, got " + j.dump());
    std::vector<VertexId> ids;
    for (const json& x : j) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() > 0xffffffffLL) {
            malformed("bad vertex id " + x.dump());
        }
        ids.push_back(static_cast<VertexId>(x.get<std::int64_t>()));
    }
    return Simplex(std::move(ids));
}

const json& field(const json& obj, const char* name) {
    auto it = obj.find(name);
    if (it == obj.end()) malformed(std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace

SimplicialComplex parse_complex_json(std::string_view text) {
    json j = parse_json(text);
    if (!j.is_object()) malformed("complex must be a JSON object");
    const json& dim = field(j, "dimension");
    if (!dim.is_number_integer() || dim.get<std::int64_t>() < 0 || dim.get<std::int64_t>() > 64) {
        malformed("bad dimension " + dim.dump());
    }
    const json& verts = field(j, "vertices");
    if (!verts.is_array()) malformed("'vertices' must be an array");
    std::vector<Vector> points;
    for (const json& v : verts) points.push_back(vector_from(v));
    std::vector<Simplex> maximal;
    if (auto it = j.find("maximal_simplices"); it != j.end()) {
        if (!it->is_array()) malformed("'maximal_simplices' must be an array");
        for (const json& s : *it) maximal.push_back(simplex_from(s));
    }
    return SimplicialComplex::from_maximal(static_cast<int>(dim.get<std::int64_t>()), std::move(points), maximal);
}

std::string complex_to_json(const SimplicialComplex& k) {
    json out;
    out["dimension"] = k.ambient_dim();
    json verts = json::array();
    for (const Vector& p : k.points()) verts.push_back(vector_to(p));
    out["vertices"] = verts;
    json maximal = json::array();
    for (const Simplex& s : k.maximal_simplices()) maximal.push_back(s.vertices());
    out["maximal_simplices"] = maximal;
    return out.dump(2) + "\n";
}

std::string sweeping_order_to_json(const SweepingOrder& so, bool with_circles) {
    json out = json::array();
    for (const SweepEntry& e : so.entries) {
        json entry;
        entry["simplex"] = e.simplex.vertices();
        entry["direction"] = vector_to(e.direction);
        if (with_circles && e.circle) {
            entry["circle"] = {{"u", vector_to(e.circle->u)},
                               {"w", vector_to(e.circle->w)},
                               {"mode", e.circle->mode == CircleMode::Codim1 ? "codim1" : "perp"}};
        }
        out.push_back(entry);
    }
    return out.dump(2) + "\n";
}

SweepingOrder parse_sweeping_order_json(std::string_view text, const SimplicialComplex& k) {
    json j = parse_json(text);
    if (!j.is_array()) malformed("sweeping order must be a JSON array");
    SweepingOrder so;
    so.dim = -1;
    for (const json& e : j) {
        if (!e.is_object()) malformed("sweep entry must be an object");
        SweepEntry entry{simplex_from(field(e, "simplex")), vector_from(field(e, "direction")), std::nullopt};
        if (so.dim == -1) so.dim = entry.simplex.dim();
        if (entry.simplex.dim() != so.dim) malformed("sweep entries of mixed dimension");
        if (auto it = e.find("circle"); it != e.end()) {
            const json& c = *it;
            const json& mode = field(c, "mode");
            if (mode != "perp" && mode != "codim1") malformed("bad circle mode " + mode.dump());
            entry.circle = DirectionCircle{k.point(entry.simplex.vertices()[0]), vector_from(field(c, "u")),
                                           vector_from(field(c, "w")),
                                           mode == "codim1" ? CircleMode::Codim1 : CircleMode::Perpendicular};
        }
        so.entries.push_back(std::move(entry));
    }
    if (so.dim == -1) so.dim = 0;
    return so;
}

std::string stats_to_json(const ReconStats& stats) {
    json out;
    out["n"] = stats.n;
    out["queries"] = {{"total", stats.total_queries}, {"per_dim", stats.queries_per_dim}};
    out["max_binary_search_depth"] = stats.max_binary_search_depth;
    return out.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) malformed("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) malformed("cannot write " + path);
    out << text;
}

}  // namespace sweeprec
