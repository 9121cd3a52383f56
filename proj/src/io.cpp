#include "ncfrieze/io.hpp"

#include <fstream>
#include <sstream>

#include "ncfrieze/errors.hpp"
#include "ncfrieze/expr.hpp"

namespace ncfrieze {

Json descriptor_to_json(const RingDescriptor& ring) {
    Json j;
    switch (ring.kind) {
        case RingKind::rational: j["kind"] = "rational"; break;
        case RingKind::quaternion: j["kind"] = "quaternion"; break;
        case RingKind::matrix:
            j["kind"] = "matrix";
            j["dim"] = ring.dim;
            break;
        case RingKind::free_skew:
            j["kind"] = "free";
            j["vars"] = ring.vars;
            break;
    }
    return j;
}

RingDescriptor descriptor_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw FormatError("ring descriptor needs a string field 'kind'");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "rational") return RingDescriptor::rational();
    if (kind == "quaternion") return RingDescriptor::quaternion();
    if (kind == "matrix") {
        if (!j.contains("dim") || !j["dim"].is_number_integer())
            throw FormatError("matrix ring needs an integer field 'dim'");
        int dim = j["dim"].get<int>();
        if (dim < 1) throw FormatError("matrix ring dimension must be >= 1");
        return RingDescriptor::matrix(dim);
    }
    if (kind == "free") {
        if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
            throw FormatError("free ring needs a nonempty array field 'vars'");
        std::vector<std::string> vars;
        for (const Json& v : j["vars"]) {
            if (!v.is_string()) throw FormatError("free ring variables must be strings");
            vars.push_back(v.get<std::string>());
        }
        return RingDescriptor::free_skew(std::move(vars));
    }
    throw FormatError("unknown ring kind '" + kind + "'");
}

Json value_to_json(const RingValue& v) {
    if (v.ring.kind == RingKind::matrix) {
        Json rows = Json::array();
        const RingMatrix& m = v.as_matrix();
        for (int r = 0; r < m.rows; ++r) {
            Json row = Json::array();
            for (int c = 0; c < m.cols; ++c) row.push_back(rational_to_string(m.at(r, c).as_rational()));
            rows.push_back(std::move(row));
        }
        return rows;
    }
    return value_to_string(v);
}

RingValue value_from_json(const RingDescriptor& ring, const Json& j) {
    if (ring.kind == RingKind::matrix) {
        if (!j.is_array() || j.size() != static_cast<std::size_t>(ring.dim))
            throw FormatError("matrix element must be an array of " + std::to_string(ring.dim) +
                              " rows");
        std::vector<RingValue> data;
        data.reserve(static_cast<std::size_t>(ring.dim) * ring.dim);
        for (const Json& row : j) {
            if (!row.is_array() || row.size() != static_cast<std::size_t>(ring.dim))
                throw FormatError("matrix element rows must have " + std::to_string(ring.dim) +
                                  " entries");
            for (const Json& cell : row) {
                if (!cell.is_string()) throw FormatError("matrix entries are rational strings");
                data.push_back(make_rational_value(rational_from_string(cell.get<std::string>())));
            }
        }
        return make_matrix_value(RingMatrix(ring.dim, ring.dim, RingDescriptor::rational(), std::move(data)));
    }
    if (!j.is_string()) throw FormatError("ring element must be an expression string");
    ExprPtr e = [&] {
        try {
            return parse_expr(j.get<std::string>(), ring);
        } catch (const SyntaxError& err) {
            throw FormatError("cannot parse '" + j.get<std::string>() + "': " + err.what());
        } catch (const UnknownSymbol& err) {
            throw FormatError("cannot parse '" + j.get<std::string>() + "': " + err.what());
        }
    }();
    if (ring.kind == RingKind::free_skew) return make_free_value(ring, std::move(e));
    return evaluate(e, ring);
}

Json frieze_to_json(const Frieze& f) {
    Json j;
    j["ring"] = descriptor_to_json(f.ring());
    j["m"] = f.size();
    Json entries = Json::object();
    for (int i = 0; i < f.size(); ++i)
        for (int k = 0; k < f.size(); ++k) {
            if (i == k) continue;
            entries[std::to_string(i) + "," + std::to_string(k)] = value_to_json(f.at(i, k));
        }
    j["entries"] = std::move(entries);
    return j;
}

namespace {

std::pair<int, int> parse_entry_key(const std::string& key, int m) {
    std::size_t comma = key.find(',');
    if (comma == std::string::npos) throw FormatError("entry key '" + key + "' is not 'i,j'");
    int i, j;
    try {
        i = std::stoi(key.substr(0, comma));
        j = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
        throw FormatError("entry key '" + key + "' is not 'i,j'");
    }
    if (i < 0 || i >= m || j < 0 || j >= m || i == j)
        throw FormatError("entry key '" + key + "' out of range for m = " + std::to_string(m));
    return {i, j};
}

int read_m(const Json& j) {
    if (!j.contains("m") || !j["m"].is_number_integer())
        throw FormatError("missing integer field 'm'");
    return j["m"].get<int>();
}

std::vector<RingValue> read_value_array(const Json& j, const char* field,
                                        const RingDescriptor& ring, int m) {
    if (!j.contains(field) || !j[field].is_array() ||
        j[field].size() != static_cast<std::size_t>(m))
        throw FormatError(std::string("field '") + field + "' must be an array of length m");
    std::vector<RingValue> values;
    values.reserve(m);
    for (const Json& v : j[field]) values.push_back(value_from_json(ring, v));
    return values;
}

}  // namespace

Frieze frieze_from_json(const Json& j) {
    RingDescriptor ring = descriptor_from_json(j.contains("ring") ? j["ring"] : Json());
    int m = read_m(j);
    if (m < 3) throw FormatError("friezes need m >= 3");
    if (!j.contains("entries") || !j["entries"].is_object())
        throw FormatError("missing object field 'entries'");
    std::vector<RingValue> entries(static_cast<std::size_t>(m) * m, ring_zero(ring));
    std::vector<bool> present(static_cast<std::size_t>(m) * m, false);
    for (const auto& [key, value] : j["entries"].items()) {
        auto [i, k] = parse_entry_key(key, m);
        std::size_t slot = static_cast<std::size_t>(i) * m + k;
        if (present[slot]) throw FormatError("duplicate entry key '" + key + "'");
        present[slot] = true;
        entries[slot] = value_from_json(ring, value);
    }
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k)
            if (i != k && !present[static_cast<std::size_t>(i) * m + k])
                throw FormatError("missing entry " + std::to_string(i) + "," + std::to_string(k));
    return Frieze(std::move(ring), m, std::move(entries));
}

Json cycle_to_json(const QuiddityCycle& cycle) {
    Json j;
    j["ring"] = descriptor_to_json(cycle.ring);
    j["m"] = cycle.m;
    auto array_of = [](const std::vector<RingValue>& values) {
        Json a = Json::array();
        for (const RingValue& v : values) a.push_back(value_to_json(v));
        return a;
    };
    j["boundary_fwd"] = array_of(cycle.boundary_fwd);
    j["boundary_bwd"] = array_of(cycle.boundary_bwd);
    j["quiddity"] = array_of(cycle.quiddity);
    if (cycle.cut_index || cycle.parent_m) {
        Json metadata = Json::object();
        if (cycle.cut_index) metadata["cut_index"] = *cycle.cut_index;
        if (cycle.parent_m) metadata["parent_m"] = *cycle.parent_m;
        j["metadata"] = std::move(metadata);
    }
    return j;
}

QuiddityCycle cycle_from_json(const Json& j) {
    RingDescriptor ring = descriptor_from_json(j.contains("ring") ? j["ring"] : Json());
    int m = read_m(j);
    if (m < 1) throw FormatError("quiddity cycles need m >= 1");
    QuiddityCycle cycle = make_quiddity_cycle(ring, read_value_array(j, "boundary_fwd", ring, m),
                                              read_value_array(j, "boundary_bwd", ring, m),
                                              read_value_array(j, "quiddity", ring, m));
    if (j.contains("metadata") && j["metadata"].is_object()) {
        const Json& metadata = j["metadata"];
        if (metadata.contains("cut_index")) cycle.cut_index = metadata["cut_index"].get<int>();
        if (metadata.contains("parent_m")) cycle.parent_m = metadata["parent_m"].get<int>();
    }
    return cycle;
}

namespace {

Json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("cannot parse '" + path.string() + "': " + e.what());
    }
}

}  // namespace

Frieze load_frieze(const std::filesystem::path& path) { return frieze_from_json(parse_file(path)); }

QuiddityCycle load_cycle(const std::filesystem::path& path) {
    return cycle_from_json(parse_file(path));
}

std::string json_to_string(const Json& j) { return j.dump(2) + "\n"; }

void save_json(const Json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write '" + path.string() + "'");
    out << json_to_string(j);
}

}  // namespace ncfrieze
