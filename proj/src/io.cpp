#include <hyperlab/io.hpp>

#include <hyperlab/error.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hyperlab {

using nlohmann::json;

namespace {

void write_rows(std::ostringstream& out, const std::vector<std::vector<Vertex>>& rows) {
    if (rows.empty()) {
        out << "[]";
        return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << "    [";
        for (std::size_t j = 0; j < rows[i].size(); ++j) out << (j ? "," : "") << rows[i][j];
        out << "]" << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "  ]";
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

int read_int(const json& obj, const std::string& field) {
    if (!obj.contains(field)) field_error(field, "missing");
    const auto& v = obj.at(field);
    if (!v.is_number_integer()) field_error(field, "expected integer, got " + std::string(v.type_name()));
    return v.get<int>();
}

std::vector<std::vector<Vertex>> read_rows(const json& obj, const std::string& field) {
    const auto& v = obj.at(field);
    if (!v.is_array()) field_error(field, "expected array of integer arrays");
    std::vector<std::vector<Vertex>> rows;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& row = v[i];
        const std::string path = field + "[" + std::to_string(i) + "]";
        if (!row.is_array()) field_error(path, "expected array of integers, got " + std::string(row.type_name()));
        std::vector<Vertex> values;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!row[j].is_number_integer())
                field_error(path + "[" + std::to_string(j) + "]", "expected integer, got " + std::string(row[j].type_name()));
            values.push_back(row[j].get<Vertex>());
        }
        rows.push_back(std::move(values));
    }
    return rows;
}

}  // namespace

Document make_document(const SigmaHypergraph& sigma) {
    return Document{sigma.graph, sigma.meta.classes};
}

std::string to_json_text(const Document& doc) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"r\": " << doc.graph.r() << ",\n";
    out << "  \"vertex_count\": " << doc.graph.vertex_count() << ",\n";
    out << "  \"edges\": ";
    write_rows(out, doc.graph.edges());
    out << ",\n";
    if (doc.classes) {
        out << "  \"classes\": ";
        write_rows(out, *doc.classes);
        out << ",\n";
    }
    out << "  \"provenance\": ";
    const auto& prov = doc.graph.provenance();
    if (prov.empty()) {
        out << "[]";
    } else {
        out << "[\n";
        for (std::size_t i = 0; i < prov.size(); ++i)
            out << "    " << json(prov[i]).dump() << (i + 1 < prov.size() ? ",\n" : "\n");
        out << "  ]";
    }
    out << "\n}\n";
    return out.str();
}

Document parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                               ": " + e.what());
    }
    if (!root.is_object()) throw Error(ErrorCode::ParseError, "top level must be an object");

    const int r = read_int(root, "r");
    const int vertex_count = read_int(root, "vertex_count");
    if (!root.contains("edges")) field_error("edges", "missing");
    auto edges = read_rows(root, "edges");

    std::vector<std::string> provenance;
    if (root.contains("provenance")) {
        const auto& p = root.at("provenance");
        if (!p.is_array()) field_error("provenance", "expected array of strings");
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!p[i].is_string()) field_error("provenance[" + std::to_string(i) + "]", "expected string");
            provenance.push_back(p[i].get<std::string>());
        }
    }

    std::optional<std::vector<std::vector<Vertex>>> classes;
    if (root.contains("classes")) {
        classes = read_rows(root, "classes");
        for (std::size_t i = 0; i < classes->size(); ++i)
            for (Vertex v : (*classes)[i])
                if (v < 0 || v >= vertex_count)
                    field_error("classes[" + std::to_string(i) + "]", "vertex " + std::to_string(v) + " out of range");
    }

    try {
        return Document{Hypergraph(r, vertex_count, std::move(edges), std::move(provenance)), std::move(classes)};
    } catch (const Error& e) {
        field_error("edges", e.what());
    }
}

Document load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_document(buf.str());
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ParseError) throw;
        throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
}

void save(const Document& doc, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
    out << to_json_text(doc);
    if (!out) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

std::optional<SigmaMeta> restore_sigma_meta(const Document& doc) {
    if (!doc.classes || doc.classes->empty()) return std::nullopt;
    const auto& classes = *doc.classes;
    const int n = static_cast<int>(classes.size());
    const int q = static_cast<int>(classes.front().size());
    if (q == 0 || n * q != doc.graph.vertex_count()) return std::nullopt;
    if (classes != contiguous_classes(n, q)) return std::nullopt;
    if (doc.graph.edge_count() == 0) return std::nullopt;

    auto pattern = [&](const Edge& e) {
        std::vector<int> counts(static_cast<std::size_t>(n), 0);
        for (Vertex v : e) ++counts[static_cast<std::size_t>(v / q)];
        std::vector<int> parts;
        for (int c : counts)
            if (c > 0) parts.push_back(c);
        return Partition(std::move(parts));
    };
    Partition sigma = pattern(doc.graph.edges().front());
    for (const auto& e : doc.graph.edges())
        if (pattern(e) != sigma) return std::nullopt;
    return SigmaMeta{n, q, sigma, classes};
}

}  // namespace hyperlab
