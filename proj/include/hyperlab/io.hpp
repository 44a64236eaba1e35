#ifndef HYPERLAB_IO_HPP
#define HYPERLAB_IO_HPP

#include <hyperlab/constructors.hpp>
#include <hyperlab/hypergraph.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlab {

// On-disk form of a hypergraph: the core value plus the optional vertex
// classes of a sigma-hypergraph.
struct Document {
    Hypergraph graph;
    std::optional<std::vector<std::vector<Vertex>>> classes;

    bool operator==(const Document&) const = default;
};

Document make_document(const SigmaHypergraph& sigma);

/* Canonical JSON text:
 *   { "r": int, "vertex_count": int, "edges": [[...], ...],
 *     "classes": [[...], ...] (only when present), "provenance": [str, ...] }
 * with one edge / class per line. Equal documents give identical bytes.
 */
std::string to_json_text(const Document& doc);

// Throws ParseError with a line:column or field path in the message.
Document parse_document(std::string_view text);

Document load(const std::filesystem::path& path);
void save(const Document& doc, const std::filesystem::path& path);

// Recovers n, q and sigma when the classes are contiguous blocks of equal
// size and every edge meets them in the same pattern.
std::optional<SigmaMeta> restore_sigma_meta(const Document& doc);

}  // namespace hyperlab

#endif  // HYPERLAB_IO_HPP
