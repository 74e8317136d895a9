#ifndef HYPERORIENT_IO_HPP_
#define HYPERORIENT_IO_HPP_

#include <filesystem>
#include <iosfwd>

#include "hyperorient/augment.hpp"
#include "hyperorient/families.hpp"
#include "hyperorient/hypergraph.hpp"

#include "json.hpp"

namespace hyperorient {

// Hypergraph text:   "n <count>" then one "e <v1> <v2> ..." per hyperedge.
// Orientation text:  one "o <edge_id> <head>" per hyperedge.
// Trace:             JSON lines; header, one object per step, footer.
// '#' starts a comment in the text formats. Parse errors carry line numbers.

Hypergraph parse_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

Orientation parse_orientation(std::istream& in, const Hypergraph& h);
void write_orientation(std::ostream& out, const Orientation& o);

ReorientationTrace parse_trace(std::istream& in, const Hypergraph& h);
void write_trace(std::ostream& out, const Hypergraph& h, const ReorientationTrace& trace);

Hypergraph read_hypergraph_file(const std::filesystem::path& path);
Orientation read_orientation_file(const std::filesystem::path& path, const Hypergraph& h);
ReorientationTrace read_trace_file(const std::filesystem::path& path, const Hypergraph& h);

nlohmann::json to_json(const VertexSet& x);
nlohmann::json to_json(const CutFamilies& fam);

}  // namespace hyperorient

#endif  // HYPERORIENT_IO_HPP_
