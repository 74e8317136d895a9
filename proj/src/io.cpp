#include "hyperorient/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hyperorient/errors.hpp"

namespace hyperorient {

namespace {

using nlohmann::json;

/// Whitespace-separated tokens of one line, with any '#' comment removed.
std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

long long parse_integer(const std::string& token, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) throw ParseError(line, "expected an integer, got '" + token + "'");
  return value;
}

VertexId parse_vertex(const std::string& token, int n, int line) {
  const long long v = parse_integer(token, line);
  if (v < 0 || v >= n) {
    throw ParseError(line, "vertex " + token + " outside 0.." + std::to_string(n - 1));
  }
  return static_cast<VertexId>(v);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  return in;
}

template <typename T>
T field(const json& j, const char* key, int line) {
  if (!j.contains(key)) throw ParseError(line, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(line, std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  int n = -1;
  std::vector<std::vector<VertexId>> raw;
  std::vector<int> edge_lines;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "n") {
      if (n != -1) throw ParseError(line_no, "vertex count given twice");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
      const long long count = parse_integer(tokens[1], line_no);
      if (count < 2 || count > (1 << 20)) {
        throw ParseError(line_no, "vertex count must be between 2 and 2^20");
      }
      n = static_cast<int>(count);
    } else if (tokens[0] == "e") {
      if (n == -1) throw ParseError(line_no, "hyperedge before the 'n' line");
      std::vector<VertexId> members;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        members.push_back(parse_vertex(tokens[i], n, line_no));
      }
      raw.push_back(std::move(members));
      edge_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, "unknown record '" + tokens[0] + "'");
    }
  }
  if (n == -1) throw ParseError(0, "missing 'n <count>' line");

  std::vector<VertexSet> edges;
  for (std::size_t e = 0; e < raw.size(); ++e) {
    VertexSet x(n, raw[e]);
    if (x.size() != static_cast<int>(raw[e].size())) {
      throw ParseError(edge_lines[e], "hyperedge lists a vertex twice");
    }
    if (x.size() < 2) throw ParseError(edge_lines[e], "hyperedge needs at least 2 vertices");
    edges.push_back(std::move(x));
  }
  try {
    return Hypergraph(n, std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "n " << h.num_vertices() << '\n';
  for (const VertexSet& z : h.edges()) {
    out << 'e';
    z.for_each([&](VertexId v) { out << ' ' << v; });
    out << '\n';
  }
}

Orientation parse_orientation(std::istream& in, const Hypergraph& h) {
  const int m = h.num_edges();
  std::vector<VertexId> heads(static_cast<std::size_t>(m), -1);
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (tokens.empty()) continue;
    if (tokens[0] != "o" || tokens.size() != 3) {
      throw ParseError(line_no, "expected 'o <edge_id> <head>'");
    }
    const long long e = parse_integer(tokens[1], line_no);
    if (e < 0 || e >= m) throw ParseError(line_no, "no hyperedge " + tokens[1]);
    const VertexId v = parse_vertex(tokens[2], h.num_vertices(), line_no);
    if (!h.edge(static_cast<EdgeId>(e)).contains(v)) {
      throw ParseError(line_no, "head " + tokens[2] + " is not in hyperedge " + tokens[1]);
    }
    auto& slot = heads[static_cast<std::size_t>(e)];
    if (slot != -1) throw ParseError(line_no, "hyperedge " + tokens[1] + " oriented twice");
    slot = v;
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (heads[static_cast<std::size_t>(e)] == -1) {
      throw ParseError(0, "hyperedge " + std::to_string(e) + " has no head");
    }
  }
  return Orientation(h, std::move(heads));
}

void write_orientation(std::ostream& out, const Orientation& o) {
  for (EdgeId e = 0; e < o.num_edges(); ++e) out << "o " << e << ' ' << o.head(e) << '\n';
}

ReorientationTrace parse_trace(std::istream& in, const Hypergraph& h) {
  ReorientationTrace trace;
  bool have_header = false;
  bool have_footer = false;
  Count footer_steps = 0;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(line_no, "expected a JSON object");
    if (have_footer) throw ParseError(line_no, "content after the footer");

    if (!have_header) {
      if (field<int>(j, "n", line_no) != h.num_vertices() ||
          field<int>(j, "m", line_no) != h.num_edges()) {
        throw ParseError(line_no, "trace header does not match the hypergraph");
      }
      trace.lambda_initial = field<Count>(j, "lambda_initial", line_no);
      trace.k_target = field<Count>(j, "k_target", line_no);
      try {
        trace.initial = Orientation(h, field<std::vector<VertexId>>(j, "heads", line_no));
      } catch (const InvalidArgument& e) {
        throw ParseError(line_no, e.what());
      }
      have_header = true;
    } else if (j.contains("step")) {
      const auto index = field<std::size_t>(j, "step", line_no);
      if (index != trace.steps.size() + 1) {
        throw ParseError(line_no, "step " + std::to_string(index) + " out of sequence");
      }
      trace.steps.push_back({field<EdgeId>(j, "edge", line_no), field<VertexId>(j, "old_head", line_no),
                             field<VertexId>(j, "new_head", line_no),
                             field<Count>(j, "lambda", line_no)});
    } else {
      trace.lambda_final = field<Count>(j, "lambda_final", line_no);
      footer_steps = field<Count>(j, "steps", line_no);
      have_footer = true;
    }
  }
  if (!have_header) throw ParseError(0, "trace has no header");
  if (!have_footer) throw ParseError(0, "trace has no footer");
  if (footer_steps != static_cast<Count>(trace.steps.size())) {
    throw ParseError(0, "footer counts " + std::to_string(footer_steps) + " steps, found " +
                            std::to_string(trace.steps.size()));
  }
  return trace;
}

void write_trace(std::ostream& out, const Hypergraph& h, const ReorientationTrace& trace) {
  out << nlohmann::ordered_json{{"n", h.num_vertices()},
              {"m", h.num_edges()},
              {"lambda_initial", trace.lambda_initial},
              {"k_target", trace.k_target},
              {"heads", std::vector<VertexId>(trace.initial.heads().begin(),
                                               trace.initial.heads().end())}}
             .dump()
      << '\n';
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReorientationStep& s = trace.steps[i];
    out << nlohmann::ordered_json{{"step", i + 1},
                {"edge", s.edge},
                {"old_head", s.old_head},
                {"new_head", s.new_head},
                {"lambda", s.lambda_after}}
               .dump()
        << '\n';
  }
  out << nlohmann::ordered_json{{"lambda_final", trace.lambda_final}, {"steps", trace.steps.size()}}.dump() << '\n';
}

Hypergraph read_hypergraph_file(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  return parse_hypergraph(in);
}

Orientation read_orientation_file(const std::filesystem::path& path, const Hypergraph& h) {
  std::ifstream in = open_or_throw(path);
  return parse_orientation(in, h);
}

ReorientationTrace read_trace_file(const std::filesystem::path& path, const Hypergraph& h) {
  std::ifstream in = open_or_throw(path);
  return parse_trace(in, h);
}

json to_json(const VertexSet& x) { return x.elements(); }

json to_json(const CutFamilies& fam) {
  auto list = [](const std::vector<VertexSet>& family) {
    json out = json::array();
    for (const VertexSet& x : family) out.push_back(to_json(x));
    return out;
  };
  return json{{"k", fam.k},
              {"root", fam.root},
              {"m_minus", list(fam.m_minus)},
              {"m_plus", list(fam.m_plus)},
              {"m_all", list(fam.m_all)},
              {"r_family", list(fam.r_family)},
              {"q_minus", list(fam.q_minus)},
              {"q_plus", list(fam.q_plus)}};
}

}  // namespace hyperorient
