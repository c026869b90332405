#include "shiftlab/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "shiftlab/error.hpp"

namespace shiftlab::io {

using nlohmann::json;

namespace {

bool is_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

std::vector<std::vector<unsigned>> text_faces(const std::string& text) {
  std::vector<std::vector<unsigned>> faces;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
    std::istringstream ls(line);
    std::vector<unsigned> face;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v == 0 || v > kMaxVertices) {
        throw ParseError("line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
      }
      face.push_back(static_cast<unsigned>(v));
    }
    if (!face.empty()) faces.push_back(std::move(face));
  }
  return faces;
}

std::vector<std::vector<unsigned>> json_faces(const json& arr, const char* what) {
  if (!arr.is_array()) throw ParseError(std::string("\"") + what + "\" must be an array");
  std::vector<std::vector<unsigned>> faces;
  for (const auto& f : arr) {
    if (!f.is_array()) throw ParseError(std::string("entries of \"") + what + "\" must be arrays");
    std::vector<unsigned> face;
    for (const auto& v : f) {
      if (!v.is_number_unsigned() || v.get<unsigned long>() == 0 || v.get<unsigned long>() > kMaxVertices) {
        throw ParseError(std::string("bad vertex in \"") + what + "\": " + v.dump());
      }
      face.push_back(v.get<unsigned>());
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

unsigned max_vertex(const std::vector<std::vector<unsigned>>& faces) {
  unsigned n = 0;
  for (const auto& f : faces) {
    for (auto v : f) n = std::max(n, v);
  }
  return n;
}

Subset to_subset(const std::vector<unsigned>& face, unsigned n) {
  Subset s = 0;
  for (auto v : face) {
    if (v > n) throw ParseError("vertex " + std::to_string(v) + " exceeds n = " + std::to_string(n));
    if (contains(s, v)) throw ParseError("repeated vertex " + std::to_string(v) + " in a face");
    s |= element_bit(v);
  }
  return s;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::optional<unsigned> json_uint(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  if (!j[key].is_number_unsigned()) throw ParseError(std::string("\"") + key + "\" must be a nonnegative integer");
  return j[key].get<unsigned>();
}

nlohmann::ordered_json faces_json(const std::vector<Subset>& faces) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (auto f : faces) out.push_back(elements(f));
  return out;
}

}  // namespace

UniformHypergraph parse_hypergraph(const std::string& text, std::optional<unsigned> n) {
  std::vector<std::vector<unsigned>> faces;
  std::optional<unsigned> k;
  if (is_json(text)) {
    const json j = parse_json(text);
    if (!j.contains("edges")) throw ParseError("hypergraph JSON needs \"edges\"");
    faces = json_faces(j["edges"], "edges");
    if (auto jn = json_uint(j, "n")) {
      if (n && *n != *jn) throw ParseError("n in the file differs from the requested n");
      n = jn;
    }
    k = json_uint(j, "k");
  } else {
    faces = text_faces(text);
  }
  if (!n) n = max_vertex(faces);
  if (*n == 0 || *n > kMaxVertices) throw ParseError("n must be in 1..64");
  if (!k) {
    if (faces.empty()) throw ParseError("cannot infer k from an empty hypergraph");
    k = static_cast<unsigned>(faces.front().size());
  }
  std::vector<Subset> edges;
  for (const auto& f : faces) {
    if (f.size() != *k) throw ParseError("edge of size " + std::to_string(f.size()) + " in a " + std::to_string(*k) + "-uniform hypergraph");
    edges.push_back(to_subset(f, *n));
  }
  try {
    return UniformHypergraph(*n, *k, std::move(edges));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

SimplicialComplex parse_complex(const std::string& text, std::optional<unsigned> n) {
  std::vector<std::vector<unsigned>> faces;
  if (is_json(text)) {
    const json j = parse_json(text);
    if (!j.contains("facets")) throw ParseError("complex JSON needs \"facets\"");
    faces = json_faces(j["facets"], "facets");
    if (auto jn = json_uint(j, "n")) {
      if (n && *n != *jn) throw ParseError("n in the file differs from the requested n");
      n = jn;
    }
  } else {
    faces = text_faces(text);
  }
  if (!n) n = max_vertex(faces);
  if (*n == 0 || *n > kMaxVertices) throw ParseError("n must be in 1..64");
  std::vector<Subset> subsets;
  for (const auto& f : faces) subsets.push_back(to_subset(f, *n));
  return SimplicialComplex::from_faces(*n, subsets);
}

std::string hypergraph_json(const UniformHypergraph& h) {
  nlohmann::ordered_json j;
  j["n"] = h.n();
  j["k"] = h.k();
  j["edges"] = faces_json(h.edges());
  return j.dump() + "\n";
}

std::string hypergraph_text(const UniformHypergraph& h) {
  std::string out;
  for (auto e : h.edges()) {
    bool first = true;
    for (auto v : elements(e)) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string complex_json(const SimplicialComplex& k) {
  nlohmann::ordered_json j;
  j["n"] = k.n();
  j["facets"] = faces_json(k.facets());
  return j.dump() + "\n";
}

std::string complex_text(const SimplicialComplex& k) {
  std::string out;
  for (auto f : k.facets()) {
    bool first = true;
    for (auto v : elements(f)) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string betti_json(const BettiVector& b) {
  nlohmann::ordered_json j;
  j["char"] = b.characteristic;
  j["betti"] = b.betti;
  return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace shiftlab::io
