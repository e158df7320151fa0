#include "torusdom/certificate.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "torusdom/error.hpp"

namespace torusdom {

CertificateFile make_certificate(const VertexSet& set, DominationKind kind, std::string provenance) {
  CertificateFile file;
  file.n = set.dims().n;
  file.m = set.dims().m;
  file.kind = kind;
  file.vertices = set.members();
  file.cardinality = static_cast<int>(file.vertices.size());
  file.provenance = std::move(provenance);
  return file;
}

VertexSet to_vertex_set(const CertificateFile& file) {
  VertexSet set(TorusDims{file.n, file.m});
  for (const auto& v : file.vertices) {
    if (!set.in_range(v)) {
      throw Error(ErrorCode::MalformedInput, "certificate vertex [" + std::to_string(v.i) + ", " +
                                                 std::to_string(v.j) + "] is outside the torus");
    }
    if (set.contains(v)) {
      throw Error(ErrorCode::MalformedInput, "certificate lists [" + std::to_string(v.i) + ", " +
                                                 std::to_string(v.j) + "] twice");
    }
    set.insert(v);
  }
  return set;
}

std::string serialize(const CertificateFile& file) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"schema_version\": " << file.schema_version << ",\n";
  os << "  \"n\": " << file.n << ",\n";
  os << "  \"m\": " << file.m << ",\n";
  os << "  \"kind\": " << nlohmann::json(to_string(file.kind)).dump() << ",\n";
  os << "  \"cardinality\": " << file.cardinality << ",\n";
  if (file.vertices.empty()) {
    os << "  \"vertices\": [],\n";
  } else {
    os << "  \"vertices\": [\n";
    for (std::size_t k = 0; k < file.vertices.size(); ++k) {
      os << "    [" << file.vertices[k].i << ", " << file.vertices[k].j << "]"
         << (k + 1 < file.vertices.size() ? ",\n" : "\n");
    }
    os << "  ],\n";
  }
  os << "  \"provenance\": " << nlohmann::json(file.provenance).dump() << "\n";
  os << "}\n";
  return os.str();
}

CertificateFile parse_certificate(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    CertificateFile file;
    file.schema_version = doc.at("schema_version").get<int>();
    if (file.schema_version != kCertificateSchema) {
      throw Error(ErrorCode::MalformedInput, "unsupported certificate schema_version " +
                                                 std::to_string(file.schema_version));
    }
    file.n = doc.at("n").get<int>();
    file.m = doc.at("m").get<int>();
    const auto kind_text = doc.at("kind").get<std::string>();
    auto kind = parse_kind(kind_text);
    if (!kind) throw Error(ErrorCode::MalformedInput, "unknown certificate kind '" + kind_text + "'");
    file.kind = *kind;
    file.cardinality = doc.at("cardinality").get<int>();
    for (const auto& pair : doc.at("vertices")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorCode::MalformedInput, "each certificate vertex must be an [i, j] pair");
      }
      file.vertices.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    file.provenance = doc.value("provenance", std::string());
    if (file.cardinality != static_cast<int>(file.vertices.size())) {
      throw Error(ErrorCode::MalformedInput, "certificate cardinality " + std::to_string(file.cardinality) +
                                                 " does not match its " + std::to_string(file.vertices.size()) +
                                                 " vertices");
    }
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("certificate field error: ") + e.what());
  }
}

CertificateFile read_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read certificate " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

void write_certificate(const std::string& path, const CertificateFile& file) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << serialize(file);
  if (!out) throw Error(ErrorCode::InvalidArgument, "short write to " + path);
}

}  // namespace torusdom
