#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "torusdom/torus.hpp"
#include "torusdom/validate.hpp"

namespace torusdom {

inline constexpr int kCertificateSchema = 1;

/// On-disk witness. Field order and layout are fixed so that
/// serialize(parse(text)) == text for every text serialize produced.
struct CertificateFile {
  int schema_version = kCertificateSchema;
  int n = 0;
  int m = 0;
  DominationKind kind = DominationKind::Total;
  int cardinality = 0;
  std::vector<VertexId> vertices;
  std::string provenance;

  friend bool operator==(const CertificateFile&, const CertificateFile&) = default;
};

CertificateFile make_certificate(const VertexSet& set, DominationKind kind, std::string provenance);
/// Throws Error{MalformedInput} for out-of-range or repeated vertices.
VertexSet to_vertex_set(const CertificateFile& file);

std::string serialize(const CertificateFile& file);
/// Throws Error{MalformedInput} on syntax errors, missing fields, unknown
/// kinds, schema mismatch or a cardinality that disagrees with the list.
CertificateFile parse_certificate(std::string_view text);

CertificateFile read_certificate(const std::string& path);
void write_certificate(const std::string& path, const CertificateFile& file);

}  // namespace torusdom
