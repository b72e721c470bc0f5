#pragma once

// JSON file formats. Every file carries a header
//   {"group": {"type": "A", "rank": 2}, "nvars": 1, "base": "Z", ...}
// and polynomials travel as text in the grammar of parse_poly.

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "chev/factorize.hpp"

namespace chev::io {

// Keys keep insertion order, so emitted files are byte-stable.
using Json = nlohmann::ordered_json;

struct Header {
  RootSystemPtr rs;
  BaseRing ring = BaseRing::integers();
  int nvars = 0;
};

// Throws ParseError; RankTooLow / UnsupportedType come from the root system.
Header parse_header(const Json& j);
Json header_json(const RootSystem& rs, const BaseRing& ring, int nvars);

Json matrix_json(const PolyMatrix& m);
PolyMatrix parse_matrix(const Json& entries, const Header& h);

// [{"root": [1,-1,0], "arg": "x1"}, ...] in product order.
Json word_json(const ElemWord& w);
ElemWord parse_word(const Json& letters, const Header& h);

struct MatrixFile {
  Header header;
  PolyMatrix matrix;
};
Json matrix_file(const PolyMatrix& m, const RootSystem& rs, const BaseRing& ring, int nvars);
MatrixFile read_matrix_file(const Json& j);

struct WordFile {
  Header header;
  ElemWord word;
};
Json word_file(const ElemWord& w);
WordFile read_word_file(const Json& j);

// {"s": [2, 3], "c": [-1, 1], "k": [1, 1]}; integers beyond 64 bits as strings.
Json covering_json(const CoveringData& cov);
CoveringData parse_covering(const Json& j);

struct CertificateFile {
  Header header;
  PolyMatrix target;
  ElemWord word;
  PolyMatrix residual;
  bool verified = false;
  std::size_t word_length = 0;
  int max_degree = 0;
  std::optional<double> wall_time;
};
// Wall time is written only when given; without it the file is a pure
// function of the input.
Json certificate_json(const FactorizationCertificate& cert, const RootSystem& rs, std::optional<double> wall_time);
CertificateFile read_certificate(const Json& j);

// Throws ParseError on unreadable or malformed files.
Json read_json(const std::filesystem::path& path);
Json parse_json(const std::string& text);
// Two-space indent with a trailing newline.
std::string dump(const Json& j);
void write_json(const std::filesystem::path& path, const Json& j);

}  // namespace chev::io
