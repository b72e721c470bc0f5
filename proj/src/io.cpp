#include "chev/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace chev::io {

namespace {

constexpr int kMaxDim = 32;

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorKind::ParseError, why); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int small_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

mpz_class big_int(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) bad("not an integer: " + j.get<std::string>());
    return v;
  }
  bad("expected an integer");
}

Json big_json(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Poly parse_entry(const Json& j, const Header& h) {
  if (j.is_number_integer()) return Poly::constant(h.ring, h.nvars, mpq_class(big_int(j)));
  if (!j.is_string()) bad("matrix entries and args must be polynomial strings");
  return parse_poly(j.get<std::string>(), h.ring, h.nvars);
}

}  // namespace

Header parse_header(const Json& j) {
  const Json& g = field(j, "group");
  const Json& type = field(g, "type");
  if (!type.is_string()) bad("group type must be a string");
  const std::string t = type.get<std::string>();
  if (t != "A" && t != "C") throw Error(ErrorKind::UnsupportedType, "group type '" + t + "' (expected A or C)");
  const int rank = small_int(field(g, "rank"), "rank");
  const int dim = t == "A" ? rank + 1 : 2 * rank;
  if (dim > kMaxDim) bad("matrix size " + std::to_string(dim) + " is too large");
  Header h;
  h.rs = build_root_system(t == "A" ? RootType::A : RootType::C, rank);
  const Json& base = field(j, "base");
  if (!base.is_string()) bad("base must be a string");
  h.ring = BaseRing::parse(base.get<std::string>());
  h.nvars = small_int(field(j, "nvars"), "nvars");
  if (h.nvars < 0 || h.nvars > 9) bad("nvars must lie in 0..9");
  return h;
}

Json header_json(const RootSystem& rs, const BaseRing& ring, int nvars) {
  Json j;
  j["group"] = {{"type", rs.type() == RootType::A ? "A" : "C"}, {"rank", rs.rank()}};
  j["nvars"] = nvars;
  j["base"] = ring.name();
  return j;
}

Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

PolyMatrix parse_matrix(const Json& entries, const Header& h) {
  const int n = h.rs->dim();
  if (!entries.is_array() || static_cast<int>(entries.size()) != n)
    bad("entries must be " + std::to_string(n) + " rows for " + h.rs->name());
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) bad("row " + std::to_string(i + 1) + " has wrong length");
    for (int k = 0; k < n; ++k) m(i, k) = parse_entry(row[k], h);
  }
  return m;
}

Json word_json(const ElemWord& w) {
  Json out = Json::array();
  for (const auto& l : w.letters()) out.push_back({{"root", w.system().root(l.root)}, {"arg", to_string(l.arg)}});
  return out;
}

ElemWord parse_word(const Json& letters, const Header& h) {
  if (!letters.is_array()) bad("word must be a list of letters");
  ElemWord w(h.rs, h.ring, h.nvars);
  for (const auto& l : letters) {
    const Json& root = field(l, "root");
    if (!root.is_array()) bad("root must be an integer vector");
    RootVector v;
    for (const auto& c : root) v.push_back(small_int(c, "root coordinate"));
    w.push(h.rs->index_of(v), parse_entry(field(l, "arg"), h));
  }
  return w;
}

Json matrix_file(const PolyMatrix& m, const RootSystem& rs, const BaseRing& ring, int nvars) {
  Json j = header_json(rs, ring, nvars);
  j["entries"] = matrix_json(m);
  return j;
}

MatrixFile read_matrix_file(const Json& j) {
  Header h = parse_header(j);
  PolyMatrix m = parse_matrix(field(j, "entries"), h);
  return {std::move(h), std::move(m)};
}

Json word_file(const ElemWord& w) {
  Json j = header_json(w.system(), w.ring(), w.nvars());
  j["word"] = word_json(w);
  return j;
}

WordFile read_word_file(const Json& j) {
  Header h = parse_header(j);
  ElemWord w = parse_word(field(j, "word"), h);
  return {std::move(h), std::move(w)};
}

Json covering_json(const CoveringData& cov) {
  Json j;
  j["s"] = cov.elems;
  Json c = Json::array();
  for (const auto& v : cov.coeffs) c.push_back(big_json(v));
  j["c"] = std::move(c);
  j["k"] = cov.exponents;
  return j;
}

CoveringData parse_covering(const Json& j) {
  CoveringData cov;
  const Json &s = field(j, "s"), &c = field(j, "c"), &k = field(j, "k");
  if (!s.is_array() || !c.is_array() || !k.is_array()) bad("covering fields must be lists");
  for (const auto& v : s) {
    if (!v.is_number_integer()) bad("covering elements must be integers");
    cov.elems.push_back(v.get<std::int64_t>());
  }
  for (const auto& v : c) cov.coeffs.push_back(big_int(v));
  for (const auto& v : k) cov.exponents.push_back(small_int(v, "exponent"));
  return cov;
}

Json certificate_json(const FactorizationCertificate& cert, const RootSystem& rs, std::optional<double> wall_time) {
  Json j = header_json(rs, cert.word.ring(), cert.word.nvars());
  j["target"] = matrix_json(cert.target);
  j["word"] = word_json(cert.word);
  j["residual"] = matrix_json(cert.residual_constant);
  j["verified"] = cert.verified;
  j["word_length"] = cert.word.length();
  j["max_degree"] = std::max(0, cert.word.max_degree());  // empty word: 0
  Json stages = Json::array();
  for (const auto& s : cert.stages)
    stages.push_back(
        {{"stage", s.stage}, {"letters", s.letters}, {"max_degree", s.max_degree}, {"max_coeff_bits", s.max_coeff_bits}});
  j["stages"] = std::move(stages);
  if (wall_time) j["wall_time_s"] = *wall_time;
  return j;
}

CertificateFile read_certificate(const Json& j) {
  Header h = parse_header(j);
  PolyMatrix target = parse_matrix(field(j, "target"), h);
  ElemWord word = parse_word(field(j, "word"), h);
  PolyMatrix residual = parse_matrix(field(j, "residual"), h);
  CertificateFile c{h, std::move(target), std::move(word), std::move(residual), false, 0, 0, std::nullopt};
  const Json& v = field(j, "verified");
  if (!v.is_boolean()) bad("verified must be a boolean");
  c.verified = v.get<bool>();
  if (j.contains("word_length")) {
    if (!j["word_length"].is_number_unsigned()) bad("word_length must be a count");
    c.word_length = j["word_length"].get<std::size_t>();
  }
  if (j.contains("max_degree")) c.max_degree = small_int(j["max_degree"], "max_degree");
  if (j.contains("wall_time_s")) {
    if (!j["wall_time_s"].is_number()) bad("wall_time_s must be a number");
    c.wall_time = j["wall_time_s"].get<double>();
  }
  return c;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot write " + path.string());
  out << dump(j);
}

}  // namespace chev::io
