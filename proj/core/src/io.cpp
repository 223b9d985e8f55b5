#include "hopfkit/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hopfkit::io {

using nlohmann::json;

namespace {

std::string quote(const std::string& s) { return json(s).dump(); }

void write_rows(std::ostringstream& os, const std::string& key, const std::vector<std::string>& rows,
                bool last) {
  os << "  " << quote(key) << ": [";
  if (rows.empty()) {
    os << "]";
  } else if (rows.size() == 1 && key != "mult" && key != "comult") {
    os << rows[0] << "]";
  } else {
    os << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) os << "    " << rows[i] << (i + 1 < rows.size() ? ",\n" : "\n");
    os << "  ]";
  }
  os << (last ? "\n" : ",\n");
}

std::vector<std::string> vec_rows(const SparseVec& v) {
  std::vector<std::string> out;
  for (const auto& [i, s] : v) out.push_back("[" + std::to_string(i) + ", " + quote(s.str()) + "]");
  return out;
}

// rows [i, <flat index split over dims>, "c"] for a family of vectors
std::vector<std::string> family_rows(const std::vector<SparseVec>& fam, const std::vector<std::size_t>& dims) {
  std::vector<std::string> out;
  Tensor shape(dims);
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (const auto& [flat, s] : fam[i]) {
      std::string r = "[" + std::to_string(i);
      for (std::size_t k : shape.unflatten(flat)) r += ", " + std::to_string(k);
      out.push_back(r + ", " + quote(s.str()) + "]");
    }
  return out;
}

std::vector<std::string> tensor_rows(const Tensor& t) {
  std::vector<std::string> out;
  for (const auto& [flat, s] : t.coeffs()) {
    std::string r = "[";
    for (std::size_t k : t.unflatten(flat)) r += std::to_string(k) + ", ";
    out.push_back(r + quote(s.str()) + "]");
  }
  return out;
}

Scalar scalar_of(const json& v, const Field& f) {
  if (v.is_string()) return f.parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return f.from_int(v.get<long long>());
  throw ParseError("scalar must be a string or an integer");
}

std::size_t index_of(const json& v, std::size_t bound) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError("index must be a non-negative integer");
  auto i = v.get<std::size_t>();
  if (i >= bound) throw ParseError("index " + std::to_string(i) + " out of range");
  return i;
}

// Reads rows [i0, ..., i_{m-1}, "c"] into entries keyed by the flat index.
std::vector<std::pair<std::vector<std::size_t>, Scalar>> read_rows(const json& arr, std::size_t m,
                                                                    std::size_t bound, const Field& f,
                                                                    const std::string& key) {
  if (!arr.is_array()) throw ParseError("'" + key + "' must be an array");
  std::vector<std::pair<std::vector<std::size_t>, Scalar>> out;
  for (const auto& row : arr) {
    if (!row.is_array() || row.size() != m + 1)
      throw ParseError("'" + key + "' rows must have " + std::to_string(m + 1) + " entries");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < m; ++k) idx.push_back(index_of(row[k], bound));
    out.emplace_back(std::move(idx), scalar_of(row[m], f));
  }
  return out;
}

SparseVec read_vec(const json& arr, std::size_t n, const Field& f, const std::string& key) {
  std::vector<SparseVec::Entry> e;
  for (auto& [idx, s] : read_rows(arr, 1, n, f, key)) e.emplace_back(idx[0], s);
  return SparseVec::from_entries(std::move(e));
}

std::vector<SparseVec> read_family(const json& arr, std::size_t n, std::size_t legs, const Field& f,
                                   const std::string& key) {
  std::vector<std::vector<SparseVec::Entry>> fam(n);
  for (auto& [idx, s] : read_rows(arr, legs + 1, n, f, key)) {
    Index flat = 0;
    for (std::size_t k = 1; k <= legs; ++k) flat = flat * n + idx[k];
    fam[idx[0]].emplace_back(flat, s);
  }
  std::vector<SparseVec> out;
  for (auto& v : fam) out.push_back(SparseVec::from_entries(std::move(v)));
  return out;
}

Tensor read_tensor(const json& arr, std::size_t n, std::size_t m, const Field& f, const std::string& key) {
  std::vector<std::size_t> dims(m, n);
  Tensor shape(dims);
  std::vector<SparseVec::Entry> e;
  for (auto& [idx, s] : read_rows(arr, m, n, f, key)) e.emplace_back(shape.flatten(idx), s);
  return Tensor(dims, SparseVec::from_entries(std::move(e)));
}

}  // namespace

namespace {

using Parts = std::vector<std::pair<std::string, std::vector<std::string>>>;

Parts algebra_parts(const Algebra& a) {
  const std::size_t n = a.dim;
  Parts parts;
  parts.emplace_back("unit", vec_rows(a.unit));
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, s] : a.product(i, j))
        rows.push_back("[" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ", " +
                       quote(s.str()) + "]");
  parts.emplace_back("mult", std::move(rows));
  return parts;
}

std::string render(const Algebra& a, const Parts& parts, std::optional<bool> associative) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"field\": " << quote(a.field.name()) << ",\n";
  os << "  \"dim\": " << a.dim << ",\n";
  os << "  \"basis\": [";
  for (std::size_t i = 0; i < a.dim; ++i) os << (i ? ", " : "") << quote(a.basis[i]);
  os << "],\n";
  for (std::size_t p = 0; p < parts.size(); ++p)
    write_rows(os, parts[p].first, parts[p].second, p + 1 == parts.size() && !associative);
  if (associative) os << "  \"associative\": " << (*associative ? "true" : "false") << "\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string write_algebra(const Algebra& a, std::optional<bool> associative) {
  return render(a, algebra_parts(a), associative);
}

std::string write_presentation(const Presentation& h, std::optional<bool> associative) {
  const std::size_t n = h.dim();
  Parts parts = algebra_parts(h.alg);
  parts.emplace_back("comult", family_rows(h.comult, {n, n}));
  parts.emplace_back("counit", vec_rows(h.counit));
  if (h.antipode) parts.emplace_back("antipode", family_rows(h.antipode->columns(), {n}));
  if (h.phi) parts.emplace_back("phi", tensor_rows(*h.phi));
  if (h.alpha) parts.emplace_back("alpha", vec_rows(*h.alpha));
  if (h.beta) parts.emplace_back("beta", vec_rows(*h.beta));
  if (h.R) parts.emplace_back("R", tensor_rows(*h.R));
  return render(h.alg, parts, associative);
}

namespace {

json parse_document(std::string_view text, std::initializer_list<const char*> required,
                    const std::set<std::string>& known) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be an object");
  for (const char* key : required)
    if (!j.contains(key)) throw ParseError(std::string("document lacks '") + key + "'");
  for (const auto& [key, v] : j.items())
    if (!known.count(key)) throw ParseError("unknown field '" + key + "'");
  return j;
}

Algebra algebra_from(const json& j) {
  Algebra a;
  a.field = Field::parse(j["field"].get<std::string>());
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
    throw ParseError("'dim' must be a positive integer");
  const std::size_t n = j["dim"].get<std::size_t>();
  if (n > 4096) throw ParseError("'dim' too large");
  a.dim = n;
  if (!j["basis"].is_array() || j["basis"].size() != n) throw ParseError("'basis' must list dim labels");
  for (const auto& b : j["basis"]) a.basis.push_back(b.get<std::string>());
  a.unit = read_vec(j["unit"], n, a.field, "unit");
  std::vector<std::vector<SparseVec::Entry>> t(n * n);
  for (auto& [idx, s] : read_rows(j["mult"], 3, n, a.field, "mult")) t[idx[0] * n + idx[1]].emplace_back(idx[2], s);
  for (auto& e : t) a.table.push_back(SparseVec::from_entries(std::move(e)));
  return a;
}

template <class F>
auto translate_errors(F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  } catch (const FieldError& e) {
    throw ParseError(std::string("bad scalar or field: ") + e.what());
  } catch (const PresentationError& e) {
    throw ParseError(std::string("invalid presentation: ") + e.what());
  } catch (const ShapeError& e) {
    throw ParseError(std::string("invalid presentation: ") + e.what());
  }
}

}  // namespace

Presentation read_presentation(std::string_view text) {
  static const std::set<std::string> known = {"field", "dim",  "basis", "unit", "mult", "comult",     "counit",
                                              "antipode", "phi", "alpha", "beta", "R", "associative"};
  json j = parse_document(text, {"field", "dim", "basis", "unit", "mult", "comult", "counit"}, known);
  return translate_errors([&] {
    Presentation h;
    h.alg = algebra_from(j);
    const std::size_t n = h.alg.dim;
    const Field& f = h.alg.field;
    h.comult = read_family(j["comult"], n, 2, f, "comult");
    h.counit = read_vec(j["counit"], n, f, "counit");
    if (j.contains("antipode")) h.antipode = LinearMap(n, n, read_family(j["antipode"], n, 1, f, "antipode"));
    if (j.contains("phi")) h.phi = read_tensor(j["phi"], n, 3, f, "phi");
    if (j.contains("alpha")) h.alpha = read_vec(j["alpha"], n, f, "alpha");
    if (j.contains("beta")) h.beta = read_vec(j["beta"], n, f, "beta");
    if (j.contains("R")) h.R = read_tensor(j["R"], n, 2, f, "R");
    h.validate();
    return h;
  });
}

Algebra read_algebra(std::string_view text) {
  static const std::set<std::string> known = {"field", "dim", "basis", "unit", "mult", "associative"};
  json j = parse_document(text, {"field", "dim", "basis", "unit", "mult"}, known);
  return translate_errors([&] { return algebra_from(j); });
}

std::string format_element(const SparseVec& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [i, s] : v) {
    std::string c = s.pretty();
    const bool compound = c.find_first_of("+-", 1) != std::string::npos;
    const bool neg = !compound && c[0] == '-';
    if (neg) c = c.substr(1);
    if (compound) c = "(" + c + ")";
    std::string term = c == "1" ? labels[i] : c + "*" + labels[i];
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

GroupTable read_group_table(std::string_view text) {
  try {
    json j = json::parse(text);
    auto rows = j.at("table").get<std::vector<std::vector<std::size_t>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    if (j.contains("order") && j["order"].get<std::size_t>() != rows.size())
      throw ParseError("group 'order' disagrees with the table");
    return GroupTable::from_table(std::move(rows), std::move(labels));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed group table: ") + e.what());
  } catch (const PresentationError& e) {
    throw ParseError(std::string("invalid group table: ") + e.what());
  }
}

std::string write_group_table(const GroupTable& g) {
  std::ostringstream os;
  os << "{\n  \"order\": " << g.order << ",\n  \"labels\": [";
  for (std::size_t i = 0; i < g.order; ++i) os << (i ? ", " : "") << quote(g.labels[i]);
  os << "],\n  \"table\": [\n";
  for (std::size_t i = 0; i < g.order; ++i) {
    os << "    [";
    for (std::size_t k = 0; k < g.order; ++k) os << (k ? ", " : "") << g.product(i, k);
    os << "]" << (i + 1 < g.order ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string write_matrix_rows(const LinearMap& m) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (std::size_t i = 0; i < m.domain(); ++i)
    for (const auto& [j, s] : m.column(i)) {
      os << (first ? "\n    " : ",\n    ") << "[" << i << ", " << j << ", " << quote(s.str()) << "]";
      first = false;
    }
  os << (first ? "]" : "\n  ]");
  return os.str();
}

}  // namespace hopfkit::io
