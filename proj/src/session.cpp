#include "tsv/session.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tsv/errors.hpp"

namespace tsv {

using nlohmann::json;

namespace {

// Forward iterator over the document that counts how many characters the
// parser has pulled, so SAX callbacks can tell where they are.
struct CountingIterator {
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  std::size_t* consumed = nullptr;

  reference operator*() const { return *p; }
  CountingIterator& operator++() {
    ++p;
    ++*consumed;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p == b.p; }
  friend bool operator!=(const CountingIterator& a, const CountingIterator& b) { return a.p != b.p; }
};

// Records the end offset of every value, keyed by JSON pointer.
class Locator : public nlohmann::json_sax<json> {
 public:
  explicit Locator(const std::size_t* consumed) : consumed_(consumed) {}

  std::map<std::string, std::size_t> offsets;

  bool null() override { return scalar(); }
  bool boolean(bool) override { return scalar(); }
  bool number_integer(number_integer_t) override { return scalar(); }
  bool number_unsigned(number_unsigned_t) override { return scalar(); }
  bool number_float(number_float_t, const string_t&) override { return scalar(); }
  bool string(string_t&) override { return scalar(); }
  bool binary(binary_t&) override { return scalar(); }
  bool start_object(std::size_t) override { return open(false); }
  bool start_array(std::size_t) override { return open(true); }
  bool end_object() override { return close(); }
  bool end_array() override { return close(); }
  bool key(string_t& k) override {
    stack_.back().key = k;
    offsets[path() + "#key"] = *consumed_;
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

 private:
  struct Frame {
    bool array;
    std::string key;
    std::size_t index = 0;
  };

  std::string path() const {
    std::string out;
    for (const auto& f : stack_) out += "/" + (f.array ? std::to_string(f.index) : f.key);
    return out;
  }
  bool scalar() {
    offsets[path()] = *consumed_;
    advance();
    return true;
  }
  bool open(bool array) {
    offsets[path()] = *consumed_;
    stack_.push_back({array, {}, 0});
    return true;
  }
  bool close() {
    stack_.pop_back();
    advance();
    return true;
  }
  void advance() {
    if (!stack_.empty() && stack_.back().array) ++stack_.back().index;
  }

  const std::size_t* consumed_;
  std::vector<Frame> stack_;
};

bool token_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '+' || c == '-'; }

// Offset where the token ending at `end` starts. The lexer may have read one
// character past a bare number or literal.
std::size_t token_start(const std::string& text, std::size_t end) {
  std::size_t i = std::min(end, text.size());
  if (i > 0 && text[i - 1] != '"' && text[i - 1] != '{' && text[i - 1] != '[' && !token_char(text[i - 1])) --i;
  if (i == 0) return 0;
  char c = text[i - 1];
  if (c == '{' || c == '[') return i - 1;
  if (c == '"') {
    std::size_t j = i - 1;
    while (j > 0) {
      --j;
      if (text[j] != '"') continue;
      std::size_t backslashes = 0;
      for (std::size_t k = j; k > 0 && text[k - 1] == '\\'; --k) ++backslashes;
      if (backslashes % 2 == 0) return j;
    }
    return 0;
  }
  while (i > 0 && token_char(text[i - 1])) --i;
  return i;
}

std::pair<int, int> line_column(const std::string& text, std::size_t offset) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++column;
    }
  }
  return {line, column};
}

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {
    try {
      doc_ = json::parse(text);
    } catch (const json::parse_error& e) {
      auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
      std::string what = e.what();
      // Drop the library's "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix.
      if (auto colon = what.find(": "); colon != std::string::npos) what = what.substr(colon + 2);
      throw ParseError("JSON syntax error: " + what, line, column);
    }
    std::size_t consumed = 0;
    Locator locator(&consumed);
    CountingIterator first{text.data(), &consumed};
    CountingIterator last{text.data() + text.size(), &consumed};
    json::sax_parse(first, last, &locator);
    offsets_ = std::move(locator.offsets);
  }

  const json& doc() const { return doc_; }

  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    auto it = offsets_.find(pointer);
    if (it == offsets_.end()) throw ParseError(message);
    auto [line, column] = line_column(text_, token_start(text_, it->second));
    throw ParseError(message, line, column);
  }

  const json& member(const json& object, const std::string& pointer, const std::string& key) const {
    if (!object.contains(key)) fail(pointer, "missing field \"" + key + "\" at " + (pointer.empty() ? "/" : pointer));
    return object.at(key);
  }

  std::string string_field(const json& object, const std::string& pointer, const std::string& key) const {
    const json& v = member(object, pointer, key);
    if (!v.is_string()) fail(pointer + "/" + key, "field \"" + key + "\" must be a string");
    return v.get<std::string>();
  }

  // Entry text for matrices: strings, or JSON integers as a convenience.
  std::string entry_text(const json& v, const std::string& pointer) const {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    fail(pointer, "matrix entry must be a string such as \"3/2\"");
  }

  template <class T, class Parse>
  Matrix<T> matrix(const json& v, const std::string& pointer, Parse&& parse) const {
    if (!v.is_array() || v.empty()) fail(pointer, "expected a non-empty array of rows at " + pointer);
    const std::size_t rows = v.size();
    std::size_t cols = 0;
    std::vector<T> entries;
    for (std::size_t i = 0; i < rows; ++i) {
      const std::string row_ptr = pointer + "/" + std::to_string(i);
      const json& row = v[i];
      if (!row.is_array() || row.empty()) fail(row_ptr, "expected a non-empty row at " + row_ptr);
      if (i == 0) cols = row.size();
      if (row.size() != cols) {
        fail(row_ptr, "ragged matrix: row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                          " entries, expected " + std::to_string(cols));
      }
      for (std::size_t j = 0; j < cols; ++j) {
        const std::string ptr = row_ptr + "/" + std::to_string(j);
        try {
          entries.push_back(parse(entry_text(row[j], ptr)));
        } catch (const ParseError& e) {
          if (e.line() > 0) throw;
          fail(ptr, e.what());
        }
      }
    }
    return Matrix<T>(rows, cols, std::move(entries));
  }

  IntMatrix int_matrix(const json& v, const std::string& pointer) const {
    return matrix<Integer>(v, pointer, [](const std::string& s) {
      Rational q = parse_rational(s);
      if (q.get_den() != 1) throw ParseError("integer entry expected, got \"" + s + "\"");
      return Integer(q.get_num());
    });
  }

  ScalarMatrix scalar_matrix(const json& v, const std::string& pointer) const {
    return matrix<Scalar>(v, pointer, [](const std::string& s) { return Scalar::parse(s); });
  }

 private:
  const std::string& text_;
  json doc_;
  std::map<std::string, std::size_t> offsets_;
};

void check_version(const Reader& r) {
  const json& doc = r.doc();
  if (!doc.is_object()) r.fail("", "session must be a JSON object");
  const json& version = r.member(doc, "", "tsv");
  if (!version.is_number_integer() || version.get<long>() != 1) r.fail("/tsv", "unsupported schema version (expected \"tsv\": 1)");
}

const json& array_field(const Reader& r, const json& doc, const std::string& key) {
  static const json empty = json::array();
  if (!doc.contains(key)) return empty;
  const json& v = doc.at(key);
  if (!v.is_array()) r.fail("/" + key, "\"" + key + "\" must be an array");
  return v;
}

template <class F>
auto located(const Reader& r, const std::string& pointer, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const InvariantError& e) {
    r.fail(pointer, e.what());
  } catch (const DimensionError& e) {
    r.fail(pointer, e.what());
  } catch (const ExtensionMismatch& e) {
    r.fail(pointer, e.what());
  }
}

}  // namespace

ComplexTorus Session::torus(const std::string& name) const {
  bool want_dual = !name.empty() && name.back() == '^';
  std::string base = want_dual ? name.substr(0, name.size() - 1) : name;
  for (const auto& t : tori) {
    if (t.name() == base) return want_dual ? dual(t) : t;
    if (t.name() == name) return t;
  }
  throw UsageError("unknown torus \"" + name + "\"");
}

const TorusHom& Session::morphism(const std::string& name) const {
  for (const auto& [n, m] : morphisms)
    if (n == name) return m;
  throw UsageError("unknown morphism \"" + name + "\"");
}

const BlockIso& Session::block_iso(const std::string& name) const {
  for (const auto& [n, b] : block_isos)
    if (n == name) return b;
  throw UsageError("unknown block isomorphism \"" + name + "\"");
}

bool operator==(const Session& lhs, const Session& rhs) {
  return lhs.extension_d == rhs.extension_d && lhs.tori == rhs.tori && lhs.morphisms == rhs.morphisms &&
         lhs.block_isos == rhs.block_isos;
}

Session parse_session(const std::string& text) {
  Reader r(text);
  check_version(r);
  const json& doc = r.doc();
  Session session;

  std::optional<std::int64_t> declared;
  if (doc.contains("extension_d")) {
    const json& d = doc.at("extension_d");
    if (!d.is_number_integer() || d.get<long long>() < 1 || !is_square_free(d.get<long long>())) {
      r.fail("/extension_d", "extension_d must be a square-free positive integer");
    }
    declared = d.get<long long>();
  }
  std::optional<std::int64_t> seen;  // first surd tag, with where it came from
  std::string seen_at;

  std::set<std::string> names;
  const json& tori = array_field(r, doc, "tori");
  for (std::size_t i = 0; i < tori.size(); ++i) {
    const std::string ptr = "/tori/" + std::to_string(i);
    const json& t = tori[i];
    if (!t.is_object()) r.fail(ptr, "torus entry must be an object");
    std::string name = r.string_field(t, ptr, "name");
    if (name.empty() || name.back() == '^') r.fail(ptr + "/name", "torus name must be non-empty and not end in '^'");
    if (!names.insert(name).second) r.fail(ptr + "/name", "duplicate torus name \"" + name + "\"");
    ScalarMatrix J = r.scalar_matrix(r.member(t, ptr, "J"), ptr + "/J");
    for (std::size_t k = 0; k < J.entries().size(); ++k) {
      const Scalar& v = J.entries()[k];
      if (v.is_rational()) continue;
      const std::string eptr = ptr + "/J/" + std::to_string(k / J.cols()) + "/" + std::to_string(k % J.cols());
      const std::int64_t want = declared ? *declared : (seen ? *seen : v.d());
      if (v.d() != want) {
        r.fail(eptr, "mixed extension tags d=" + std::to_string(want) + " and d=" + std::to_string(v.d()) +
                         " in one session" + (seen ? " (first at " + seen_at + ")" : std::string()));
      }
      if (!seen) {
        seen = v.d();
        seen_at = eptr;
      }
    }
    if (t.contains("g")) {
      const json& g = t.at("g");
      if (!g.is_number_integer() || g.get<long long>() < 1 || 2 * static_cast<std::size_t>(g.get<long long>()) != J.rows()) {
        r.fail(ptr + "/g", "g does not match the " + J.shape() + " complex structure");
      }
    }
    session.tori.push_back(located(r, ptr + "/J", [&] { return ComplexTorus(name, J); }));
  }
  session.extension_d = declared ? *declared : (seen ? *seen : 1);

  auto resolve = [&](const json& obj, const std::string& ptr, const std::string& key) {
    std::string name = r.string_field(obj, ptr, key);
    try {
      return session.torus(name);
    } catch (const UsageError& e) {
      r.fail(ptr + "/" + key, e.what());
    }
  };

  std::set<std::string> morphism_names;
  const json& morphisms = array_field(r, doc, "morphisms");
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const std::string ptr = "/morphisms/" + std::to_string(i);
    const json& m = morphisms[i];
    if (!m.is_object()) r.fail(ptr, "morphism entry must be an object");
    std::string name = r.string_field(m, ptr, "name");
    if (!morphism_names.insert(name).second) r.fail(ptr + "/name", "duplicate morphism name \"" + name + "\"");
    ComplexTorus source = resolve(m, ptr, "source");
    ComplexTorus target = resolve(m, ptr, "target");
    IntMatrix T = r.int_matrix(r.member(m, ptr, "T"), ptr + "/T");
    session.morphisms.emplace_back(name, located(r, ptr + "/T", [&] { return TorusHom(source, target, T); }));
  }

  std::set<std::string> block_names;
  const json& blocks = array_field(r, doc, "block_isos");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string ptr = "/block_isos/" + std::to_string(i);
    const json& b = blocks[i];
    if (!b.is_object()) r.fail(ptr, "block_isos entry must be an object");
    std::string name = r.string_field(b, ptr, "name");
    if (!block_names.insert(name).second) r.fail(ptr + "/name", "duplicate block isomorphism name \"" + name + "\"");
    ComplexTorus source = resolve(b, ptr, "source");
    ComplexTorus target = resolve(b, ptr, "target");
    IntMatrix parts[4];
    const char* keys[4] = {"alpha", "beta", "gamma", "delta"};
    for (int k = 0; k < 4; ++k) parts[k] = r.int_matrix(r.member(b, ptr, keys[k]), ptr + "/" + keys[k]);
    BlockIso f = [&] {
      try {
        return BlockIso(build_pair(source), build_pair(target), parts[0], parts[1], parts[2], parts[3]);
      } catch (const std::exception& e) {
        std::string what = e.what();
        for (const char* key : keys) {
          if (what.rfind(std::string("block ") + key + ":", 0) == 0) r.fail(ptr + "/" + key, what);
        }
        r.fail(ptr, what);
      }
    }();
    session.block_isos.emplace_back(name, std::move(f));
  }
  return session;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Session load_session(const std::string& path) { return parse_session(read_file(path)); }

namespace {

template <class T>
nlohmann::ordered_json matrix_json(const Matrix<T>& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& v : m.row(i)) row.push_back(to_string(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string serialize_session(const Session& session) {
  nlohmann::ordered_json doc;
  doc["tsv"] = 1;
  doc["extension_d"] = session.extension_d;
  doc["tori"] = nlohmann::ordered_json::array();
  for (const auto& t : session.tori) {
    doc["tori"].push_back({{"name", t.name()}, {"g", t.g()}, {"J", matrix_json(t.J())}});
  }
  doc["morphisms"] = nlohmann::ordered_json::array();
  for (const auto& [name, m] : session.morphisms) {
    doc["morphisms"].push_back(
        {{"name", name}, {"source", m.source().name()}, {"target", m.target().name()}, {"T", matrix_json(m.T())}});
  }
  doc["block_isos"] = nlohmann::ordered_json::array();
  for (const auto& [name, f] : session.block_isos) {
    doc["block_isos"].push_back({{"name", name},
                                 {"source", f.source().base().name()},
                                 {"target", f.target().base().name()},
                                 {"alpha", matrix_json(f.alpha().T())},
                                 {"beta", matrix_json(f.beta().T())},
                                 {"gamma", matrix_json(f.gamma().T())},
                                 {"delta", matrix_json(f.delta().T())}});
  }
  return doc.dump(2) + "\n";
}

IntMatrix parse_basis(const std::string& text) {
  Reader r(text);
  check_version(r);
  return r.int_matrix(r.member(r.doc(), "", "basis"), "/basis");
}

IntMatrix load_basis(const std::string& path) { return parse_basis(read_file(path)); }

}  // namespace tsv
