#include "permdist/matrix_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "permdist/error.hpp"

namespace permdist {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line out{number, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
      if (end > pos) out.tokens.push_back(line.substr(pos, end - pos));
      pos = end;
    }
    if (!out.tokens.empty()) lines.push_back(std::move(out));
  }
  return lines;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line, "expected a non-negative integer for " + std::string(what) + ", got '" + std::string(s) +
                               "'");
  }
  return v;
}

std::map<std::string_view, std::string_view> parse_header(const Line& line, std::string_view keyword,
                                                          std::initializer_list<std::string_view> allowed) {
  if (line.tokens.front() != keyword) {
    throw ParseError(line.number, "expected '" + std::string(keyword) + "' header");
  }
  std::map<std::string_view, std::string_view> kv;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const auto tok = line.tokens[i];
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) throw ParseError(line.number, "expected key=value, got '" + std::string(tok) + "'");
    const auto key = tok.substr(0, eq);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError(line.number, "unknown key '" + std::string(key) + "'");
    }
    if (!kv.emplace(key, tok.substr(eq + 1)).second) {
      throw ParseError(line.number, "duplicate key '" + std::string(key) + "'");
    }
  }
  return kv;
}

std::string_view require(const std::map<std::string_view, std::string_view>& kv, std::string_view key,
                         std::size_t line) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw ParseError(line, "missing " + std::string(key) + "=");
  return it->second;
}

std::size_t header_line(std::string_view text) {
  const auto lines = tokenize(text);
  return lines.size() >= 2 ? lines[1].number : 1;
}

}  // namespace

Matrix parse_matrix_file(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty matrix file");

  const Line& fl = lines[0];
  const auto fkv = parse_header(fl, "field", {"p", "m", "modulus"});
  const std::uint64_t p = parse_uint(require(fkv, "p", fl.number), fl.number, "p");
  const std::uint64_t m = parse_uint(require(fkv, "m", fl.number), fl.number, "m");
  if (m == 0 || m > 64) throw ParseError(fl.number, "extension degree m must be in [1, 64]");
  std::optional<Coefficients> modulus;
  if (const auto it = fkv.find("modulus"); it != fkv.end()) {
    Coefficients c;
    std::string_view rest = it->second;
    while (true) {
      const auto comma = rest.find(',');
      c.push_back(parse_uint(rest.substr(0, comma), fl.number, "modulus coefficient"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    modulus = std::move(c);
  }
  FieldPtr field;
  try {
    field = make_field(p, static_cast<unsigned>(m), std::move(modulus));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(fl.number, e.what());
  }

  if (lines.size() < 2) throw ParseError(fl.number, "missing 'matrix' header");
  const Line& ml = lines[1];
  const auto mkv = parse_header(ml, "matrix", {"k", "n"});
  const std::uint64_t k = parse_uint(require(mkv, "k", ml.number), ml.number, "k");
  const std::uint64_t n = parse_uint(require(mkv, "n", ml.number), ml.number, "n");
  if (k == 0 || n == 0) throw ParseError(ml.number, "matrix dimensions must be positive");

  if (lines.size() - 2 < k) throw ParseError(lines.back().number, "expected " + std::to_string(k) + " matrix rows");
  if (lines.size() - 2 > k) throw ParseError(lines[2 + k].number, "unexpected content after the matrix rows");

  std::vector<Element> entries;
  entries.reserve(k * n);
  for (std::size_t r = 0; r < k; ++r) {
    const Line& row = lines[2 + r];
    if (row.tokens.size() != n) {
      throw ParseError(row.number, "expected " + std::to_string(n) + " entries, got " + std::to_string(row.tokens.size()));
    }
    for (auto tok : row.tokens) {
      const std::uint64_t v = parse_uint(tok, row.number, "matrix entry");
      if (!field->contains(v)) {
        throw ParseError(row.number, "entry " + std::to_string(v) + " out of range for q = " +
                                         std::to_string(field->order()));
      }
      entries.push_back(v);
    }
  }
  return Matrix(field, k, n, std::move(entries));
}

LinearCode parse_code_file(std::string_view text) {
  Matrix m = parse_matrix_file(text);
  try {
    return LinearCode(std::move(m));
  } catch (const Error& e) {
    throw ParseError(header_line(text), e.what());
  }
}

std::string emit_matrix_file(const Matrix& m) {
  std::ostringstream os;
  const Field& f = m.field();
  os << "field p=" << f.characteristic() << " m=" << f.degree();
  if (f.degree() > 1) {
    os << " modulus=";
    for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? "," : "") << f.modulus()[i];
  }
  os << "\nmatrix k=" << m.rows() << " n=" << m.cols() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "\n";
  }
  return os.str();
}

LinearCode read_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_code_file(buf.str());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace permdist
