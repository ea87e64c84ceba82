#include "hornstab/formats.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hornstab {

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  bool next(std::string_view& line) {
    if (pos < text.size()) {
      auto nl = text.find('\n', pos);
      auto end = nl == std::string_view::npos ? text.size() : nl;
      line = text.substr(pos, end - pos);
      pos = nl == std::string_view::npos ? text.size() : nl + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      return true;
    }
    return false;
  }
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_skippable(std::string_view line) {
  auto toks = split_ws(line);
  return toks.empty() || toks.front().front() == 'c';
}

long long to_int(std::string_view tok, std::size_t line_no) {
  long long v = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(tok) + "'");
  }
  return v;
}

// Reads "p <kind> <a> <b>" as the first non-comment line.
std::pair<long long, long long> read_header(LineReader& r, std::string_view kind) {
  std::string_view line;
  while (r.next(line)) {
    if (is_skippable(line)) continue;
    auto toks = split_ws(line);
    if (toks.size() != 4 || toks[0] != "p" || toks[1] != kind) {
      throw ParseError("line " + std::to_string(r.line_no) + ": expected header 'p " +
                       std::string(kind) + " <n> <count>'");
    }
    auto a = to_int(toks[2], r.line_no);
    auto b = to_int(toks[3], r.line_no);
    if (a < 0 || b < 0) {
      throw ParseError("line " + std::to_string(r.line_no) + ": negative header value");
    }
    return {a, b};
  }
  throw ParseError("missing 'p " + std::string(kind) + "' header");
}

}  // namespace

HornTheory parse_horn_cnf(std::string_view text, Diagnostics* diag) {
  LineReader r{text};
  auto [n, m] = read_header(r, "hcnf");
  if (static_cast<std::size_t>(n) > kMaxTheoryVars) {
    throw ParseError("header: variable count " + std::to_string(n) + " too large");
  }
  std::vector<Clause> clauses;
  clauses.reserve(static_cast<std::size_t>(m));
  std::vector<int> lits;
  std::string_view line;
  std::size_t clause_line = 0;
  while (r.next(line)) {
    if (is_skippable(line)) continue;
    for (auto tok : split_ws(line)) {
      if (lits.empty()) clause_line = r.line_no;
      auto v = to_int(tok, r.line_no);
      if (v == 0) {
        int pos_count = 0;
        for (int l : lits) pos_count += l > 0;
        if (pos_count > 1) {
          throw ParseError("line " + std::to_string(clause_line) +
                           ": clause is not Horn (two positive literals)");
        }
        try {
          clauses.emplace_back(Literals::from_signed(lits));
        } catch (const ValidationError& e) {
          throw ParseError("line " + std::to_string(clause_line) + ": " + e.what());
        }
        lits.clear();
        continue;
      }
      if (std::llabs(v) > n) {
        throw ParseError("line " + std::to_string(r.line_no) + ": literal " + std::to_string(v) +
                         " out of range for n=" + std::to_string(n));
      }
      lits.push_back(static_cast<int>(v));
    }
  }
  if (!lits.empty()) throw ParseError("last clause is not terminated by 0");
  if (clauses.size() != static_cast<std::size_t>(m)) {
    throw ParseError("header announces " + std::to_string(m) + " clauses, found " +
                     std::to_string(clauses.size()));
  }
  std::size_t dups = 0;
  HornTheory t(static_cast<std::size_t>(n), std::move(clauses), &dups);
  if (dups && diag) {
    diag->warnings.push_back("removed " + std::to_string(dups) + " duplicate clause(s)");
  }
  return t;
}

ModelSet parse_model_set(std::string_view text, Diagnostics* diag) {
  LineReader r{text};
  auto [n, k] = read_header(r, "models");
  if (static_cast<std::size_t>(n) > kMaxModelVars) {
    throw ParseError("header: model width " + std::to_string(n) + " exceeds 64");
  }
  std::vector<Model> rows;
  std::string_view line;
  while (r.next(line)) {
    if (is_skippable(line)) continue;
    auto toks = split_ws(line);
    if (toks.size() != 1) {
      throw ParseError("line " + std::to_string(r.line_no) + ": expected one bit string");
    }
    if (toks[0].size() != static_cast<std::size_t>(n)) {
      throw ParseError("line " + std::to_string(r.line_no) + ": row length " +
                       std::to_string(toks[0].size()) + " differs from n=" + std::to_string(n));
    }
    rows.push_back(Model::from_string(toks[0]));
  }
  if (rows.size() != static_cast<std::size_t>(k)) {
    throw ParseError("header announces " + std::to_string(k) + " rows, found " +
                     std::to_string(rows.size()));
  }
  std::size_t dups = 0;
  ModelSet out(static_cast<std::size_t>(n), std::move(rows), &dups);
  if (dups && diag) {
    diag->warnings.push_back("removed " + std::to_string(dups) + " duplicate row(s)");
  }
  return out;
}

std::string serialize_horn_cnf(const HornTheory& t) {
  std::ostringstream os;
  os << "p hcnf " << t.vars() << ' ' << t.size() << '\n';
  for (const auto& c : t.clauses()) {
    for (int l : c.to_signed()) os << l << ' ';
    os << "0\n";
  }
  return os.str();
}

std::string serialize_model_set(const ModelSet& m) {
  std::string out = "p models " + std::to_string(m.vars()) + " " + std::to_string(m.size()) + "\n";
  for (const auto& v : m) {
    out += v.to_string();
    out += '\n';
  }
  return out;
}

Clause parse_clause(std::string_view text) {
  std::vector<int> lits;
  auto toks = split_ws(text);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    auto v = to_int(toks[i], 1);
    if (v == 0) {
      if (i + 1 != toks.size()) throw ParseError("clause: 0 may only terminate the literal list");
      break;
    }
    if (std::llabs(v) > static_cast<long long>(kMaxTheoryVars)) {
      throw ParseError("clause: literal out of range");
    }
    lits.push_back(static_cast<int>(v));
  }
  try {
    return Clause::from_signed(std::span<const int>(lits));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("clause: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace hornstab
