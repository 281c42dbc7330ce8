/*
 * Copyright 2026 The zpencil Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "zpencil/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "zpencil/error.hpp"

namespace zpencil {

namespace {

[[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& what) {
  throw Error(ErrorCode::Parse,
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

struct Token {
  std::string_view text;
  std::size_t col;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

double parse_number(const Token& t, std::size_t line) {
  double v = 0.0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (!t.text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    fail(line, t.col, "expected a number, found '" + std::string(t.text) + "'");
  }
  return v;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool first_char_is_brace(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

Matrix build(std::size_t n, const std::vector<double>& e, std::size_t line, const char* which) {
  try {
    return Matrix(n, n, e);
  } catch (const Error& err) {
    fail(line, 1, std::string(which) + ": " + err.what());
  }
}

}  // namespace

Pencil parse_pencil(std::string_view text) {
  if (first_char_is_brace(text)) return parse_pencil_json(text);

  std::optional<std::size_t> n;
  char section = 0;  // 'A' or 'B'
  std::vector<double> entries[2];
  std::size_t rows_seen[2] = {0, 0};
  std::size_t section_line[2] = {0, 0};
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  auto take_row = [&](const std::vector<Token>& toks, std::size_t first, std::size_t line) {
    const int s = section == 'A' ? 0 : 1;
    const std::size_t count = toks.size() - first;
    if (rows_seen[s] >= *n) {
      fail(line, toks[first].col,
           std::string("matrix ") + section + " has more than " + std::to_string(*n) + " rows");
    }
    if (count != *n) {
      fail(line, toks[first].col,
           std::string("row ") + std::to_string(rows_seen[s] + 1) + " of " + section + " has " +
               std::to_string(count) + " entries, expected " + std::to_string(*n));
    }
    for (std::size_t k = first; k < toks.size(); ++k) entries[s].push_back(parse_number(toks[k], line));
    ++rows_seen[s];
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string_view body = strip_comment(raw);
    auto toks = tokenize(body);
    if (toks.empty()) continue;
    last_line = line_no;

    if (!n) {
      // "n = 4", "n=4", "n= 4", "n =4"
      std::string joined;
      for (const auto& t : toks) joined += t.text;
      if (joined.size() < 3 || joined[0] != 'n' || joined[1] != '=') {
        fail(line_no, toks[0].col, "expected 'n = <order>'");
      }
      std::size_t v = 0;
      const char* first = joined.data() + 2;
      const char* last = joined.data() + joined.size();
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last || v == 0) {
        fail(line_no, toks[0].col, "order must be a positive integer");
      }
      n = v;
      continue;
    }

    std::size_t first = 0;
    const std::string_view head = toks[0].text;
    if (head.starts_with("A:") || head.starts_with("B:") ||
        ((head == "A" || head == "B") && toks.size() > 1 && toks[1].text.starts_with(":"))) {
      const char which = head[0];
      const int s = which == 'A' ? 0 : 1;
      if (section_line[s] != 0) fail(line_no, toks[0].col, std::string("duplicate section ") + which);
      if (which == 'B' && section_line[0] == 0) fail(line_no, toks[0].col, "section B before section A");
      if (section == 'A' && rows_seen[0] != *n) {
        fail(line_no, toks[0].col,
             "matrix A has " + std::to_string(rows_seen[0]) + " rows, expected " + std::to_string(*n));
      }
      section = which;
      section_line[s] = line_no;
      first = 1;
      if (head.size() == 1) {
        // "A :" or "A : 1 2"
        if (toks[1].text.size() > 1) {
          const Token rest{toks[1].text.substr(1), toks[1].col + 1};
          toks[1] = rest;
        } else {
          first = 2;
        }
      } else if (head.size() > 2) {
        // "A:1 2"
        toks[0] = Token{head.substr(2), toks[0].col + 2};
        first = 0;
      }
      if (first < toks.size()) take_row(toks, first, line_no);
      continue;
    }
    if (section == 0) fail(line_no, toks[0].col, "expected 'A:'");
    take_row(toks, 0, line_no);
  }

  if (!n) fail(line_no, 1, "missing 'n = <order>' line");
  for (int s = 0; s < 2; ++s) {
    const char which = s == 0 ? 'A' : 'B';
    if (section_line[s] == 0) fail(last_line, 1, std::string("missing section ") + which);
    if (rows_seen[s] != *n) {
      fail(last_line, 1,
           std::string("matrix ") + which + " has " + std::to_string(rows_seen[s]) +
               " rows, expected " + std::to_string(*n));
    }
  }
  return Pencil(build(*n, entries[0], section_line[0], "A"), build(*n, entries[1], section_line[1], "B"));
}

Pencil parse_pencil_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // byte offsets are the only location nlohmann reports
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(line, col, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("A") || !j.contains("B")) {
    fail(1, 1, "JSON pencil needs keys \"n\", \"A\" and \"B\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() <= 0) fail(1, 1, "\"n\" must be a positive integer");
  const auto n = static_cast<std::size_t>(j["n"].get<long long>());
  auto read = [&](const char* key) {
    const auto& m = j[key];
    if (!m.is_array() || m.size() != n) {
      fail(1, 1, std::string("\"") + key + "\" must be an array of " + std::to_string(n) + " rows");
    }
    std::vector<double> e;
    for (std::size_t r = 0; r < n; ++r) {
      if (!m[r].is_array() || m[r].size() != n) {
        fail(1, 1, std::string("row ") + std::to_string(r + 1) + " of " + key + " must have " +
                       std::to_string(n) + " entries");
      }
      for (const auto& v : m[r]) {
        if (!v.is_number()) fail(1, 1, std::string("non-numeric entry in ") + key);
        e.push_back(v.get<double>());
      }
    }
    return build(n, e, 1, key);
  };
  Matrix a = read("A");
  Matrix b = read("B");
  return Pencil(std::move(a), std::move(b));
}

Pencil load_pencil(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pencil(ss.str());
}

std::string format_pencil(const Pencil& p) {
  std::ostringstream os;
  os.precision(17);
  const std::size_t n = p.order();
  os << "n = " << n << "\n";
  for (int s = 0; s < 2; ++s) {
    const Matrix& m = s == 0 ? p.a() : p.b();
    os << (s == 0 ? "A:\n" : "B:\n");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) os << (j ? " " : "") << m(i, j);
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace zpencil
