#include "qlr/cli/input.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qlr/error.hpp"

namespace qlr::cli {

namespace {

constexpr std::string_view kPopulationRow = "__population__";

[[noreturn]] void parse_error(const std::string& source, std::size_t line, std::size_t column,
                              const std::string& message) {
  std::ostringstream out;
  out << source << ":" << line << ":" << column << ": " << message;
  throw Error(ErrorKind::ParseError, out.str());
}

struct Field {
  std::string text;
  std::size_t column = 1;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Field> split_fields(std::string_view line) {
  std::vector<Field> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    const auto raw = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    fields.push_back(Field{std::string(trim(raw)), start + lead + 1});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> to_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) return std::nullopt;
  return v;
}

std::optional<std::int64_t> to_integer(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || errno == ERANGE) return std::nullopt;
  return static_cast<std::int64_t>(v);
}

struct CsvRow {
  std::size_t line = 0;
  std::vector<Field> fields;
};

}  // namespace

LoadedInput parse_csv(std::string_view text, const std::string& source) {
  std::vector<CsvRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    rows.push_back(CsvRow{line_no, split_fields(line)});
  }
  if (rows.empty()) parse_error(source, 1, 1, "empty input");

  const CsvRow& header = rows.front();
  if (header.fields.size() < 3) {
    parse_error(source, header.line, 1, "header needs a corner cell and at least two hypotheses");
  }
  Labels hypotheses;
  for (std::size_t k = 1; k < header.fields.size(); ++k) {
    if (header.fields[k].text.empty()) {
      parse_error(source, header.line, header.fields[k].column, "empty hypothesis label");
    }
    hypotheses.push_back(header.fields[k].text);
  }
  const std::size_t n = hypotheses.size();

  std::vector<CsvRow> data(rows.begin() + 1, rows.end());
  std::optional<CsvRow> population;
  for (std::size_t r = 0; r < data.size(); ++r) {
    const CsvRow& row = data[r];
    if (row.fields.size() != n + 1) {
      const std::size_t column = row.fields.size() > n + 1 ? row.fields[n + 1].column
                                                            : row.fields.back().column;
      std::ostringstream msg;
      msg << "expected " << n + 1 << " fields, found " << row.fields.size();
      parse_error(source, row.line, column, msg.str());
    }
    if (row.fields[0].text == kPopulationRow) {
      if (r + 1 != data.size()) {
        parse_error(source, row.line, 1, "__population__ must be the last row");
      }
      population = row;
    }
  }
  if (population) data.pop_back();
  if (data.empty()) parse_error(source, header.line, 1, "no feature rows");

  Labels features;
  for (const auto& row : data) {
    if (row.fields[0].text.empty()) parse_error(source, row.line, 1, "empty feature label");
    features.push_back(row.fields[0].text);
  }
  const auto m = static_cast<Eigen::Index>(data.size());

  if (population) {
    CountMatrix counts(m, static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < m; ++i) {
      for (std::size_t a = 0; a < n; ++a) {
        const Field& f = data[static_cast<std::size_t>(i)].fields[a + 1];
        const auto v = to_integer(f.text);
        if (!v || *v < 0) {
          parse_error(source, data[static_cast<std::size_t>(i)].line, f.column,
                      "expected a nonnegative integer count, found '" + f.text + "'");
        }
        counts(i, static_cast<Eigen::Index>(a)) = *v;
      }
    }
    std::vector<std::int64_t> populations;
    for (std::size_t a = 0; a < n; ++a) {
      const Field& f = population->fields[a + 1];
      const auto v = to_integer(f.text);
      if (!v || *v <= 0) {
        parse_error(source, population->line, f.column,
                    "expected a positive integer population, found '" + f.text + "'");
      }
      populations.push_back(*v);
    }
    auto table = CountTable::make(std::move(counts), std::move(populations), features, hypotheses);
    auto x = from_counts(table);
    return LoadedInput{source, std::move(x), std::move(table), std::nullopt};
  }

  Matrix x(m, static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      const Field& f = data[static_cast<std::size_t>(i)].fields[a + 1];
      const auto v = to_double(f.text);
      if (!v) {
        parse_error(source, data[static_cast<std::size_t>(i)].line, f.column,
                    "expected a probability, found '" + f.text + "'");
      }
      x(i, static_cast<Eigen::Index>(a)) = *v;
    }
  }
  return LoadedInput{source, ContingencyTable::make(std::move(x), std::nullopt, features, hypotheses),
                     std::nullopt, std::nullopt};
}

namespace {

using nlohmann::json;

[[noreturn]] void json_error(const std::string& source, const std::string& message) {
  throw Error(ErrorKind::ParseError, source + ": " + message);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Labels json_labels(const json& doc, const char* key, const std::string& source) {
  if (!doc.contains(key)) return {};
  const json& v = doc.at(key);
  if (!v.is_array()) json_error(source, std::string("\"") + key + "\" must be an array of strings");
  Labels labels;
  for (const json& item : v) {
    if (!item.is_string()) json_error(source, std::string("\"") + key + "\" must contain strings");
    labels.push_back(item.get<std::string>());
  }
  return labels;
}

std::vector<std::vector<json>> json_grid(const json& doc, const char* key,
                                         const std::string& source) {
  if (!doc.contains(key)) json_error(source, std::string("missing \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_array() || v.empty()) json_error(source, std::string("\"") + key + "\" must be a non-empty array of rows");
  std::vector<std::vector<json>> grid;
  for (const json& row : v) {
    if (!row.is_array()) json_error(source, std::string("\"") + key + "\" rows must be arrays");
    if (!grid.empty() && row.size() != grid.front().size()) {
      json_error(source, std::string("\"") + key + "\" rows differ in length");
    }
    grid.emplace_back(row.begin(), row.end());
  }
  return grid;
}

double json_number(const json& v, const std::string& source, const std::string& where) {
  if (!v.is_number()) json_error(source, where + " must be a number");
  return v.get<double>();
}

std::int64_t json_integer(const json& v, const std::string& source, const std::string& where) {
  if (!v.is_number_integer()) json_error(source, where + " must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

LoadedInput parse_json(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    parse_error(source, line, column, "malformed JSON");
  }
  if (!doc.is_object()) json_error(source, "top level must be an object");
  if (!doc.contains("kind") || !doc.at("kind").is_string()) {
    json_error(source, "missing \"kind\" (\"probabilities\" or \"counts\")");
  }
  const auto kind = doc.at("kind").get<std::string>();
  const Labels features = json_labels(doc, "features", source);
  const Labels hypotheses = json_labels(doc, "hypotheses", source);

  std::optional<Vector> priors;
  if (doc.contains("priors")) {
    const json& p = doc.at("priors");
    if (!p.is_array()) json_error(source, "\"priors\" must be an array");
    Vector v(static_cast<Eigen::Index>(p.size()));
    for (std::size_t a = 0; a < p.size(); ++a) {
      v(static_cast<Eigen::Index>(a)) = json_number(p[a], source, "priors[" + std::to_string(a) + "]");
    }
    priors = std::move(v);
  }

  std::optional<OverlapMatrix> overlap;
  if (doc.contains("overlap")) {
    const json& o = doc.at("overlap");
    if (!o.is_array()) json_error(source, "\"overlap\" must be an array of matrices");
    std::vector<Matrix> blocks;
    for (std::size_t a = 0; a < o.size(); ++a) {
      const json wrapper = {{"block", o[a]}};
      const auto grid = json_grid(wrapper, "block", source);
      Matrix c(static_cast<Eigen::Index>(grid.size()), static_cast<Eigen::Index>(grid.front().size()));
      for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
          c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = json_number(
              grid[i][j], source,
              "overlap[" + std::to_string(a) + "][" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
      }
      blocks.push_back(std::move(c));
    }
    overlap = OverlapMatrix(std::move(blocks));
  }

  if (kind == "probabilities") {
    const auto grid = json_grid(doc, "x", source);
    Matrix x(static_cast<Eigen::Index>(grid.size()), static_cast<Eigen::Index>(grid.front().size()));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t a = 0; a < grid[i].size(); ++a) {
        x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a)) =
            json_number(grid[i][a], source, "x[" + std::to_string(i) + "][" + std::to_string(a) + "]");
      }
    }
    return LoadedInput{source, ContingencyTable::make(std::move(x), std::move(priors), features, hypotheses),
                       std::nullopt, std::move(overlap)};
  }
  if (kind == "counts") {
    const auto grid = json_grid(doc, "counts", source);
    CountMatrix c(static_cast<Eigen::Index>(grid.size()), static_cast<Eigen::Index>(grid.front().size()));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t a = 0; a < grid[i].size(); ++a) {
        c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a)) = json_integer(
            grid[i][a], source, "counts[" + std::to_string(i) + "][" + std::to_string(a) + "]");
      }
    }
    if (!doc.contains("populations") || !doc.at("populations").is_array()) {
      json_error(source, "counts input needs a \"populations\" array");
    }
    std::vector<std::int64_t> populations;
    const json& p = doc.at("populations");
    for (std::size_t a = 0; a < p.size(); ++a) {
      populations.push_back(json_integer(p[a], source, "populations[" + std::to_string(a) + "]"));
    }
    auto counts = CountTable::make(std::move(c), std::move(populations), features, hypotheses);
    auto table = from_counts(counts);
    if (priors) table = table.with_priors(std::move(*priors));
    return LoadedInput{source, std::move(table), std::move(counts), std::move(overlap)};
  }
  json_error(source, "unknown kind \"" + kind + "\"");
}

LoadedInput load_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text, path);
  return parse_csv(text, path);
}

}  // namespace qlr::cli
