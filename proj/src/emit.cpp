#include "liegrowth/emit.hpp"

#include <algorithm>
#include <stdexcept>

namespace liegrowth {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "table") return Format::Table;
  throw std::invalid_argument("unknown format: " + name + " (expected json, csv or table)");
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

std::string meta_prefix(const Meta& meta, Format f) {
  if (meta.empty()) return "";
  std::string out;
  if (f == Format::Json) {
    out += "{";
    for (std::size_t i = 0; i < meta.size(); ++i) {
      if (i) out += ",";
      out += "\"" + json_escape(meta[i].first) + "\":" + meta[i].second;
    }
    out += "}\n";
  } else {
    for (const auto& [k, v] : meta) out += "# " + k + "=" + v + "\n";
  }
  return out;
}

std::string aligned(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (width.size() <= j) width.resize(j + 1, 0);
      width[j] = std::max(width[j], row[j].size());
    }
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += "  ";
      out += std::string(width[j] - row[j].size(), ' ') + row[j];
    }
    out += "\n";
  }
  return out;
}

}  // namespace

std::string emit_growth(const GrowthTable& t, Format f, const Meta& meta) {
  std::string out = meta_prefix(meta, f);
  switch (f) {
    case Format::Json:
      for (const auto& r : t.rows)
        out += "{\"n\":" + std::to_string(r.n) + ",\"d\":" + r.d.get_str() + ",\"g\":" + r.g.get_str() +
               "}\n";
      return out;
    case Format::Csv:
      out += "n,d,g\n";
      for (const auto& r : t.rows)
        out += std::to_string(r.n) + "," + r.d.get_str() + "," + r.g.get_str() + "\n";
      return out;
    case Format::Table: {
      std::vector<std::vector<std::string>> cells{{"n", "d", "g"}};
      for (const auto& r : t.rows) cells.push_back({std::to_string(r.n), r.d.get_str(), r.g.get_str()});
      return out + aligned(cells);
    }
  }
  return out;
}

std::string emit_words(const std::vector<std::pair<long, std::string>>& rows, Format f) {
  std::string out;
  switch (f) {
    case Format::Json:
      for (const auto& [n, w] : rows)
        out += "{\"n\":" + std::to_string(n) + ",\"word\":\"" + json_escape(w) + "\"}\n";
      return out;
    case Format::Csv:
      out += "n,word\n";
      for (const auto& [n, w] : rows) out += std::to_string(n) + "," + w + "\n";
      return out;
    case Format::Table: {
      std::vector<std::vector<std::string>> cells{{"n", "word"}};
      for (const auto& [n, w] : rows) cells.push_back({std::to_string(n), w});
      return aligned(cells);
    }
  }
  return out;
}

std::string emit_record(const std::vector<std::pair<std::string, std::string>>& fields, Format f) {
  std::string out;
  switch (f) {
    case Format::Json: {
      out += "{";
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ",";
        out += "\"" + json_escape(fields[i].first) + "\":" + fields[i].second;
      }
      out += "}\n";
      return out;
    }
    case Format::Csv:
      out += "key,value\n";
      for (const auto& [k, v] : fields) out += k + "," + v + "\n";
      return out;
    case Format::Table: {
      std::vector<std::vector<std::string>> cells;
      for (const auto& [k, v] : fields) cells.push_back({k, v});
      return aligned(cells);
    }
  }
  return out;
}

}  // namespace liegrowth
