#ifndef LIEGROWTH_EMIT_HPP
#define LIEGROWTH_EMIT_HPP

#include <string>
#include <utility>
#include <vector>

#include "liegrowth/counting.hpp"

namespace liegrowth {

enum class Format { Json, Csv, Table };

Format parse_format(const std::string& name);

// Stamps prepended to a report: "# key=value" lines for csv/table, one
// leading JSON object line for json.
using Meta = std::vector<std::pair<std::string, std::string>>;

// json: one {"n":..,"d":..,"g":..} object per line; csv: "n,d,g" header;
// table: aligned columns. Byte-stable for fixed inputs.
std::string emit_growth(const GrowthTable& t, Format f, const Meta& meta = {});

// Word listings (the lyndon --words view).
std::string emit_words(const std::vector<std::pair<long, std::string>>& rows, Format f);

// Flat key/value records (base, rate, derive). Values are emitted raw in
// JSON, so callers pass pre-rendered JSON fragments; csv/table get key,value
// rows with the raw text.
std::string emit_record(const std::vector<std::pair<std::string, std::string>>& fields, Format f);

std::string json_escape(const std::string& s);

}  // namespace liegrowth

#endif
