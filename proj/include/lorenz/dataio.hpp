#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lorenz/metrics.hpp"
#include "lorenz/simple_method.hpp"

namespace lorenz {

/// One country-year record of grouped income-distribution data.
struct GroupedDistribution {
  std::string country;
  int year = 0;
  double gini = 0.0;
  std::optional<DecileShares> deciles;
  std::vector<TailShareObservation> tail_observations;

  const TailShareObservation* tail_observation(double m) const {
    for (const TailShareObservation& obs : tail_observations)
      if (std::abs(obs.m - m) < 1e-9) return &obs;
    return nullptr;
  }
};

class CsvParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

inline double parse_number(const std::string& text, int row, const std::string& column) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size()) {
    std::ostringstream msg;
    msg << "row " << row << ", column '" << column << "': cannot parse number from '" << text
        << "'";
    throw CsvParseError(msg.str());
  }
  return value;
}

inline void validate_record(const GroupedDistribution& rec, int row,
                            std::vector<std::string>* warnings) {
  if (!(rec.gini >= 0.0 && rec.gini < 1.0)) {
    std::ostringstream msg;
    msg << "row " << row << ": gini " << rec.gini << " outside [0, 1)";
    throw CsvParseError(msg.str());
  }
  if (rec.deciles) {
    const double total = rec.deciles->sum();
    // Published tables are rounded; tolerate up to 1e-2, flag beyond 1e-3.
    if (std::abs(total - 1.0) > 1e-2) {
      std::ostringstream msg;
      msg << "row " << row << ": decile shares sum to " << total << ", expected 1 within 0.01";
      throw CsvParseError(msg.str());
    }
    if (std::abs(total - 1.0) > 1e-3 && warnings) {
      std::ostringstream msg;
      msg << "row " << row << ": decile shares sum to " << total
          << " (accepted as publication rounding)";
      warnings->push_back(msg.str());
    }
    for (int i = 0; i + 1 < 10; ++i) {
      if (rec.deciles->values[i + 1] < rec.deciles->values[i] - 1e-6) {
        std::ostringstream msg;
        msg << "row " << row << ": decile shares must be non-decreasing (d" << (i + 1)
            << " > d" << (i + 2) << ")";
        throw CsvParseError(msg.str());
      }
    }
  }
  for (const TailShareObservation& obs : rec.tail_observations) {
    try {
      obs.validate();
    } catch (const std::exception& err) {
      std::ostringstream msg;
      msg << "row " << row << ": " << err.what();
      throw CsvParseError(msg.str());
    }
    if (rec.deciles && std::abs(obs.m - 0.10) < 1e-9 &&
        std::abs(obs.bottom_share - rec.deciles->values[0]) > 1e-3) {
      std::ostringstream msg;
      msg << "row " << row << ": bottom 10% share " << obs.bottom_share
          << " inconsistent with first decile " << rec.deciles->values[0];
      throw CsvParseError(msg.str());
    }
  }
}

}  // namespace detail

/// Parses the portable grouped-data CSV schema.
///
/// Header columns: country, year, gini, then optionally d1..d10, bottom5,
/// top5, bottom10, top10, ratio5, ratio10. '.' decimal separator, ','
/// delimiter, '#' comment lines. Soft findings (e.g. share sums off by
/// publication rounding) are appended to `warnings` when provided.
inline std::vector<GroupedDistribution> parse_grouped_csv(
    std::istream& input, std::vector<std::string>* warnings = nullptr) {
  std::string line;
  std::vector<std::string> header;
  int row = 0;
  while (std::getline(input, line)) {
    ++row;
    const std::string t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    for (const std::string& name : detail::split_csv_line(line))
      header.push_back(detail::lower(detail::trim(name)));
    break;
  }
  if (header.empty()) throw CsvParseError("missing header row");
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < header.size(); ++i) column[header[i]] = i;
  for (const char* required : {"country", "year", "gini"})
    if (!column.count(required))
      throw CsvParseError(std::string("header lacks required column '") + required + "'");

  const bool has_deciles = column.count("d1") > 0;
  if (has_deciles)
    for (int i = 1; i <= 10; ++i)
      if (!column.count("d" + std::to_string(i)))
        throw CsvParseError("header has d1 but not all of d1..d10");

  std::vector<GroupedDistribution> records;
  while (std::getline(input, line)) {
    ++row;
    const std::string t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const std::vector<std::string> fields = detail::split_csv_line(line);
    if (fields.size() != header.size()) {
      std::ostringstream msg;
      msg << "row " << row << ": expected " << header.size() << " fields, got " << fields.size();
      throw CsvParseError(msg.str());
    }
    auto cell = [&](const std::string& name) -> std::optional<std::string> {
      const auto it = column.find(name);
      if (it == column.end()) return std::nullopt;
      const std::string v = detail::trim(fields[it->second]);
      if (v.empty()) return std::nullopt;
      return v;
    };
    auto required_cell = [&](const std::string& name) -> std::string {
      const auto v = cell(name);
      if (!v) {
        std::ostringstream msg;
        msg << "row " << row << ", column '" << name << "': value is required";
        throw CsvParseError(msg.str());
      }
      return *v;
    };

    GroupedDistribution rec;
    rec.country = detail::trim(fields[column.at("country")]);
    rec.year = static_cast<int>(detail::parse_number(required_cell("year"), row, "year"));
    rec.gini = detail::parse_number(required_cell("gini"), row, "gini");
    if (has_deciles && cell("d1")) {
      DecileShares shares;
      for (int i = 1; i <= 10; ++i) {
        const std::string name = "d" + std::to_string(i);
        const auto v = cell(name);
        if (!v) {
          std::ostringstream msg;
          msg << "row " << row << ", column '" << name << "': missing decile value";
          throw CsvParseError(msg.str());
        }
        shares[i - 1] = detail::parse_number(*v, row, name);
      }
      rec.deciles = shares;
    }
    for (const auto& [m, bottom_name, top_name, ratio_name] :
         {std::tuple{0.05, "bottom5", "top5", "ratio5"},
          std::tuple{0.10, "bottom10", "top10", "ratio10"}}) {
      const auto bottom = cell(bottom_name);
      const auto top = cell(top_name);
      if (!bottom && !top) continue;
      if (!bottom || !top) {
        std::ostringstream msg;
        msg << "row " << row << ": " << bottom_name << " and " << top_name
            << " must be given together";
        throw CsvParseError(msg.str());
      }
      TailShareObservation obs;
      obs.m = m;
      obs.bottom_share = detail::parse_number(*bottom, row, bottom_name);
      obs.top_share = detail::parse_number(*top, row, top_name);
      if (const auto ratio = cell(ratio_name))
        obs.ratio = detail::parse_number(*ratio, row, ratio_name);
      rec.tail_observations.push_back(obs);
    }
    detail::validate_record(rec, row, warnings);
    records.push_back(std::move(rec));
  }
  return records;
}

/// The built-in four-country dataset (UNU-WIID indicators, 2015-2018), every
/// number stored verbatim at source-table precision: Gini indices, actual
/// decile shares, and 5%/10% tail observations.
///
/// The 10% bottom/top pair is stored at the four-decimal precision of the
/// decile table (the bottom 10% share IS the first decile share); rounding
/// these to three decimals shifts the recovered k by up to 0.015, which is
/// why the 5% observations also carry their source ratio column.
inline const std::vector<GroupedDistribution>& builtin_dataset() {
  static const std::vector<GroupedDistribution> records = [] {
    auto make = [](std::string country, int year, double gini, std::array<double, 10> shares,
                   double bottom5, double top5, double ratio5) {
      GroupedDistribution rec;
      rec.country = std::move(country);
      rec.year = year;
      rec.gini = gini;
      rec.deciles = DecileShares{shares};
      TailShareObservation ten;
      ten.m = 0.10;
      ten.bottom_share = shares[0];
      ten.top_share = shares[9];
      TailShareObservation five;
      five.m = 0.05;
      five.bottom_share = bottom5;
      five.top_share = top5;
      five.ratio = ratio5;
      rec.tail_observations = {five, ten};
      return rec;
    };
    return std::vector<GroupedDistribution>{
        make("Malta", 2018, 0.287,
             {0.0360, 0.0510, 0.0620, 0.0720, 0.0830, 0.0940, 0.1070, 0.1210, 0.1440, 0.2300},
             0.016, 0.139, 0.115),
        make("Taiwan", 2016, 0.315,
             {0.0336, 0.0491, 0.0590, 0.0684, 0.0779, 0.0890, 0.1022, 0.1199, 0.1493, 0.2517},
             0.014, 0.156, 0.088),
        make("USA", 2016, 0.411,
             {0.0179, 0.0344, 0.0457, 0.0572, 0.0693, 0.0832, 0.1005, 0.1245, 0.1625, 0.3046},
             0.006, 0.196, 0.029),
        make("Cote d'Ivoire", 2015, 0.590,
             {0.0074, 0.0178, 0.0263, 0.0353, 0.0459, 0.0583, 0.0759, 0.1026, 0.1535, 0.4769},
             0.002, 0.350, 0.006),
    };
  }();
  return records;
}

/// A rectangular report: column names, per-column numeric precision
/// (-1 = up to 6 significant digits, n >= 0 = fixed decimals), and rows of
/// text-or-number cells.
struct ReportTable {
  using Cell = std::variant<std::string, double>;

  std::vector<std::string> columns;
  std::vector<int> precision;  // empty or per-column
  std::vector<std::vector<Cell>> rows;

  int column_precision(std::size_t i) const {
    return i < precision.size() ? precision[i] : -1;
  }
};

namespace detail {

inline std::string format_number(double v, int decimals) {
  std::ostringstream out;
  if (decimals >= 0)
    out << std::fixed << std::setprecision(decimals) << v;
  else
    out << std::setprecision(6) << v;
  return out.str();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

inline std::string render_cell(const ReportTable::Cell& cell, int decimals) {
  if (const auto* text = std::get_if<std::string>(&cell)) return *text;
  return format_number(std::get<double>(cell), decimals);
}

}  // namespace detail

/// RFC-4180-style CSV writer for a report table.
inline void write_report_csv(const ReportTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << detail::csv_escape(table.columns[i]);
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "")
          << detail::csv_escape(detail::render_cell(row[i], table.column_precision(i)));
    out << "\n";
  }
  if (!out) throw std::runtime_error("write_report_csv: write failure");
}

}  // namespace lorenz
