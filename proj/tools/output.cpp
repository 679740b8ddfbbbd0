#include "output.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include <json.hpp>

namespace runprob::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

ordered_json to_json(const OutputRecord& rec) {
  ordered_json j;
  j["n"] = rec.n;
  j["r"] = rec.r;
  j["p"] = rec.p;
  j["method"] = rec.method;
  if (rec.value_exact) j["value_exact"] = *rec.value_exact;
  j["value_decimal"] = rec.value_decimal;
  j["elapsed_ns"] = rec.elapsed_ns;
  return j;
}

std::array<std::string, 7> cells(const OutputRecord& rec) {
  return {std::to_string(rec.n), std::to_string(rec.r), rec.p,
          rec.method,            rec.value_exact.value_or(""), rec.value_decimal,
          std::to_string(rec.elapsed_ns)};
}

}  // namespace

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format,
                   bool json_array) {
  switch (format) {
    case Format::Csv:
      out << kCsvHeader << '\n';
      for (const auto& rec : records) {
        const auto row = cells(rec);
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << '\n';
      }
      return;
    case Format::Json: {
      if (!json_array && records.size() == 1) {
        out << to_json(records.front()).dump(2) << '\n';
        return;
      }
      ordered_json arr = ordered_json::array();
      for (const auto& rec : records) arr.push_back(to_json(rec));
      out << arr.dump(2) << '\n';
      return;
    }
    case Format::Plain: {
      const std::array<std::string, 7> header{"n", "r", "p", "method", "value_exact", "value_decimal",
                                              "elapsed_ns"};
      std::array<std::size_t, 7> width{};
      for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
      for (const auto& rec : records) {
        const auto row = cells(rec);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      auto emit = [&](const std::array<std::string, 7>& row) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) line += "  ";
          line += row[i];
          if (i + 1 < row.size()) line += std::string(width[i] - row[i].size(), ' ');
        }
        out << line << '\n';
      };
      emit(header);
      for (const auto& rec : records) emit(cells(rec));
      return;
    }
  }
}

std::string format_double(double value, int significant) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*g", significant, value);
  return buf.data();
}

}  // namespace runprob::cli
