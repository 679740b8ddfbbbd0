#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace runprob::cli {

enum class Format { Plain, Csv, Json };

inline constexpr std::string_view kCsvHeader = "n,r,p,method,value_exact,value_decimal,elapsed_ns";

struct OutputRecord {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::string p;       // as typed by the user
  std::string method;
  std::optional<std::string> value_exact;  // absent in float mode
  std::string value_decimal;
  std::int64_t elapsed_ns = 0;
};

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format,
                   bool json_array);

std::string format_double(double value, int significant);

}  // namespace runprob::cli
