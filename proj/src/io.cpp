#include "ptc/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <system_error>

#include "ptc/errors.hpp"

namespace ptc {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ParseError("malformed number: '" + std::string(text) + "'");
  }
  return value;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << kTrajectoryCsvHeader << '\n';
  for (const Sample& s : traj.samples) {
    out << format_double(s.t) << ',' << format_double(s.x) << ','
        << format_double(s.u) << '\n';
  }
}

std::vector<Sample> read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("trajectory csv: empty stream");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTrajectoryCsvHeader) {
    throw ParseError("trajectory csv: expected header '" +
                     std::string(kTrajectoryCsvHeader) + "', got '" + line + "'");
  }
  std::vector<Sample> samples;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto first = line.find(',');
    const auto second = (first == std::string::npos) ? std::string::npos
                                                     : line.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        line.find(',', second + 1) != std::string::npos) {
      throw ParseError("trajectory csv: line " + std::to_string(line_no) +
                       ": expected 3 fields");
    }
    const std::string_view view(line);
    samples.push_back({parse_double(view.substr(0, first)),
                       parse_double(view.substr(first + 1, second - first - 1)),
                       parse_double(view.substr(second + 1))});
  }
  return samples;
}

}  // namespace ptc
