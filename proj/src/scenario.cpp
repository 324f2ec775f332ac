#include "ptc/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "ptc/errors.hpp"

namespace ptc {

namespace {

struct Entry {
  std::string value;
  std::size_t line;
};

// Parsed-but-untyped scenario file: ordered multimap of key -> values per
// section, plus bookkeeping for unknown/duplicate detection.
struct RawScenario {
  std::map<std::string, std::vector<std::pair<std::string, Entry>>> sections;

  bool has(const std::string& section) const { return sections.count(section) > 0; }

  std::vector<Entry> all(const std::string& section, const std::string& key) const {
    std::vector<Entry> out;
    const auto it = sections.find(section);
    if (it == sections.end()) return out;
    for (const auto& [k, entry] : it->second) {
      if (k == key) out.push_back(entry);
    }
    return out;
  }

  std::optional<Entry> single(const std::string& section, const std::string& key) const {
    const auto entries = all(section, key);
    if (entries.empty()) return std::nullopt;
    if (entries.size() > 1) {
      throw ValidationError(section + "." + key + ": duplicate key (line " +
                            std::to_string(entries[1].line) + ")");
    }
    return entries.front();
  }
};

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

const std::vector<std::string> kKnownSections = {
    "horizon", "law", "fixed_time", "initial", "integration", "singularity", "analyses"};

const std::map<std::string, std::vector<std::string>> kKnownKeys = {
    {"horizon", {"t0", "tf"}},
    {"law", {"type", "eta", "k1", "k2", "alpha", "beta"}},
    {"fixed_time", {"k1", "k2", "alpha", "beta", "span"}},
    {"initial", {"x0"}},
    {"integration", {"step", "terminal_margin", "span"}},
    {"singularity", {"order"}},
    {"analyses", {"run"}},
};

RawScenario parse_raw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open scenario file: " + path.string());
  }
  RawScenario raw;
  std::string current_section;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string_view text = trim(line);
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text.back() != ']' || text.size() < 3) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed section header");
      }
      current_section = std::string(trim(text.substr(1, text.size() - 2)));
      if (std::find(kKnownSections.begin(), kKnownSections.end(), current_section) ==
          kKnownSections.end()) {
        throw ValidationError("[" + current_section + "]: unknown section (line " +
                              std::to_string(line_no) + ")");
      }
      raw.sections.try_emplace(current_section);
      continue;
    }

    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    if (current_section.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": entry before any [section]");
    }
    const std::string key(trim(text.substr(0, eq)));
    const std::string value(trim(text.substr(eq + 1)));
    if (key.empty() || value.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": empty key or value");
    }
    const auto& known = kKnownKeys.at(current_section);
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ValidationError(current_section + "." + key + ": unknown key (line " +
                            std::to_string(line_no) + ")");
    }
    raw.sections[current_section].emplace_back(key, Entry{value, line_no});
  }
  return raw;
}

double parse_number(const std::string& section, const std::string& key, const Entry& e) {
  double value = 0.0;
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw ParseError(section + "." + key + ": malformed number '" + e.value +
                     "' (line " + std::to_string(e.line) + ")");
  }
  return value;
}

double require_number(const RawScenario& raw, const std::string& section,
                      const std::string& key) {
  const auto entry = raw.single(section, key);
  if (!entry) {
    throw ValidationError(section + "." + key + ": required");
  }
  return parse_number(section, key, *entry);
}

std::optional<double> optional_number(const RawScenario& raw, const std::string& section,
                                      const std::string& key) {
  const auto entry = raw.single(section, key);
  if (!entry) return std::nullopt;
  return parse_number(section, key, *entry);
}

// Re-raises constructor invariants as field-precise validation errors.
template <typename F>
auto validated(const std::string& field, F&& make) {
  try {
    return make();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(field + ": " + e.what());
  }
}

FixedTimeParams read_fixed_params(const RawScenario& raw, const std::string& section) {
  const double k1 = require_number(raw, section, "k1");
  const double k2 = require_number(raw, section, "k2");
  const double alpha = require_number(raw, section, "alpha");
  const double beta = require_number(raw, section, "beta");
  return validated(section, [&] { return FixedTimeParams(k1, k2, alpha, beta); });
}

FixedTimeLaw read_fixed_law(const RawScenario& raw, const std::string& section,
                            const std::optional<Horizon>& horizon,
                            std::optional<double> span_override) {
  const FixedTimeParams params = read_fixed_params(raw, section);
  double start = 0.0;
  std::optional<double> span = span_override;
  if (horizon) {
    start = horizon->t0;
    if (!span) span = horizon->duration();
  }
  if (!span) {
    throw ValidationError(section +
                          ": a fixed-time law needs integration.span or fixed_time.span "
                          "when no [horizon] is given");
  }
  return validated(section, [&] { return FixedTimeLaw(params, start, *span); });
}

}  // namespace

std::string_view analysis_name(AnalysisKind kind) {
  switch (kind) {
    case AnalysisKind::simulate: return "simulate";
    case AnalysisKind::peaks: return "peaks";
    case AnalysisKind::bound_scan: return "bound_scan";
    case AnalysisKind::velocity_check: return "velocity_check";
    case AnalysisKind::singularity: return "singularity";
    case AnalysisKind::compare: return "compare";
  }
  return "unknown";
}

std::optional<AnalysisKind> parse_analysis_name(std::string_view name) {
  for (AnalysisKind kind :
       {AnalysisKind::simulate, AnalysisKind::peaks, AnalysisKind::bound_scan,
        AnalysisKind::velocity_check, AnalysisKind::singularity, AnalysisKind::compare}) {
    if (name == analysis_name(kind)) return kind;
  }
  return std::nullopt;
}

Scenario load_scenario(const std::filesystem::path& path) {
  const RawScenario raw = parse_raw(path);

  std::optional<Horizon> horizon;
  if (raw.has("horizon")) {
    const double t0 = require_number(raw, "horizon", "t0");
    const double tf = require_number(raw, "horizon", "tf");
    horizon = validated("horizon", [&] { return Horizon(t0, tf); });
  }

  const auto type_entry = raw.single("law", "type");
  if (!type_entry) {
    throw ValidationError("law.type: required");
  }
  const std::string& type = type_entry->value;

  std::optional<double> integration_span = optional_number(raw, "integration", "span");

  Law law = [&]() -> Law {
    if (type == "original" || type == "corrected") {
      if (!horizon) {
        throw ValidationError("[horizon]: required for law.type = " + type);
      }
      const double eta = require_number(raw, "law", "eta");
      const PredefParams params =
          validated("law.eta", [&] { return PredefParams(eta, *horizon); });
      if (type == "original") return OriginalLaw{params};
      return CorrectedLaw{params};
    }
    if (type == "fixed_time") {
      return read_fixed_law(raw, "law", horizon, integration_span);
    }
    throw ValidationError("law.type: must be original, corrected or fixed_time (got '" +
                          type + "', line " + std::to_string(type_entry->line) + ")");
  }();

  std::optional<FixedTimeLaw> fixed_side;
  if (raw.has("fixed_time")) {
    const std::optional<double> side_span = optional_number(raw, "fixed_time", "span");
    fixed_side = read_fixed_law(raw, "fixed_time", horizon,
                                side_span ? side_span : integration_span);
  }

  std::vector<double> x0_list;
  for (const Entry& e : raw.all("initial", "x0")) {
    x0_list.push_back(parse_number("initial", "x0", e));
  }
  if (x0_list.empty()) {
    throw ValidationError("initial.x0: at least one initial state required");
  }

  // Defaults scale with the integration window, standoff 1e-3 of it.
  const double window = horizon ? horizon->duration() : std::get<FixedTimeLaw>(law).span;
  const double step = optional_number(raw, "integration", "step").value_or(1e-4 * window);
  const double margin =
      optional_number(raw, "integration", "terminal_margin").value_or(1e-3 * window);
  if (!(step > 0.0 && step <= margin)) {
    throw ValidationError(
        "integration.step: 0 < step <= terminal_margin required (step = " +
        std::to_string(step) + ", terminal_margin = " + std::to_string(margin) + ")");
  }
  if (horizon && !(margin < horizon->duration() / 2.0)) {
    throw ValidationError("integration.terminal_margin: must be < (tf - t0)/2");
  }
  const IntegrationSettings settings(step, margin);

  std::vector<int> orders;
  for (const Entry& e : raw.all("singularity", "order")) {
    const double v = parse_number("singularity", "order", e);
    const int k = static_cast<int>(v);
    if (v != k || k < 1 || k > 6) {
      throw ValidationError("singularity.order: integer in [1, 6] required (line " +
                            std::to_string(e.line) + ")");
    }
    orders.push_back(k);
  }
  if (orders.empty()) orders = {1, 2, 3};

  std::vector<AnalysisKind> analyses;
  for (const Entry& e : raw.all("analyses", "run")) {
    const auto kind = parse_analysis_name(e.value);
    if (!kind) {
      throw ValidationError("analyses.run: unknown analysis '" + e.value + "' (line " +
                            std::to_string(e.line) + ")");
    }
    analyses.push_back(*kind);
  }

  return Scenario{std::move(law), std::move(fixed_side), std::move(x0_list),
                  settings, std::move(orders), std::move(analyses)};
}

}  // namespace ptc
