#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "natint/spec.hpp"
#include "natint/text.hpp"

namespace natint {

enum class OutputFormat { Json, Csv, Text };

constexpr std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "?";
}

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw ParseError(0, "json, csv or text", s);
}

struct RunConfig {
  std::size_t size_bound = kDefaultSizeBound;
  std::size_t workers = detail::default_workers();
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Json;
};

/// Reads `key = value` lines (size_bound, workers, seed, format); '#' starts a comment.
/// Keys may also be spelled worker_count and output_format.
inline RunConfig parse_config(std::string_view contents, RunConfig cfg = {}) {
  std::istringstream in{std::string(contents)};
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    std::string_view t = line;
    if (auto hash = t.find('#'); hash != std::string_view::npos) t = t.substr(0, hash);
    t = text::trim(t);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_start, "key = value", contents);
    auto key = text::trim(t.substr(0, eq));
    auto value = text::trim(t.substr(eq + 1));
    const std::size_t vpos = line_start + static_cast<std::size_t>(value.data() - line.data());
    auto number = [&] {
      std::uint64_t v = 0;
      if (!detail::parse_uint(value, v)) throw ParseError(vpos, "non-negative integer", contents);
      return v;
    };
    if (key == "size_bound") {
      cfg.size_bound = number();
    } else if (key == "workers" || key == "worker_count") {
      cfg.workers = std::max<std::uint64_t>(1, number());
    } else if (key == "seed") {
      cfg.seed = number();
    } else if (key == "format" || key == "output_format") {
      try {
        cfg.format = parse_output_format(value);
      } catch (const ParseError&) {
        throw ParseError(vpos, "json, csv or text", contents);
      }
    } else {
      throw ParseError(line_start, "size_bound, workers, seed or format", contents);
    }
  }
  return cfg;
}

inline RunConfig load_config(const std::string& path, RunConfig cfg = {}) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot read config " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_config(buf.str(), cfg);
}

}  // namespace natint
