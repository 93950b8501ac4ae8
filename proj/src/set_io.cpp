#include "pareto_lens/set_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "pareto_lens/errors.hpp"

namespace pareto_lens {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(std::string_view text, std::size_t line) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("invalid number '" + std::string(text) + "'", line);
  }
  if (!std::isfinite(value)) throw ParseError("non-finite value '" + std::string(text) + "'", line);
  return value;
}

std::vector<ObjectiveSpec> parse_objectives_header(std::string_view body, std::size_t line) {
  std::vector<ObjectiveSpec> specs;
  for (auto item : split(body, ',')) {
    item = trim(item);
    const auto colon = item.rfind(':');
    if (colon == std::string_view::npos) throw ParseError("objective '" + std::string(item) + "' lacks :max/:min", line);
    const auto name = trim(item.substr(0, colon));
    const auto sense = trim(item.substr(colon + 1));
    if (name.empty()) throw ParseError("empty objective name", line);
    if (sense == "max") {
      specs.push_back({std::string(name), Sense::Maximise});
    } else if (sense == "min") {
      specs.push_back({std::string(name), Sense::Minimise});
    } else {
      throw ParseError("objective sense must be max or min, got '" + std::string(sense) + "'", line);
    }
  }
  return specs;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw Error("format_number: conversion failed");
  return std::string(buf, ptr);
}

ApproximationSet parse_approximation_set(std::istream& in, const std::string& default_id) {
  std::vector<ObjectiveSpec> specs;
  std::string instance_id = default_id;
  std::vector<Solution> solutions;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = trim(line.substr(1));
      constexpr std::string_view kObjectives = "objectives:";
      constexpr std::string_view kInstance = "instance:";
      if (body.starts_with(kObjectives)) {
        if (!specs.empty()) throw ParseError("duplicate objectives header", line_no);
        specs = parse_objectives_header(body.substr(kObjectives.size()), line_no);
      } else if (body.starts_with(kInstance)) {
        instance_id = std::string(trim(body.substr(kInstance.size())));
      }
      continue;
    }
    if (specs.empty()) throw ParseError("data row before '# objectives:' header", line_no);

    Solution sol;
    auto values = line;
    if (const auto bar = line.find('|'); bar != std::string_view::npos) {
      values = line.substr(0, bar);
      const auto bits = trim(line.substr(bar + 1));
      BitString decision;
      decision.reserve(bits.size());
      for (char c : bits) {
        if (c != '0' && c != '1') throw ParseError("decision string must contain only 0/1", line_no);
        decision.push_back(static_cast<std::uint8_t>(c - '0'));
      }
      sol.decision = std::move(decision);
    }
    const auto fields = split(values, ',');
    if (fields.size() != specs.size()) {
      throw ParseError("expected " + std::to_string(specs.size()) + " values, got " + std::to_string(fields.size()),
                       line_no);
    }
    for (auto f : fields) sol.objectives.push_back(parse_double(f, line_no));
    sol.origin = "file";
    solutions.push_back(std::move(sol));
  }
  if (specs.empty()) throw ParseError("missing '# objectives:' header", 0);
  try {
    return ApproximationSet(std::move(specs), std::move(solutions), instance_id);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

ApproximationSet read_approximation_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return parse_approximation_set(in, path.stem().string());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

void write_approximation_set(std::ostream& out, const ApproximationSet& set,
                             const std::vector<std::pair<std::string, std::string>>& comments) {
  out << "# objectives: ";
  for (std::size_t i = 0; i < set.specs().size(); ++i) {
    const auto& s = set.specs()[i];
    out << (i ? "," : "") << s.name << ':' << (s.sense == Sense::Maximise ? "max" : "min");
  }
  out << '\n';
  if (!set.instance_id().empty()) out << "# instance: " << set.instance_id() << '\n';
  for (const auto& [key, value] : comments) out << "# " << key << ": " << value << '\n';
  for (const auto& sol : set.solutions()) {
    for (std::size_t i = 0; i < sol.objectives.size(); ++i) out << (i ? "," : "") << format_number(sol.objectives[i]);
    if (sol.decision) {
      out << '|';
      for (auto b : *sol.decision) out << static_cast<char>('0' + b);
    }
    out << '\n';
  }
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into '" + path.string() + "'");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pareto_lens
