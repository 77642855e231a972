#include "tautline/signal_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "tautline/errors.hpp"

namespace tautline::io {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_finite(const std::string& field, std::size_t line_no) {
  const std::string t = trim(field);
  if (t.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": empty numeric field");
  }
  char* end = nullptr;
  const double x = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": cannot parse number '" + t + "'");
  }
  if (!std::isfinite(x)) {
    throw ParseError("line " + std::to_string(line_no) + ": non-finite value '" + t + "'");
  }
  return x;
}

bool has_suffix(const std::string& path, const std::string& suffix) {
  return path.size() >= suffix.size() &&
         path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
}

PiecewiseConstantSignal read_json_signal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    const auto interval = j.at("interval").get<std::vector<double>>();
    auto bps = j.at("breakpoints").get<std::vector<double>>();
    auto vals = j.at("values").get<std::vector<double>>();
    if (interval.size() != 2) {
      throw ParseError(path + ": interval must hold exactly [a, b]");
    }
    if (bps.empty() || bps.front() != interval[0] || bps.back() != interval[1]) {
      throw ParseError(path + ": breakpoints must start at a and end at b");
    }
    return {std::move(bps), std::move(vals)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ParameterError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

PiecewiseConstantSignal read_csv_signal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    throw ParseError(path + ": empty file");
  }
  ++line_no;
  const std::string header = trim(line);

  try {
    if (header == "value") {
      std::vector<double> values;
      while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        values.push_back(parse_finite(line, line_no));
      }
      if (values.empty()) {
        throw ParseError(path + ": no values");
      }
      const double n = static_cast<double>(values.size());
      return PiecewiseConstantSignal::uniform(Interval(0.0, n), std::move(values));
    }
    if (header == "x,value") {
      std::vector<double> bps, values;
      bool closed = false;
      while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        if (closed) {
          throw ParseError("line " + std::to_string(line_no) + ": data after the closing row");
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
          throw ParseError("line " + std::to_string(line_no) + ": expected 'x,value'");
        }
        const double x = parse_finite(line.substr(0, comma), line_no);
        if (!bps.empty() && !(bps.back() < x)) {
          throw ParseError("line " + std::to_string(line_no) +
                           ": breakpoints must be strictly increasing");
        }
        bps.push_back(x);
        const std::string value_field = trim(line.substr(comma + 1));
        if (value_field.empty()) {
          closed = true;  // final row carries only x_n
        } else {
          values.push_back(parse_finite(value_field, line_no));
        }
      }
      if (!closed) {
        throw ParseError(path + ": missing closing 'x,' row with the final breakpoint");
      }
      return {std::move(bps), std::move(values)};
    }
  } catch (const ParameterError& e) {
    throw ParseError(path + ": " + e.what());
  }
  throw ParseError(path + ": line 1: unknown header '" + header +
                   "' (expected 'value' or 'x,value')");
}

}  // namespace

PiecewiseConstantSignal read_signal(const std::string& path) {
  if (has_suffix(path, ".json")) return read_json_signal(path);
  return read_csv_signal(path);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_signal(const std::string& path, const PiecewiseConstantSignal& f) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  if (has_suffix(path, ".json")) {
    nlohmann::json j;
    j["interval"] = {f.interval().a, f.interval().b};
    j["breakpoints"] = f.breakpoints();
    j["values"] = f.values();
    out << j.dump(2) << '\n';
  } else {
    out << "x,value\n";
    for (std::size_t i = 0; i < f.values().size(); ++i) {
      out << format_double(f.breakpoints()[i]) << ',' << format_double(f.values()[i]) << '\n';
    }
    out << format_double(f.breakpoints().back()) << ",\n";
  }
  if (!out.good()) throw IoError("failed while writing '" + path + "'");
}

void write_linear_function(const std::string& path, const PiecewiseLinearFunction& f) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "x,y\n";
  for (std::size_t i = 0; i < f.node_count(); ++i) {
    out << format_double(f.nodes()[i]) << ',' << format_double(f.values()[i]) << '\n';
  }
  if (!out.good()) throw IoError("failed while writing '" + path + "'");
}

}  // namespace tautline::io
