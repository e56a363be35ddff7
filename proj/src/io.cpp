#include "modvit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "modvit/error.hpp"

namespace modvit {

std::string format_double(double v) {
  char buf[40];
  // shortest representation that round-trips
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) return buf;
  }
  return buf;
}

namespace {

void write_meta(std::ofstream& out, const CsvMeta& meta) {
  for (const auto& [key, value] : meta) out << "# " << key << ": " << value << "\n";
}

// Reads "# key: value" comment headers; leaves the stream at the first
// non-comment line, which is returned (or empty at EOF).
std::string read_meta(std::ifstream& in, CsvMeta& meta) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] != '#') return line;
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(1, colon - 1);
    std::string value = line.substr(colon + 1);
    const auto strip = [](std::string& s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
      while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.pop_back();
    };
    strip(key);
    strip(value);
    meta[key] = value;
  }
  return {};
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ls(line);
  while (std::getline(ls, field, ',')) {
    if (!field.empty() && field.back() == '\r') field.pop_back();
    out.push_back(field);
  }
  return out;
}

}  // namespace

void write_scores_csv(const std::string& path, const Graph& g, const ScoreVector& sv,
                      const CsvMeta& meta) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write scores: " + path);
  CsvMeta full = meta;
  full["method"] = method_name(sv.method);
  write_meta(out, full);
  out << "node_id,score\n";
  for (NodeId i = 0; i < g.node_count(); ++i)
    out << g.label(i) << ',' << format_double(sv.scores[i]) << '\n';
}

ScoresFile read_scores_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scores: " + path);
  ScoresFile f;
  std::string line = read_meta(in, f.meta);
  const auto method_it = f.meta.find("method");
  if (method_it != f.meta.end()) f.method = parse_method(method_it->second);

  auto consume = [&](const std::string& row) {
    if (row.empty()) return;
    const auto fields = split_csv(row);
    if (fields.size() != 2) throw InputError(path + ": expected 'node_id,score'");
    if (fields[0] == "node_id") return;  // header
    f.node_ids.push_back(std::stoll(fields[0]));
    f.scores.push_back(std::stod(fields[1]));
  };
  consume(line);
  while (std::getline(in, line)) consume(line);
  return f;
}

void write_trace_csv(const std::string& path, const AttackTrace& trace, const CsvMeta& meta) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write trace: " + path);
  CsvMeta full = meta;
  full["method"] = method_name(trace.method);
  full["strategy"] = strategy_name(trace.strategy);
  full["nodes"] = std::to_string(trace.node_count);
  write_meta(out, full);
  out << "step,node_id,rho,eta,sigma,q\n";
  for (const auto& s : trace.steps)
    out << s.step << ',' << s.node_label << ',' << format_double(s.rho) << ','
        << format_double(s.eta) << ',' << format_double(s.sigma) << ','
        << format_double(s.q) << '\n';
}

TraceFile read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open trace: " + path);
  TraceFile f;
  std::string line = read_meta(in, f.meta);
  if (auto it = f.meta.find("method"); it != f.meta.end()) f.method = it->second;
  if (auto it = f.meta.find("strategy"); it != f.meta.end()) f.strategy = it->second;
  if (auto it = f.meta.find("nodes"); it != f.meta.end())
    f.node_count = static_cast<NodeId>(std::stol(it->second));

  auto consume = [&](const std::string& row) {
    if (row.empty()) return;
    const auto fields = split_csv(row);
    if (fields[0] == "step") return;  // header
    if (fields.size() != 6) throw InputError(path + ": expected 6 columns");
    TraceStep s;
    s.step = std::stoi(fields[0]);
    s.node_label = std::stoll(fields[1]);
    s.rho = std::stod(fields[2]);
    s.eta = std::stod(fields[3]);
    s.sigma = std::stod(fields[4]);
    s.q = std::stod(fields[5]);
    f.steps.push_back(s);
  };
  consume(line);
  while (std::getline(in, line)) consume(line);
  if (f.steps.empty()) throw InputError(path + ": trace has no records");
  return f;
}

void write_plan_csv(const std::string& path, const DeceptionPlan& plan, const CsvMeta& meta) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write plan: " + path);
  write_meta(out, meta);
  out << "step,node_id,rho,eta,q\n";
  for (const auto& s : plan.curve)
    out << s.step << ',' << s.node_label << ',' << format_double(s.rho) << ','
        << format_double(s.eta) << ',' << format_double(s.q) << '\n';
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open for digest: " + path);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
  return hex;
}

}  // namespace modvit
