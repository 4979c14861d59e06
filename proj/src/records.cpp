#include "lgsim/records.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lgsim {

namespace {

constexpr const char* kHeader =
    "channel,p1,p2,regime,time_axis,dt,theta,phi,c01,c12,c02,k3,k3_prime";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  return out;
}

}  // namespace

OutputRecord make_record(const NoiseChannel& ch, const LGResult& r) {
  OutputRecord rec;
  rec.channel = channel_kind(ch);
  std::tie(rec.p1, rec.p2) = channel_params(ch);
  rec.regime = to_string(r.regime);
  if (const auto* p = std::get_if<RtnParams>(&ch)) {
    rec.time_axis = "nu";
    rec.dt = p->gamma * r.dt;
  } else {
    rec.time_axis = "t";
    rec.dt = r.dt;
  }
  rec.theta = r.theta;
  rec.phi = r.phi;
  rec.c01 = r.triple.c01;
  rec.c12 = r.triple.c12;
  rec.c02 = r.triple.c02;
  rec.k3 = r.k3;
  rec.k3_prime = r.k3_prime;
  return rec;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

void write_csv(std::ostream& os, const std::vector<OutputRecord>& records) {
  os << kHeader << '\n';
  for (const OutputRecord& r : records) {
    os << r.channel << ',' << format_double(r.p1) << ',' << format_double(r.p2) << ','
       << r.regime << ',' << r.time_axis << ',' << format_double(r.dt) << ','
       << format_double(r.theta) << ',' << format_double(r.phi) << ',' << format_double(r.c01)
       << ',' << format_double(r.c12) << ',' << format_double(r.c02) << ','
       << format_double(r.k3) << ',' << format_double(r.k3_prime) << '\n';
  }
}

std::vector<OutputRecord> read_csv(std::istream& is) {
  std::vector<OutputRecord> out;
  std::string line;
  bool saw_header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line != kHeader) throw std::invalid_argument("unexpected header: '" + line + "'");
      saw_header = true;
      continue;
    }
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 13) throw std::invalid_argument("expected 13 fields, got line: '" + line + "'");
    OutputRecord r;
    r.channel = f[0];
    r.p1 = parse_double(f[1]);
    r.p2 = parse_double(f[2]);
    r.regime = f[3];
    r.time_axis = f[4];
    r.dt = parse_double(f[5]);
    r.theta = parse_double(f[6]);
    r.phi = parse_double(f[7]);
    r.c01 = parse_double(f[8]);
    r.c12 = parse_double(f[9]);
    r.c02 = parse_double(f[10]);
    r.k3 = parse_double(f[11]);
    r.k3_prime = parse_double(f[12]);
    out.push_back(std::move(r));
  }
  return out;
}

void write_jsonl(std::ostream& os, const std::vector<OutputRecord>& records) {
  for (const OutputRecord& r : records) {
    nlohmann::json j{{"channel", r.channel}, {"p1", r.p1},
                     {"p2", r.p2},           {"regime", r.regime},
                     {"time_axis", r.time_axis}, {"dt", r.dt},
                     {"theta", r.theta},     {"phi", r.phi},
                     {"c01", r.c01},         {"c12", r.c12},
                     {"c02", r.c02},         {"k3", r.k3},
                     {"k3_prime", r.k3_prime}};
    os << j.dump() << '\n';
  }
}

std::vector<OutputRecord> read_jsonl(std::istream& is) {
  std::vector<OutputRecord> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const nlohmann::json j = nlohmann::json::parse(line);
    if (!j.contains("channel")) continue;  // non-record lines (e.g. argmax summaries)
    OutputRecord r;
    r.channel = j.at("channel").get<std::string>();
    r.p1 = j.at("p1").get<double>();
    r.p2 = j.at("p2").get<double>();
    r.regime = j.at("regime").get<std::string>();
    r.time_axis = j.at("time_axis").get<std::string>();
    r.dt = j.at("dt").get<double>();
    r.theta = j.at("theta").get<double>();
    r.phi = j.at("phi").get<double>();
    r.c01 = j.at("c01").get<double>();
    r.c12 = j.at("c12").get<double>();
    r.c02 = j.at("c02").get<double>();
    r.k3 = j.at("k3").get<double>();
    r.k3_prime = j.at("k3_prime").get<double>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lgsim
