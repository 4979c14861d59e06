#pragma once
// Flat output records and their text serializations. Numbers are written
// with 17 significant digits so that parse(serialize(r)) == r exactly.

#include <iosfwd>
#include <string>
#include <vector>

#include "lgsim/correlators.hpp"
#include "lgsim/noise.hpp"

namespace lgsim {

struct OutputRecord {
  std::string channel;    // rtn | oun | unitary
  double p1 = 0.0;        // rtn: a      oun: Gamma   unitary: Omega
  double p2 = 0.0;        // rtn: gamma  oun: gamma   unitary: 0
  std::string regime;     // markovian | non-markovian | intermediate
  std::string time_axis;  // "nu" (dimensionless, RTN) or "t" (raw time)
  double dt = 0.0;        // on the axis named by time_axis
  double theta = 0.0;
  double phi = 0.0;
  double c01 = 0.0;
  double c12 = 0.0;
  double c02 = 0.0;
  double k3 = 0.0;
  double k3_prime = 0.0;

  bool operator==(const OutputRecord&) const = default;
};

// RTN rows report dt on the dimensionless nu axis (nu = gamma dt); all other
// channels report raw time. The axis is always named in the record.
OutputRecord make_record(const NoiseChannel& ch, const LGResult& r);

std::string format_double(double v);  // shortest exact %.17g
double parse_double(const std::string& s);

// Delimited text: one header line, one record per line, LF endings.
void write_csv(std::ostream& os, const std::vector<OutputRecord>& records);
std::vector<OutputRecord> read_csv(std::istream& is);

// Structured records: one JSON object per line, identical fields.
void write_jsonl(std::ostream& os, const std::vector<OutputRecord>& records);
std::vector<OutputRecord> read_jsonl(std::istream& is);

}  // namespace lgsim
