#ifndef HCUBE_IO_HPP
#define HCUBE_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hcube/configurations.hpp"
#include "hcube/cube.hpp"
#include "hcube/density.hpp"
#include "hcube/identities.hpp"
#include "hcube/stability.hpp"

namespace hcube {

inline constexpr const char* kVersion = "0.1.0";

// Point-set files: header "n=<dim>", then one binary string per vertex with
// coordinate 1 leftmost. Lines starting with '#' and blank lines are
// skipped. Duplicates are an error. Configuration files use "d=<dim>".

PointSet read_point_set(std::istream& in);
void write_point_set(std::ostream& out, const PointSet& s);
PointSet load_point_set(const std::string& path);
void save_point_set(const std::string& path, const PointSet& s);

Configuration read_configuration(std::istream& in);
void write_configuration(std::ostream& out, const Configuration& f);
Configuration load_configuration(const std::string& path);

/// Built-in names V2, Gd:<d> (or G<d>), F1, F2, F3, F1d:<d>, F2d:<d>, Fdd:<d>,
/// K:<d>:<p1,p2,...>; anything else is read as a configuration file.
Configuration resolve_configuration(const std::string& name);

/// Parses "p/q" or an integer into an exact rational.
Rational parse_rational(const std::string& text);

/// One CLI invocation, serializable as a single JSON object.
struct RunRecord {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::int64_t wall_time_ms = 0;
  std::uint64_t node_count = 0;
  std::string version = kVersion;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

nlohmann::json to_json(const RunRecord& record);
RunRecord run_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StabilityReport& report);
nlohmann::json to_json(const IdentityReport& report);
nlohmann::json to_json(const DensityRow& row);

std::string rational_string(const Rational& r);
std::string bigint_string(const BigInt& v);

}  // namespace hcube

#endif  // HCUBE_IO_HPP
