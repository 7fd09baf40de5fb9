#include "hcube/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hcube {

namespace {

std::string trim(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw CubeError("cannot parse " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw CubeError("cannot parse " + what + ": '" + text + "'");
  return value;
}

// Reads the header "<key>=<dim>" and the vertex lines that follow.
std::pair<int, std::vector<std::uint64_t>> read_points(std::istream& in, char key) {
  std::string line;
  int dim = -1;
  std::vector<std::uint64_t> points;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    if (dim < 0) {
      if (text.size() < 3 || text[0] != key || text[1] != '=') {
        throw CubeError(std::string("expected header '") + key + "=<dim>' on line " + std::to_string(line_no));
      }
      dim = parse_int(text.substr(2), "dimension");
      if (dim < 1 || dim > kMaxStreamDim) throw CubeError("dimension out of range in header");
      continue;
    }
    if (static_cast<int>(text.size()) != dim) {
      throw CubeError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                      " binary digits");
    }
    points.push_back(Vertex::parse(text).bits());
  }
  if (dim < 0) throw CubeError("missing dimension header");
  std::vector<std::uint64_t> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw CubeError("duplicate vertex in file");
  }
  return {dim, std::move(points)};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, "part size"));
  return out;
}

}  // namespace

PointSet read_point_set(std::istream& in) {
  auto [dim, points] = read_points(in, 'n');
  if (dim > kMaxSetDim) throw CubeError("point set files are limited to n <= 24");
  return PointSet::from_bits(dim, points);
}

void write_point_set(std::ostream& out, const PointSet& s) {
  out << "n=" << s.dim() << '\n';
  s.for_each([&](std::uint64_t b) { out << Vertex(s.dim(), b).to_string() << '\n'; });
}

PointSet load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CubeError("cannot open point set file: " + path);
  return read_point_set(in);
}

void save_point_set(const std::string& path, const PointSet& s) {
  std::ofstream out(path);
  if (!out) throw CubeError("cannot write point set file: " + path);
  write_point_set(out, s);
}

Configuration read_configuration(std::istream& in) {
  auto [dim, points] = read_points(in, 'd');
  return Configuration(dim, std::move(points));
}

void write_configuration(std::ostream& out, const Configuration& f) {
  out << "d=" << f.dim() << '\n';
  for (auto p : f.points()) out << Vertex(f.dim(), p).to_string() << '\n';
}

Configuration load_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CubeError("unknown configuration name and no such file: " + path);
  return read_configuration(in);
}

Configuration resolve_configuration(const std::string& name) {
  if (name == "V2") return make_g(2);
  if (name == "F1") return make_f(1);
  if (name == "F2") return make_f(2);
  if (name == "F3") return make_f(3);
  // Short form G<d> for Gd:<d>.
  if (name.size() > 1 && name[0] == 'G' &&
      std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return make_g(parse_int(name.substr(1), "d"));
  }
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    const std::string tail = name.substr(colon + 1);
    if (head == "Gd") return make_g(parse_int(tail, "d"));
    if (head == "F1d") return make_f_general(GeneralKind::kStar, parse_int(tail, "d"));
    if (head == "F2d") return make_f_general(GeneralKind::kEvenStar, parse_int(tail, "d"));
    if (head == "Fdd") return make_f_general(GeneralKind::kAntipodal, parse_int(tail, "d"));
    if (head == "K") {
      const auto second = tail.find(':');
      if (second == std::string::npos) throw CubeError("expected K:<d>:<p1,p2,...>");
      const int d = parse_int(tail.substr(0, second), "d");
      const auto parts = parse_int_list(tail.substr(second + 1));
      return make_multipartite_config(d, parts);
    }
  }
  return load_configuration(name);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      const auto v = std::stoll(text, &used);
      if (used != text.size()) throw CubeError("bad rational");
      return Rational(v);
    }
    std::size_t used_num = 0;
    std::size_t used_den = 0;
    const std::string num_text = text.substr(0, slash);
    const std::string den_text = text.substr(slash + 1);
    const auto num = std::stoll(num_text, &used_num);
    const auto den = std::stoll(den_text, &used_den);
    if (used_num != num_text.size() || used_den != den_text.size() || den == 0) {
      throw CubeError("bad rational");
    }
    return Rational(num, den);
  } catch (const std::exception&) {
    throw CubeError("cannot parse rational: '" + text + "'");
  }
}

std::string rational_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string bigint_string(const BigInt& v) { return v.str(); }

nlohmann::json to_json(const RunRecord& record) {
  return nlohmann::json{{"command", record.command},       {"parameters", record.parameters},
                        {"result", record.result},         {"wall_time_ms", record.wall_time_ms},
                        {"node_count", record.node_count}, {"version", record.version}};
}

RunRecord run_record_from_json(const nlohmann::json& j) {
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.parameters = j.at("parameters");
  r.result = j.at("result");
  r.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
  r.node_count = j.at("node_count").get<std::uint64_t>();
  r.version = j.at("version").get<std::string>();
  return r;
}

nlohmann::json to_json(const StabilityReport& report) {
  return nlohmann::json{{"n", report.n},
                        {"set_size", report.set_size},
                        {"delta", rational_string(report.delta)},
                        {"bad_a", report.bad_a},
                        {"bad_b", report.bad_b},
                        {"bad_c", report.bad_c},
                        {"bad_bc_union", report.bad_bc_union},
                        {"exceptional_fraction", rational_string(report.exceptional_fraction)},
                        {"epsilon", rational_string(report.epsilon)},
                        {"proof_delta", report.proof_delta},
                        {"h1_hist_in", report.h1_hist_in},
                        {"h1_hist_out", report.h1_hist_out}};
}

nlohmann::json to_json(const IdentityReport& report) {
  // Big integers travel as decimal strings.
  return nlohmann::json{{"lhs", bigint_string(report.lhs)}, {"rhs", bigint_string(report.rhs)},
                        {"match", report.match},           {"n", report.n},
                        {"l", report.l},                   {"set_size", report.set_size}};
}

nlohmann::json to_json(const DensityRow& row) {
  return nlohmann::json{{"n", row.n},
                        {"exc", row.exc_value},
                        {"ratio_num", row.ratio.numerator()},
                        {"ratio_den", row.ratio.denominator()},
                        {"optimal", row.optimal}};
}

}  // namespace hcube
