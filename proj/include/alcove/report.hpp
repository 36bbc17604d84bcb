#pragma once

// Matrix input parsing and the per-matrix report behind the command-line tool.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "alcove/classify.hpp"

namespace alcove {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Whitespace-separated square grid of integers or p/q rationals ('#' starts a
/// comment), or a JSON array of arrays whose entries are integers or strings.
/// "-inf" is rejected. Throws ParseError.
TropMatrix parse_matrix(const std::string& text);
TropMatrix read_matrix_file(const std::string& path);

/// A field value or the reason it does not apply.
template <typename T>
struct Field {
  std::optional<T> value;
  std::string reason;

  static Field na(std::string why) { return Field{std::nullopt, "not-applicable: " + std::move(why)}; }
  static Field of(T v) { return Field{std::move(v), {}}; }
};

struct ReportVertex {
  Point3 point;
  std::vector<std::string> labels;
  bool north = false;
  bool south = false;
};

struct ReportEdge {
  int a;
  int b;
  Rational length;
};

struct Report {
  TropMatrix input{4};
  bool ni = false;
  std::string ni_violation;  // empty when NI
  bool vi = false;

  Field<Matrix4> visualization;
  Field<std::array<Rational, 3>> box_lengths;
  Field<Matrix4> perturbation;
  Field<Tuple6> cant;
  Field<Tuple6> difference;
  Field<FVector> f;
  Field<std::array<int, 3>> p;
  Field<std::array<int, 4>> h;
  Field<std::array<int, 3>> t;
  Field<std::array<int, 6>> belt;
  Field<CaskType> north;
  Field<CaskType> south;
  Field<std::vector<std::string>> south_sequence;
  Field<SignTuple> signs;
  Field<int> qe;
  Field<int> combinatorial;
  Field<std::vector<ReportVertex>> vertices;
  Field<std::vector<ReportEdge>> edges;
};

/// Runs the whole pipeline. Never throws for a 4x4 input; failures become
/// not-applicable markers.
Report make_report(const TropMatrix& input);

nlohmann::ordered_json to_json(const Report& r);
std::string to_text(const Report& r);

/// "NI: yes, VI: no" or "NI: no (<first violation>)".
std::string check_line(const Report& r);

/// One row per vertex: "124: (0,0,-8)", "123 (N): (0,0,0)".
std::string vertex_table(const AlcovedPolytope& p);

/// The orbit table followed by the sizes line.
std::string orbit_table();

}  // namespace alcove
