#include "alcove/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace alcove {

namespace {

using nlohmann::ordered_json;

TropMatrix from_cells(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw ParseError("empty matrix");
  std::vector<std::vector<Rational>> values;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw ParseError("matrix is not square: row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(rows.size()));
    std::vector<Rational> row;
    for (const auto& cell : rows[i]) {
      std::string lower = cell;
      std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
      if (lower.find("inf") != std::string::npos)
        throw ParseError("entry '" + cell + "' is infinite; only finite matrices are accepted");
      try {
        row.push_back(parse_rational(cell));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
    values.push_back(std::move(row));
  }
  if (values.size() < 2) throw ParseError("matrix must have order at least 2");
  return TropMatrix::from_rationals(values);
}

std::vector<std::vector<std::string>> json_cells(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("JSON matrix must be an array of arrays");
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("JSON matrix must be an array of arrays");
    std::vector<std::string> row;
    for (const auto& cell : r) {
      if (cell.is_number_integer()) row.push_back(cell.dump());
      else if (cell.is_string()) row.push_back(cell.get<std::string>());
      else throw ParseError("JSON entry " + cell.dump() + " is neither an integer nor a string");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<std::string>> grid_cells(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> row;
    for (std::string tok; ls >> tok;) row.push_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json rational(const Rational& r) { return to_string(r); }

template <std::size_t N>
ordered_json rationals(const std::array<Rational, N>& v) {
  ordered_json j = ordered_json::array();
  for (const auto& x : v) j.push_back(rational(x));
  return j;
}

ordered_json matrix(const Matrix4& m) {
  ordered_json j = ordered_json::array();
  for (const auto& row : m) j.push_back(rationals(row));
  return j;
}

ordered_json matrix(const TropMatrix& m) {
  ordered_json j = ordered_json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < m.order(); ++k) row.push_back(to_string(m(i, k)));
    j.push_back(row);
  }
  return j;
}

template <typename T, typename F>
ordered_json field(const Field<T>& f, F&& render) {
  if (!f.value) return f.reason;
  return render(*f.value);
}

template <typename T, std::size_t N>
ordered_json ints(const std::array<T, N>& v) {
  ordered_json j = ordered_json::array();
  for (const auto& x : v) j.push_back(x);
  return j;
}

std::string tuple_text(const Tuple6& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + to_string(t[i]);
  return s + ")";
}

template <typename T, std::size_t N>
std::string int_tuple(const std::array<T, N>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < N; ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::string f_text(const FVector& f) {
  return "(" + std::to_string(f.vertices) + "," + std::to_string(f.edges) + "," + std::to_string(f.facets) + ")";
}

std::string matrix_text(const Matrix4& m) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const auto& row : m)
    for (const auto& x : row) {
      cells.push_back(to_string(x));
      width = std::max(width, cells.back().size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < 4; ++i) {
    os << "  ";
    for (std::size_t k = 0; k < 4; ++k) os << (k ? " " : "") << std::setw(static_cast<int>(width)) << cells[4 * i + k];
    os << '\n';
  }
  return os.str();
}

template <typename T>
Field<T> na_like(const std::string& why) {
  return Field<T>::na(why);
}

}  // namespace

TropMatrix parse_matrix(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty matrix");
  return from_cells(text[first] == '[' ? json_cells(text) : grid_cells(text));
}

TropMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

Report make_report(const TropMatrix& input) {
  Report r;
  r.input = input;
  auto mark_all = [&r](const std::string& why, bool geometry_only) {
    if (!geometry_only) {
      r.visualization = na_like<Matrix4>(why);
      r.box_lengths = na_like<std::array<Rational, 3>>(why);
      r.perturbation = na_like<Matrix4>(why);
      r.cant = na_like<Tuple6>(why);
      r.difference = na_like<Tuple6>(why);
    }
    r.f = na_like<FVector>(why);
    r.p = na_like<std::array<int, 3>>(why);
    r.h = na_like<std::array<int, 4>>(why);
    r.t = na_like<std::array<int, 3>>(why);
    r.vertices = na_like<std::vector<ReportVertex>>(why);
    r.edges = na_like<std::vector<ReportEdge>>(why);
  };
  auto mark_classes = [&r](const std::string& why) {
    r.belt = na_like<std::array<int, 6>>(why);
    r.north = na_like<CaskType>(why);
    r.south = na_like<CaskType>(why);
    r.south_sequence = na_like<std::vector<std::string>>(why);
    r.signs = na_like<SignTuple>(why);
    r.qe = na_like<int>(why);
    r.combinatorial = na_like<int>(why);
  };

  if (auto v = find_ni_violation(input)) {
    r.ni_violation = v->describe();
    mark_all("not NI", false);
    mark_classes("not NI");
    return r;
  }
  r.ni = true;
  const NiMatrix a(input);
  r.vi = a.is_visualized();
  const ViMatrix vis = visualize(a);
  const Decomposition dec = decompose(vis);
  r.visualization = Field<Matrix4>::of(vis.ni().entries());
  std::array<Rational, 3> lengths;
  for (int k = 0; k < 3; ++k) lengths[k] = abs(dec.box.t[k]);
  r.box_lengths = Field<std::array<Rational, 3>>::of(lengths);
  r.perturbation = Field<Matrix4>::of(dec.perturbation.e);
  const CantTuple c = cant_tuple(dec.perturbation);
  const DifferenceTuple d = difference_tuple_of_ni(a);
  r.cant = Field<Tuple6>::of(c.c);
  r.difference = Field<Tuple6>::of(d.d);

  AlcovedPolytope poly;
  try {
    poly = build_polytope(a);
  } catch (const GeometryError& e) {
    mark_all(e.what(), true);
    mark_classes(e.what());
    return r;
  }
  const ShapeDescriptors desc = descriptors(poly);
  r.f = Field<FVector>::of(desc.f);
  r.p = Field<std::array<int, 3>>::of(desc.p);
  r.h = Field<std::array<int, 4>>::of(desc.h);
  r.t = Field<std::array<int, 3>>::of(desc.t);

  std::vector<ReportVertex> verts;
  const int n = poly.north_pole();
  const int s = poly.south_pole();
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
    ReportVertex rv{poly.vertices[i].point, {}, static_cast<int>(i) == n, static_cast<int>(i) == s};
    for (const auto& l : poly.vertices[i].labels) rv.labels.push_back(l.digits);
    verts.push_back(std::move(rv));
  }
  r.vertices = Field<std::vector<ReportVertex>>::of(std::move(verts));
  std::vector<ReportEdge> edges;
  for (const auto& e : poly.edges) edges.push_back({e.a, e.b, e.tropical_length});
  r.edges = Field<std::vector<ReportEdge>>::of(std::move(edges));

  if (!is_maximal(poly)) {
    mark_classes("non-maximal (f=" + f_text(desc.f) + ")");
    return r;
  }
  try {
    r.belt = Field<std::array<int, 6>>::of(*desc.belt);
    r.north = Field<CaskType>::of(north_cask_from_geometry(poly, a));
    const SouthGeometry south = south_cask_from_geometry(poly);
    r.south = Field<CaskType>::of(south.type);
    r.south_sequence = Field<std::vector<std::string>>::of(south.boundary);
    const SignTuple signs = sign_tuple(d);
    r.signs = Field<SignTuple>::of(signs);
    const QeClass& q = qe_class(signs);
    r.qe = Field<int>::of(q.index);
    r.combinatorial = Field<int>::of(combinatorial_class(q));
  } catch (const std::exception& e) {
    mark_classes(e.what());
  }
  return r;
}

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["schema"] = 1;
  j["input"] = matrix(r.input);
  j["ni"] = r.ni;
  j["vi"] = r.vi;
  if (!r.ni) j["ni_violation"] = r.ni_violation;
  j["visualization"] = field(r.visualization, [](const Matrix4& m) { return matrix(m); });
  j["box_lengths"] = field(r.box_lengths, [](const auto& t) { return rationals(t); });
  j["perturbation"] = field(r.perturbation, [](const Matrix4& m) { return matrix(m); });
  j["cant_tuple"] = field(r.cant, [](const Tuple6& t) { return rationals(t); });
  j["difference_tuple"] = field(r.difference, [](const Tuple6& t) { return rationals(t); });
  j["f"] = field(r.f, [](const FVector& f) { return ordered_json::array({f.vertices, f.edges, f.facets}); });
  j["p"] = field(r.p, [](const auto& v) { return ints(v); });
  j["h"] = field(r.h, [](const auto& v) { return ints(v); });
  j["t"] = field(r.t, [](const auto& v) { return ints(v); });
  j["belt"] = field(r.belt, [](const auto& v) { return ints(v); });
  j["north_cask"] = field(r.north, [](const CaskType& c) { return ordered_json(c.to_string()); });
  j["south_cask"] = field(r.south, [](const CaskType& c) { return ordered_json(c.to_string()); });
  j["south_sequence"] = field(r.south_sequence, [](const auto& v) { return ordered_json(v); });
  j["signs"] = field(r.signs, [](const SignTuple& s) { return ordered_json(s.to_string()); });
  j["qe_class"] = field(r.qe, [](int q) { return ordered_json("QE" + std::to_string(q)); });
  j["combinatorial_class"] = field(r.combinatorial, [](int c) { return ordered_json(c); });
  j["vertices"] = field(r.vertices, [](const std::vector<ReportVertex>& vs) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : vs) {
      ordered_json o;
      o["point"] = rationals(v.point);
      o["labels"] = v.labels;
      if (v.north || v.south) o["pole"] = v.north ? (v.south ? "NS" : "N") : "S";
      arr.push_back(o);
    }
    return arr;
  });
  j["edges"] = field(r.edges, [](const std::vector<ReportEdge>& es) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : es) arr.push_back(ordered_json{{"a", e.a}, {"b", e.b}, {"length", to_string(e.length)}});
    return arr;
  });
  return j;
}

std::string check_line(const Report& r) {
  if (!r.ni) return "NI: no (" + r.ni_violation + ")";
  return std::string("NI: yes, VI: ") + (r.vi ? "yes" : "no");
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << check_line(r) << '\n';
  auto line = [&os](const std::string& key, const auto& f, auto&& render) {
    os << key << ": " << (f.value ? render(*f.value) : f.reason) << '\n';
  };
  auto block = [&os](const std::string& key, const Field<Matrix4>& f) {
    if (f.value) os << key << ":\n" << matrix_text(*f.value);
    else os << key << ": " << f.reason << '\n';
  };
  block("visualization", r.visualization);
  line("box edge-lengths", r.box_lengths, [](const auto& t) {
    return "(" + to_string(t[0]) + "," + to_string(t[1]) + "," + to_string(t[2]) + ")";
  });
  block("perturbation E", r.perturbation);
  line("cant tuple c", r.cant, tuple_text);
  line("difference tuple d", r.difference, tuple_text);
  line("f", r.f, f_text);
  line("p", r.p, [](const auto& v) { return int_tuple(v); });
  line("h", r.h, [](const auto& v) { return int_tuple(v); });
  line("t", r.t, [](const auto& v) { return int_tuple(v); });
  line("EB", r.belt, [](const auto& v) { return int_tuple(v); });
  line("North Cask", r.north, [](const CaskType& c) { return "N" + c.to_string(); });
  line("South Cask", r.south, [](const CaskType& c) { return "S" + c.to_string(); });
  line("South sequence", r.south_sequence, [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& l : v) s += (s.empty() ? "" : " ") + l;
    return s;
  });
  line("signs", r.signs, [](const SignTuple& s) { return s.to_string(); });
  line("QE class", r.qe, [](int q) { return "QE" + std::to_string(q); });
  line("combinatorial class", r.combinatorial, [](int c) { return std::to_string(c); });
  line("vertices", r.vertices, [](const std::vector<ReportVertex>& vs) {
    std::string s = std::to_string(vs.size());
    for (const auto& v : vs) {
      std::string labels;
      for (const auto& l : v.labels) labels += (labels.empty() ? "" : ",") + l;
      s += "\n  " + (labels.empty() ? std::string("-") : labels) + (v.north ? " (N)" : "") +
           (v.south ? " (S)" : "") + ": " + to_string(v.point);
    }
    return s;
  });
  line("edges", r.edges, [](const std::vector<ReportEdge>& es) {
    std::string s = std::to_string(es.size());
    for (const auto& e : es)
      s += "\n  " + std::to_string(e.a) + "-" + std::to_string(e.b) + " length " + to_string(e.length);
    return s;
  });
  return os.str();
}

std::string vertex_table(const AlcovedPolytope& p) {
  const int n = p.north_pole();
  const int s = p.south_pole();
  std::ostringstream os;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const auto& v = p.vertices[i];
    std::string labels;
    for (const auto& l : v.labels) labels += (labels.empty() ? "" : ",") + l.digits;
    os << (labels.empty() ? std::string("-") : labels);
    if (static_cast<int>(i) == n) os << " (N)";
    if (static_cast<int>(i) == s) os << " (S)";
    os << ": " << to_string(v.point) << '\n';
  }
  return os.str();
}

std::string orbit_table() {
  const auto& orbits = compute_orbits();
  std::ostringstream os;
  os << "orbits: " << orbits.size() << '\n';
  std::vector<std::size_t> sizes;
  for (const auto& q : orbits) {
    os << "QE" << q.index << "  size " << std::setw(2) << q.orbit.size() << "  representative "
       << q.representative.to_string() << "  combinatorial class " << combinatorial_class(q) << '\n';
    sizes.push_back(q.orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  os << "sizes:";
  for (auto z : sizes) os << ' ' << z;
  os << " (sum " << std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) << ")\n";
  return os.str();
}

}  // namespace alcove
