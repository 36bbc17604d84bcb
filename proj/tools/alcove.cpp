// alcove: check, classify and export alcoved polyhedra given by 4x4 matrices.
//
// Exit status: 0 success, 1 domain failure (not NI, degenerate body, ...),
// 2 parse or usage failure.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "alcove/report.hpp"

namespace {

constexpr int kDomainFailure = 1;
constexpr int kParseFailure = 2;

int check(const std::string& path) {
  const alcove::Report r = alcove::make_report(alcove::read_matrix_file(path));
  std::cout << alcove::check_line(r) << '\n';
  return r.ni ? 0 : kDomainFailure;
}

int classify(const std::string& path, const std::string& format) {
  const alcove::Report r = alcove::make_report(alcove::read_matrix_file(path));
  if (format == "json") std::cout << alcove::to_json(r).dump(2) << '\n';
  else std::cout << alcove::to_text(r);
  return r.ni ? 0 : kDomainFailure;
}

int vertices(const std::string& path) {
  const alcove::NiMatrix a = alcove::check_ni(alcove::read_matrix_file(path));
  std::cout << alcove::vertex_table(alcove::build_polytope(a));
  return 0;
}

int mesh(const std::string& path, const std::string& out, int precision) {
  const alcove::NiMatrix a = alcove::check_ni(alcove::read_matrix_file(path));
  const std::string text = alcove::export_mesh(alcove::build_polytope(a), precision);
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out);
  if (!file) {
    std::cerr << "error: cannot write " << out << '\n';
    return kDomainFailure;
  }
  file << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alcoved polyhedra from normal idempotent 4x4 matrices"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  std::string out;
  int precision = 12;

  auto* check_cmd = app.add_subcommand("check", "Report whether the matrix is NI and VI");
  check_cmd->add_option("matrix", path, "Matrix file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Full report: tuples, casks, classes");
  classify_cmd->add_option("matrix", path, "Matrix file")->required();
  classify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* vertices_cmd = app.add_subcommand("vertices", "Labeled vertices, exact coordinates");
  vertices_cmd->add_option("matrix", path, "Matrix file")->required();

  auto* mesh_cmd = app.add_subcommand("mesh", "OFF mesh of the polyhedron");
  mesh_cmd->add_option("matrix", path, "Matrix file")->required();
  mesh_cmd->add_option("--out", out, "Output file (default stdout)");
  mesh_cmd->add_option("--precision", precision, "Significant digits")->check(CLI::Range(1, 90));

  auto* orbits_cmd = app.add_subcommand("orbits", "The eight orbits of sign tuples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseFailure;
  }

  try {
    if (*check_cmd) return check(path);
    if (*classify_cmd) return classify(path, format);
    if (*vertices_cmd) return vertices(path);
    if (*mesh_cmd) return mesh(path, out, precision);
    if (*orbits_cmd) {
      std::cout << alcove::orbit_table();
      return 0;
    }
  } catch (const alcove::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
  return kParseFailure;
}
