// pathmat: path matrices, path spectra and path energy of simple graphs.
//
// Subcommands: matrix, spectrum, energy, gen, closed-form, verify.
// Graph input is auto-detected (graph6 if the first line is in the graph6
// byte range, edge list otherwise) and read from a file or stdin.
// Exit codes: 0 ok, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathmat/closed_form.hpp"
#include "pathmat/corpus.hpp"
#include "pathmat/generate.hpp"
#include "pathmat/graph6.hpp"
#include "pathmat/path_matrix.hpp"
#include "pathmat/spectral.hpp"
#include "pathmat/verify.hpp"

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

pathmat::Graph read_graph_input(const std::string& input) {
  if (input == "-") return pathmat::parse_graph_auto(slurp(std::cin));
  std::ifstream file(input);
  if (!file) throw std::runtime_error("cannot open input file: " + input);
  return pathmat::parse_graph_auto(slurp(file));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

long long parse_int_arg(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("corpus spec: bad integer for " + key + ": " + value);
  }
}

// Grammar: exhaustive:N | random:n=N,count=C[,seed=S] |
// unicyclic:nmax=B[,nmin=A] | file:PATH[,connected=1][,nmin=A][,nmax=B] |
// stdin[,connected=1][,nmin=A][,nmax=B]
pathmat::Corpus parse_corpus_spec(const std::string& spec, std::uint64_t default_seed) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (head == "exhaustive") {
    return pathmat::exhaustive_small_graphs(static_cast<int>(parse_int_arg("N", rest)));
  }
  if (head == "random") {
    int n = 0, count = 0;
    std::uint64_t seed = default_seed;
    for (const auto& part : split(rest, ',')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("corpus spec: expected key=value, got: " + part);
      const std::string key = part.substr(0, eq), value = part.substr(eq + 1);
      if (key == "n")
        n = static_cast<int>(parse_int_arg(key, value));
      else if (key == "count")
        count = static_cast<int>(parse_int_arg(key, value));
      else if (key == "seed")
        seed = static_cast<std::uint64_t>(parse_int_arg(key, value));
      else
        throw std::invalid_argument("corpus spec: unknown key: " + key);
    }
    if (n < 1 || count < 1)
      throw std::invalid_argument("corpus spec: random needs n>=1 and count>=1");
    return pathmat::random_connected_corpus(count, n, seed);
  }
  if (head == "unicyclic") {
    int nmin = 3, nmax = 0;
    for (const auto& part : split(rest, ',')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("corpus spec: expected key=value, got: " + part);
      const std::string key = part.substr(0, eq), value = part.substr(eq + 1);
      if (key == "nmin")
        nmin = static_cast<int>(parse_int_arg(key, value));
      else if (key == "nmax")
        nmax = static_cast<int>(parse_int_arg(key, value));
      else
        throw std::invalid_argument("corpus spec: unknown key: " + key);
    }
    if (nmax == 0) throw std::invalid_argument("corpus spec: unicyclic needs nmax=B");
    return pathmat::unicyclic_sweep(nmin, nmax);
  }
  if (head == "file" || head == "stdin") {
    auto parts = split(rest, ',');
    std::string path;
    std::size_t first_option = 0;
    if (head == "file") {
      if (parts.empty() || parts[0].empty())
        throw std::invalid_argument("corpus spec: file needs a path");
      path = parts[0];
      first_option = 1;
    }
    bool connected = false;
    int nmin = 0, nmax = 0;
    for (std::size_t i = first_option; i < parts.size(); ++i) {
      if (parts[i].empty()) continue;
      const auto eq = parts[i].find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("corpus spec: expected key=value, got: " + parts[i]);
      const std::string key = parts[i].substr(0, eq), value = parts[i].substr(eq + 1);
      if (key == "connected")
        connected = parse_int_arg(key, value) != 0;
      else if (key == "nmin")
        nmin = static_cast<int>(parse_int_arg(key, value));
      else if (key == "nmax")
        nmax = static_cast<int>(parse_int_arg(key, value));
      else
        throw std::invalid_argument("corpus spec: unknown key: " + key);
    }
    if (head == "stdin") return pathmat::corpus_from_graph6(std::cin, connected, nmin, nmax);
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open corpus file: " + path);
    auto corpus = pathmat::corpus_from_graph6(file, connected, nmin, nmax);
    corpus.name = "file:" + path;
    return corpus;
  }
  throw std::invalid_argument("corpus spec: unknown source: " + head);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path matrices, path spectra and path energy of simple graphs"};
  app.require_subcommand(1);

  auto* matrix = app.add_subcommand("matrix", "print the path matrix of a graph");
  std::string matrix_input = "-";
  std::string matrix_format = "tsv";
  bool matrix_json = false;
  int matrix_workers = 1;
  matrix->add_option("input", matrix_input, "graph file (graph6 or edge list), '-' for stdin");
  matrix->add_option("--format", matrix_format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  matrix->add_flag("--json", matrix_json, "shorthand for --format json");
  matrix->add_option("--workers", matrix_workers, "all-pairs worker threads");

  auto* spectrum = app.add_subcommand("spectrum", "print path-matrix eigenvalues, nonincreasing");
  std::string spectrum_input = "-";
  double spectrum_tol = 1e-10;
  int spectrum_workers = 1;
  spectrum->add_option("input", spectrum_input, "graph file, '-' for stdin");
  spectrum->add_option("--tol", spectrum_tol, "eigensolver tolerance");
  spectrum->add_option("--workers", spectrum_workers, "all-pairs worker threads");

  auto* energy = app.add_subcommand("energy", "print path energy and path spectral radius");
  std::string energy_input = "-";
  double energy_tol = 1e-10;
  int energy_workers = 1;
  energy->add_option("input", energy_input, "graph file, '-' for stdin");
  energy->add_option("--tol", energy_tol, "eigensolver tolerance");
  energy->add_option("--workers", energy_workers, "all-pairs worker threads");

  auto* gen = app.add_subcommand("gen", "generate a family graph as graph6");
  std::string gen_family;
  int gen_n = 0, gen_k = 0;
  std::string gen_shape = "pendant-path";
  std::uint64_t gen_seed = 0;
  gen->add_option("--family", gen_family, "path|cycle|complete|star|unicyclic")->required();
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--k", gen_k, "cycle length (unicyclic)");
  gen->add_option("--shape", gen_shape, "pendant-path|pendant-star|random-tree");
  gen->add_option("--seed", gen_seed, "seed for random-tree attachment");

  auto* closed = app.add_subcommand("closed-form", "closed-form unicyclic spectrum and energy");
  int closed_n = 0, closed_k = 0;
  closed->add_option("--n", closed_n, "vertex count")->required();
  closed->add_option("--k", closed_k, "cycle length")->required();

  auto* verify = app.add_subcommand("verify", "run theorem checks over a corpus");
  std::string verify_corpus;
  std::string verify_checks = "all";
  std::string verify_format = "text";
  double verify_tol = 1e-7;
  std::uint64_t verify_seed = 0;
  int verify_workers = 1;
  verify->add_option("--corpus", verify_corpus,
                     "exhaustive:N | random:n=N,count=C[,seed=S] | unicyclic:nmax=B[,nmin=A] | "
                     "file:PATH[,connected=1][,nmin=A][,nmax=B] | stdin[,...]")
      ->required();
  verify->add_option("--checks", verify_checks, "comma list of T1,T2,T3,T4,L5,T7,T8,C2,ORACLE or 'all'");
  verify->add_option("--tol", verify_tol, "comparison tolerance");
  verify->add_option("--seed", verify_seed, "default seed for random corpora");
  verify->add_option("--format", verify_format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--workers", verify_workers, "all-pairs worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (matrix->parsed()) {
      const pathmat::Graph g = read_graph_input(matrix_input);
      const pathmat::PathMatrix pm = pathmat::path_matrix(g, {true, matrix_workers});
      if (matrix_json || matrix_format == "json")
        std::cout << pathmat::to_json(pm) << "\n";
      else
        std::cout << pathmat::to_tsv(pm);
    } else if (spectrum->parsed()) {
      const pathmat::Graph g = read_graph_input(spectrum_input);
      const auto pm = pathmat::path_matrix(g, {true, spectrum_workers});
      const auto spec =
          pathmat::eigenvalues(pathmat::SymmetricMatrix::from_path_matrix(pm), spectrum_tol);
      std::cout << pathmat::spectrum_to_json(spec) << "\n";
    } else if (energy->parsed()) {
      const pathmat::Graph g = read_graph_input(energy_input);
      const auto pm = pathmat::path_matrix(g, {true, energy_workers});
      const auto spec =
          pathmat::eigenvalues(pathmat::SymmetricMatrix::from_path_matrix(pm), energy_tol);
      std::cout << "PE = " << pathmat::detail::format_real(pathmat::path_energy(spec)) << "\n";
      std::cout << "rho = " << pathmat::detail::format_real(pathmat::spectral_radius(spec))
                << "\n";
    } else if (gen->parsed()) {
      pathmat::GraphFamily family;
      family.kind = pathmat::family_from_string(gen_family);
      family.n = gen_n;
      family.k = gen_k;
      family.shape = pathmat::shape_from_string(gen_shape);
      family.seed = gen_seed;
      std::cout << pathmat::write_graph6(pathmat::generate(family)) << "\n";
    } else if (closed->parsed()) {
      const auto spec = pathmat::unicyclic_spectrum_closed(closed_n, closed_k);
      const double rho1 = spec.values[0];
      const double rho2 = spec.values.size() > 1 ? spec.values[1] : 0.0;
      std::cout << "rho1 = " << pathmat::detail::format_real(rho1) << "\n";
      std::cout << "rho2 = " << pathmat::detail::format_real(rho2) << "\n";
      std::cout << "spectrum = " << pathmat::spectrum_to_json(spec) << "\n";
      std::cout << "PE = "
                << pathmat::detail::format_real(
                       pathmat::unicyclic_energy_closed(closed_n, closed_k))
                << "\n";
    } else if (verify->parsed()) {
      const pathmat::Corpus corpus = parse_corpus_spec(verify_corpus, verify_seed);
      std::vector<std::string> checks;
      if (verify_checks == "all")
        checks = pathmat::known_checks();
      else
        checks = split(verify_checks, ',');
      const auto report = pathmat::run_suite(corpus, checks, verify_tol, verify_workers);
      if (verify_format == "json")
        std::cout << pathmat::report_json(report);
      else
        std::cout << pathmat::report_text(report);
      return pathmat::report_exit_code(report);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
