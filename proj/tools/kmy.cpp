// kmy: command-line front end for the J_{l,n}(d) library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmy/kmy.hpp"

using json = nlohmann::ordered_json;
using namespace kmy;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kNegative = 2 };

struct Config {
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 1;
  int threads = 0;
  int n = 0;
  std::optional<int> l;
  std::string diagram, diagram2, word, lambda, delta = "sym", method = "constructive";
  int p = 0;

  int height() const { return l ? *l : std::max(-1, n - 2); }
  bool json() const { return format == "json"; }
};

json witness_json(const AxiomReport& r) {
  json w = json::object();
  for (const auto& [k, v] : r.witness) w[k] = v;
  return w;
}

json report_json(const AxiomReport& r) {
  json j{{"axiom", r.axiom}, {"n", r.n}, {"l", r.l}, {"status", to_string(r.status)}, {"witness", witness_json(r)}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

std::string report_text(const AxiomReport& r) {
  std::string out = r.axiom + " n=" + std::to_string(r.n) + " l=" + std::to_string(r.l) + " " + to_string(r.status);
  for (const auto& [k, v] : r.witness) out += " " + k + "=" + v;
  if (!r.failure.empty()) out += " (" + r.failure + ")";
  return out;
}

json matrix_json(const LaurentMatrix& g) {
  json rows = json::array();
  for (const auto& row : g) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    rows.push_back(r);
  }
  return rows;
}

json rational_matrix_json(const RationalMatrix& g) {
  json rows = json::array();
  for (const auto& row : g) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    rows.push_back(r);
  }
  return rows;
}

std::vector<std::string> cell_basis_labels(const CellModule& m) {
  std::vector<std::string> out;
  for (int k = 0; k < m.dimension(); ++k)
    out.push_back(to_string(m.halves()[m.half_of(k)]) + " # " + std::to_string(m.tableau_of(k) + 1));
  return out;
}

// Each command writes either text or a JSON document and returns an exit code.
struct Out {
  std::ostringstream text;
  json doc = json::object();
};

int run_dim(const Config& c, Out& o) {
  KMYAlgebra A(c.n, c.height());
  o.text << A.dimension() << "\n";
  o.doc = {{"schema", 1}, {"n", c.n}, {"l", c.height()}, {"dimension", A.dimension()}};
  return kOk;
}

int run_basis(const Config& c, Out& o) {
  KMYAlgebra A(c.n, c.height());
  json list = json::array();
  for (const auto& d : A.basis()) {
    o.text << to_string(d) << "\n";
    list.push_back(to_string(d));
  }
  o.doc = {{"schema", 1}, {"n", c.n}, {"l", c.height()}, {"basis", list}};
  return kOk;
}

int run_height(const Config& c, Out& o) {
  Diagram d = parse_diagram(c.n, c.diagram);
  int h = height_exact(d), est = height_upper_bound(d);
  o.text << h << "\n";
  o.doc = {{"schema", 1}, {"n", c.n}, {"diagram", to_string(d)}, {"height", h}, {"estimator", est}};
  return kOk;
}

int run_mul(const Config& c, Out& o) {
  auto [loops, d] = multiply(parse_diagram(c.n, c.diagram), parse_diagram(c.n, c.diagram2));
  o.text << (loops ? "d^" + std::to_string(loops) + " " : "") << to_string(d) << "\n";
  o.doc = {{"schema", 1}, {"n", c.n}, {"loops", loops}, {"diagram", to_string(d)}};
  return kOk;
}

int run_gram(const Config& c, Out& o) {
  check_height_bound(c.n, c.height());
  CellModule m(c.n, c.height(), {c.p, parse_partition(c.lambda)});
  auto g = m.gram();
  auto labels = cell_basis_labels(m);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) o.text << (j ? "\t" : "") << to_string(g[i][j]);
    o.text << "\n";
  }
  o.doc = {{"schema", 1}, {"n", c.n},      {"l", c.height()},      {"p", c.p},
           {"lambda", to_string(m.index().lambda)}, {"basis", labels}, {"entries", matrix_json(g)}};
  return kOk;
}

int run_gram_det(const Config& c, Out& o) {
  Poly det = gram_det(c.n, c.height(), c.p, parse_partition(c.lambda));
  o.text << to_string(det.to_laurent()) << "\n";
  o.doc = {{"schema", 1}, {"n", c.n}, {"l", c.height()}, {"p", c.p}, {"lambda", to_string(parse_partition(c.lambda))},
           {"det", to_string(det.to_laurent())}};
  return kOk;
}

int run_semisimple(const Config& c, Out& o) {
  SemisimpleReport r;
  std::string value = c.delta;
  if (c.delta == "sym") r = semisimple_generic(c.n, c.height());
  else if (c.delta.find('i') != std::string::npos) {
    Gaussian z = parse_gaussian(c.delta);
    value = to_string(z);
    r = semisimple_at(c.n, c.height(), z);
  } else {
    Rational q = parse_rational(c.delta);
    value = to_string(q);
    r = semisimple_at(c.n, c.height(), q);
  }
  json cells = json::array();
  for (const auto& cell : r.cells) {
    o.text << to_string(cell.index) << "\t" << to_string(cell.det.to_laurent()) << "\t"
           << (cell.vanishes ? "zero" : "nonzero") << "\n";
    cells.push_back({{"cell", to_string(cell.index)}, {"det", to_string(cell.det.to_laurent())},
                     {"vanishes", cell.vanishes}});
  }
  std::string verdict = r.semisimple ? "semisimple" : "not semisimple";
  o.text << verdict << "\n";
  o.doc = {{"schema", 1}, {"n", c.n}, {"l", c.height()}, {"delta", value}, {"cells", cells}, {"verdict", verdict}};
  return r.semisimple ? kOk : kNegative;
}

int run_restrict(const Config& c, Out& o) {
  auto r = restriction_check(c.n, c.height(), c.p, parse_partition(c.lambda));
  o.text << report_text(r) << "\n";
  o.doc = {{"schema", 1}, {"report", report_json(r)}};
  return r.verified() ? kOk : kNegative;
}

int run_axioms(const Config& c, Out& o) {
  auto reports = check_all_axioms(c.n, c.height(), c.seed);
  json list = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    o.text << report_text(r) << "\n";
    list.push_back(report_json(r));
    ok = ok && r.verified();
  }
  o.doc = {{"schema", 1}, {"n", c.n}, {"l", c.height()}, {"seed", c.seed}, {"reports", list}};
  return ok ? kOk : kNegative;
}

int run_localise(const Config& c, Out& o) {
  auto [observed, expected] = localise_cell(c.n, c.height(), c.p, parse_partition(c.lambda));
  o.text << observed << " " << expected << "\n";
  o.doc = {{"schema", 1}, {"n", c.n}, {"l", c.height()}, {"p", c.p}, {"observed", observed}, {"expected", expected}};
  return observed == expected ? kOk : kNegative;
}

int run_decompose(const Config& c, Out& o) {
  Diagram d = parse_diagram(c.n, c.diagram);
  json splits = json::array();
  GeneratorWord w;
  if (c.method == "search") {
    w = decompose_search(d, c.height());
  } else {
    std::vector<SplitRecord> trace;
    w = decompose_constructive(d, c.height(), &trace);
    for (const auto& s : trace) splits.push_back({{"level", s.level}, {"case", s.kind}, {"loops", s.loops}});
  }
  o.text << to_string(w) << "\n";
  o.doc = {{"schema", 1},         {"n", c.n},          {"l", c.height()},
           {"method", c.method},  {"word", to_string(w)}, {"delta_exponent", w.delta_exponent},
           {"length", w.tokens.size()}};
  if (c.method != "search") o.doc["splits"] = splits;
  return kOk;
}

int run_eval(const Config& c, Out& o) {
  auto w = parse_word(c.n, c.height(), c.word);
  // A d^k prefix records the exponent the tokens produce; report the
  // measured one.
  auto [k, d] = evaluate_word(w);
  o.text << (k ? "d^" + std::to_string(k) + " " : "") << to_string(d) << "\n";
  o.doc = {{"schema", 1}, {"n", c.n}, {"l", c.height()}, {"delta_exponent", k}, {"diagram", to_string(d)}};
  return kOk;
}

int run_specht(const Config& c, Out& o) {
  Partition lam = parse_partition(c.lambda);
  SpechtModule s(lam);
  json tableaux = json::array();
  o.text << "dimension " << s.dimension() << "\n";
  for (const auto& t : s.standard_tableaux()) {
    json rows = json::array();
    std::string line;
    for (const auto& row : t) {
      json r = json::array();
      for (std::size_t k = 0; k < row.size(); ++k) {
        r.push_back(row[k] + 1);
        line += (k ? " " : "") + std::to_string(row[k] + 1);
      }
      rows.push_back(r);
      line += " / ";
    }
    if (line.size() >= 3) line.resize(line.size() - 3);
    o.text << line << "\n";
    tableaux.push_back(rows);
  }
  auto g = s.gram();
  o.text << "gram\n";
  for (const auto& row : g) {
    for (std::size_t j = 0; j < row.size(); ++j) o.text << (j ? "\t" : "") << to_string(row[j]);
    o.text << "\n";
  }
  o.doc = {{"schema", 1},         {"lambda", to_string(lam)},   {"dimension", s.dimension()},
           {"tableaux", tableaux}, {"gram", rational_matrix_json(g)}};
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in the algebras J_{l,n}(d) between Temperley-Lieb and Brauer"};
  app.require_subcommand(1);
  Config c;
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", c.output, "Write output to a file");
  app.add_option("--seed", c.seed, "Seed for randomised checks");
  app.add_option("--threads", c.threads, "Worker threads (default: KMY_THREADS or hardware)");

  auto with_nl = [&](CLI::App* sub) {
    sub->add_option("-n", c.n, "Number of strands")->required()->check(CLI::Range(0, kMaxStrands));
    sub->add_option("-l", c.l, "Height bound (default n-2)");
    return sub;
  };
  auto with_cell = [&](CLI::App* sub) {
    with_nl(sub);
    sub->add_option("-p", c.p, "Propagating lines")->required();
    sub->add_option("--lambda", c.lambda, "Partition, e.g. 2,1");
    return sub;
  };

  std::map<CLI::App*, int (*)(const Config&, Out&)> commands;
  commands[with_nl(app.add_subcommand("dim", "Dimension of J_{l,n}"))] = run_dim;
  commands[with_nl(app.add_subcommand("basis", "Basis diagrams of J_{l,n}"))] = run_basis;
  auto height = with_nl(app.add_subcommand("height", "Exact height of a diagram"));
  height->add_option("diagram", c.diagram)->required();
  commands[height] = run_height;
  auto mul = with_nl(app.add_subcommand("mul", "Product of two diagrams"));
  mul->add_option("first", c.diagram)->required();
  mul->add_option("second", c.diagram2)->required();
  commands[mul] = run_mul;
  commands[with_cell(app.add_subcommand("gram", "Gram matrix of a cell module"))] = run_gram;
  commands[with_cell(app.add_subcommand("gram-det", "Gram determinant of a cell module"))] = run_gram_det;
  auto ss = with_nl(app.add_subcommand("semisimple", "Semisimplicity at a value of d"));
  ss->add_option("--delta", c.delta, "Rational p/q, Gaussian a+bi, or sym");
  commands[ss] = run_semisimple;
  commands[with_cell(app.add_subcommand("restrict", "Restriction of a cell module to J_{l,n-1}"))] = run_restrict;
  commands[with_cell(app.add_subcommand("localise", "Dimension of e_n applied to a cell module"))] = run_localise;
  commands[with_nl(app.add_subcommand("axioms", "Check the tower axioms A1-A6"))] = run_axioms;
  auto dec = with_nl(app.add_subcommand("decompose", "Write a diagram as a word in the generators"));
  dec->add_option("diagram", c.diagram)->required();
  dec->add_option("--method", c.method)->check(CLI::IsMember({"search", "constructive"}));
  commands[dec] = run_decompose;
  auto ev = with_nl(app.add_subcommand("eval", "Evaluate a generator word"));
  ev->add_option("word", c.word)->required();
  commands[ev] = run_eval;
  auto sp = app.add_subcommand("specht", "Specht module data");
  sp->add_option("--lambda", c.lambda)->required();
  commands[sp] = run_specht;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (c.threads > 0) set_thread_count(c.threads);

  Out out;
  int code = kOk;
  try {
    for (auto& [sub, fn] : commands)
      if (sub->parsed()) code = fn(c, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return kUsage;
  }

  std::string rendered = c.json() ? out.doc.dump(2) + "\n" : out.text.str();
  if (c.output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream f(c.output);
    if (!f) {
      std::cerr << "error: cannot write " << c.output << "\n";
      return kUsage;
    }
    f << rendered;
  }
  return code;
}
