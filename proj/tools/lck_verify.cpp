#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lck/suites.hpp"

namespace {

using namespace lck;

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

struct EntrySelector {
  std::string example;
  long n = 0;
  long s = 0;
  std::string a, r;
  std::string mu = "1", y = "0";
};

/// Builds the selected catalog entry; throws std::invalid_argument on bad
/// parameters.
LoadedEntry select_entry(const EntrySelector& sel) {
  if (sel.example == "heisenberg") {
    if (sel.n < 2) throw std::invalid_argument("heisenberg needs --n >= 2");
    std::vector<Rational> a =
        sel.a.empty() ? std::vector<Rational>(sel.n - 1, Rational(0)) : parse_rational_list(sel.a);
    return make_heisenberg(static_cast<std::size_t>(sel.n), a);
  }
  if (sel.example == "inoue") return make_inoue(Rational::parse(sel.mu), Rational::parse(sel.y));
  if (sel.example == "ot") {
    if (sel.s < 1) throw std::invalid_argument("ot needs --s >= 1");
    std::vector<Rational> r =
        sel.r.empty() ? std::vector<Rational>(sel.s, Rational(0)) : parse_rational_list(sel.r);
    return make_ot(static_cast<std::size_t>(sel.s), r);
  }
  if (sel.example == "hopf") {
    if (sel.n < 2) throw std::invalid_argument("hopf needs --n >= 2");
    return make_hopf(static_cast<std::size_t>(sel.n));
  }
  if (sel.example == "abelian") {
    if (sel.n < 2) throw std::invalid_argument("abelian needs --n >= 2");
    return make_abelian(static_cast<std::size_t>(sel.n));
  }
  throw std::invalid_argument("unknown example '" + sel.example +
                              "' (expected heisenberg|inoue|ot|hopf|abelian)");
}

std::string file_stem(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of framed Hermitian geometries"};
  app.require_subcommand(1);

  EntrySelector sel;
  std::string suite = "all";
  std::string file;
  bool as_json = false;

  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("--example", sel.example, "catalog entry: heisenberg|inoue|ot|hopf|abelian");
  check->add_option("--file", file, "frame-algebra description file");
  check->add_option("--n", sel.n, "size parameter for heisenberg/hopf/abelian");
  check->add_option("--a", sel.a, "comma-separated rationals for heisenberg");
  check->add_option("--mu", sel.mu, "rational parameter for inoue");
  check->add_option("--y", sel.y, "rational parameter for inoue");
  check->add_option("--s", sel.s, "size parameter for ot");
  check->add_option("--r", sel.r, "comma-separated rationals for ot");
  check->add_option("--suite", suite, "suite name or 'all'");
  check->add_flag("--json", as_json, "emit the machine-readable report");

  EntrySelector exp_sel;
  std::string out_path;
  CLI::App* exporter = app.add_subcommand("export", "write a catalog entry as a description file");
  exporter->add_option("--example", exp_sel.example, "catalog entry name")->required();
  exporter->add_option("--n", exp_sel.n, "size parameter");
  exporter->add_option("--a", exp_sel.a, "comma-separated rationals");
  exporter->add_option("--mu", exp_sel.mu, "rational parameter");
  exporter->add_option("--y", exp_sel.y, "rational parameter");
  exporter->add_option("--s", exp_sel.s, "size parameter");
  exporter->add_option("--r", exp_sel.r, "comma-separated rationals");
  exporter->add_option("--out", out_path, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : 2;
  }

  try {
    if (exporter->parsed()) {
      LoadedEntry entry = select_entry(exp_sel);
      std::string doc = std::visit(
          [](const auto& e) { return serialize_frame_description(describe(e)); }, entry);
      if (out_path.empty()) {
        std::cout << doc;
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << doc;
      }
      return 0;
    }

    if (!is_suite(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
    if (sel.example.empty() == file.empty())
      throw std::invalid_argument("pass exactly one of --example or --file");

    std::vector<SuiteReport> reports;
    std::string example_id;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot read '" + file + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      FrameDescription desc = parse_frame_description(buf.str());
      if (desc.name.empty()) desc.name = file_stem(file);
      LoadedEntry entry = instantiate(desc);
      example_id = std::visit([](const auto& e) { return e.name; }, entry);
      reports = run_custom(std::move(entry), suite);
    } else {
      LoadedEntry entry = select_entry(sel);
      example_id = std::visit([](const auto& e) { return e.name; }, entry);
      reports = std::visit([&suite](const auto& e) { return run_suites(e, suite); }, entry);
    }

    SuiteReport merged = merge_reports(example_id, suite, reports);
    std::cout << (as_json ? render_json(merged) : render_text(merged));
    return merged.pass() ? 0 : 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
