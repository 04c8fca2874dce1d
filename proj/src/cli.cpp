#include "gyro/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gyro/construct.hpp"
#include "gyro/holomorph.hpp"
#include "gyro/io.hpp"
#include "gyro/isomorphism.hpp"
#include "gyro/subgyrogroups.hpp"
#include "gyro/verify.hpp"

namespace gyro::cli {

namespace {

constexpr std::size_t kEnumerateLimit = 256;
constexpr int kLatticeMaxN = 8;
constexpr int kHolomorphMaxN = 7;

// Bad input that should end the run with kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

FiniteGyrogroup load_file(const std::string& path, const io::LoadOptions& opts = {}) {
  try {
    return io::load_tables(read_file(path), opts);
  } catch (const io::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const io::StructureError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

io::ReportDocument full_report(const FiniteGyrogroup& g) {
  auto doc = io::make_report(verify(g), g.order());
  doc.gyroauto_order = gyroautomorphism_group(g).size();
  if (g.order() <= kEnumerateLimit && doc.all_passed())
    doc.subgyrogroup_count = enumerate_subgyrogroups(g).nodes.size();
  return doc;
}

std::string format_orders(const std::map<std::size_t, std::size_t>& orders) {
  std::string s;
  for (const auto& [order, count] : orders) {
    if (!s.empty()) s += ' ';
    s += std::to_string(order) + ":" + std::to_string(count);
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite gyrogroups G2(n) of order 2^n: construction, verification, analysis",
               "gyro"};
  app.require_subcommand(1);

  int n = 0;
  int max_n = g2::kDefaultMaxN;
  std::string format = "text";
  std::string out_path;
  std::string report_path;
  std::string left_path, right_path, check_path;
  bool dot = false;

  auto* build = app.add_subcommand("build", "Emit the Cayley and gyration tables of G2(n)");
  build->add_option("--n", n, "Construction parameter (n >= 3)")->required();
  build->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}));
  build->add_option("--out", out_path, "Write to PATH instead of stdout");
  build->add_option("--max-n", max_n, "Largest n accepted");

  auto* verify_cmd = app.add_subcommand("verify", "Verify every gyrogroup axiom for G2(n)");
  verify_cmd->add_option("--n", n, "Construction parameter (n >= 3)")->required();
  verify_cmd->add_option("--report", report_path, "Write the JSON report to PATH");
  verify_cmd->add_option("--max-n", max_n, "Largest n accepted");

  auto* lattice = app.add_subcommand("lattice", "Subgyrogroup lattice of G2(n)");
  lattice->add_option("--n", n, "Construction parameter (n >= 3)")->required();
  lattice->add_flag("--dot", dot, "Emit Graphviz DOT")->required();
  lattice->add_option("--out", out_path, "Write to PATH instead of stdout");

  auto* holo = app.add_subcommand("holomorph", "Gyroholomorph of G2(n) and its structure");
  holo->add_option("--n", n, "Construction parameter (n >= 3)")->required();

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism between two table files");
  iso->add_option("--left", left_path, "Table file")->required();
  iso->add_option("--right", right_path, "Table file")->required();

  auto* check = app.add_subcommand("check", "Load a table file and verify it");
  check->add_option("file", check_path, "Table file")->required();
  check->add_option("--report", report_path, "Write the JSON report to PATH");

  std::vector<const char*> argv{"gyro"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*build) {
      const auto g = g2::build_g2(n, max_n);
      write_output(out_path,
                   io::emit_tables(g, format == "csv" ? io::TableFormat::Csv : io::TableFormat::Text),
                   out);
      return kExitOk;
    }

    if (*verify_cmd) {
      const auto params = g2::CyclicParams::make(n, max_n);
      const auto g = g2::build_g2(n, max_n);
      auto doc = full_report(g);
      doc.n = n;
      doc.m = params.m;
      out << format_report(doc);
      if (!report_path.empty()) write_output(report_path, doc.to_json(), out);
      return doc.all_passed() ? kExitOk : kExitFailed;
    }

    if (*lattice) {
      if (n > kLatticeMaxN)
        throw UsageError("lattice supports n <= " + std::to_string(kLatticeMaxN));
      const auto g = g2::build_g2(n);
      write_output(out_path, io::emit_lattice_dot(enumerate_subgyrogroups(g)), out);
      return kExitOk;
    }

    if (*holo) {
      if (n > kHolomorphMaxN)
        throw UsageError("holomorph supports n <= " + std::to_string(kHolomorphMaxN));
      const auto params = g2::CyclicParams::make(n);
      const auto h = gyroholomorph(g2::build_g2(n));
      const auto match = identify_structure(groups::invariants(h.table), holomorph_candidates(params.m));
      const auto& inv = match.invariants;
      out << "gyroholomorph of G2(" << n << ")\n"
          << "order: " << h.order() << '\n'
          << "gyroautomorphism group order: " << h.automorphisms.size() << '\n'
          << "abelian: " << (inv.abelian ? "true" : "false") << '\n'
          << "element orders: " << format_orders(inv.element_orders) << '\n'
          << "center size: " << inv.center_size << '\n'
          << "derived subgroup size: " << inv.derived_size << '\n';
      if (match.matches.empty()) out << "matches: none\n";
      for (const auto& name : match.matches) out << "matches: " << name << '\n';
      return kExitOk;
    }

    if (*iso) {
      const auto left = load_file(left_path);
      const auto right = load_file(right_path);
      const auto phi = isomorphic(left, right);
      if (!phi) {
        out << "not isomorphic\n";
        return kExitFailed;
      }
      out << "isomorphic:";
      for (Element x : phi->mapping()) out << ' ' << x;
      out << '\n';
      return kExitOk;
    }

    if (*check) {
      const auto g = load_file(check_path, io::LoadOptions{.require_latin = false});
      const auto defect = find_latin_defect(g);
      if (defect) out << "structure: FAIL " << defect->describe() << '\n';
      auto doc = defect ? io::make_report(verify(g), g.order()) : full_report(g);
      out << format_report(doc);
      if (!report_path.empty()) write_output(report_path, doc.to_json(), out);
      return doc.all_passed() && !defect ? kExitOk : kExitFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HolomorphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace gyro::cli
