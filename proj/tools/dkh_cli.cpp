// Command-line front-end: dkh <subcommand> [options] [diagram]
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "acceptance/criteria.hpp"
#include "dkh/cobordism.hpp"
#include "dkh/error.hpp"
#include "dkh/fixtures.hpp"
#include "dkh/homology.hpp"
#include "dkh/obstructions.hpp"
#include "dkh/report.hpp"

namespace {

struct Options {
  bool json = false;
  std::string ring = "z";
  std::optional<std::size_t> max_crossings;
  bool dump = false;
  std::string fixture;
  std::string input;  // Gauss code or a file holding one
  bool oracle = false;
  std::vector<std::size_t> basepoints;
  std::string presentation;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dkh::SyntaxError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

dkh::Diagram load_diagram(const Options& o) {
  if (!o.fixture.empty()) {
    if (!o.input.empty()) throw CLI::ValidationError("give either --fixture or a diagram, not both");
    return dkh::fixture(o.fixture);
  }
  std::string text = o.input;
  std::error_code ec;
  if (!text.empty() && std::filesystem::is_regular_file(text, ec)) {
    std::string content = read_file(text), code;
    std::istringstream lines(content);
    for (std::string line; std::getline(lines, line);) code += line.substr(0, line.find('#')) + " ";
    text = code;
  }
  return dkh::Diagram::parse(text);
}

dkh::Limits limits(const Options& o) {
  dkh::Limits l = dkh::Limits::from_environment();
  if (o.max_crossings) l.standard_crossings = l.lee_crossings = *o.max_crossings;
  return l;
}

dkh::Ring ring(const Options& o) { return o.ring == "q" ? dkh::Ring::Rationals : dkh::Ring::Integers; }

void emit(const Options& o, const nlohmann::json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int run_dkh(const Options& o) {
  dkh::Diagram d = load_diagram(o);
  if (o.dump) dkh::dump_complex(dkh::build_complex(d, dkh::Variant::Standard, limits(o)), d, std::cout);
  dkh::BigradedAbelianGroup h = dkh::dkh(d, ring(o), limits(o));
  emit(o, dkh::to_json(h), dkh::render_grid(h));
  return 0;
}

int run_lee(const Options& o) {
  dkh::Diagram d = load_diagram(o);
  if (o.dump) dkh::dump_complex(dkh::build_complex(d, dkh::Variant::Lee, limits(o)), d, std::cout);
  dkh::LeeSummary s = dkh::lee_summary(d, limits(o));
  emit(o, dkh::to_json(s), dkh::render_summary(s));
  return 0;
}

int run_rasmussen(const Options& o) {
  dkh::RasmussenPair s = dkh::rasmussen(load_diagram(o), limits(o));
  emit(o, dkh::to_json(s), "s1 = " + std::to_string(s.s1) + "\ns2 = " + std::to_string(s.s2) + "\n");
  return 0;
}

int run_jones(const Options& o) {
  dkh::Diagram d = load_diagram(o);
  dkh::LaurentPolynomial p = dkh::jones(d, limits(o));
  nlohmann::json j = dkh::to_json(p);
  std::string text = p.str() + "\n";
  if (o.oracle) {
    dkh::LaurentPolynomial q = dkh::bracket_oracle(d, limits(o));
    j["oracle"] = dkh::to_json(q);
    j["oracle_agrees"] = p == q;
    text += "bracket state sum: " + q.str() + "\n" + (p == q ? "agree" : "DISAGREE") + "\n";
  }
  emit(o, j, text);
  return 0;
}

int run_classify(const Options& o) {
  dkh::ObstructionReport r = dkh::classify(load_diagram(o), limits(o));
  emit(o, dkh::to_json(r), dkh::render_report(r));
  return 0;
}

int run_reduced(const Options& o) {
  dkh::Diagram d = load_diagram(o);
  dkh::ReducedPair p = dkh::build_reduced(d, o.basepoints, limits(o));
  if (o.dump) dkh::dump_complex(p.sub, d, std::cout);
  dkh::BigradedAbelianGroup h = dkh::homology(p.sub, ring(o));
  nlohmann::json j = dkh::to_json(h);
  j["invariant"] = "reduced_dkh";
  emit(o, j, dkh::render_grid(h));
  return 0;
}

int run_cobordism(const Options& o) {
  dkh::CobordismPresentation p = dkh::parse_presentation(read_file(o.presentation));
  dkh::InducedMap m = dkh::induced_map_on_lee(p, limits(o));
  std::set<int> shared = dkh::shared_degrees(p);
  auto diagrams = p.diagrams();
  nlohmann::json j = dkh::to_json(m);
  j["diagrams"] = nlohmann::json::array();
  for (const auto& d : diagrams) j["diagrams"].push_back(d.str());
  j["euler_characteristic"] = p.euler_characteristic();
  j["surface_components"] = p.surface_components();
  j["genus"] = p.genus() ? nlohmann::json(*p.genus()) : nlohmann::json(nullptr);
  j["shared_degrees"] = shared;
  std::ostringstream text;
  for (std::size_t k = 0; k < diagrams.size(); ++k)
    text << (k ? p.moves[k - 1].str() + " -> " : std::string("start: ")) << diagrams[k].str() << "\n";
  text << "euler characteristic " << p.euler_characteristic() << ", surface components " << p.surface_components();
  if (p.genus()) text << ", genus " << *p.genus();
  text << "\nshared degrees:";
  for (int s : shared) text << " " << s;
  text << "\n" << dkh::render_induced_map(m);
  emit(o, j, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doubled Khovanov homology of virtual links"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--ring", o.ring, "coefficients: z or q")->check(CLI::IsMember({"z", "q"}));
  app.add_option("--max-crossings", o.max_crossings, "crossing cap (overrides DKH_MAX_CROSSINGS)");
  app.add_flag("--dump-complex", o.dump, "print the chain complex first");
  app.add_option("--fixture", o.fixture, "use a built-in diagram");

  auto diagram_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("diagram", o.input, "signed Gauss code, or a file containing one");
    return sub;
  };
  CLI::App* c_dkh = diagram_command("dkh", "doubled Khovanov homology grid");
  CLI::App* c_lee = diagram_command("lee", "doubled Lee homology ranks and levels");
  CLI::App* c_ras = diagram_command("rasmussen", "doubled Rasmussen invariant (s1, s2)");
  CLI::App* c_jones = diagram_command("jones", "Jones polynomial from the Euler characteristic");
  c_jones->add_flag("--oracle", o.oracle, "compare with the bracket state sum");
  CLI::App* c_classify = diagram_command("classify", "non-classicality and slice obstructions");
  CLI::App* c_reduced = diagram_command("reduced", "reduced doubled Khovanov homology");
  c_reduced->add_option("--basepoint", o.basepoints, "one arc index per component")->delimiter(',');
  CLI::App* c_cob = app.add_subcommand("cobordism", "induced map of a cobordism presentation");
  c_cob->add_option("presentation", o.presentation, "presentation file")->required();
  CLI::App* c_self = app.add_subcommand("selftest", "run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_dkh->parsed()) return run_dkh(o);
    if (c_lee->parsed()) return run_lee(o);
    if (c_ras->parsed()) return run_rasmussen(o);
    if (c_jones->parsed()) return run_jones(o);
    if (c_classify->parsed()) return run_classify(o);
    if (c_reduced->parsed()) return run_reduced(o);
    if (c_cob->parsed()) return run_cobordism(o);
    if (c_self->parsed()) {
      std::vector<int> all;
      for (int n = 1; n <= acceptance::kCriteria; ++n) all.push_back(n);
      return acceptance::run_criteria(std::cout, all, false) == 0 ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const dkh::Error& e) {
    std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
    return 1;
  }
  return 2;
}
