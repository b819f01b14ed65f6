#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "khopos/cables.hpp"
#include "khopos/catalog.hpp"
#include "khopos/config.hpp"
#include "khopos/homfly.hpp"
#include "khopos/khovanov.hpp"
#include "khopos/obstruct.hpp"
#include "khopos/seifert.hpp"

using namespace khopos;
using nlohmann::json;

namespace {

struct DiagramInput {
  std::string braid;
  std::string pd;
  std::string pdFile;
  std::string name;

  void add(CLI::App* app) {
    auto* g = app->add_option_group("diagram", "diagram input (exactly one)");
    g->add_option("--braid", braid, "braid word, e.g. '2: 1 1 1'");
    g->add_option("--pd", pd, "PD code text");
    g->add_option("--pd-file", pdFile, "file with PD code text");
    g->add_option("--catalog", name, "catalog entry name");
    g->require_option(1);
  }

  LinkDiagram load() const {
    if (!braid.empty()) return parse_braid(parse_braid_text(braid));
    if (!pd.empty()) return parse_pd(pd);
    if (!pdFile.empty()) return parse_pd(read_file(pdFile));
    return catalog_lookup(name).diagram();
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

struct JobInput {
  std::string ring = "Z";
  std::string format = "json";
  std::int64_t maxStates = KhOptions{}.maxStatesPerLevel;
  std::int64_t maxNonzeros = KhOptions{}.maxNonzeros;
  int workers = 0;

  void add(CLI::App* app) {
    app->add_option("--ring", ring, "Z, Q or Z/p")->capture_default_str();
    app->add_option("--format", format, "json, table or csv")->capture_default_str();
    app->add_option("--max-states", maxStates, "cube states per height")->capture_default_str();
    app->add_option("--max-nonzeros", maxNonzeros, "nonzeros per differential")->capture_default_str();
    app->add_option("--workers", workers, "parallel workers (KHOPOS_WORKERS otherwise)");
  }

  JobConfig config() const {
    JobConfig c;
    c.ring = Ring::parse(ring);
    c.format = parse_format(format);
    c.options.maxStatesPerLevel = maxStates;
    c.options.maxNonzeros = maxNonzeros;
    c.options.workers = workers > 0 ? workers : workers_from_env(1);
    c.validate();
    return c;
  }
};

json diagram_json(const LinkDiagram& d) {
  return {{"pd", to_pd_text(d)}, {"crossings", d.crossing_count()}, {"components", d.component_count()},
          {"writhe", d.writhe()}, {"nPlus", d.n_plus()}, {"nMinus", d.n_minus()}};
}

void print_table(const KhTable& t, const LinkDiagram& d, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: {
      json j = t.to_json();
      j["diagram"] = diagram_json(d);
      std::cout << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Table: std::cout << t.to_grid(); break;
    case OutputFormat::Csv: std::cout << t.to_csv(); break;
  }
}

KhTable read_table(const std::string& path) {
  try {
    return KhTable::from_json(json::parse(DiagramInput::read_file(path)));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov homology and positivity obstructions for link diagrams"};
  app.require_subcommand(1);

  DiagramInput in;
  JobInput job;

  auto* compute = app.add_subcommand("compute", "full Khovanov homology table");
  in.add(compute);
  job.add(compute);

  DiagramInput winIn;
  JobInput winJob;
  int imin = 0, imax = 0;
  auto* window = app.add_subcommand("window", "Khovanov homology on a homological window");
  winIn.add(window);
  winJob.add(window);
  window->add_option("--imin", imin)->required();
  window->add_option("--imax", imax)->required();

  DiagramInput graphIn;
  std::string graphKind = "seifert", stateText, graphFormat = "text";
  bool reduced = false;
  auto* graph = app.add_subcommand("graph", "Seifert or state graph");
  graphIn.add(graph);
  graph->add_option("--kind", graphKind, "seifert or state")->capture_default_str();
  graph->add_option("--state", stateText, "markers as a 0/1 string, one per crossing");
  graph->add_flag("--reduced", reduced, "identify parallel edges");
  graph->add_option("--format", graphFormat, "text or json")->capture_default_str();

  std::string tablePath, mirrorPath;
  DiagramInput obsIn;
  JobInput obsJob;
  bool withMirrorDiagram = false;
  auto* obstruct = app.add_subcommand("obstruct", "positivity pattern check (exit 1 when obstructed)");
  auto* obsGroup = obstruct->add_option_group("source");
  obsGroup->add_option("--table", tablePath, "table JSON");
  obsGroup->add_option("--braid", obsIn.braid);
  obsGroup->add_option("--pd", obsIn.pd);
  obsGroup->add_option("--pd-file", obsIn.pdFile);
  obsGroup->add_option("--catalog", obsIn.name);
  obsGroup->require_option(1);
  obstruct->add_option("--with-mirror", mirrorPath, "table JSON of the mirror");
  obstruct->add_flag("--mirror", withMirrorDiagram, "also check the mirror of the given diagram");
  obsJob.add(obstruct);

  std::string companion;
  CableParams cp;
  auto* cable = app.add_subcommand("cable", "twisted cable braid of a braid companion");
  cable->add_option("--companion", companion, "companion braid, e.g. '2: 1 1 1'")->required();
  cable->add_option("--p", cp.p)->required();
  cable->add_option("--q", cp.q)->required();
  cable->add_option("--m", cp.m)->capture_default_str();

  DiagramInput hfIn;
  bool ito = false;
  std::optional<int> chi, mu;
  auto* hf = app.add_subcommand("homfly", "HOMFLYPT polynomial");
  hfIn.add(hf);
  hf->add_flag("--ito", ito, "print the normalized polynomial and the braid-positivity verdict");
  hf->add_option("--chi", chi, "Euler characteristic (computed for positive diagrams)");
  hf->add_option("--mu", mu, "component count (taken from the diagram)");

  std::string catName;
  auto* cat = app.add_subcommand("catalog", "list catalog entries or show one");
  cat->add_option("name", catName);

  DiagramInput lesIn;
  JobInput lesJob;
  lesJob.ring = "Q";
  int lesCrossing = 0, lesLo = 0, lesHi = 0;
  auto* les = app.add_subcommand("les-verify", "check the skein exact triangle at a negative crossing");
  lesIn.add(les);
  lesJob.add(les);
  les->add_option("--crossing", lesCrossing, "0-based crossing index")->required();
  les->add_option("--imin", lesLo)->required();
  les->add_option("--imax", lesHi)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      const auto c = job.config();
      const auto d = in.load();
      print_table(khovanov_full(d, c.ring, c.options), d, c.format);
      return 0;
    }
    if (window->parsed()) {
      const auto c = winJob.config();
      const auto d = winIn.load();
      print_table(khovanov_window(d, imin, imax, c.ring, c.options), d, c.format);
      return 0;
    }
    if (graph->parsed()) {
      const auto d = graphIn.load();
      MultiGraph g;
      if (graphKind == "seifert") {
        g = seifert_graph(d);
      } else if (graphKind == "state") {
        State s;
        for (char ch : stateText) {
          if (ch != '0' && ch != '1') throw PreconditionError("state must be a 0/1 string");
          s.markers.push_back(ch - '0');
        }
        g = state_graph(d, s);
      } else {
        throw PreconditionError("graph kind must be seifert or state");
      }
      if (reduced) g = reduce(g);
      if (graphFormat == "json") {
        json e = json::array();
        for (const auto& [a, b] : g.sorted_edges()) e.push_back({a, b});
        json j{{"vertices", g.vertexCount}, {"edges", e}, {"components", g.component_count()}, {"cyclomatic", cyclomatic(g)}};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << g.to_text();
      }
      return 0;
    }
    if (obstruct->parsed()) {
      const auto c = obsJob.config();
      KhTable t;
      std::optional<KhTable> m;
      if (!tablePath.empty()) {
        t = read_table(tablePath);
      } else {
        const auto d = obsIn.load();
        t = khovanov_full(d, c.ring, c.options);
        if (withMirrorDiagram) m = khovanov_full(mirror(d), c.ring, c.options);
      }
      if (!mirrorPath.empty()) m = read_table(mirrorPath);
      if (m) {
        const auto r = positivity_or_negativity_check(t, *m);
        std::cout << r.to_json().dump(2) << '\n';
        return r.verdict == Verdict::Obstructed ? 1 : 0;
      }
      const auto r = positive_pattern_check(t);
      std::cout << r.to_json().dump(2) << '\n';
      return r.verdict == Verdict::Obstructed ? 1 : 0;
    }
    if (cable->parsed()) {
      const BraidWord b = parse_braid_text(companion);
      const BraidWord w = cable_braid(b, cp);
      json j{{"braid", to_braid_text(w)}, {"companionWrithe", b.exponent_sum()},
             {"n", cable_twist_count(b, cp)}, {"writhe", w.exponent_sum()}, {"crossings", w.letters.size()}};
      const LinkDiagram cd = parse_braid(b);
      if (cd.is_positive() && diagram_connected(cd)) {
        const int chiK = euler_char(cd);
        j["companionChi"] = chiK;
        j["schubertChi"] = schubert_chi(chiK, cp.p, cp.q);
        j["predictedKh1Grading"] = predicted_kh1_grading(chiK, cp);
        const auto f = cable_condition_report((1 - chiK) / 2, b.exponent_sum(), cp.p, cp.q);
        j["flags"] = {{"lspaceCompatible", f.lspaceCompatible}, {"positivityGuaranteed", f.positivityGuaranteed},
                      {"khTheoremApplies", f.khTheoremApplies}};
      }
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (hf->parsed()) {
      const auto d = hfIn.load();
      const auto p = homfly(d);
      json j{{"P", p.to_string()}};
      if (ito) {
        int c = 0;
        if (chi) {
          c = *chi;
        } else if (d.is_positive() && diagram_connected(d)) {
          c = euler_char(d);
        } else {
          throw PreconditionError("--chi is required for diagrams that are not connected and positive");
        }
        const auto h = ito_normalize(p, c, mu ? *mu : d.component_count());
        const auto v = braid_positivity_obstruction(h);
        j["chi"] = c;
        j["H"] = h.to_string();
        j["verdict"] = v == HomflyVerdict::Obstructed ? "obstructed" : "inconclusive";
        std::cout << j.dump(2) << '\n';
        return v == HomflyVerdict::Obstructed ? 1 : 0;
      }
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (cat->parsed()) {
      if (catName.empty()) {
        for (const auto& e : catalog()) std::cout << e.name << "\t" << e.presentation() << '\n';
      } else {
        const auto& e = catalog_lookup(catName);
        json j{{"name", e.name}, {"presentation", e.presentation()}, {"writhe", e.writhe}, {"note", e.note}};
        std::cout << j.dump(2) << '\n';
      }
      return 0;
    }
    if (les->parsed()) {
      const auto c = lesJob.config();
      const auto d = lesIn.load();
      const auto r = skein_les_verify(d, lesCrossing, c.ring, {lesLo, lesHi}, c.options);
      std::cout << r.to_json().dump(2) << '\n';
      return r.ok() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
