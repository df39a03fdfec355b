#include "legknot/front.hpp"
#include "legknot/moves.hpp"
#include "legknot/render.hpp"
#include "legknot/rulings.hpp"
#include "legknot/twist.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;
using namespace legknot;

namespace {

FrontDiagram load_front(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FrontError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return FrontDiagram::parse(text.str());
}

void write_out(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(path);
  if (!out) throw FrontError("cannot write '" + path + "'");
  out << data;
}

json info_report(const FrontDiagram& f) {
  return json{{"tb", tb(f)},
              {"rot", rot(f)},
              {"components", component_count(f)},
              {"cusps", f.cusps()},
              {"crossings", f.crossings()}};
}

json ruling_report(const FrontDiagram& f, int rho) {
  json rulings = json::array();
  for (const Ruling& r : enumerate_rulings(f, rho)) {
    json sw = json::array();
    for (std::size_t pos : r.switches) sw.push_back(pos);
    rulings.push_back(sw);
  }
  return json{{"rho", rho},
              {"count", count_rulings(f, rho)},
              {"rulings", rulings}};
}

std::string rot_tb_key(int r, int t) {
  return "(" + std::to_string(r) + "," + std::to_string(t) + ")";
}

json atlas_report(int m, int radius) {
  json classes = json::array();
  for (const ClassRep& rep : classes_at_max_tb(m)) {
    json c{{"word", word_text(rep.word)}, {"rot", rep.rot}};
    if (m <= -2) {
      c["z_plus"] = rep.form.z_plus;
      c["z_minus"] = rep.form.z_minus;
    }
    classes.push_back(c);
  }
  MountainRange mr = mountain_range(m, radius);
  json range = json::object();
  for (const auto& [key, count] : mr.counts)
    range[rot_tb_key(key.first, key.second)] = count;
  TransverseClassification tc = transverse_classes(m);
  json trans{{"max_sl", tc.max_sl},
             {"classes_at_max", tc.classes_at_max},
             {"simple", tc.simple}};
  if (tc.n2_edge) trans["n2_edge"] = true;
  return json{{"m", m},
              {"max_tb", max_tb(m)},
              {"classes", classes},
              {"mountain_range", range},
              {"transverse", trans}};
}

// Aligned (rot, tb) table of the mountain range, peaks marked with '*'.
std::string atlas_table(int m, int radius) {
  MountainRange mr = mountain_range(m, radius);
  int top = max_tb(m);
  std::ostringstream out;
  out << "K_" << m << "  max_tb " << top << "\n";
  out << std::setw(6) << "tb\\rot";
  for (int r = -radius; r <= radius; ++r) out << std::setw(6) << r;
  out << "\n";
  for (int t = top; t >= top - radius; --t) {
    out << std::setw(6) << t;
    for (int r = -radius; r <= radius; ++r) {
      auto it = mr.counts.find({r, t});
      std::string cell = it == mr.counts.end()
                             ? "."
                             : std::to_string(it->second);
      if (it != mr.counts.end() &&
          std::find(mr.peaks.begin(), mr.peaks.end(),
                    std::pair{r, t}) != mr.peaks.end())
        cell += "*";
      out << std::setw(6) << cell;
    }
    out << "\n";
  }
  return out.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian front diagrams of twist knots: invariants, "
               "rulings, moves, classification atlas"};
  app.require_subcommand(1);

  std::string path, word_str, out_path, rho_str = "all", format = "ascii";
  int m = 0, radius = 4, steps = 100;
  int pos_stabs = -1, neg_stabs = -1;
  std::uint64_t seed = 0;

  auto* front = app.add_subcommand("front", "front-diagram queries");
  front->require_subcommand(1);
  auto* info = front->add_subcommand("info", "invariant report");
  info->add_option("file", path, "front file")->required();
  auto* rulings = front->add_subcommand("rulings", "normal ruling report");
  rulings->add_option("file", path, "front file")->required();
  rulings->add_option("--rho", rho_str, "grading rho, or 'all'");

  auto* twist = app.add_subcommand("twist", "twist-knot atlas");
  twist->require_subcommand(1);
  auto* atlas = twist->add_subcommand("atlas", "classification atlas for K_m");
  atlas->add_option("--m", m, "twist parameter")->required();
  atlas->add_option("--radius", radius, "mountain-range radius");
  auto* tfront = twist->add_subcommand("front", "generate a maximal front");
  tfront->add_option("--m", m, "twist parameter")->required();
  tfront->add_option("--word", word_str, "letters, e.g. \"Z+ S- Z+\"");
  tfront->add_option("--out", out_path, "output front file");
  auto* tclasses = twist->add_subcommand("classes", "maximal-tb classes");
  tclasses->add_option("--m", m, "twist parameter")->required();
  tclasses->add_option("--pos", pos_stabs, "positive stabilizations");
  tclasses->add_option("--neg", neg_stabs, "negative stabilizations");

  auto* moves = app.add_subcommand("moves", "front rewrites");
  moves->require_subcommand(1);
  auto* shuffle = moves->add_subcommand("shuffle", "random isotopy-move walk");
  shuffle->add_option("file", path, "front file")->required();
  shuffle->add_option("--steps", steps, "walk length");
  shuffle->add_option("--seed", seed, "random seed");

  auto* render = app.add_subcommand("render", "draw a front");
  render->add_option("file", path, "front file")->required();
  render->add_option("--format", format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) {
      std::cout << info_report(load_front(path)).dump(2) << "\n";
    } else if (rulings->parsed()) {
      FrontDiagram f = load_front(path);
      if (rho_str == "all") {
        json out = json::array();
        for (const auto& [rho, count] : ruling_signature(f).counts)
          out.push_back(ruling_report(f, rho));
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << ruling_report(f, std::stoi(rho_str)).dump(2) << "\n";
      }
    } else if (atlas->parsed()) {
      std::cout << atlas_report(m, radius).dump(2) << "\n";
      std::cerr << atlas_table(m, radius);
    } else if (tfront->parsed()) {
      TwistWord w = parse_word(m, word_str);
      FrontDiagram f = generate_front(w);
      write_out(out_path, f.serialize() + "\n");
      if (!out_path.empty()) std::cout << info_report(f).dump(2) << "\n";
    } else if (tclasses->parsed()) {
      if (pos_stabs >= 0 || neg_stabs >= 0) {
        int p = std::max(pos_stabs, 0), q = std::max(neg_stabs, 0);
        json out{{"m", m}, {"pos", p}, {"neg", q},
                 {"count", stab_classes(m, p, q)}};
        std::cout << out.dump(2) << "\n";
      } else {
        json classes = json::array();
        for (const ClassRep& rep : classes_at_max_tb(m)) {
          json c{{"word", word_text(rep.word)}, {"rot", rep.rot}};
          if (m <= -2) {
            c["z_plus"] = rep.form.z_plus;
            c["z_minus"] = rep.form.z_minus;
          }
          classes.push_back(c);
        }
        json out{{"m", m}, {"max_tb", max_tb(m)},
                 {"count", classes.size()}, {"classes", classes}};
        std::cout << out.dump(2) << "\n";
      }
    } else if (shuffle->parsed()) {
      FrontDiagram f = load_front(path);
      FrontDiagram g = random_move_walk(f, steps, seed);
      json out{{"steps", steps}, {"seed", seed},
               {"front", g.serialize()}, {"tb", tb(g)}, {"rot", rot(g)}};
      std::cout << out.dump(2) << "\n";
    } else if (render->parsed()) {
      FrontDiagram f = load_front(path);
      write_out(out_path, format == "svg" ? render_svg(f) : render_ascii(f));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
