#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gitstab/jobs.hpp"

using gitstab::cli::Command;
using gitstab::cli::JobSpec;

int main(int argc, char** argv) {
  CLI::App app{"exact torus-(semi)stability toolkit: states, state polytopes, "
               "Hilbert-Mumford indices, and worst one-parameter subgroups"};
  app.require_subcommand(1);

  JobSpec job;
  std::string mode = "SL";
  std::string format = "json";
  std::string f_text, input_path, output_path, svg_path, svg_coords, points, rho, gs_file;
  std::vector<std::string> ideal_gens;
  std::uint64_t budget = 0;

  auto wire_common = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode)->check(CLI::IsMember({"SL", "GL"}));
    cmd->add_option("--n", job.n);
    cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", output_path);
    cmd->add_option("--budget", budget);
    cmd->add_option("--threads", job.threads);
  };
  auto wire_sampler = [&](CLI::App* cmd) {
    cmd->add_option("--trials", job.sampler.trials);
    cmd->add_option("--entry-bound", job.sampler.entry_bound);
    cmd->add_option("--stall", job.sampler.stall);
    cmd->add_option("--seed", job.sampler.seed);
  };
  auto wire_form = [&](CLI::App* cmd) {
    cmd->add_option("--f", f_text, "inline polynomial, e.g. \"x0*x2 - x1^2\"");
    cmd->add_option("--input", input_path, "file holding the polynomial text");
  };
  auto wire_ideal = [&](CLI::App* cmd) {
    cmd->add_option("--ideal", ideal_gens, "ideal generator (repeat or separate with ';')");
    cmd->add_option("--m", job.degree_m, "degree of the Hilbert point");
  };
  auto wire_svg = [&](CLI::App* cmd) {
    cmd->add_option("--svg", svg_path);
    cmd->add_option("--svg-coords", svg_coords);
  };

  CLI::App* c_state = app.add_subcommand("state", "state of a homogeneous form");
  wire_common(c_state), wire_form(c_state), wire_svg(c_state);

  CLI::App* c_hm = app.add_subcommand("hm-index", "Hilbert-Mumford index of a form at a 1-PS");
  wire_common(c_hm), wire_form(c_hm);
  c_hm->add_option("--rho", rho, "integer cocharacter, e.g. \"2,-1,-1\"");

  CLI::App* c_near = app.add_subcommand("nearest", "nearest point of a polytope to the origin");
  wire_common(c_near), wire_svg(c_near);
  c_near->add_option("--points", points, "point list, e.g. \"[(1,0),(0,1)]\"");

  CLI::App* c_worst = app.add_subcommand("worst", "worst 1-PS over explored tori");
  wire_common(c_worst), wire_form(c_worst), wire_ideal(c_worst), wire_svg(c_worst);
  wire_sampler(c_worst);
  c_worst->add_option("--samples", job.samples, "also explore this many sampled tori");
  c_worst->add_option("--gs-file", gs_file, "JSON file with group elements to explore");

  CLI::App* c_destab = app.add_subcommand("destab", "destabilizing cone generators");
  wire_common(c_destab), wire_form(c_destab), wire_ideal(c_destab);

  CLI::App* c_gen = app.add_subcommand("generic-state", "sampled generic state with certificate");
  wire_common(c_gen), wire_form(c_gen), wire_ideal(c_gen), wire_svg(c_gen), wire_sampler(c_gen);

  CLI::App* c_cert = app.add_subcommand("certify", "generic semistability / stability verdicts");
  wire_common(c_cert), wire_form(c_cert), wire_ideal(c_cert), wire_sampler(c_cert);

  CLI::App* c_strat = app.add_subcommand("stratify", "bucket group elements by state");
  wire_common(c_strat), wire_form(c_strat), wire_ideal(c_strat), wire_sampler(c_strat);
  c_strat->add_flag("--permutations", job.use_permutations, "use all permutation matrices");
  c_strat->add_option("--samples", job.samples, "bucket this many sampled group elements");
  c_strat->add_option("--gs-file", gs_file, "JSON file with group elements to bucket");

  CLI::App* c_hilb = app.add_subcommand("hilbert-state", "state of the degree-m Hilbert point");
  wire_common(c_hilb), wire_ideal(c_hilb), wire_svg(c_hilb);
  c_hilb->add_option("--input", input_path, "file holding ';'-separated generators");
  std::string vertex_at;
  c_hilb->add_option("--vertex-at", vertex_at,
                     "query the state-polytope vertex at this weight instead of enumerating");

  CLI11_PARSE(app, argc, argv);

  if (c_state->parsed()) job.command = Command::State;
  else if (c_hm->parsed()) job.command = Command::HmIndex;
  else if (c_near->parsed()) job.command = Command::Nearest;
  else if (c_worst->parsed()) job.command = Command::Worst;
  else if (c_destab->parsed()) job.command = Command::Destab;
  else if (c_gen->parsed()) job.command = Command::GenericState;
  else if (c_cert->parsed()) job.command = Command::Certify;
  else if (c_strat->parsed()) job.command = Command::Stratify;
  else job.command = Command::HilbertState;

  job.mode = mode == "GL" ? gitstab::gitcore::Mode::GL : gitstab::gitcore::Mode::SL;
  job.format = format == "csv" ? gitstab::cli::OutputFormat::Csv : gitstab::cli::OutputFormat::Json;
  if (!f_text.empty()) job.polynomial = f_text;
  if (!input_path.empty()) job.input_path = input_path;
  if (!points.empty()) job.points_text = points;
  if (!rho.empty()) job.rho_text = rho;
  if (!vertex_at.empty()) job.vertex_weight_text = vertex_at;
  if (!gs_file.empty()) job.gs_file = gs_file;
  if (!svg_path.empty()) job.svg_path = svg_path;
  if (budget > 0) job.budget_override = budget;
  job.ideal_generators = ideal_gens;
  if (!svg_coords.empty()) {
    int a = 0, b = 1;
    if (std::sscanf(svg_coords.c_str(), "%d,%d", &a, &b) != 2) {
      std::cerr << "--svg-coords expects \"i,j\"\n";
      return 1;
    }
    job.svg_coords = std::make_pair(a, b);
  }

  gitstab::cli::JobResult result = gitstab::cli::run(job);
  if (!output_path.empty()) {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "cannot write " << output_path << "\n";
      return 1;
    }
    out << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}
