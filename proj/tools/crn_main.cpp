#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "crn/dynamics.hpp"
#include "crn/parser.hpp"
#include "crn/tdi.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitParse = 64;
constexpr int kExitPrecondition = 65;

struct Options {
  std::string input;
  double epsilon = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t seed = 0;
  int samples = 1000;
  std::string format = "json";
  std::string output;
  std::vector<double> deltas;
  double t_end = 10;
  double rtol = 1e-8;
  std::vector<double> x0;
  std::vector<double> rates;
};

crn::NetworkDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw crn::ParseError(0, 0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return crn::parse_document(ss.str());
}

double resolve_epsilon(const Options& opt, const crn::NetworkDocument& doc) {
  if (!std::isnan(opt.epsilon)) return opt.epsilon;
  if (doc.epsilon) return *doc.epsilon;
  return 0.5;
}

json rational_vector(const crn::RatVec& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(crn::rat_to_string(c));
  return arr;
}

void emit(const Options& opt, const json& j, const std::vector<std::string>& text_lines) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!opt.output.empty()) {
    file.open(opt.output);
    if (!file) throw std::runtime_error("cannot write " + opt.output);
    os = &file;
  }
  if (opt.format == "text") {
    for (const auto& line : text_lines) *os << line << "\n";
  } else {
    *os << j.dump(2) << "\n";
  }
}

int cmd_check(const Options& opt) {
  crn::NetworkDocument doc = load(opt.input);
  const crn::EGraph& g = doc.graph;
  crn::EndotacticResult res = crn::is_endotactic(g);
  json j;
  j["reversible"] = g.is_reversible();
  j["weakly_reversible"] = g.is_weakly_reversible();
  j["endotactic"] = res.endotactic;
  std::vector<std::string> lines{
      "reversible: " + std::string(g.is_reversible() ? "true" : "false"),
      "weakly_reversible: " + std::string(g.is_weakly_reversible() ? "true" : "false"),
      "endotactic: " + std::string(res.endotactic ? "true" : "false")};
  if (!res.endotactic) {
    j["witness_direction"] = rational_vector(res.witness);
    j["violating_edge"] = res.violating_edge;
    std::string w = "witness:";
    for (const auto& c : res.witness) w += " " + crn::rat_to_string(c);
    lines.push_back(w);
    lines.push_back("violating_edge: " + std::to_string(res.violating_edge));
  }
  emit(opt, j, lines);
  return kExitOk;
}

int cmd_fan(const Options& opt) {
  crn::NetworkDocument doc = load(opt.input);
  const crn::EGraph& g = doc.graph;
  crn::Fan fan = crn::build_fan(g.dimension(), g.source_vertices());
  json j;
  j["dim_J"] = fan.span.dim();
  j["chamber_count"] = static_cast<int>(fan.chambers.size());
  json normals = json::array();
  for (const auto& n : fan.normals) normals.push_back(rational_vector(n));
  j["normals"] = normals;
  std::vector<std::string> lines{"dim_J: " + std::to_string(fan.span.dim()),
                                 "chambers: " + std::to_string(fan.chambers.size()),
                                 "normals: " + std::to_string(fan.normals.size())};
  if (fan.span.dim() >= 1) {
    json rays = json::array();
    std::vector<crn::RatVec> ray_list = crn::fan_rays(fan);
    for (const auto& r : ray_list) rays.push_back(rational_vector(r));
    j["rays"] = rays;
    lines.push_back("rays: " + std::to_string(ray_list.size()));
  } else {
    j["rays"] = json::array();
    lines.push_back("rays: 0");
  }
  emit(opt, j, lines);
  return kExitOk;
}

int cmd_embed(const Options& opt) {
  crn::NetworkDocument doc = load(opt.input);
  double eps = resolve_epsilon(opt, doc);
  crn::TdiParams p = crn::embedding_parameters(doc.graph, eps);
  json j;
  j["epsilon"] = eps;
  j["K0"] = p.k0;
  j["delta"] = p.delta;
  j["ray_count"] = static_cast<int>(p.rays.size());
  j["chamber_count"] = static_cast<int>(p.fan.chambers.size());
  emit(opt, j,
       {"epsilon: " + std::to_string(eps), "K0: " + std::to_string(p.k0),
        "delta: " + std::to_string(p.delta), "rays: " + std::to_string(p.rays.size())});
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  crn::NetworkDocument doc = load(opt.input);
  double eps = resolve_epsilon(opt, doc);
  crn::VerificationReport rep = crn::verify_embedding(doc.graph, eps, opt.samples, opt.seed);
  json j;
  j["n_samples"] = rep.n_samples;
  j["n_violations"] = rep.n_violations;
  j["max_violation"] = rep.max_violation;
  j["seed"] = rep.seed;
  j["delta"] = rep.delta;
  j["K0"] = rep.k0;
  j["epsilon"] = rep.epsilon;
  emit(opt, j,
       {"samples: " + std::to_string(rep.n_samples),
        "violations: " + std::to_string(rep.n_violations),
        "max_violation: " + std::to_string(rep.max_violation)});
  return rep.n_violations == 0 ? kExitOk : kExitViolation;
}

int cmd_refute(const Options& opt) {
  crn::NetworkDocument doc = load(opt.input);
  const crn::EGraph& g = doc.graph;
  std::vector<double> deltas = opt.deltas.empty() ? std::vector<double>{1.0} : opt.deltas;
  crn::Fan own = crn::build_fan(g.dimension(), g.source_vertices());
  std::vector<crn::TargetFan> targets;
  for (double d : deltas) targets.push_back({own, d});
  crn::Counterexample cex = crn::refute_embedding(g, targets);
  json j;
  j["w_prime"] = rational_vector(cex.w_prime);
  j["epsilon"] = cex.epsilon;
  j["rates"] = cex.rates;
  j["distinguished_edge"] = cex.distinguished_edge;
  j["lambda"] = cex.lambda;
  j["X0"] = cex.x0;
  j["drift"] = cex.drift_dir;
  json tg = json::array();
  for (size_t i = 0; i < targets.size(); ++i) {
    json t;
    t["delta"] = targets[i].delta;
    t["violation"] = cex.violations[i];
    tg.push_back(t);
  }
  j["targets"] = tg;
  std::vector<std::string> lines{"epsilon: " + std::to_string(cex.epsilon),
                                 "lambda: " + std::to_string(cex.lambda),
                                 "targets_violated: " + std::to_string(targets.size())};
  emit(opt, j, lines);
  return kExitOk;
}

int cmd_simulate(const Options& opt) {
  crn::NetworkDocument doc = load(opt.input);
  const crn::EGraph& g = doc.graph;
  std::vector<double> rates = opt.rates;
  if (rates.empty()) rates.assign(g.edge_count(), 1.0);
  if (rates.size() == 1 && g.edge_count() > 1) rates.assign(g.edge_count(), rates[0]);
  std::vector<double> x0 = opt.x0;
  if (x0.empty()) x0.assign(g.dimension(), 1.0);
  if (x0.size() == 1 && g.dimension() > 1) x0.assign(g.dimension(), x0[0]);
  crn::Trajectory traj =
      crn::integrate(g, crn::constant_schedule(g, rates), x0, opt.t_end, opt.rtol);
  if (!opt.output.empty()) {
    std::ofstream csv(opt.output);
    if (!csv) throw std::runtime_error("cannot write " + opt.output);
    crn::write_csv(csv, traj);
  }
  crn::PersistenceReport rep = crn::persistence_report(traj, g);
  json j;
  j["status"] = traj.status == crn::IntegrationStatus::Ok ? "ok" : "step_underflow";
  j["t_end"] = traj.times.back();
  j["species_min"] = rep.species_min;
  j["min_overall"] = rep.min_overall;
  j["max_class_residual"] = rep.max_class_residual;
  j["flagged_species"] = rep.flagged;
  j["final_state"] = traj.states.back();
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reaction-graph endotacticity, toric differential inclusions, and dynamics"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--epsilon", opt.epsilon, "Rate bound parameter in (0,1]; file epsilon, then 0.5, used when omitted");
  app.add_option("--seed", opt.seed, "RNG seed for sampling");
  app.add_option("--samples", opt.samples, "Sample count for verification");
  app.add_option("--format", opt.format, "Report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", opt.output, "Write the report (or CSV for simulate) to this file");

  CLI::App* c_check = app.add_subcommand("check", "Classify a network file");
  CLI::App* c_fan = app.add_subcommand("fan", "Fan of the source differences");
  CLI::App* c_embed = app.add_subcommand("embed", "Embedding constants K0 and delta");
  CLI::App* c_verify = app.add_subcommand("verify", "Sampled membership check of the embedding");
  CLI::App* c_refute = app.add_subcommand("refute", "Counterexample for a non-endotactic network");
  CLI::App* c_sim = app.add_subcommand("simulate", "Integrate constant-rate dynamics");
  for (CLI::App* sub : {c_check, c_fan, c_embed, c_verify, c_refute, c_sim}) {
    sub->add_option("input", opt.input, "Network file (.crn)")->required();
    sub->fallthrough();  // global flags may also follow the subcommand
  }
  c_refute->add_option("--delta", opt.deltas, "Target delta (repeatable; default 1.0)");
  c_sim->add_option("--t-end", opt.t_end, "Integration horizon");
  c_sim->add_option("--rtol", opt.rtol, "Relative tolerance");
  c_sim->add_option("--x0", opt.x0, "Initial state (list, or one value for all species)");
  c_sim->add_option("--rates", opt.rates, "Constant rates (list, or one value for all edges)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_check) return cmd_check(opt);
    if (*c_fan) return cmd_fan(opt);
    if (*c_embed) return cmd_embed(opt);
    if (*c_verify) return cmd_verify(opt);
    if (*c_refute) return cmd_refute(opt);
    if (*c_sim) return cmd_simulate(opt);
  } catch (const crn::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const crn::NotEndotactic& e) {
    json j;
    j["error"] = "not_endotactic";
    j["witness_direction"] = rational_vector(e.witness);
    std::cerr << j.dump(2) << "\n";
    return kExitPrecondition;
  } catch (const crn::IsEndotactic&) {
    std::cerr << "{\n  \"error\": \"endotactic\"\n}\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
