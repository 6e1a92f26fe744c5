#include "fraclab_cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "fraclab/errors.hpp"

namespace fraclab::cli {

std::vector<double> parse_orders(const std::string& text) {
  std::vector<double> out;
  auto num = [&](const std::string& t) {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw DomainError("bad number '" + t + "' in order list");
    return v;
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw DomainError("order range must be a:step:b");
    const double a = num(parts[0]);
    const double h = num(parts[1]);
    const double b = num(parts[2]);
    if (!(h > 0.0) || b < a) throw DomainError("order range needs step > 0 and b >= a");
    const auto n = static_cast<long>(std::floor((b - a) / h + 1e-9));
    for (long k = 0; k <= n; ++k) out.push_back(k == n && std::fabs(a + k * h - b) < 1e-9 * h ? b : a + k * h);
    return out;
  }
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(num(p));
  if (out.empty()) throw DomainError("empty order list");
  return out;
}

namespace {

struct Global {
  std::string emit;
  std::string out_path;
  bool timing = false;
};

void add_globals(CLI::App& app, Options& o, Global& g) {
  app.add_option("--rel-tol", o.cfg.rel_tol, "relative tolerance");
  app.add_option("--abs-tol", o.cfg.abs_tol, "absolute tolerance");
  app.add_option("--mc-samples", o.cfg.mc_samples, "Monte Carlo sample budget");
  app.add_option("--seed", o.cfg.seed, "Monte Carlo seed");
  app.add_option("--emit", g.emit, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out_path, "output file (default stdout)");
  app.add_flag("--timing", g.timing, "print wall time to stderr");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Fractional Poisson problem laboratory", "fraclab"};
  app.require_subcommand(1, 1);
  Options o;
  Global g;
  add_globals(app, o, g);

  auto* constants = app.add_subcommand("constants", "normalization constants");
  constants->add_option("--dim", o.dim);
  constants->add_option("--order", o.order);

  auto* eval = app.add_subcommand("eval", "operators at points");
  eval->add_option("--op", o.op)
      ->required()
      ->check(CLI::IsMember({"fraclap", "loglap", "homega", "homega-mc", "ws", "interchange",
                             "green", "ell", "comp"}));
  eval->add_option("--domain", o.domain);
  eval->add_option("--dim", o.dim);
  eval->add_option("--order", o.order);
  eval->add_option("--field", o.field)->check(CLI::IsMember({"one", "torsion", "bump"}));
  eval->add_option("--field-order", o.field_order);
  eval->add_option("--points", o.points)->required();

  auto* kernels = app.add_subcommand("kernels", "Green and Poisson kernels of a ball");
  kernels->add_option("--which", o.which)
      ->check(CLI::IsMember({"green", "poisson", "comp", "mass"}));
  kernels->add_option("--domain", o.domain);
  kernels->add_option("--dim", o.dim);
  kernels->add_option("--order", o.order);
  kernels->add_option("--x", o.x)->required();
  kernels->add_option("--z", o.z);

  auto* torsion = app.add_subcommand("torsion", "closed-form torsion family");
  torsion->add_option("--dim", o.dim);
  torsion->add_option("--orders", o.orders)->required();
  torsion->add_option("--at", o.at);
  torsion->add_option("--domain", o.domain);

  auto* derivative = app.add_subcommand("derivative", "v_s = d/ds u_s on a radial grid");
  derivative->add_option("--dim", o.dim);
  derivative->add_option("--order", o.order);
  derivative->add_option("--domain", o.domain);
  derivative->add_option("--fd", o.fd);
  derivative->add_option("--compare", o.compare)->check(CLI::IsMember({"closedform"}));
  derivative->add_option("--grid", o.grid);
  derivative->add_option("--min-delta", o.min_delta);
  derivative->add_option("--variant", o.variant)
      ->check(CLI::IsMember({"minus", "plus"}));

  auto* transition = app.add_subcommand("transition", "first-order expansion at s = 1");
  transition->add_option("--dim", o.dim);
  transition->add_option("--orders", o.orders)->required();
  transition->add_option("--domain", o.domain);
  transition->add_option("--grid", o.grid);
  transition->add_option("--min-delta", o.min_delta);

  auto* bounds = app.add_subcommand("bounds", "Green operator norm bounds");
  bounds->add_option("--dim", o.dim);
  bounds->add_option("--orders", o.orders)->required();
  bounds->add_option("--domain", o.domain);
  bounds->add_option("--tau-nodes", o.tau_nodes);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageOrDomain;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::string name = app.get_subcommands().front()->get_name();
  Report rep;
  try {
    o.cfg.validate();
    if (name == "constants") rep = run_constants(o);
    if (name == "eval") rep = run_eval(o, in);
    if (name == "kernels") rep = run_kernels(o);
    if (name == "torsion") rep = run_torsion(o);
    if (name == "derivative") rep = run_derivative(o);
    if (name == "transition") rep = run_transition(o);
    if (name == "bounds") rep = run_bounds(o);
  } catch (const fraclab::Error& e) {
    err << "fraclab " << name << ": " << e.what() << '\n';
    return kUsageOrDomain;
  } catch (const std::exception& e) {
    err << "fraclab " << name << ": " << e.what() << '\n';
    return kUsageOrDomain;
  }
  rep.command = name;
  rep.config = Json{{"rel_tol", o.cfg.rel_tol},
                    {"abs_tol", o.cfg.abs_tol},
                    {"mc_samples", o.cfg.mc_samples},
                    {"seed", o.cfg.seed},
                    {"argv", args}};

  Format fmt = (name == "constants" || name == "derivative" || name == "transition")
                   ? Format::kJson
                   : Format::kCsv;
  if (!g.emit.empty()) fmt = g.emit == "json" ? Format::kJson : Format::kCsv;

  if (g.out_path.empty()) {
    emit(rep, fmt, out);
  } else {
    std::ofstream file(g.out_path, std::ios::binary);
    if (file) emit(rep, fmt, file);
    if (!file) {
      err << "fraclab: cannot write " << g.out_path << '\n';
      return kUsageOrDomain;
    }
  }
  if (g.timing) {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    err << "wall_time_s=" << secs << '\n';
  }
  if (rep.flagged) {
    err << "fraclab " << name << ": some results did not reach the requested tolerance\n";
    return kToleranceFailure;
  }
  return kOk;
}

}  // namespace fraclab::cli
