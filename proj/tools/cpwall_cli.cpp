// Command-line front end. Links only against the C interface.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "cpwall/cpwall.h"
#include "json.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNonConvergence = 3;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) { throw Failure{code, msg}; }

void check(cpw_status s) {
  if (s == CPW_OK) return;
  int code = s == CPW_NONCONVERGENCE ? kExitNonConvergence : kExitInvalid;
  if (s == CPW_INTERNAL_ERROR) code = 1;
  fail(code, std::string(cpw_status_string(s)) + ": " + cpw_last_error());
}

double parse_number(const std::string& flag, const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), ::tolower);
  if (t == "inf" || t == "infinity") return INFINITY;
  try {
    size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(kExitInvalid, "invalid number '" + text + "' for " + flag);
  }
}

std::vector<double> parse_list(const std::string& flag, const std::string& text, size_t n) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(flag, item));
  if (out.size() != n)
    fail(kExitInvalid, flag + " expects " + std::to_string(n) + " comma-separated values");
  return out;
}

// --- output -----------------------------------------------------------------

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  if (std::holds_alternative<double>(c)) return format_number(std::get<double>(c));
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return "";
}

nlohmann::ordered_json json_cell(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    double v = std::get<double>(c);
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
  }
  if (std::holds_alternative<long long>(c)) return std::get<long long>(c);
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return nullptr;
}

std::string render(const Table& t, const std::string& format) {
  std::string out;
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
      nlohmann::ordered_json o = nlohmann::ordered_json::object();
      for (size_t i = 0; i < t.columns.size(); ++i) o[t.columns[i]] = json_cell(r[i]);
      arr.push_back(std::move(o));
    }
    out = arr.dump(2) + "\n";
  } else {
    for (size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
    out += "\n";
    for (const auto& r : t.rows) {
      for (size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + csv_cell(r[i]);
      out += "\n";
    }
  }
  return out;
}

// --- options ----------------------------------------------------------------

struct Options {
  std::optional<std::string> omega0, alpha, isotropic;
  std::optional<std::string> temp, theta, z, zeta, z_range, zeta_range;
  long long count = 0;
  std::string spacing = "lin";
  std::string state;
  std::string units = "reduced";
  double tol = 1e-8;
  std::string format = "csv";
  std::string output;
  int threads = 0;
  double threshold = 10;
  int points_per_period = 64;
  double root_tol = 1e-10;
};

struct AtomHandle {
  cpw_atom* p = nullptr;
  ~AtomHandle() { cpw_atom_destroy(p); }
};

struct Context {
  Options o;
  AtomHandle atom;
  bool have_omega0 = false;
  double omega0 = 1;
  double ax = 0, ay = 0, az = 0;
};

// classify and kernels take no polarizability; a unit placeholder then only
// carries omega0 for distance and temperature conversions
void build_atom(Context& ctx, bool needs_alpha) {
  const Options& o = ctx.o;
  if (o.omega0) {
    ctx.omega0 = parse_number("--omega0", *o.omega0);
    ctx.have_omega0 = true;
  }
  if (o.alpha && o.isotropic)
    fail(kExitInvalid, "give either --alpha or --isotropic, not both");
  if (!o.alpha && !o.isotropic && !needs_alpha) {
    check(cpw_atom_create_isotropic(ctx.omega0, 1.0, &ctx.atom.p));
    return;
  }
  if (!o.alpha && !o.isotropic)
    fail(kExitInvalid,
         "missing polarizability: give --alpha AX,AY,AZ or --isotropic ALPHA0");
  if (o.alpha) {
    auto a = parse_list("--alpha", *o.alpha, 3);
    ctx.ax = a[0];
    ctx.ay = a[1];
    ctx.az = a[2];
    check(cpw_atom_create(ctx.omega0, a[0], a[1], a[2], &ctx.atom.p));
  } else {
    double a0 = parse_number("--isotropic", *o.isotropic);
    check(cpw_atom_create_isotropic(ctx.omega0, a0, &ctx.atom.p));
    ctx.ax = ctx.ay = ctx.az = a0 / 3;
  }
}

void need_omega0(const Context& ctx, const char* why) {
  if (!ctx.have_omega0) fail(kExitInvalid, std::string("--omega0 is required ") + why);
}

double theta_of(const Context& ctx) {
  const Options& o = ctx.o;
  if (o.temp && o.theta) fail(kExitInvalid, "give either --temp or --theta, not both");
  if (o.theta) return parse_number("--theta", *o.theta);
  if (o.temp) {
    need_omega0(ctx, "with --temp");
    double T = parse_number("--temp", *o.temp), zeta, theta;
    check(cpw_to_reduced(ctx.atom.p, T, 1.0, &zeta, &theta));
    return theta;
  }
  fail(kExitInvalid, "missing temperature: give --temp KELVIN or --theta VALUE");
}

double zeta_of_distance(const Context& ctx, double z) {
  need_omega0(ctx, "with distances in meters");
  double zeta, theta;
  check(cpw_to_reduced(ctx.atom.p, 0.0, z, &zeta, &theta));
  return zeta;
}

std::vector<double> grid(const Context& ctx, bool allow_single) {
  const Options& o = ctx.o;
  int given = !!o.z + !!o.zeta + !!o.z_range + !!o.zeta_range;
  if (given != 1)
    fail(kExitInvalid,
         "give exactly one of --z, --zeta, --z-range, --zeta-range");
  if (o.z) {
    if (!allow_single) fail(kExitInvalid, "this command needs --z-range or --zeta-range");
    return {zeta_of_distance(ctx, parse_number("--z", *o.z))};
  }
  if (o.zeta) {
    if (!allow_single) fail(kExitInvalid, "this command needs --z-range or --zeta-range");
    return {parse_number("--zeta", *o.zeta)};
  }
  bool meters = bool(o.z_range);
  const char* flag = meters ? "--z-range" : "--zeta-range";
  auto r = parse_list(flag, meters ? *o.z_range : *o.zeta_range, 2);
  if (meters) {
    r[0] = zeta_of_distance(ctx, r[0]);
    r[1] = zeta_of_distance(ctx, r[1]);
  }
  double lo = std::min(r[0], r[1]), hi = std::max(r[0], r[1]);
  if (!(lo > 0) || !std::isfinite(hi)) fail(kExitInvalid, std::string(flag) + " must be positive");
  if (o.count < 1) fail(kExitInvalid, "--count must be >= 1 with a range");
  if (o.spacing != "lin" && o.spacing != "log")
    fail(kExitInvalid, "--spacing must be lin or log");
  std::vector<double> out;
  for (long long i = 0; i < o.count; ++i) {
    double t = o.count == 1 ? 0.0 : double(i) / double(o.count - 1);
    if (o.spacing == "log")
      out.push_back(lo * std::pow(hi / lo, t));
    else
      out.push_back(lo + t * (hi - lo));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<cpw_state> states(const Context& ctx, const std::string& fallback) {
  std::string s = ctx.o.state.empty() ? fallback : ctx.o.state;
  if (s == "ground") return {CPW_GROUND};
  if (s == "excited") return {CPW_EXCITED};
  if (s == "average") return {CPW_AVERAGE};
  if (s == "all") return {CPW_GROUND, CPW_EXCITED, CPW_AVERAGE};
  fail(kExitInvalid, "--state must be ground, excited, average or all");
}

const char* state_name(cpw_state s) {
  switch (s) {
    case CPW_GROUND: return "ground";
    case CPW_EXCITED: return "excited";
    default: return "average";
  }
}

const char* direction_name(cpw_direction d) {
  switch (d) {
    case CPW_ATTRACTIVE: return "attractive";
    case CPW_REPULSIVE: return "repulsive";
    default: return "null";
  }
}

bool si_units(Context& ctx) {
  if (ctx.o.units == "reduced") return false;
  if (ctx.o.units != "si") fail(kExitInvalid, "--units must be reduced or si");
  need_omega0(ctx, "with --units si");
  std::cerr << "note: SI values use the polarizability convention "
               "(alpha enters through 3 hbar omega0^4 alpha0 / (128 pi eps0 c^3)); "
               "absolute magnitudes are convention dependent\n";
  return true;
}

std::string regime(double zeta, double theta, double threshold) {
  cpw_regime r;
  check(cpw_classify(zeta, theta, threshold, &r));
  return r.label;
}

// evaluate fn(i) for i in [0, n) on worker threads; results land by index
template <class T, class F>
std::vector<T> parallel_map(size_t n, int threads, F fn) {
  std::vector<T> out(n);
  std::vector<std::optional<Failure>> errs(n);
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  size_t nt = threads > 0 ? size_t(threads) : hw;
  nt = std::max<size_t>(1, std::min(nt, n));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        out[i] = fn(i);
      } catch (const Failure& f) {
        errs[i] = f;
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t t = 1; t < nt; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) throw *e;  // first failing index, deterministic
  return out;
}

// --- commands ---------------------------------------------------------------

Table cmd_shift_like(Context& ctx, bool sweep) {
  double theta = theta_of(ctx);
  auto zs = grid(ctx, true);
  auto sts = states(ctx, sweep ? "all" : "ground");
  bool si = si_units(ctx);
  double unit = 1;
  if (si) check(cpw_energy_unit(ctx.atom.p, &unit));

  auto all = parallel_map<std::array<cpw_shift_value, 3>>(zs.size(), ctx.o.threads, [&](size_t i) {
    std::array<cpw_shift_value, 3> r;
    check(cpw_shift_all(ctx.atom.p, zs[i], theta, ctx.o.tol, r.data()));
    return r;
  });

  Table t;
  t.columns = {"zeta", "theta", "state", "tf", "rr", "total", "err", "regime"};
  if (!sweep) {
    for (const char* c : {"units", "omega0", "alpha_x", "alpha_y", "alpha_z", "temperature",
                          "distance"})
      t.columns.push_back(c);
  }
  for (size_t i = 0; i < zs.size(); ++i) {
    std::string reg = regime(zs[i], theta, ctx.o.threshold);
    for (cpw_state s : sts) {
      const cpw_shift_value& b = all[i][s];
      double tf = b.tf * unit, rr = b.rr * unit;
      std::vector<Cell> row{zs[i], theta, std::string(state_name(s)), tf, rr, tf + rr,
                            b.error_estimate * unit, reg};
      if (!sweep) {
        row.push_back(std::string(si ? "si" : "reduced"));
        if (ctx.have_omega0) {
          double T, z;
          check(cpw_to_physical(ctx.atom.p, zs[i], theta, &T, &z));
          row.insert(row.end(), {ctx.omega0, ctx.ax, ctx.ay, ctx.az, T, z});
        } else {
          row.insert(row.end(), {Cell{}, ctx.ax, ctx.ay, ctx.az, Cell{}, Cell{}});
        }
      }
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table cmd_classify(Context& ctx) {
  double theta = theta_of(ctx);
  auto zs = grid(ctx, true);
  Table t;
  t.columns = {"zeta", "theta", "temperature_limit", "distance_regime", "regime",
               "zeta_over_theta", "threshold"};
  static const char* tl[] = {"low", "high", "crossover"};
  static const char* dr[] = {"short", "intermediate", "long", "crossover"};
  for (double z : zs) {
    cpw_regime r;
    check(cpw_classify(z, theta, ctx.o.threshold, &r));
    t.rows.push_back({z, theta, std::string(tl[r.temperature]),
                      std::string(r.temperature == 2 ? "crossover" : dr[r.distance]),
                      std::string(r.label), r.zeta_over_theta, r.threshold});
  }
  return t;
}

Table cmd_kernels(Context& ctx) {
  double theta = theta_of(ctx);
  auto zs = grid(ctx, true);
  double tol = ctx.o.tol;
  auto vals = parallel_map<std::array<cpw_kernel_value, 2>>(
      zs.size(), ctx.o.threads, [&](size_t i) {
        std::array<cpw_kernel_value, 2> r;
        check(cpw_kernel(CPW_PARALLEL, zs[i], theta, tol, &r[0]));
        check(cpw_kernel(CPW_PERPENDICULAR, zs[i], theta, tol, &r[1]));
        return r;
      });
  Table t;
  t.columns = {"zeta",     "theta",  "axis",   "f_hat",  "df_dzeta",   "g_hat",
               "dg_dzeta", "g_err",  "dg_err", "images", "evaluations"};
  for (size_t i = 0; i < zs.size(); ++i)
    for (int a = 0; a < 2; ++a) {
      const auto& k = vals[i][a];
      t.rows.push_back({zs[i], theta, std::string(a == 0 ? "parallel" : "perpendicular"),
                        k.f_hat, k.df_dzeta, k.g_hat, k.dg_dzeta, k.g_error, k.dg_error,
                        (long long)k.images, (long long)k.evaluations});
    }
  return t;
}

Table cmd_force(Context& ctx) {
  double theta = theta_of(ctx);
  auto zs = grid(ctx, true);
  auto sts = states(ctx, "ground");
  bool si = si_units(ctx);
  double unit = 1;
  if (si) check(cpw_force_unit(ctx.atom.p, &unit));
  struct Item {
    double z;
    cpw_state s;
  };
  std::vector<Item> items;
  for (double z : zs)
    for (cpw_state s : sts) items.push_back({z, s});
  auto vals = parallel_map<cpw_force_value>(items.size(), ctx.o.threads, [&](size_t i) {
    cpw_force_value f;
    check(cpw_force_reduced(ctx.atom.p, items[i].s, items[i].z, theta, ctx.o.tol, &f));
    return f;
  });
  Table t;
  t.columns = {"zeta", "theta", "state", "force", "tf", "rr", "err", "direction", "regime"};
  for (size_t i = 0; i < items.size(); ++i) {
    const auto& f = vals[i];
    t.rows.push_back({items[i].z, theta, std::string(state_name(items[i].s)), f.value * unit,
                      f.tf * unit, f.rr * unit, f.error_estimate * unit,
                      std::string(direction_name(f.direction)),
                      regime(items[i].z, theta, ctx.o.threshold)});
  }
  return t;
}

Table cmd_zeros(Context& ctx) {
  double theta = theta_of(ctx);
  const Options& o = ctx.o;
  if (!o.z_range && !o.zeta_range)
    fail(kExitInvalid, "force zeros needs --z-range or --zeta-range");
  bool meters = bool(o.z_range);
  auto r = parse_list(meters ? "--z-range" : "--zeta-range", meters ? *o.z_range : *o.zeta_range, 2);
  if (meters) {
    r[0] = zeta_of_distance(ctx, r[0]);
    r[1] = zeta_of_distance(ctx, r[1]);
  }
  auto sts = states(ctx, "ground");
  Table t;
  t.columns = {"state", "zeta", "theta", "stable", "before", "after"};
  for (cpw_state s : sts) {
    size_t n = 0;
    check(cpw_find_force_zeros(ctx.atom.p, s, theta, std::min(r[0], r[1]), std::max(r[0], r[1]),
                               o.root_tol, o.points_per_period, nullptr, 0, &n));
    std::vector<cpw_force_zero> zs(n);
    if (n)
      check(cpw_find_force_zeros(ctx.atom.p, s, theta, std::min(r[0], r[1]),
                                 std::max(r[0], r[1]), o.root_tol, o.points_per_period,
                                 zs.data(), n, &n));
    for (const auto& z : zs)
      t.rows.push_back({std::string(state_name(s)), z.zeta, theta,
                        std::string(z.stable ? "stable" : "unstable"),
                        std::string(direction_name(z.before)),
                        std::string(direction_name(z.after))});
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wall-induced level shifts and forces for a two-level atom near a "
               "perfectly conducting plane in a thermal bath"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.require_subcommand(1);
  Context ctx;
  Options& o = ctx.o;

  app.add_option("--omega0", o.omega0, "transition angular frequency [rad/s]");
  app.add_option("--alpha", o.alpha, "polarizabilities AX,AY,AZ");
  app.add_option("--isotropic", o.isotropic, "isotropic polarizability alpha0 (split equally)");
  app.add_option("--temp", o.temp, "temperature [K]; 0 means theta = inf");
  app.add_option("--theta", o.theta, "reduced inverse temperature hbar omega0/(k_B T); 'inf' allowed");
  app.add_option("--z", o.z, "distance from the wall [m]");
  app.add_option("--zeta", o.zeta, "reduced distance omega0 z / c");
  app.add_option("--z-range", o.z_range, "distance range LO,HI [m]");
  app.add_option("--zeta-range", o.zeta_range, "reduced distance range LO,HI");
  app.add_option("--count", o.count, "grid points for a range");
  app.add_option("--spacing", o.spacing, "lin or log grid spacing");
  app.add_option("--state", o.state, "ground, excited, average or all");
  app.add_option("--units", o.units, "reduced (default) or si");
  app.add_option("--tol", o.tol, "relative tolerance for the thermal kernels");
  app.add_option("--format", o.format, "csv (default) or json");
  app.add_option("--output,-o", o.output, "output file (default stdout)");
  app.add_option("--threads", o.threads, "worker threads (0 = hardware)");
  app.add_option("--threshold", o.threshold, "regime band ratio");
  app.add_option("--points-per-period", o.points_per_period, "force zero scan density per pi");
  app.add_option("--root-tol", o.root_tol, "relative zeta tolerance for force zeros");

  auto* shift = app.add_subcommand("shift", "single-point (or small grid) shift record");
  auto* sweep = app.add_subcommand("sweep", "shift table over a distance grid");
  auto* classify = app.add_subcommand("classify", "regime classification");
  auto* kernels = app.add_subcommand("kernels", "reduced kernel values and convergence data");
  auto* force = app.add_subcommand("force", "force -d(shift)/dz with direction");
  auto* zeros = force->add_subcommand("zeros", "locate force zeros on a distance interval");
  for (auto* s : {shift, sweep, classify, kernels, force, zeros}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (o.format != "csv" && o.format != "json")
      fail(kExitInvalid, "--format must be csv or json");
    if (!(o.tol > 0 && o.tol < 1)) fail(kExitInvalid, "--tol must lie in (0, 1)");
    build_atom(ctx, !*classify && !*kernels);
    Table t;
    if (*zeros) t = cmd_zeros(ctx);
    else if (*force) t = cmd_force(ctx);
    else if (*shift) t = cmd_shift_like(ctx, false);
    else if (*sweep) t = cmd_shift_like(ctx, true);
    else if (*classify) t = cmd_classify(ctx);
    else if (*kernels) t = cmd_kernels(ctx);
    std::string text = render(t, o.format);
    if (o.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.output, std::ios::binary);
      if (!f) fail(kExitInvalid, "cannot open output file " + o.output);
      f << text;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return 0;
}
