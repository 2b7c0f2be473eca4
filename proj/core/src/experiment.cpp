#include "awr/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace awr {

namespace fs = std::filesystem;

const char* to_string(Preset preset) {
  switch (preset) {
    case Preset::CaseI: return "case-i";
    case Preset::CaseII: return "case-ii";
    case Preset::CaseIII: return "case-iii";
    case Preset::Custom: return "custom";
  }
  return "?";
}

Preset preset_from_name(const std::string& name) {
  if (name == "case-i") return Preset::CaseI;
  if (name == "case-ii") return Preset::CaseII;
  if (name == "case-iii") return Preset::CaseIII;
  if (name == "custom") return Preset::Custom;
  throw ConfigError("unknown preset '" + name +
                    "' (expected case-i, case-ii, case-iii or custom)");
}

namespace {

// Published (A, a) limit paths, figure by figure.
const std::vector<ParamPair> kPairsCaseI = {
    {1.0, 0.01}, {0.1, 0.001}, {0.01, 0.0001}, {0.0001, 0.000001}};
const std::vector<ParamPair> kPairsCaseIVariant = {
    {0.1, 0.01}, {0.001, 0.0001}, {0.0001, 0.00001}, {0.00001, 0.000001}};
const std::vector<ParamPair> kPairsCaseII = {
    {1.0, 0.01}, {0.01, 0.001}, {0.0001, 0.00001}, {0.00001, 0.000001}};
const std::vector<ParamPair> kPairsCaseIII = {
    {1.0, 0.1}, {0.01, 0.001}, {0.001, 0.0001}, {0.00001, 0.000001}};

}  // namespace

ExperimentConfig preset_config(Preset preset) {
  ExperimentConfig cfg;
  cfg.preset = preset;
  switch (preset) {
    case Preset::CaseI:
      cfg.left = {1.0, 5.0};
      cfg.right = {1.0, 2.0};
      cfg.B = 1.0;
      cfg.Gamma = 2.0;
      cfg.kappa = 0.25;
      cfg.pairs = kPairsCaseI;
      break;
    case Preset::CaseII:
      cfg.left = {2.0, 5.0};
      cfg.right = {1.0, 4.5};
      cfg.B = 1.0;
      cfg.Gamma = 2.0;
      cfg.kappa = 0.5;
      cfg.pairs = kPairsCaseII;
      break;
    case Preset::CaseIII:
      cfg.left = {1.0, 5.0};
      cfg.right = {2.0, 7.0};
      cfg.B = 1.0;
      cfg.Gamma = 2.0;
      cfg.kappa = 0.5;
      cfg.pairs = kPairsCaseIII;
      break;
    case Preset::Custom:
      break;
  }
  if (!cfg.pairs.empty()) {
    cfg.A = cfg.pairs.front().A;
    cfg.a = cfg.pairs.front().a;
  }
  return cfg;
}

namespace {

[[noreturn]] void fail_at(int line, const std::string& msg) {
  throw ConfigError("line " + std::to_string(line) + ": " + msg);
}

double parse_number(const std::string& value, int line) {
  try {
    std::size_t used = 0;
    const double x = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    fail_at(line, "expected a number, got '" + value + "'");
  }
}

int parse_count(const std::string& value, int line) {
  const double x = parse_number(value, line);
  const int n = static_cast<int>(x);
  if (static_cast<double>(n) != x) fail_at(line, "expected an integer, got '" + value + "'");
  return n;
}

std::vector<ParamPair> parse_pairs(const std::string& value, int line) {
  try {
    return parse_pair_list(value);
  } catch (const ConfigError& e) {
    fail_at(line, e.what());
  }
}

std::string trimmed(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

const std::set<std::string> kAllKeys = {
    ".preset",      ".out",         "state.rho_l",  "state.v_l",     "state.rho_r",
    "state.v_r",    "eos.A",        "eos.a",        "eos.B",         "eos.Gamma",
    "eos.kappa",    "grid.x_min",   "grid.x_max",   "grid.n_cells",  "scheme.cfl",
    "scheme.t_end", "sweep.pairs"};

// Keys a fully custom configuration must provide.
const std::set<std::string> kRequiredCustom = {
    "state.rho_l", "state.v_l",    "state.rho_r",  "state.v_r",  "eos.A",
    "eos.a",       "eos.B",        "eos.Gamma",    "eos.kappa",  "grid.x_min",
    "grid.x_max",  "grid.n_cells", "scheme.cfl",   "scheme.t_end", "sweep.pairs"};

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  bool preset_seen = false;
  std::set<std::string> seen;

  std::stringstream stream(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trimmed(raw);
    if (s.empty()) continue;

    if (s.front() == '[') {
      if (s.back() != ']') fail_at(line, "unterminated section header");
      section = trimmed(s.substr(1, s.size() - 2));
      if (section != "state" && section != "eos" && section != "grid" &&
          section != "scheme" && section != "sweep") {
        fail_at(line, "unknown section [" + section + "]");
      }
      continue;
    }

    const auto eq = s.find('=');
    if (eq == std::string::npos) fail_at(line, "expected key = value");
    const std::string key = trimmed(s.substr(0, eq));
    const std::string value = trimmed(s.substr(eq + 1));
    if (key.empty()) fail_at(line, "missing key");
    if (value.empty()) fail_at(line, "missing value for '" + key + "'");
    const std::string qualified = section + "." + key;
    if (!kAllKeys.count(qualified)) {
      fail_at(line, section.empty()
                        ? "unknown key '" + key + "'"
                        : "unknown key '" + key + "' in section [" + section + "]");
    }
    seen.insert(qualified);

    if (qualified == ".preset") {
      Preset p;
      try {
        p = preset_from_name(value);
      } catch (const ConfigError& e) {
        fail_at(line, e.what());
      }
      const std::string keep_out = cfg.out_dir;
      cfg = preset_config(p);
      cfg.out_dir = keep_out;
      preset_seen = true;
      seen.clear();  // only overrides after the preset count as explicit
    } else if (qualified == ".out") {
      cfg.out_dir = value;
    } else if (qualified == "state.rho_l") {
      cfg.left.rho = parse_number(value, line);
    } else if (qualified == "state.v_l") {
      cfg.left.v = parse_number(value, line);
    } else if (qualified == "state.rho_r") {
      cfg.right.rho = parse_number(value, line);
    } else if (qualified == "state.v_r") {
      cfg.right.v = parse_number(value, line);
    } else if (qualified == "eos.A") {
      cfg.A = parse_number(value, line);
    } else if (qualified == "eos.a") {
      cfg.a = parse_number(value, line);
    } else if (qualified == "eos.B") {
      cfg.B = parse_number(value, line);
    } else if (qualified == "eos.Gamma") {
      cfg.Gamma = parse_number(value, line);
    } else if (qualified == "eos.kappa") {
      cfg.kappa = parse_number(value, line);
    } else if (qualified == "grid.x_min") {
      cfg.grid.x_min = parse_number(value, line);
    } else if (qualified == "grid.x_max") {
      cfg.grid.x_max = parse_number(value, line);
    } else if (qualified == "grid.n_cells") {
      cfg.grid.n_cells = parse_count(value, line);
    } else if (qualified == "scheme.cfl") {
      cfg.scheme.cfl = parse_number(value, line);
    } else if (qualified == "scheme.t_end") {
      cfg.scheme.t_end = parse_number(value, line);
    } else if (qualified == "sweep.pairs") {
      cfg.pairs = parse_pairs(value, line);
    }
  }

  if (!preset_seen) {
    for (const std::string& key : kRequiredCustom) {
      if (!seen.count(key)) {
        if (seen.empty()) throw ConfigError("preset or full custom block required");
        throw ConfigError("custom configuration is missing '" + key + "'");
      }
    }
    cfg.preset = Preset::Custom;
  } else if (cfg.preset == Preset::CaseI && !seen.count("sweep.pairs") &&
             cfg.kappa == 0.75 && cfg.Gamma == 3.0) {
    cfg.pairs = kPairsCaseIVariant;  // the published kappa=0.75, Gamma=3 path
  }

  // Pin the single-solve EOS point to the first pair unless given explicitly.
  if (!cfg.pairs.empty() && !seen.count("eos.A") && !seen.count("eos.a")) {
    cfg.A = cfg.pairs.front().A;
    cfg.a = cfg.pairs.front().a;
  }

  // Field-level validation, with the offending field named.
  try {
    (void)cfg.eos();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid [eos] block: ") + e.what());
  }
  try {
    cfg.grid = Grid(cfg.grid.x_min, cfg.grid.x_max, cfg.grid.n_cells);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid [grid] block: ") + e.what());
  }
  if (!(cfg.scheme.cfl > 0.0 && cfg.scheme.cfl <= 1.0))
    throw ConfigError("invalid [scheme] block: cfl must lie in (0, 1]");
  if (!(cfg.scheme.t_end > 0.0))
    throw ConfigError("invalid [scheme] block: t_end must be > 0");
  if (!(cfg.left.rho > 0.0) || !(cfg.right.rho > 0.0))
    throw ConfigError("invalid [state] block: densities must be > 0");
  if (cfg.left.v < 0.0 || cfg.right.v < 0.0)
    throw ConfigError("invalid [state] block: velocities must be >= 0");
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::vector<ParamPair> parse_pair_list(const std::string& text) {
  std::vector<ParamPair> pairs;
  std::stringstream ss(text);
  std::string item;
  auto to_number = [](const std::string& s) {
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return x;
  };
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ConfigError("pair '" + item + "' is not of the form A:a");
    }
    ParamPair q{0.0, 0.0};
    try {
      q.A = to_number(item.substr(0, colon));
      q.a = to_number(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw ConfigError("pair '" + item + "' is not numeric");
    }
    if (!(q.A > 0.0) || !(q.a > 0.0)) {
      throw ConfigError("pairs must be strictly positive");
    }
    pairs.push_back(q);
  }
  if (pairs.empty()) throw ConfigError("empty pair list");
  return pairs;
}

std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

bool RunReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

double l1_error(const EosParams& eos, const RiemannSolution& exact, const Field& f) {
  double sum = 0.0;
  for (int j = 0; j < f.grid.n_cells; ++j) {
    const State s = sample(eos, exact, f.grid.center(j) / f.time);
    sum += std::abs(f.rho[j] - s.rho);
  }
  return sum * f.grid.dx();
}

double steepest_gradient_x(const Field& f) {
  int best = 0;
  double best_jump = -1.0;
  for (int j = 0; j + 1 < f.grid.n_cells; ++j) {
    const double jump = std::abs(f.v[j + 1] - f.v[j]);
    if (jump > best_jump) {
      best_jump = jump;
      best = j;
    }
  }
  return 0.5 * (f.grid.center(best) + f.grid.center(best + 1));
}

bool strictly_increasing(const std::vector<double>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) return false;
  }
  return true;
}

bool strictly_decreasing(const std::vector<double>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] < xs[i - 1])) return false;
  }
  return true;
}

std::string join_values(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " ";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", xs[i]);
    out += buf;
  }
  return out;
}

void build_checks(RunReport& rep) {
  const ExperimentConfig& cfg = rep.config;
  auto add = [&rep](const std::string& name, bool pass, const std::string& detail) {
    rep.checks.push_back({name, pass, detail});
  };

  bool all_solved = true;
  for (const PairReport& pr : rep.pairs) {
    if (!pr.row.ok) all_solved = false;
  }
  add("all pairs solved", all_solved, all_solved ? "" : "see flagged rows in summary.csv");
  if (!all_solved) return;

  bool all_simulated = true;
  std::string sim_detail;
  for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
    if (!rep.pairs[i].field) {
      all_simulated = false;
      sim_detail += "pair " + std::to_string(i) + ": " + rep.pairs[i].scheme_error + "; ";
    }
  }
  add("scheme runs completed", all_simulated, sim_detail);

  // Jump-relation identity for every shock+contact row.
  bool identity_ok = true;
  double worst = 0.0;
  for (const PairReport& pr : rep.pairs) {
    if (pr.row.kind != WaveKind::ShockContact) continue;
    const double rhs = pr.row.sigma2 * cfg.right.rho - pr.row.sigma1 * cfg.left.rho +
                       cfg.left.rho * cfg.left.v - cfg.right.rho * cfg.right.v;
    const double rel = std::abs(pr.row.rh_mass - rhs) / std::max(1.0, std::abs(pr.row.rh_mass));
    worst = std::max(worst, rel);
    if (rel > 1e-9) identity_ok = false;
  }
  add("jump-relation mass identity (rel <= 1e-9)", identity_ok,
      "worst relative residual " + format_full(worst));

  std::vector<double> rho_star, sig1_gap, wave_gap;
  for (const PairReport& pr : rep.pairs) {
    rho_star.push_back(pr.row.rho_star);
    sig1_gap.push_back(std::abs(pr.row.sigma1 - cfg.right.v));
    wave_gap.push_back(std::abs(pr.row.sigma2 - pr.row.sigma1));
  }

  switch (rep.prediction.region) {
    case LimitRegion::Ia: {
      add("intermediate density strictly increasing", strictly_increasing(rho_star),
          join_values(rho_star));
      add("shock speed converges to the contact speed", strictly_decreasing(sig1_gap),
          join_values(sig1_gap));
      add("wave-speed gap strictly decreasing", strictly_decreasing(wave_gap),
          join_values(wave_gap));

      std::vector<double> eos_gap, mass_gap;
      for (const PairReport& pr : rep.pairs) {
        eos_gap.push_back(std::abs(pr.row.eos_term - *rep.prediction.pressure_limit));
        mass_gap.push_back(std::abs(pr.row.rh_mass - *rep.prediction.weight_coefficient));
      }
      add("van der Waals term trends to its limit", strictly_decreasing(eos_gap),
          join_values(eos_gap));
      add("mass between the waves trends to the delta weight", strictly_decreasing(mass_gap),
          join_values(mass_gap));

      if (all_simulated) {
        std::vector<double> max_rho;
        for (const PairReport& pr : rep.pairs) max_rho.push_back(pr.max_rho_num);
        add("numerical max density strictly increasing", strictly_increasing(max_rho),
            join_values(max_rho));

        // The primitive-form scheme misplaces strong shocks by a parameter-
        // dependent amount, so the front position is certified as a trend:
        // its distance to the delta support x = v_r t must shrink along the
        // sweep.
        std::vector<double> front_gap;
        for (const PairReport& pr : rep.pairs) {
          front_gap.push_back(
              std::abs(pr.steepest_vgrad_x - cfg.right.v * pr.field->time));
        }
        bool monotone = true;
        for (std::size_t i = 1; i < front_gap.size(); ++i) {
          if (front_gap[i] > front_gap[i - 1]) monotone = false;
        }
        add("velocity front approaches the delta support",
            front_gap.size() < 2 || (monotone && front_gap.back() < front_gap.front()),
            join_values(front_gap));
      }
      break;
    }
    case LimitRegion::Ib: {
      // Finite limit density of the bounded branch.
      const double limit = std::pow(
          cfg.B / (cfg.B / std::pow(cfg.left.rho, cfg.kappa) - (cfg.left.v - cfg.right.v)),
          1.0 / cfg.kappa);
      const double max_star = *std::max_element(rho_star.begin(), rho_star.end());
      add("intermediate density bounded (within 2x of its finite limit)",
          max_star <= 2.0 * limit,
          "max rho* " + format_full(max_star) + ", limit " + format_full(limit));
      bool positive = true;
      for (const PairReport& pr : rep.pairs) {
        if (!(pr.row.eos_term > 0.0)) positive = false;
      }
      add("van der Waals term positive in every row", positive, "");
      break;
    }
    case LimitRegion::II: {
      const double limit = std::pow(
          cfg.B / (cfg.right.v - cfg.left.v + cfg.B / std::pow(cfg.left.rho, cfg.kappa)),
          1.0 / cfg.kappa);
      const double infimum = *std::min_element(rho_star.begin(), rho_star.end());
      add("no vacuum across the sweep",
          infimum > std::max(1e-8, 0.9 * limit),
          "infimum " + format_full(infimum) + ", limit density " + format_full(limit));
      break;
    }
  }
}

void write_summary(const RunReport& rep) {
  fs::create_directories(rep.config.out_dir);
  const fs::path path = fs::path(rep.config.out_dir) / "summary.csv";
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "preset,pair_index,A,a,kind,rho_star,sigma1,sigma2,eos_term,rh_mass,"
         "max_rho_num,l1_rho_error,steepest_vgrad_x,ok,error\n";
  for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
    const PairReport& pr = rep.pairs[i];
    std::string err = pr.row.error;
    std::replace(err.begin(), err.end(), ',', ';');
    out << to_string(rep.config.preset) << ',' << i << ',' << format_full(pr.pair.A) << ','
        << format_full(pr.pair.a) << ',' << to_string(pr.row.kind) << ','
        << format_full(pr.row.rho_star) << ',' << format_full(pr.row.sigma1) << ','
        << format_full(pr.row.sigma2) << ',' << format_full(pr.row.eos_term) << ','
        << format_full(pr.row.rh_mass) << ',' << format_full(pr.max_rho_num) << ','
        << format_full(pr.l1_rho_error) << ',' << format_full(pr.steepest_vgrad_x) << ','
        << (pr.row.ok ? 1 : 0) << ',' << err << '\n';
  }
}

}  // namespace

RunReport run_experiment(const ExperimentConfig& cfg) {
  RunReport rep{cfg, predict(cfg.left, cfg.right, cfg.B, cfg.kappa), {}, {}};
  const EosParams base = cfg.eos();

  for (const ParamPair& q : cfg.pairs) {
    PairReport pr;
    pr.pair = q;
    pr.row = sweep_row(cfg.left, cfg.right, base, q);
    if (pr.row.ok) {
      const EosParams eos(q.A, q.a, cfg.B, cfg.Gamma, cfg.kappa);
      pr.exact = solve(eos, cfg.left, cfg.right);
      try {
        Field f = run(eos, cfg.left, cfg.right, cfg.grid, cfg.scheme);
        pr.max_rho_num = *std::max_element(f.rho.begin(), f.rho.end());
        pr.l1_rho_error = l1_error(eos, *pr.exact, f);
        pr.steepest_vgrad_x = steepest_gradient_x(f);
        pr.field = std::move(f);
      } catch (const std::exception& e) {
        pr.scheme_error = e.what();
      }
    }
    rep.pairs.push_back(std::move(pr));
  }

  build_checks(rep);
  write_summary(rep);
  return rep;
}

void write_profile_csv(const std::string& path, const EosParams& eos,
                       const RiemannSolution& exact, const Field& field) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "x,rho_exact,rho_num,v_exact,v_num\n";
  for (int j = 0; j < field.grid.n_cells; ++j) {
    const double x = field.grid.center(j);
    const State s = sample(eos, exact, x / field.time);
    out << format_full(x) << ',' << format_full(s.rho) << ',' << format_full(field.rho[j])
        << ',' << format_full(s.v) << ',' << format_full(field.v[j]) << '\n';
  }
}

void emit_profiles(const RunReport& report, const std::vector<double>& times) {
  for (double t : times) {
    if (!(t > 0.0)) throw std::invalid_argument("emit_profiles: times must be > 0");
  }
  const ExperimentConfig& cfg = report.config;
  fs::create_directories(cfg.out_dir);

  struct Entry {
    std::string csv;
    std::string png;
    std::string title;
  };
  std::vector<Entry> entries;

  for (std::size_t i = 0; i < report.pairs.size(); ++i) {
    const PairReport& pr = report.pairs[i];
    if (!pr.exact) continue;
    const EosParams eos(pr.pair.A, pr.pair.a, cfg.B, cfg.Gamma, cfg.kappa);
    for (double t : times) {
      std::optional<Field> rerun;
      const Field* f = nullptr;
      if (pr.field && std::abs(pr.field->time - t) <= 1e-9 * std::max(t, pr.field->time)) {
        f = &*pr.field;
      } else {
        SchemeConfig sc = cfg.scheme;
        sc.t_end = t;
        rerun.emplace(run(eos, cfg.left, cfg.right, cfg.grid, sc));
        f = &*rerun;
      }
      char tbuf[32];
      std::snprintf(tbuf, sizeof(tbuf), "%g", t);
      const std::string csv = "profile_" + std::to_string(i) + "_" + tbuf + ".csv";
      write_profile_csv((fs::path(cfg.out_dir) / csv).string(), eos, *pr.exact, *f);
      char title[128];
      std::snprintf(title, sizeof(title), "A=%g, a=%g, t=%s", pr.pair.A, pr.pair.a, tbuf);
      entries.push_back({csv, "pair" + std::to_string(i) + "_t" + tbuf + ".png", title});
    }
  }

  std::ofstream gnu(fs::path(cfg.out_dir) / "plots.gnu");
  if (!gnu) throw std::runtime_error("cannot write plots.gnu");
  gnu << "# render with: gnuplot plots.gnu\n"
         "set datafile separator ','\n"
         "set style data lines\n"
         "set terminal pngcairo size 1100,450\n"
         "set xlabel 'x'\n";
  for (const Entry& e : entries) {
    gnu << "\nset output '" << e.png << "'\n"
        << "set multiplot layout 1,2 title '" << e.title << "'\n"
        << "set ylabel 'density'\n"
        << "plot '" << e.csv << "' every ::1 using 1:2 title 'exact' lw 2, \\\n"
        << "     '" << e.csv << "' every ::1 using 1:3 title 'upwind' lw 1\n"
        << "set ylabel 'velocity'\n"
        << "plot '" << e.csv << "' every ::1 using 1:4 title 'exact' lw 2, \\\n"
        << "     '" << e.csv << "' every ::1 using 1:5 title 'upwind' lw 1\n"
        << "unset multiplot\n";
  }
}

}  // namespace awr
