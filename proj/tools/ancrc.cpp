#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ancrc/an_geometry.hpp"
#include "ancrc/monodromy.hpp"
#include "ancrc/open_crc.hpp"
#include "ancrc/periods.hpp"
#include "ancrc/verify.hpp"

#include <json.hpp>

using namespace ancrc;

namespace {

// Complex literal of the form a+bi / a-bi / a / bi, no spaces.
Cplx parse_cplx(const std::string& s) {
  if (s.empty()) throw ConfigError("empty complex literal");
  std::string t = s;
  bool imag_only = false;
  if (t.back() == 'i' || t.back() == 'I') {
    t.pop_back();
    imag_only = true;
  }
  // split into real and imaginary pieces at the last +/- not in an exponent
  size_t split = std::string::npos;
  for (size_t i = 1; i < t.size(); ++i) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E')
      split = i;
  }
  try {
    if (!imag_only) return {std::stod(t), 0.0};
    if (split == std::string::npos) {
      if (t.empty() || t == "+" || t == "-")
        return {0.0, t == "-" ? -1.0 : 1.0};
      return {0.0, std::stod(t)};
    }
    std::string im = t.substr(split);
    if (im == "+" || im == "-") im += "1";
    return {std::stod(t.substr(0, split)), std::stod(im)};
  } catch (const std::exception&) {
    throw ConfigError("bad complex literal: " + s);
  }
}

std::string fmt6(Cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

void print_matrix(std::ostream& os, const CMat& m, const std::string& format,
                  const std::string& name) {
  if (format == "json") {
    nlohmann::ordered_json j;
    for (int i = 0; i < m.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int k = 0; k < m.cols(); ++k)
        row.push_back({m(i, k).real(), m(i, k).imag()});
      j[name].push_back(std::move(row));
    }
    os << j.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (int i = 0; i < m.rows(); ++i) {
      for (int k = 0; k < m.cols(); ++k)
        os << (k ? "," : "") << fmt6(m(i, k));
      os << "\n";
    }
    return;
  }
  os << name << ":\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int k = 0; k < m.cols(); ++k) os << "  " << fmt6(m(i, k));
    os << "\n";
  }
}

struct TableArgs {
  int n = 1;
  int d = 1;
  std::string z = "1.3-0.4i";
  std::string alpha1 = "0.43+0.11i";
  std::string alpha2 = "0.29-0.07i";
  std::string leg = "ineffective";
  std::string side = "Y";
  std::string tpoint;
  std::string format = "text";
};

int run_table(const std::string& what, const TableArgs& ta) {
  geom::TorusWeights w{ta.n, parse_cplx(ta.alpha1), parse_cplx(ta.alpha2)};
  w.validate();
  Cplx z = parse_cplx(ta.z);
  std::ostream& os = std::cout;
  if (what == "u-matrix") {
    periods::PeriodParams p{w, z};
    p.require_generic();
    print_matrix(os, periods::u_closed_form(p), ta.format, "u_matrix");
    return 0;
  }
  if (what == "a-matrices") {
    periods::PeriodParams p{w, z};
    p.require_generic();
    bool fb = false;
    print_matrix(os, periods::matrix_A(p, &fb), ta.format, "A");
    print_matrix(os, periods::matrix_A_inv(p), ta.format, "A_inv");
    if (fb) os << "note: reference closed form replaced by numeric inverse\n";
    return 0;
  }
  if (what == "oz") {
    if (ta.leg == "effective") {
      auto oz = ocrc::oz_effective(ta.d, w);
      print_matrix(os, oz.oz, ta.format, "oz_effective");
      os << "row residual: " << oz.row_residual << "\n";
    } else {
      auto oz = ocrc::oz_ineffective(ta.d, w);
      print_matrix(os, oz.oz, ta.format, "oz_ineffective");
      os << "winding factors:";
      for (const Cplx& f : oz.winding_factors) os << " " << fmt6(f);
      os << "\nfactorization residual: " << oz.factor_residual
         << "  column-sum residual: " << oz.column_sum_residual << "\n";
    }
    return 0;
  }
  if (what == "correlators") {
    geom::SmallQCPoint pt{ta.side == "X" ? geom::Side::X : geom::Side::Y,
                          CVec(ta.n + 1, Cplx(-1.5, 0.2))};
    if (!ta.tpoint.empty()) {
      std::stringstream ss(ta.tpoint);
      std::string tok;
      int i = 0;
      while (std::getline(ss, tok, ',') && i <= ta.n) pt.t[i++] = parse_cplx(tok);
    }
    CMat grid(ta.n + 1, ta.n + 1);
    os << "three-point correlators (rows i, cols j, third index k):\n";
    for (int k = 1; k <= ta.n + 1; ++k) {
      for (int i = 1; i <= ta.n + 1; ++i)
        for (int j = 1; j <= ta.n + 1; ++j)
          grid(i - 1, j - 1) =
              ta.side == "X" ? geom::correlator_X(i, j, k, pt, w)
                             : geom::correlator_Y(i, j, k, pt, w);
      print_matrix(os, grid, ta.format, "k=" + std::to_string(k));
    }
    return 0;
  }
  if (what == "monodromy") {
    if (ta.n != 1) throw ConfigError("table monodromy: n = 1 only");
    periods::PeriodParams p{w, z};
    p.require_generic();
    auto pm = mono::reference_matrices_n1(p);
    print_matrix(os, pm.lr1, ta.format, "M_LR1");
    print_matrix(os, pm.cp, ta.format, "M_CP");
    print_matrix(os, pm.lr2, ta.format, "M_LR2");
    return 0;
  }
  throw ConfigError("unknown table: " + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification lab for the A_n open CRC identities"};
  app.require_subcommand(1);

  verify::RunConfig cfg;
  std::string nrange = "1..4";
  auto* vcmd = app.add_subcommand("verify", "run verification suites");
  vcmd->add_option("--suite", cfg.suites,
                   "suite names (gamma hypergeom cohomology mirror periods "
                   "ocrc monodromy all)");
  vcmd->add_option("--n", nrange, "range of n, e.g. 1..4");
  vcmd->add_option("--samples", cfg.samples, "random samples per check");
  vcmd->add_option("--seed", cfg.seed, "RNG seed (fixes the whole report)");
  vcmd->add_option("--format", cfg.format, "text | json | csv");
  vcmd->add_option("--out", cfg.out_path, "write the report to a file");
  std::map<std::string, double> tols;
  for (const std::string& s : verify::kSuiteNames)
    vcmd->add_option_function<double>(
        "--tol-" + s, [&tols, s](double v) { tols[s] = v; },
        "tolerance override for suite " + s);

  std::string what;
  TableArgs ta;
  auto* tcmd = app.add_subcommand("table", "print a matrix / correlator table");
  tcmd->add_option("what", what,
                   "u-matrix | oz | a-matrices | correlators | monodromy")
      ->required();
  tcmd->add_option("--n", ta.n, "n of the A_n geometry");
  tcmd->add_option("--d", ta.d, "winding");
  tcmd->add_option("--z", ta.z, "loop variable, complex a+bi");
  tcmd->add_option("--alpha1", ta.alpha1, "torus weight, complex a+bi");
  tcmd->add_option("--alpha2", ta.alpha2, "torus weight, complex a+bi");
  tcmd->add_option("--leg", ta.leg, "ineffective | effective");
  tcmd->add_option("--side", ta.side, "X | Y");
  tcmd->add_option("--t", ta.tpoint, "comma-separated point coordinates");
  tcmd->add_option("--format", ta.format, "text | json | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (vcmd->parsed()) {
      auto dots = nrange.find("..");
      if (dots == std::string::npos) {
        cfg.n_lo = cfg.n_hi = std::stoi(nrange);
      } else {
        cfg.n_lo = std::stoi(nrange.substr(0, dots));
        cfg.n_hi = std::stoi(nrange.substr(dots + 2));
      }
      if (cfg.n_lo < 1 || cfg.n_hi < cfg.n_lo)
        throw ConfigError("bad --n range");
      cfg.tol_overrides = tols;
      verify::VerificationReport rep = verify::run_suites(cfg);
      std::string body = cfg.format == "json"  ? verify::to_json(rep)
                         : cfg.format == "csv" ? verify::to_csv(rep)
                                               : verify::to_text(rep);
      if (cfg.out_path.empty()) {
        std::cout << body;
      } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        f << body;
      }
      return rep.all_pass() ? 0 : 1;
    }
    return run_table(what, ta);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
