// casimir: command-line front end for the spheroidal Casimir library.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include <CLI11.hpp>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "casimir/bag.hpp"
#include "casimir/errors.hpp"
#include "casimir/modes.hpp"
#include "casimir/records.hpp"
#include "casimir/spheroidal.hpp"
#include "casimir/zeta.hpp"
#include "figdata.hpp"

using json = nlohmann::ordered_json;
using casimir::records::format_number;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out;  // empty: stdout
  std::string format;
  bool no_timestamp = false;
  int lmax = casimir::zeta::SumOptions{}.l_max;
  std::string prescription = "finite-part";
};

// A table is what every command produces: named columns and rows of
// preformatted cells, or a single JSON record.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Emitter {
 public:
  Emitter(const Common& c, std::string command, json params)
      : c_(c), command_(std::move(command)), params_(std::move(params)) {}

  void table(const Table& t, const char* default_format = "csv") {
    const std::string f = format_or(default_format);
    std::ostringstream os;
    if (f == "csv") {
      for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
      os << "\n";
      for (const auto& r : t.rows) {
        for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << "\n";
      }
    } else {
      json arr = json::array();
      for (const auto& r : t.rows) {
        json o;
        for (size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = json::parse(quote_if_text(r[i]));
        arr.push_back(o);
      }
      os << arr.dump(2) << "\n";
    }
    write(os.str());
  }

  // A flat JSON record; as CSV it becomes a header and one row.
  void record(const std::string& json_text) {
    const json j = json::parse(json_text);
    if (format_or("json") == "json") {
      write(j.dump(2) + "\n");
      return;
    }
    Table t;
    t.rows.emplace_back();
    for (const auto& [k, v] : j.items()) {
      if (v.is_array() || v.is_object()) {
        if (k == "flags") {
          std::string joined;
          for (const auto& f : v) joined += (joined.empty() ? "" : ";") + f.get<std::string>();
          t.columns.push_back(k);
          t.rows[0].push_back(joined);
          continue;
        }
        throw UsageError("field '" + k + "' is not flat; use --format json");
      }
      t.columns.push_back(k);
      t.rows[0].push_back(v.is_number_float() ? format_number(v.get<double>())
                          : v.is_string()     ? csv_text(v.get<std::string>())
                                              : v.dump());
    }
    table(t);
  }

  void text(const std::string& s) { write(s); }

 private:
  std::string format_or(const char* def) const {
    const std::string f = c_.format.empty() ? def : c_.format;
    if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
    return f;
  }

  static std::string csv_text(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }

  static std::string quote_if_text(const std::string& cell) {
    try {
      size_t used = 0;
      std::stod(cell, &used);
      if (used == cell.size()) return cell;
    } catch (const std::exception&) {
    }
    return json(cell).dump();
  }

  json provenance() const {
    json p;
    p["tool"] = "casimir";
    p["version"] = casimir::records::library_version();
    p["command"] = command_;
    p["parameters"] = params_;
    const auto pp = casimir::zeta::PPPrescription::parse(c_.prescription);
    p["prescription"] = pp.name();
    p["mu_convention"] = pp.mu_convention;
    p["lmax"] = c_.lmax;
    if (!c_.no_timestamp) p["timestamp"] = utc_now();
    return p;
  }

  void write(const std::string& body) const {
    if (c_.out.empty()) {
      std::cout << body << std::flush;
      std::cerr << provenance().dump() << "\n";
      return;
    }
    std::ofstream f(c_.out, std::ios::binary);
    if (!f) throw UsageError("cannot open " + c_.out);
    f << body;
    std::ofstream meta(c_.out + ".meta.json", std::ios::binary);
    meta << provenance().dump(2) << "\n";
  }

  const Common& c_;
  std::string command_;
  json params_;
};

casimir::zeta::SumOptions sum_options(const Common& c) {
  casimir::zeta::SumOptions o;
  o.l_max = c.lmax;
  return o;
}

json list_json(const std::vector<double>& v) { return json(v); }

}  // namespace

int main(int argc, char** argv) {
  using namespace casimir;
  CLI::App app{"Spheroidal wave functions and Casimir energies of deformed spheres"};
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  app.add_option("--out", c.out, "Output file (default stdout); provenance goes to <out>.meta.json");
  app.add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--no-timestamp", c.no_timestamp, "Omit the timestamp from provenance");
  app.add_option("--lmax", c.lmax, "l-cutoff of the explicit zeta sums")->check(CLI::Range(20, 2000));
  app.add_option("--prescription", c.prescription,
                 "finite-part or finite-part-with-pole-term")
      ->check(CLI::IsMember({"finite-part", "finite-part-with-pole-term"}));

  // eigen
  int e_l = 0, e_m = 0;
  double e_g2 = 0.0, e_tol = 1e-15;
  auto* eigen = app.add_subcommand("eigen", "Spheroidal eigenvalue and Legendre coefficients");
  eigen->add_option("--l", e_l, "degree l")->required()->check(CLI::NonNegativeNumber);
  eigen->add_option("--m", e_m, "order m, |m| <= l");
  eigen->add_option("--gamma2", e_g2, "gamma^2 >= 0")->required()->check(CLI::NonNegativeNumber);
  eigen->add_option("--tol", e_tol, "truncation tolerance")->check(CLI::PositiveNumber);

  // fig3
  std::vector<int> f3_l = figdata::default_l_list();
  int f3_m = 0;
  double f3_eta = 0.5;
  std::vector<double> f3_g2;
  auto* fig3 = app.add_subcommand("fig3", "Angular function: small-gamma form over full series");
  fig3->add_option("--l", f3_l, "degrees")->delimiter(',');
  fig3->add_option("--m", f3_m, "order m");
  fig3->add_option("--eta", f3_eta, "angular coordinate")->check(CLI::Range(-1.0, 1.0));
  fig3->add_option("--gamma2", f3_g2, "gamma^2 grid (default 51 points on [0,1])")->delimiter(',');

  // fig4
  std::vector<int> f4_l = figdata::default_l_list();
  int f4_m = 0;
  double f4_z = 10.0;
  std::vector<double> f4_e;
  auto* fig4 = app.add_subcommand("fig4", "Radial function: small-e form over full series");
  fig4->add_option("--l", f4_l, "degrees")->delimiter(',');
  fig4->add_option("--m", f4_m, "order m");
  fig4->add_option("--z", f4_z, "z = gamma xi")->check(CLI::PositiveNumber);
  fig4->add_option("--e", f4_e, "ellipticity grid (default 61 points on [0,0.3])")->delimiter(',');

  // fig1
  std::vector<double> f1_e;
  std::string f1_bc = "dirichlet";
  auto* fig1 = app.add_subcommand("fig1", "Total zero-point energy of prolate and oblate spheroids");
  fig1->add_option("--e", f1_e, "ellipticity grid (default step 0.01 on [0,0.3])")->delimiter(',');
  fig1->add_option("--bc", f1_bc, "dirichlet, neumann or em")
      ->check(CLI::IsMember({"dirichlet", "neumann", "em"}));

  // casimir
  std::string cs_geom = "sphere", cs_bc = "dirichlet";
  double cs_a = 1.0, cs_e = 0.0;
  auto* cas = app.add_subcommand("casimir", "Zero-point energy of a sphere or spheroid");
  cas->add_option("--geometry", cs_geom, "sphere, prolate or oblate")
      ->check(CLI::IsMember({"sphere", "prolate", "oblate"}));
  cas->add_option("--bc", cs_bc, "dirichlet, neumann or em")
      ->check(CLI::IsMember({"dirichlet", "neumann", "em"}));
  cas->add_option("--a", cs_a, "semi-major axis")->check(CLI::PositiveNumber);
  cas->add_option("--e", cs_e, "ellipticity")->check(CLI::Range(0.0, 0.999999));

  // zonal
  auto* zonal = app.add_subcommand("zonal", "Exact and zonal e^2 coefficients");

  // bag
  std::string bg_kind = "meson";
  double bg_size = 1.0, bg_e = 0.0;
  bag::BagParams bg_p;
  auto* bagc = app.add_subcommand("bag", "Deformed bag zero-point energy");
  bagc->add_option("--kind", bg_kind, "meson (prolate, size b) or baryon (oblate, size a)")
      ->check(CLI::IsMember({"meson", "baryon"}));
  bagc->add_option("--size", bg_size, "semi-minor axis b (meson) or a (baryon)");
  bagc->add_option("--e", bg_e, "ellipticity in [0, 0.3]");
  bagc->add_option("--lambda", bg_p.lambda_exp, "exponent lambda > 0");
  bagc->add_option("--e-lambda", bg_p.Lambda_QCD_energy, "E(Lambda^2) in units 1/R");
  bagc->add_option("--e0", bg_p.E_massless, "E(0) in units 1/R");

  // shiftfit
  std::vector<int> sf_l, sf_m;
  std::string sf_bc = "dirichlet";
  std::vector<double> sf_e{0.02, 0.04, 0.06, 0.08};
  int sf_n = 1;
  auto* shift = app.add_subcommand("shiftfit", "Fit e^2 shifts of spheroidal roots");
  shift->add_option("--l", sf_l, "degrees, paired with --m")->delimiter(',');
  shift->add_option("--m", sf_m, "orders, paired with --l")->delimiter(',');
  shift->add_option("--bc", sf_bc, "dirichlet or neumann")
      ->check(CLI::IsMember({"dirichlet", "neumann"}));
  shift->add_option("--e", sf_e, "fit ellipticities in (0, 0.1]")->delimiter(',');
  shift->add_option("--n", sf_n, "radial index n >= 1")->check(CLI::PositiveNumber);

  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const auto opt = sum_options(c);

    if (eigen->parsed()) {
      if (std::abs(e_m) > e_l) throw UsageError("|m| must not exceed l");
      Emitter em(c, "eigen", {{"l", e_l}, {"m", e_m}, {"gamma2", e_g2}, {"tol", e_tol}});
      if (c.format == "csv") throw UsageError("eigen output is JSON only");
      em.record(records::to_json(spheroidal::lambda_eigenvalue(e_l, e_m, e_g2, e_tol)));
    } else if (fig3->parsed()) {
      if (f3_g2.empty()) f3_g2 = figdata::default_gamma2_grid();
      for (int l : f3_l)
        if (l < std::abs(f3_m)) throw UsageError("every l must satisfy l >= |m|");
      Emitter em(c, "fig3", {{"l", f3_l}, {"m", f3_m}, {"eta", f3_eta}, {"gamma2", list_json(f3_g2)}});
      Table t{{"gamma2", "l", "ratio"}, {}};
      for (const auto& r : figdata::angular_rows(f3_l, f3_m, f3_eta, f3_g2))
        t.rows.push_back({format_number(r.gamma2), std::to_string(r.l), format_number(r.ratio)});
      em.table(t);
    } else if (fig4->parsed()) {
      if (f4_e.empty()) f4_e = figdata::default_e_grid();
      for (double e : f4_e)
        if (!(e >= 0.0 && e < 1.0)) throw UsageError("ellipticities must be in [0, 1)");
      for (int l : f4_l)
        if (l < std::abs(f4_m)) throw UsageError("every l must satisfy l >= |m|");
      Emitter em(c, "fig4", {{"l", f4_l}, {"m", f4_m}, {"z", f4_z}, {"e", list_json(f4_e)}});
      Table t{{"e", "l", "ratio"}, {}};
      for (const auto& r : figdata::radial_rows(f4_l, f4_m, f4_z, f4_e))
        t.rows.push_back({format_number(r.e), std::to_string(r.l), format_number(r.ratio)});
      em.table(t);
    } else if (fig1->parsed()) {
      if (f1_e.empty()) f1_e = figdata::default_energy_grid();
      for (double e : f1_e)
        if (!(e >= 0.0 && e < 1.0)) throw UsageError("ellipticities must be in [0, 1)");
      Emitter em(c, "fig1", {{"e", list_json(f1_e)}, {"bc", f1_bc}});
      Table t{{"e", "E_prolate", "E_oblate"}, {}};
      for (const auto& r : figdata::energy_rows(f1_e, zeta::parse_bc(f1_bc), opt))
        t.rows.push_back({format_number(r.e), format_number(r.prolate), format_number(r.oblate)});
      em.table(t);
    } else if (cas->parsed()) {
      Emitter em(c, "casimir", {{"geometry", cs_geom}, {"bc", cs_bc}, {"a", cs_a}, {"e", cs_e}});
      const auto bc = zeta::parse_bc(cs_bc);
      zeta::EnergyExpansion r;
      if (cs_geom == "sphere") {
        if (cs_e != 0.0) throw UsageError("a sphere has e = 0; use prolate or oblate");
        r = zeta::sphere_energy_total(bc, opt);
        r.a = cs_a;
        r.energy = r.E0 / cs_a;
      } else {
        r = zeta::spheroid_energy(cs_a, cs_e, zeta::parse_geometry(cs_geom), bc, opt);
      }
      em.record(records::to_json(r));
    } else if (zonal->parsed()) {
      Emitter em(c, "zonal", json::object());
      em.record(records::to_json(
          zeta::zonal_vs_exact_factors(zeta::PPPrescription::parse(c.prescription), opt)));
    } else if (bagc->parsed()) {
      Emitter em(c, "bag", {{"kind", bg_kind}, {"size", bg_size}, {"e", bg_e},
                            {"lambda", bg_p.lambda_exp}, {"e_lambda", bg_p.Lambda_QCD_energy},
                            {"e0", bg_p.E_massless}});
      const bool meson = bg_kind == "meson";
      json j;
      j["kind"] = bg_kind;
      j["geometry"] = meson ? "prolate" : "oblate";
      j["size"] = bg_size;
      j["e"] = bg_e;
      j["modified_energy"] = bag::modified_energy(bg_p);
      j["energy"] = meson ? bag::meson_prolate_energy(bg_size, bg_e, bg_p)
                          : bag::baryon_oblate_energy(bg_size, bg_e, bg_p);
      em.record(j.dump());
    } else if (shift->parsed()) {
      if (sf_l.empty() && sf_m.empty()) {
        sf_l = {0, 1, 1, 2, 2, 5};
        sf_m = {0, 0, 1, 0, 2, 3};
      }
      if (sf_l.size() != sf_m.size()) throw UsageError("--l and --m must have the same length");
      Emitter em(c, "shiftfit", {{"l", sf_l}, {"m", sf_m}, {"bc", sf_bc}, {"e", sf_e}, {"n", sf_n}});
      const auto bc = modes::parse_mode_bc(sf_bc);
      Table t;
      std::istringstream hs(records::shiftfit_csv_header());
      for (std::string col; std::getline(hs, col, ',');) t.columns.push_back(col);
      for (size_t i = 0; i < sf_l.size(); ++i) {
        if (std::abs(sf_m[i]) > sf_l[i]) throw UsageError("|m| must not exceed l");
        std::vector<std::string> row;
        std::istringstream rs(records::to_csv_row(modes::root_shift_fit(sf_l[i], sf_m[i], bc, sf_e, sf_n)));
        for (std::string cell; std::getline(rs, cell, ',');) row.push_back(cell);
        t.rows.push_back(row);
      }
      em.table(t);
    } else if (self->parsed()) {
      Emitter em(c, "selftest", json::object());
      std::ostringstream os;
      const int failures = acceptance::run_acceptance(os, opt);
      em.text(os.str());
      return failures == 0 ? 0 : 2;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
