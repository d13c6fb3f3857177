#include "kolmo/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kolmo/comparison.hpp"
#include "kolmo/errors.hpp"
#include "kolmo/kolmogorov_problem.hpp"
#include "kolmo/norms.hpp"

namespace kolmo::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InvalidParams("'" + s + "' is not a number");
  }
  if (used != s.size()) throw InvalidParams("'" + s + "' is not a number");
  return v;
}

int parse_int(const std::string& s) {
  const double v = parse_double(s);
  if (v != std::floor(v)) throw InvalidParams("'" + s + "' is not an integer");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Json tolerances_json(const Tolerances& t) {
  return Json{{"opt", t.opt}, {"check", t.check}, {"mean", t.mean},
              {"compare", t.compare}, {"admissible", t.admissible}, {"beta", t.beta}};
}

Json params_json(const RodovParams& p) {
  return Json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"s", p.s}, {"alpha", p.alpha}};
}

Json report_json(const ComparisonReport& rep) {
  Json margins = Json::object();
  for (const auto& [order, m] : rep.hypothesis_margins) margins[std::to_string(order)] = m;
  return Json{{"max_violation", rep.max_violation},
              {"argmax_xi", rep.argmax_xi},
              {"hypothesis_margins", margins},
              {"tolerance", rep.tolerance},
              {"passed", rep.passed()},
              {"experimental", rep.experimental},
              {"grid", rep.grid},
              {"level_points", rep.level_points}};
}

// Owns the destination chosen by --out.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InvalidParams("cannot open output file '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& get() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

}  // namespace

ClassSpec parse_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidParams("spec '" + text + "' lacks a kind prefix");
  const std::string kind = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  if (kind == "dragomir") {
    const double eta = parse_double(body);
    if (!(eta >= 0 && eta <= 1)) throw InvalidParams("eta must lie in [0, 1]");
    return ClassSpec::dragomir(eta);
  }
  if (kind == "box") {
    std::vector<std::pair<int, double>> bounds;
    for (const auto& item : split(body, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw InvalidParams("box term '" + item + "' needs <order>=<bound>");
      bounds.emplace_back(parse_int(item.substr(0, eq)), parse_double(item.substr(eq + 1)));
    }
    return ClassSpec::box(std::move(bounds));
  }
  if (kind == "hom") {
    const auto at = body.rfind('@');
    if (at == std::string::npos) throw InvalidParams("homogeneous spec needs @<level>");
    std::vector<std::pair<int, double>> theta;
    for (const auto& item : split(body.substr(0, at), ',')) {
      const auto caret = item.find('^');
      if (caret == std::string::npos) throw InvalidParams("homogeneous term '" + item + "' needs <order>^<theta>");
      theta.emplace_back(parse_int(item.substr(0, caret)), parse_double(item.substr(caret + 1)));
    }
    return ClassSpec::homogeneous(std::move(theta), parse_double(body.substr(at + 1)));
  }
  throw InvalidParams("unknown spec kind '" + kind + "'");
}

ClassSpec parse_spec_json(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw InvalidParams(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "dragomir") return ClassSpec::dragomir(j.at("eta").get<double>());
    std::vector<std::pair<int, double>> terms;
    for (const auto& [key, value] : j.at("terms").items()) terms.emplace_back(parse_int(key), value.get<double>());
    if (kind == "box") return ClassSpec::box(std::move(terms));
    if (kind == "homogeneous") return ClassSpec::homogeneous(std::move(terms), j.value("level", 1.0));
    throw InvalidParams("unknown spec kind '" + kind + "'");
  } catch (const Json::exception& e) {
    throw InvalidParams(std::string("malformed config: ") + e.what());
  }
}

namespace {

std::vector<int> parse_orders(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_int(item));
  return out;
}

std::vector<double> parse_values(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_double(item));
  return out;
}

std::string read_config(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw InvalidParams("cannot read config '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_spline(const RodovParams& p, int samples, std::ostream& os) {
  // Validate before sampling so bad parameters never produce partial output.
  p.validate();
  if (samples < 1) throw InvalidParams("samples must be positive");
  const auto spline = build_rodov(p);
  Json norms = Json::object();
  for (int j = 0; j <= p.s; ++j) {
    if (auto v = closed_form_rodov_norm(p.a, p.b, p.c, j)) norms["psi" + std::to_string(j)] = *v;
  }
  Json header{{"params", params_json(p)},
              {"period", spline.period()},
              {"closed_form_norms", norms},
              {"sup_norm", sup_norm(spline)},
              {"samples", samples}};
  os << "# " << header.dump() << '\n';
  os << "t,value\n";
  const double T = spline.period();
  for (int i = 0; i < samples; ++i) {
    const double t = T * i / samples;
    os << fmt17(t) << ',' << fmt17(spline(t)) << '\n';
  }
  return 0;
}

int cmd_admissible(const std::vector<int>& orders, const std::vector<double>& values, const Tolerances& tol,
                   std::ostream& os) {
  if (orders.size() != values.size()) throw InvalidParams("orders and values differ in length");
  const OrderVector kk(orders);
  Json j{{"orders", orders}, {"values", values}, {"family", to_string(kk.kind())}};
  bool ok = false;
  if (kk.kind() == FamilyKind::Euler) {
    const auto v = is_admissible_triple(kk.k(), kk.r(), values[0], values[1], values[2], tol);
    ok = v.admissible;
    j["admissible"] = ok;
    if (ok) {
      j["boundary"] = v.boundary;
      j["witness"] = Json{{"amplitude", v.amplitude}, {"lambda", v.lambda}, {"shift", v.shift}};
    } else {
      j["reason"] = "M_k exceeds the Kolmogorov bound";
    }
  } else {
    NormVector m{orders, values};
    try {
      const auto v = is_admissible(kk, m, tol);
      ok = v.admissible;
      j["admissible"] = ok;
      if (ok) {
        j["witness"] = Json{{"params", params_json(v.witness->params)},
                            {"beta", v.witness->beta},
                            {"shift", v.witness->shift}};
      } else {
        j["reason"] = v.reason;
      }
    } catch (const InfeasibleNorms& e) {
      j["admissible"] = false;
      j["reason"] = e.what();
    }
  }
  write_json(os, j);
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal splines and sharp constants for Kolmogorov-type inequalities", "kolmo"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  // spline
  auto* spline = app.add_subcommand("spline", "Sample alpha*psi_s(a,b,c) over one period (JSON header + CSV)");
  RodovParams sp{0.0, 1.0, 0.0, 0, 1.0};
  int samples = 1000;
  spline->add_option("--a", sp.a, "Flat width at the extreme")->default_val(0.0);
  spline->add_option("--b", sp.b, "Ramp width")->required();
  spline->add_option("--c", sp.c, "Flat width at zero")->default_val(0.0);
  spline->add_option("--s", sp.s, "Primitive order")->default_val(0);
  spline->add_option("--alpha", sp.alpha, "Amplitude")->default_val(1.0);
  spline->add_option("--samples", samples, "Samples per period")->default_val(1000);

  // constant
  auto* constant = app.add_subcommand("constant", "Sharp constants");
  constant->require_subcommand(1);
  auto* c_kolm = constant->add_subcommand("kolmogorov", "K(k,r) = ||phi_{r-k}|| / ||phi_r||^{1-k/r}");
  int ck = 0, cr = 0;
  c_kolm->add_option("--k", ck)->required();
  c_kolm->add_option("--r", cr)->required();
  auto* c_drag = constant->add_subcommand("dragomir", "C_eta of the four-norm inequality");
  double eta = 0;
  c_drag->add_option("--eta", eta)->required();
  auto* c_fav = constant->add_subcommand("favard", "||phi_r||");
  int fr = 0;
  c_fav->add_option("--r", fr)->required();

  // admissible
  auto* adm = app.add_subcommand("admissible", "Is the norm vector realisable? exit 0 yes, 1 no");
  std::string a_orders, a_values;
  adm->add_option("--orders", a_orders, "Comma-separated derivative orders")->required();
  adm->add_option("--values", a_values, "Comma-separated norms")->required();

  // modulus
  auto* mod = app.add_subcommand("modulus", "omega(D^k, X; delta) over the spline family");
  std::string m_orders, m_spec, m_config;
  double m_delta = 0;
  mod->add_option("--orders", m_orders)->required();
  mod->add_option("--spec", m_spec, "dragomir:<eta> | box:<o>=<B>[,...] | hom:<o>^<theta>[,...]@<level>");
  mod->add_option("--config", m_config, "JSON class spec (inline or file path)");
  mod->add_option("--delta", m_delta)->required();

  // verify comparison
  auto* ver = app.add_subcommand("verify", "Numerical checks");
  ver->require_subcommand(1);
  auto* cmp = ver->add_subcommand("comparison", "Comparison-theorem check on a grid");
  std::string v_case = "euler";
  EulerParams ve{1.0, 3, 1.0};
  RodovParams vr{0.0, 1.0, 0.5, 0, 1.0};
  std::string v_orders = "0,1,2,4";
  double v_scale = 1.0, v_shift = 0.0;
  std::string v_sine;
  int v_grid = 2000;
  cmp->add_option("--case", v_case)->check(CLI::IsMember({"euler", "rodov"}));
  cmp->add_option("--lambda", ve.lambda)->default_val(1.0);
  cmp->add_option("--r", ve.r, "Euler spline order")->default_val(3);
  cmp->add_option("--amplitude", ve.amplitude)->default_val(1.0);
  cmp->add_option("--orders", v_orders, "Order vector for --case rodov")->default_val("0,1,2,4");
  cmp->add_option("--a", vr.a)->default_val(0.0);
  cmp->add_option("--b", vr.b)->default_val(1.0);
  cmp->add_option("--c", vr.c)->default_val(0.5);
  cmp->add_option("--alpha", vr.alpha)->default_val(1.0);
  cmp->add_option("--scale", v_scale, "Test function = scale * comparison spline")->default_val(1.0);
  cmp->add_option("--shift", v_shift, "Test function = spline(t + shift)")->default_val(0.0);
  cmp->add_option("--sine", v_sine, "Test function = A sin(nu t), given as A,nu");
  cmp->add_option("--grid", v_grid)->default_val(2000);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Tolerances tol = tolerances_from_env();
    Sink sink(out, out_path);
    auto& os = sink.get();

    if (*spline) return cmd_spline(sp, samples, os);

    if (*constant) {
      Json j;
      if (*c_kolm) {
        j = Json{{"value", kolmogorov_constant(ck, cr)}, {"method", "favard_ratio"}, {"k", ck}, {"r", cr}};
      } else if (*c_drag) {
        const auto d = dragomir(eta, tol);
        j = Json{{"value", d.value}, {"method", d.method}, {"eta", eta}, {"power_law_spread", d.spread}};
      } else {
        if (fr < 0) throw BadOrders("r must be non-negative");
        j = Json{{"value", favard_norm(fr)}, {"method", "spline_extremum"}, {"series", favard_series(fr)}, {"r", fr}};
      }
      j["tolerances"] = tolerances_json(tol);
      write_json(os, j);
      return 0;
    }

    if (*adm) return cmd_admissible(parse_orders(a_orders), parse_values(a_values), tol, os);

    if (*mod) {
      const OrderVector kk(parse_orders(m_orders));
      if (m_spec.empty() && m_config.empty()) throw InvalidParams("modulus needs --spec or --config");
      const ClassSpec spec = m_config.empty() ? parse_spec(m_spec) : parse_spec_json(read_config(m_config));
      const auto res = modulus(kk, spec, m_delta, tol);
      Json j{{"omega", res.omega},
             {"delta", res.delta},
             {"orders", std::vector<int>(kk.entries().begin(), kk.entries().end())},
             {"spec", spec.str()},
             {"argmax", params_json(res.argmax)},
             {"attained", res.attained},
             {"profile_maxima", res.profile_maxima},
             {"evaluations", res.evaluations}};
      write_json(os, j);
      return 0;
    }

    if (*cmp) {
      if (v_grid < 1) throw InvalidParams("grid must be positive");
      std::optional<TestFunction> subject;
      if (!v_sine.empty()) {
        const auto parts = parse_values(v_sine);
        if (parts.size() != 2) throw InvalidParams("--sine expects A,nu");
        subject = TestFunction::sine(parts[0], parts[1]);
      }
      if (!(v_scale > 0)) throw InvalidParams("scale must be positive");
      ComparisonReport rep;
      Json head;
      if (v_case == "euler") {
        ve.validate();
        if (!subject) subject = TestFunction::spline(build_euler(ve, tol).scaled(v_scale), v_shift);
        rep = verify_comparison_euler(*subject, ve, v_grid, Exec::Parallel, tol);
        head = Json{{"case", "euler"}, {"lambda", ve.lambda}, {"r", ve.r}, {"amplitude", ve.amplitude}};
      } else {
        const OrderVector kk(parse_orders(v_orders));
        vr.s = kk.r();
        if (kk.kind() == FamilyKind::GapPair) vr.a = 0;
        if (kk.kind() == FamilyKind::TopPair) vr.c = 0;
        if (!subject) subject = TestFunction::spline(build_rodov(vr, tol).scaled(v_scale), v_shift);
        rep = verify_comparison_rodov(*subject, kk, vr, v_grid, Exec::Parallel, tol);
        head = Json{{"case", "rodov"}, {"orders", v_orders}, {"params", params_json(vr)}};
      }
      head["report"] = report_json(rep);
      write_json(os, head);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace kolmo::cli
