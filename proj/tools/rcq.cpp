// rcq: exact computations and machine-checked identities from the command line.
//
// Exit status: 0 when every check passes, 1 on a verification failure,
// 2 on malformed input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "rcq/fedosov.hpp"
#include "rcq/geometry.hpp"
#include "rcq/json_io.hpp"
#include "rcq/poisson.hpp"
#include "rcq/suites.hpp"

using namespace rcq;

namespace {

constexpr int kOk = 0, kFailed = 1, kMalformed = 2;

struct Common {
  std::string format = "text";
  std::string report;
  std::uint64_t seed = 7;
  std::optional<int> order, prec, samples;
  int germ_order = kDefaultGermOrder;
  std::string mu;
};

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

// "-" is stdin, text starting with { or [ is inline JSON, anything else a path
Json read_json_arg(const std::string& arg) {
  if (arg == "-") return parse_json(slurp(std::cin));
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return parse_json(arg);
  std::ifstream f(arg);
  if (!f) throw InputError("cannot read '" + arg + "'");
  return parse_json(slurp(f));
}

LaurentPoly2 read_mu(const std::string& arg) {
  if (arg.empty()) return LaurentPoly2();
  return connection_mu_from_json(read_json_arg(arg));
}

void emit(const Common& c, const Json& j, const std::string& text) {
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  if (!c.report.empty()) write_atomically(c.report, j.dump(2) + "\n");
}

// words such as "X Y d2" or "X*Y*d2"
H1Element parse_h1(const std::string& arg) {
  if (arg == "-" || (!arg.empty() && arg[0] == '{')) return h1_from_json(read_json_arg(arg));
  std::string s = arg;
  std::replace(s.begin(), s.end(), '*', ' ');
  std::istringstream in(s);
  std::vector<Generator> word;
  std::string tok;
  while (in >> tok) {
    if (tok == "X") {
      word.push_back(Generator::X());
    } else if (tok == "Y") {
      word.push_back(Generator::Y());
    } else if (tok.size() > 1 && tok[0] == 'd' && std::all_of(tok.begin() + 1, tok.end(), ::isdigit)) {
      int n = std::stoi(tok.substr(1));
      if (n < 1) throw InputError("delta index must be positive");
      word.push_back(Generator::delta(n));
    } else {
      throw InputError("unknown generator '" + tok + "' (use X, Y, d1, d2, ...)");
    }
  }
  return pbw_normalize(word);
}

SuiteConfig suite_config(const Common& c) {
  SuiteConfig s;
  s.order = c.order;
  s.prec = c.prec;
  s.samples = c.samples;
  s.seed = c.seed;
  s.germ_order = c.germ_order;
  if (!c.mu.empty()) s.mu = read_mu(c.mu);
  return s;
}

int finish_reports(const Common& c, const std::vector<VerificationReport>& reps, const std::string& label) {
  bool ok = true;
  Json all = Json::array();
  std::string text;
  for (const auto& r : reps) {
    ok = ok && r.passed();
    all.push_back(r.to_json());
    text += r.to_text();
  }
  Json out = reps.size() == 1 ? all[0] : Json::object({{"schema", kReportSchema},
                                                       {"suite", label},
                                                       {"reports", all},
                                                       {"summary", {{"status", ok ? "PASS" : "FAIL"}}}});
  emit(c, out, text);
  return ok ? kOk : kFailed;
}

int run_verify(const Common& c, const std::string& suite, const std::string& replay, const std::string& case_id) {
  if (!replay.empty()) {
    Json j = read_json_arg(replay);
    std::vector<Json> targets;
    auto collect = [&targets, &case_id](const Json& rep) {
      for (const auto& cs : rep.at("cases"))
        if ((!case_id.empty() && cs.at("id") == case_id) || (case_id.empty() && cs.at("status") == "FAIL"))
          targets.push_back(Json::object({{"suite", rep.at("suite")},
                                          {"config", rep.at("config").value("requested", Json::object())},
                                          {"id", cs.at("id")}}));
    };
    if (j.contains("replay")) j = j.at("replay");
    if (j.contains("reports"))
      for (const auto& r : j.at("reports")) collect(r);
    else if (j.contains("cases"))
      collect(j);
    else if (j.contains("suite") && j.contains("id"))
      targets.push_back(j);
    else
      throw InputError("replay file is neither a report nor a case witness");
    if (targets.empty()) {
      std::cout << "nothing to replay\n";
      return kOk;
    }
    std::vector<VerificationReport> reps;
    for (const auto& t : targets) {
      Suite s = build_suite(t.at("suite").get<std::string>(), SuiteConfig::from_json(t.value("config", Json::object())));
      reps.push_back(run_suite(s, t.at("id").get<std::string>()));
    }
    return finish_reports(c, reps, "replay");
  }
  SuiteConfig cfg = suite_config(c);
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names = {canonical_suite(suite)};
  std::vector<VerificationReport> reps;
  for (const auto& n : names) {
    Suite s = build_suite(n, cfg);
    reps.push_back(run_suite(s, case_id.empty() ? std::nullopt : std::optional<std::string>(case_id)));
  }
  return finish_reports(c, reps, suite);
}

int run_star(const Common& c, const std::string& fa, const std::string& ga) {
  int order = c.order.value_or(6);
  LaurentPoly2 mu = read_mu(c.mu);
  Json jf = read_json_arg(fa), jg = read_json_arg(ga);
  std::ostringstream os;
  Json out;
  if (jf.value("type", "") == "crossed" || jg.value("type", "") == "crossed") {
    auto r = crossed_star(crossed_from_json(jf), crossed_from_json(jg), mu, order);
    out = to_json(r);
    for (int k = 0; k <= order; ++k) os << "hbar^" << k << ": " << r[k].to_string() << "\n";
  } else {
    auto r = fedosov_star(laurent_from_json(jf), laurent_from_json(jg), mu, order);
    out = to_json(r);
    for (int k = 0; k <= order; ++k) os << "hbar^" << k << ": " << r[k] << "\n";
  }
  out["connection"] = connection_to_json(mu);
  emit(c, out, os.str());
  return kOk;
}

int run_flat(const Common& c, const std::string& fa, int degree) {
  LaurentPoly2 mu = read_mu(c.mu);
  FlatSection fs = flat_section(laurent_from_json(read_json_arg(fa)), mu, degree);
  Json coeffs = Json::array();
  std::ostringstream os;
  for (const auto& [mn, f] : fs.table()) {
    coeffs.push_back(Json::object({{"m", mn.first}, {"n", mn.second}, {"a", to_json(f)}}));
    os << "a[" << mn.first << "," << mn.second << "] = " << f << "\n";
  }
  bool ok = fs.satisfies_recursions() && fs.satisfies_closed_form();
  os << "recursions and closed form: " << (ok ? "PASS" : "FAIL") << "\n";
  Json out = Json::object({{"type", "flat-section"},
                           {"degree", degree},
                           {"connection", connection_to_json(mu)},
                           {"coefficients", coeffs},
                           {"checks", ok ? "PASS" : "FAIL"}});
  emit(c, out, os.str());
  return ok ? kOk : kFailed;
}

int run_rc(const Common& c, const std::vector<std::string>& args) {
  int order = c.order.value_or(2);
  std::ostringstream os;
  if (args.empty()) {
    Json out = Json::array();
    for (int n = 0; n <= order; ++n) {
      H1Tensor t = rc_h1(n);
      out.push_back(to_json(t));
      os << "RC_" << n << " = " << t.to_string() << "\n";
    }
    emit(c, out, os.str());
    return kOk;
  }
  if (args.size() != 2) throw InputError("rc takes two elements");
  LaurentPoly2 mu = read_mu(c.mu);
  CrossedElement a = crossed_from_json(read_json_arg(args[0])), b = crossed_from_json(read_json_arg(args[1]));
  auto v = rc_evaluate(rc_element(order), a, b, omega_from_mu(mu));
  Json out = to_json(v);
  out["omega"] = to_json(omega_from_mu(mu));
  out["scale"] = to_json(rc_hbar_scale());
  for (int n = 0; n <= order; ++n) os << "chi(RC_" << n << ")(a, b) = " << v[n].to_string() << "\n";
  emit(c, out, os.str());
  return kOk;
}

ModularForm read_form(const std::string& arg, int prec) {
  if (arg == "1") return ModularForm(QSeries::constant(1, prec), 0);
  if (arg == "-" || (!arg.empty() && arg[0] == '{')) {
    ModularForm f = modular_from_json(read_json_arg(arg));
    if (f.precision() < prec) throw InputError("form is known to lower q-precision than requested");
    return ModularForm(f.q.truncated(prec), f.weight);
  }
  return named_form(arg, prec);
}

int run_modular(const Common& c, const std::string& what, int n, const std::vector<std::string>& forms) {
  std::ostringstream os;
  if (what == "rc") {
    int prec = c.prec.value_or(20);
    if (forms.size() != 2) throw InputError("modular rc takes two forms");
    ModularForm r = rc_modular(n, read_form(forms[0], prec), read_form(forms[1], prec));
    Json out = Json::object({{"n", n}, {"result", to_json(r)}});
    os << "RC_" << n << "(" << forms[0] << ", " << forms[1] << ") = " << r.to_string(10) << "  (weight " << r.weight
       << ")\n";
    auto coords = modular_coordinates(r.q, r.weight);
    if (coords) {
      Json cj = Json::array();
      auto basis = modular_basis_exponents(r.weight);
      for (size_t i = 0; i < coords->size(); ++i)
        cj.push_back(Json::object({{"E4", basis[i].first}, {"E6", basis[i].second}, {"c", rational_to_json((*coords)[i])}}));
      out["coordinates"] = cj;
      if (r.weight == 12) {
        ModularForm d = delta_form(prec);
        if (r.q == d.q * r.q[1]) {
          out["delta_constant"] = rational_to_json(r.q[1]);
          os << "= " << r.q[1] << " * Delta\n";
        }
      }
    } else {
      out["coordinates"] = nullptr;
      out["witness"] = Json::object({{"weight", r.weight},
                                     {"prec", prec},
                                     {"reason", "no combination of E4^a E6^b matches through this precision"}});
      os << "not in the space of modular forms of weight " << r.weight << " at this precision\n";
    }
    emit(c, out, os.str());
    return coords ? kOk : kFailed;
  }
  if (what == "assoc") {
    int prec = c.prec.value_or(30), order = c.order.value_or(4);
    if (forms.size() != 3) throw InputError("modular assoc takes three forms");
    auto res = zagier_assoc_check(read_form(forms[0], prec), read_form(forms[1], prec), read_form(forms[2], prec), order);
    Json cases = Json::array();
    bool ok = true;
    for (const auto& r : res) {
      ok = ok && r.equal;
      cases.push_back(Json::object({{"t", r.order}, {"equal", r.equal}, {"first_bad_q", r.first_bad}}));
      os << "t^" << r.order << ": " << (r.equal ? "equal" : "DIFFERENT at q^" + std::to_string(r.first_bad)) << "\n";
    }
    emit(c, Json::object({{"check", "zagier-assoc"}, {"order", order}, {"prec", prec}, {"cases", cases}}), os.str());
    return ok ? kOk : kFailed;
  }
  if (what == "form") {
    int prec = c.prec.value_or(20);
    if (forms.size() != 1) throw InputError("modular form takes one name");
    ModularForm f = read_form(forms[0], prec);
    emit(c, to_json(f), f.to_string(prec + 1) + "\n");
    return kOk;
  }
  throw InputError("unknown modular command '" + what + "' (rc, assoc, form)");
}

int run_hopf(const Common& c, const std::string& what, const std::string& arg) {
  H1Element h = parse_h1(arg);
  std::ostringstream os;
  Json out;
  if (what == "normalize") {
    out = to_json(h);
    os << h.to_string() << "\n";
  } else if (what == "coproduct") {
    H1Tensor t = coproduct(h);
    out = to_json(t);
    os << t.to_string() << "\n";
  } else if (what == "antipode") {
    H1Element s = antipode(h);
    out = to_json(s);
    os << s.to_string() << "\n";
  } else if (what == "counit") {
    Scalar e = counit(h);
    out = to_json(e);
    os << e << "\n";
  } else {
    throw InputError("unknown hopf command '" + what + "' (normalize, coproduct, antipode, counit)");
  }
  emit(c, out, os.str());
  return kOk;
}

int run_solve(const Common& c, int fresh, int max_y) {
  int n = c.samples.value_or(20);
  AlgebraConfig alg = affine_quadratic_config(c.germ_order);
  Sampler smp(c.seed);
  std::vector<std::array<CrossedElement, 3>> triples;
  for (int i = 0; i < n; ++i) triples.push_back({smp.element(alg), smp.element(alg), smp.element(alg)});
  auto basis = weight_two_basis(max_y);
  BoundingSolve sol = solve_bounding_cochain(basis, triples);
  std::ostringstream os;
  Json out = Json::object({{"check", "solve-b"},
                           {"seed", c.seed},
                           {"triples", n},
                           {"unknowns", sol.unknowns},
                           {"rank", sol.rank},
                           {"consistent", sol.consistent}});
  os << "span of " << sol.unknowns << " weight-two tensors, rank " << sol.rank << " (solutions differ by a " << sol.unknowns - sol.rank << "-dimensional kernel), "
     << (sol.consistent ? "consistent" : "INCONSISTENT") << "\n";
  if (!sol.consistent) {
    emit(c, out, os.str());
    return kFailed;
  }
  Cochain printed = b_prime() + b_double_prime();
  out["B"] = to_json(sol.b);
  out["difference_from_displayed"] = to_json(sol.b - printed);
  os << "B = " << sol.b.to_string() << "\n";
  os << "B - (B' + B'') = " << (sol.b - printed).to_string() << "\n";
  // the difference must be a cocycle on fresh samples; B itself must bound the defect
  bool ok = true;
  Json checks = Json::array();
  for (int i = 0; i < fresh; ++i) {
    CrossedElement a = smp.element(alg), b = smp.element(alg), cc = smp.element(alg);
    bool eq = hochschild_b(sol.b, a, b, cc) == associator_defect(a, b, cc);
    ok = ok && eq;
    checks.push_back(Json::object({{"triple", Json::array({to_json(a), to_json(b), to_json(cc)})}, {"equal", eq}}));
  }
  out["fresh_checks"] = checks;
  os << "fresh samples: " << (ok ? "PASS" : "FAIL") << " (" << fresh << ")\n";
  emit(c, out, os.str());
  return ok ? kOk : kFailed;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--report", c.report, "also write the JSON result to this file");
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--order", c.order, "hbar or bracket order");
  sub->add_option("--prec", c.prec, "q-precision");
  sub->add_option("--samples", c.samples, "random samples per configuration");
  sub->add_option("--germ-order", c.germ_order, "germ truncation order")->check(CLI::Range(1, 40));
  sub->add_option("--mu", c.mu, "connection: laurent JSON, {\"mu\": ...} JSON, file or -");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rcq: Rankin-Cohen brackets, Fedosov quantization and H1 actions, exactly"};
  app.require_subcommand(1);
  Common c;

  auto* star = app.add_subcommand("star", "Fedosov star product of two functions (or crossed elements)");
  std::string fa, ga;
  star->add_option("f", fa, "first factor")->required();
  star->add_option("g", ga, "second factor")->required();
  add_common(star, c);

  auto* flat = app.add_subcommand("flat-section", "flat section coefficients a_{m,n} of a function");
  int degree = 4;
  flat->add_option("--deg", degree, "total degree")->check(CLI::Range(0, 40));
  flat->add_option("f", fa, "function")->required();
  add_common(flat, c);

  auto* rc = app.add_subcommand("rc", "the Rankin-Cohen element: RC_n in H1 (x) H1 or its value on a, b");
  std::vector<std::string> rc_args;
  rc->add_option("elements", rc_args, "two elements (optional)");
  add_common(rc, c);

  auto* mod = app.add_subcommand("modular", "modular forms: rc, assoc, form");
  std::string mod_what;
  int mod_n = 1;
  std::vector<std::string> forms;
  mod->add_option("command", mod_what, "rc | assoc | form")->required();
  mod->add_option("--n", mod_n, "bracket index")->check(CLI::Range(0, 40));
  mod->add_option("forms", forms, "E2, E4, E6, Delta, 1 or modular JSON");
  add_common(mod, c);

  auto* hopf = app.add_subcommand("hopf", "H1: normalize, coproduct, antipode, counit");
  std::string hopf_what, hopf_arg;
  hopf->add_option("command", hopf_what, "normalize | coproduct | antipode | counit")->required();
  hopf->add_option("element", hopf_arg, "word such as \"X Y d2\" or H1 JSON")->required();
  add_common(hopf, c);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all", replay, case_id;
  verify->add_option("suite", suite, "suite name, criterion number or all");
  verify->add_option("--replay", replay, "report or witness JSON whose failing cases are rerun");
  verify->add_option("--case", case_id, "run a single case id");
  add_common(verify, c);

  auto* solve = app.add_subcommand("solve-b", "solve b(B) = [RC1, RC1] over weight-two tensors");
  int fresh = 5, max_y = 3;
  solve->add_option("--fresh", fresh, "fresh triples to re-verify the solution");
  solve->add_option("--max-y", max_y, "largest Y power in the search span");
  add_common(solve, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*star) return run_star(c, fa, ga);
    if (*flat) return run_flat(c, fa, degree);
    if (*rc) return run_rc(c, rc_args);
    if (*mod) return run_modular(c, mod_what, mod_n, forms);
    if (*hopf) return run_hopf(c, hopf_what, hopf_arg);
    if (*verify) return run_verify(c, suite, replay, case_id);
    if (*solve) return run_solve(c, fresh, max_y);
  } catch (const InputError& e) {
    std::cerr << "rcq: " << e.what() << "\n";
    return kMalformed;
  } catch (const MathError& e) {
    std::cerr << "rcq: " << e.what() << "\n";
    return kMalformed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "rcq: malformed input: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}
