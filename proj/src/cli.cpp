#include "sympbw/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympbw/decomp.hpp"
#include "sympbw/dyck.hpp"
#include "sympbw/grmod.hpp"
#include "sympbw/oracle.hpp"
#include "sympbw/polytope.hpp"
#include "sympbw/verify.hpp"

namespace sympbw {

namespace {

using json = nlohmann::json;

constexpr const char* kSchema = "sympbw/1";

constexpr const char* kConventions =
    "Weights are given as --lambda m_1,...,m_n in fundamental-weight coordinates.\n"
    "Multi-exponents list one entry per positive root in triangle reading order:\n"
    "a(1,1), a(1,2), ..., a(1,1bar), a(2,2), ..., a(n,n).\n"
    "Weights in output are offsets lambda - mu in simple-root coordinates.";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError(what + ": '" + text + "' is not a comma-separated integer list");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

DominantWeight parse_lambda(int n, const std::string& text, const std::string& flag = "--lambda") {
  auto m = parse_list(text, flag);
  if (static_cast<int>(m.size()) != n)
    throw UsageError(flag + " has " + std::to_string(m.size()) + " entries but --n is " + std::to_string(n));
  for (int v : m)
    if (v < 0) throw UsageError(flag + " entries must be non-negative");
  return DominantWeight(std::move(m));
}

json root_json(const PositiveRoot& r) { return json{{"row", r.row}, {"col", r.col.value()}, {"barred", r.col.barred()}}; }

json path_json(const DyckPath& p) {
  json a = json::array();
  for (const auto& r : p.roots) a.push_back(root_json(r));
  return a;
}

std::string labels(const DyckPath& p) {
  std::string s;
  for (const auto& r : p.roots) s += (s.empty() ? "" : " ") + r.label();
  return s;
}

json table_json(const GradedDimensionTable& t) {
  json a = json::array();
  for (const auto& [key, dim] : t.entries()) a.push_back(json{{"wt", key.first.coeffs}, {"degree", key.second}, {"dim", dim}});
  return a;
}

void table_rows(std::ostream& os, const GradedDimensionTable& t, int n, char sep) {
  for (int k = 1; k <= n; ++k) os << "mu_" << k << sep;
  os << "degree" << sep << "dim\n";
  for (const auto& [key, dim] : t.entries()) {
    for (int c : key.first.coeffs) os << c << sep;
    os << key.second << sep << dim << '\n';
  }
}

json terms_json(const Polynomial& p) {
  std::vector<std::pair<MultiExponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return monomial_compare(a.first, b.first) == std::strong_ordering::less; });
  json a = json::array();
  for (const auto& [s, c] : terms) a.push_back(json{{"s", s.coords()}, {"coeff", to_string(c)}});
  return a;
}

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

// What a subcommand produced; csv and text renderers are optional.
struct Output {
  json doc;
  std::function<void(std::ostream&)> csv;
  std::function<void(std::ostream&)> text;
  int exit_code = 0;
};

void emit(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << o.doc.dump(2) << '\n';
  } else if (format == "csv") {
    if (!o.csv) throw UsageError("--format csv is not available for this command");
    o.csv(out);
  } else {
    if (o.text) o.text(out);
    else out << o.doc.dump(2) << '\n';
  }
}

struct Flags {
  int n = 0;
  std::string lambda;
  std::string mu;
  std::string format = "json";
  std::string exponent;
  std::string variant = "chevalley";
  std::string suite = "all";
  std::string inject;
  int max_degree = -1;
  int max_n = 2;
  int max_weight = 3;
  std::uint64_t seed = 1;
  std::size_t cap = RepresentationSpace::kDefaultCap;
  std::size_t cell_cap = IdealQuotient::kDefaultCellCap;
  bool count_only = false;
  bool filtration = false;
  bool freudenthal = false;
};

Derivation parse_variant(const std::string& v) {
  if (v == "unit") return Derivation::unit;
  if (v == "chevalley") return Derivation::chevalley;
  return Derivation::adjoint;
}

Output cmd_roots(const Flags& f) {
  const auto& rs = root_system(f.n);
  Output o;
  json a = json::array();
  for (const auto& r : rs.roots()) a.push_back(root_json(r));
  o.doc = json{{"schema", kSchema}, {"n", f.n}, {"roots", a}};
  o.csv = [&rs](std::ostream& os) {
    os << "index,row,col,barred\n";
    for (std::size_t k = 0; k < rs.size(); ++k)
      os << k << ',' << rs.root(k).row << ',' << rs.root(k).col.value() << ',' << (rs.root(k).col.barred() ? 1 : 0) << '\n';
  };
  o.text = [&rs](std::ostream& os) {
    for (const auto& r : rs.roots()) os << r.label() << '\n';
  };
  return o;
}

Output cmd_paths(const Flags& f) {
  const auto paths = enumerate_paths(f.n);
  std::optional<DominantWeight> lambda;
  if (!f.lambda.empty()) lambda = parse_lambda(f.n, f.lambda);
  std::vector<int> bounds;
  if (lambda) {
    for (const auto& p : paths) bounds.push_back(path_bound(*lambda, p.roots.front(), p.end()));
  }
  Output o;
  json a = json::array();
  for (const auto& p : paths) a.push_back(path_json(p));
  o.doc = json{{"schema", kSchema}, {"n", f.n}, {"paths", a}};
  if (lambda) {
    o.doc["lambda"] = lambda->coeffs;
    o.doc["bounds"] = bounds;
  }
  o.text = [paths, bounds](std::ostream& os) {
    for (std::size_t k = 0; k < paths.size(); ++k) {
      os << labels(paths[k]);
      if (!bounds.empty()) os << " <= " << bounds[k];
      os << '\n';
    }
  };
  return o;
}

Output cmd_points(const Flags& f) {
  const auto lambda = parse_lambda(f.n, f.lambda);
  const Polytope poly(lambda);
  const auto& rs = root_system(f.n);
  const auto count = poly.count();
  Output o;
  o.doc = json{{"schema", kSchema}, {"lambda", lambda.coeffs}, {"count", count}};
  if (f.count_only) {
    o.csv = [count](std::ostream& os) { os << "count\n" << count << '\n'; };
    o.text = [count](std::ostream& os) { os << count << '\n'; };
    return o;
  }
  const auto points = poly.points();
  json a = json::array();
  for (const auto& s : points) a.push_back(json{{"s", s.coords()}, {"deg", s.degree()}, {"wt", weight_of(rs, s).coeffs}});
  o.doc["points"] = a;
  const int n = f.n;
  o.csv = [points, n, &rs](std::ostream& os) {
    for (std::size_t k = 1; k <= rs.size(); ++k) os << "s_" << k << ',';
    os << "deg";
    for (int k = 1; k <= n; ++k) os << ",wt_" << k;
    os << '\n';
    for (const auto& s : points) {
      for (int c : s.coords()) os << c << ',';
      os << s.degree();
      for (int c : weight_of(rs, s).coeffs) os << ',' << c;
      os << '\n';
    }
  };
  o.text = [points, &rs](std::ostream& os) {
    for (const auto& s : points) {
      os << "s=(";
      for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
      os << ") deg=" << s.degree() << " wt=(";
      const auto w = weight_of(rs, s).coeffs;
      for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
      os << ")\n";
    }
  };
  return o;
}

Output cmd_dim(const Flags& f) {
  const auto lambda = parse_lambda(f.n, f.lambda);
  const auto count = Polytope(lambda).count();
  const auto weyl = weyl_dim(lambda);
  const bool match = Integer(static_cast<unsigned long>(count)) == weyl;
  Output o;
  o.doc = json{{"schema", kSchema}, {"count", count}, {"weyl", integer_json(weyl)}, {"match", match}};
  o.csv = [count, weyl, match](std::ostream& os) {
    os << "count,weyl,match\n" << count << ',' << weyl.get_str() << ',' << (match ? "true" : "false") << '\n';
  };
  o.text = [count, weyl, match](std::ostream& os) {
    os << "count " << count << "\nweyl " << weyl.get_str() << "\nmatch " << (match ? "true" : "false") << '\n';
  };
  o.exit_code = match ? 0 : 1;
  return o;
}

Output cmd_char(const Flags& f) {
  const auto lambda = parse_lambda(f.n, f.lambda);
  const Character ch = f.freudenthal ? freudenthal_multiplicities(lambda) : character(lambda);
  Output o;
  json a = json::array();
  for (const auto& [w, m] : ch) a.push_back(json{{"wt", w.coeffs}, {"mult", m}});
  o.doc = json{{"schema", kSchema},
               {"lambda", lambda.coeffs},
               {"method", f.freudenthal ? "freudenthal" : "polytope"},
               {"character", a}};
  const int n = f.n;
  auto rows = [ch, n](std::ostream& os, char sep) {
    for (int k = 1; k <= n; ++k) os << "mu_" << k << sep;
    os << "mult\n";
    for (const auto& [w, m] : ch) {
      for (int c : w.coeffs) os << c << sep;
      os << m << '\n';
    }
  };
  o.csv = [rows](std::ostream& os) { rows(os, ','); };
  o.text = [rows](std::ostream& os) { rows(os, ' '); };
  return o;
}

Output table_output(json doc, const GradedDimensionTable& t, int n) {
  Output o;
  doc["table"] = table_json(t);
  o.doc = std::move(doc);
  o.csv = [t, n](std::ostream& os) { table_rows(os, t, n, ','); };
  o.text = [t, n](std::ostream& os) { table_rows(os, t, n, ' '); };
  return o;
}

Output cmd_graded_char(const Flags& f) {
  const auto lambda = parse_lambda(f.n, f.lambda);
  return table_output(json{{"schema", kSchema}, {"lambda", lambda.coeffs}}, graded_character(lambda), f.n);
}

Output cmd_ideal_dims(const Flags& f) {
  const auto lambda = parse_lambda(f.n, f.lambda);
  const int max_degree = f.max_degree >= 0 ? f.max_degree : Polytope(lambda).max_degree();
  const auto t = quotient_graded_dims(lambda, max_degree, parse_variant(f.variant), f.cell_cap);
  return table_output(json{{"schema", kSchema}, {"lambda", lambda.coeffs}, {"max_degree", max_degree}, {"variant", f.variant}},
                      t, f.n);
}

Output cmd_straighten(const Flags& f) {
  const auto lambda = parse_lambda(f.n, f.lambda);
  const auto coords = parse_list(f.exponent, "--exponent");
  if (coords.size() != static_cast<std::size_t>(f.n) * static_cast<std::size_t>(f.n))
    throw UsageError("--exponent needs n^2 = " + std::to_string(f.n * f.n) + " entries");
  for (int c : coords)
    if (c < 0) throw UsageError("--exponent entries must be non-negative");
  const MultiExponent s(coords);
  const Polytope poly(lambda);
  const auto violated = poly.first_violation(s);
  const auto nf = normal_form(Polynomial::monomial(s), lambda);

  Output o;
  o.doc = json{{"schema", kSchema}, {"lambda", lambda.coeffs}, {"s", coords}, {"in_polytope", !violated},
               {"normal_form", terms_json(nf)}};
  std::string text_head;
  if (violated) {
    const auto& ineq = poly.inequalities()[*violated];
    // the element needs s supported on the path; otherwise only the normal form is reported
    bool on_path = true;
    for (std::size_t k = 0; k < s.size(); ++k)
      if (s[k] != 0 && !ineq.path.contains(k)) on_path = false;
    o.doc["path"] = path_json(ineq.path);
    o.doc["bound"] = ineq.bound;
    if (on_path) {
      const auto e = straightening_element(lambda, ineq.path, s);
      o.doc["element"] = terms_json(e.element);
      o.doc["leading_coeff"] = to_string(e.leading_coeff);
    } else {
      o.doc["element"] = nullptr;
      o.doc["leading_coeff"] = nullptr;
    }
  } else {
    o.doc["path"] = nullptr;
    o.doc["bound"] = nullptr;
    o.doc["element"] = nullptr;
    o.doc["leading_coeff"] = nullptr;
  }
  o.text = [doc = o.doc](std::ostream& os) {
    auto terms = [&os](const json& a) {
      for (const auto& t : a) {
        os << "  " << t["coeff"].get<std::string>() << " * (";
        bool first = true;
        for (int c : t["s"]) {
          os << (first ? "" : ",") << c;
          first = false;
        }
        os << ")\n";
      }
    };
    os << "in_polytope " << (doc["in_polytope"].get<bool>() ? "true" : "false") << '\n';
    if (!doc["element"].is_null()) {
      os << "element (leading " << doc["leading_coeff"].get<std::string>() << ")\n";
      terms(doc["element"]);
    }
    os << "normal_form\n";
    terms(doc["normal_form"]);
  };
  return o;
}

Output cmd_oracle(const Flags& f) {
  const auto lambda = parse_lambda(f.n, f.lambda);
  const auto M = build_module(lambda, f.cap);
  json doc{{"schema", kSchema}, {"lambda", lambda.coeffs}, {"ambient_dim", M.ambient_dim()},
           {"dim", M.dim()}, {"max_level", M.max_level()}};
  if (f.filtration) return table_output(std::move(doc), pbw_filtration_dims(M), f.n);
  Output o;
  o.doc = std::move(doc);
  o.text = [d = o.doc](std::ostream& os) {
    os << "ambient_dim " << d["ambient_dim"] << "\ndim " << d["dim"] << "\nmax_level " << d["max_level"] << '\n';
  };
  return o;
}

Output cmd_tensor(const Flags& f) {
  const auto lambda = parse_lambda(f.n, f.lambda);
  const auto mu = parse_lambda(f.n, f.mu, "--mu");
  const auto t = tensor_cartan_dims(lambda, mu, f.cap);
  const bool match = t == pbw_filtration_dims(lambda + mu, f.cap);
  auto o = table_output(json{{"schema", kSchema}, {"lambda", lambda.coeffs}, {"mu", mu.coeffs}, {"total", t.total()},
                             {"matches_sum", match}},
                        t, f.n);
  o.exit_code = match ? 0 : 1;
  return o;
}

Output cmd_verify(const Flags& f) {
  VerifyOptions opt;
  opt.suite = f.suite;
  opt.max_n = f.max_n;
  opt.max_weight = f.max_weight;
  opt.seed = f.seed;
  opt.inject_failure = f.inject;
  const auto report = run_verification(opt);
  Output o;
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(json{{"name", c.name},
                          {"parameters", c.params},
                          {"status", c.pass() ? "pass" : "fail"},
                          {"expected", c.expected},
                          {"actual", c.agreeing},
                          {"cases", c.cases},
                          {"detail", c.detail}});
  }
  o.doc = json{{"schema", kSchema},
               {"checks", checks},
               {"summary", json{{"passed", report.passed()}, {"failed", report.failed()}, {"total", report.checks.size()}}}};
  o.csv = [report](std::ostream& os) {
    os << "name,status,cases,agreeing,expected\n";
    for (const auto& c : report.checks)
      os << c.name << ',' << (c.pass() ? "pass" : "fail") << ',' << c.cases << ',' << c.agreeing << ',' << c.expected << '\n';
  };
  o.text = [report](std::ostream& os) {
    for (const auto& c : report.checks) {
      os << (c.pass() ? "PASS " : "FAIL ") << c.name << ' ' << c.agreeing << '/' << c.expected << " [" << c.params << ']';
      if (!c.detail.empty()) os << " first mismatch: " << c.detail;
      os << '\n';
    }
    os << report.passed() << " passed, " << report.failed() << " failed\n";
  };
  o.exit_code = report.all_passed() ? 0 : 1;
  return o;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for PBW-graded symplectic modules.", "sympbw"};
  app.footer(kConventions);
  app.require_subcommand(1);
  Flags f;

  auto add_n = [&f](CLI::App* sub) { sub->add_option("--n", f.n, "rank n >= 1")->required()->check(CLI::Range(1, 64)); };
  auto add_lambda = [&f](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--lambda", f.lambda, "m_1,...,m_n");
    if (required) opt->required();
  };
  auto add_format = [&f](CLI::App* sub) {
    sub->add_option("--format", f.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  std::map<CLI::App*, std::function<Output(const Flags&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, std::function<Output(const Flags&)> run) {
    auto* s = app.add_subcommand(name, help);
    s->footer(kConventions);
    add_n(s);
    add_format(s);
    handlers[s] = std::move(run);
    return s;
  };

  sub("roots", "positive roots in triangle reading order", cmd_roots);
  add_lambda(sub("paths", "Dyck paths with optional bounds for --lambda", cmd_paths), false);
  auto* points = sub("points", "lattice points of P(lambda)", cmd_points);
  add_lambda(points, true);
  points->add_flag("--count-only", f.count_only, "only the number of points");
  add_lambda(sub("dim", "|S(lambda)| against the Weyl dimension", cmd_dim), true);
  auto* ch = sub("char", "character as weight multiplicities", cmd_char);
  add_lambda(ch, true);
  ch->add_flag("--freudenthal", f.freudenthal, "use Freudenthal's recursion instead of the polytope");
  add_lambda(sub("graded-char", "graded character of the polytope", cmd_graded_char), true);
  auto* ideal = sub("ideal-dims", "graded dimensions of S(n^-)/I(lambda)", cmd_ideal_dims);
  add_lambda(ideal, true);
  ideal->add_option("--max-degree", f.max_degree, "largest degree (default: top degree of P(lambda))");
  ideal->add_option("--variant", f.variant, "unit | chevalley | adjoint")
      ->check(CLI::IsMember({"unit", "chevalley", "adjoint"}));
  ideal->add_option("--cell-cap", f.cell_cap, "largest number of monomials in one (weight, degree) cell");
  auto* st = sub("straighten", "straightening element and normal form of f^s", cmd_straighten);
  add_lambda(st, true);
  st->add_option("--exponent", f.exponent, "s as c_1,...,c_{n^2} in triangle reading order")->required();
  auto* orc = sub("oracle", "explicit module U(n^-) v_lambda", cmd_oracle);
  add_lambda(orc, true);
  orc->add_flag("--filtration", f.filtration, "emit the PBW filtration table");
  orc->add_option("--cap", f.cap, "largest ambient dimension");
  auto* ten = sub("tensor", "graded span of v_lambda (x) v_mu", cmd_tensor);
  add_lambda(ten, true);
  ten->add_option("--mu", f.mu, "m_1,...,m_n")->required();
  ten->add_option("--cap", f.cap, "largest ambient dimension");

  auto* ver = app.add_subcommand("verify", "run the verification battery");
  ver->footer(kConventions);
  add_format(ver);
  std::vector<std::string> suites{"all"};
  for (const auto& s : verify_suites()) suites.push_back(s);
  ver->add_option("--suite", f.suite, "all | dimension | character | graded | straightening | order | derivation | "
                                      "peeling | cartan | basis")
      ->check(CLI::IsMember(suites));
  ver->add_option("--max-n", f.max_n, "largest rank")->check(CLI::Range(1, 8));
  ver->add_option("--max-weight", f.max_weight, "largest m_1 + ... + m_n")->check(CLI::Range(0, 16));
  ver->add_option("--seed", f.seed, "seed for random sampling");
  ver->add_option("--inject-failure", f.inject)->group("")->check(CLI::IsMember(verify_suites()));
  handlers[ver] = cmd_verify;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // prints help on request and the parse error otherwise
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  for (const auto& [s, run] : handlers) {
    if (!s->parsed()) continue;
    try {
      const Output o = run(f);
      emit(o, f.format, out);
      return o.exit_code;
    } catch (const UsageError& e) {
      err << "sympbw: " << e.what() << '\n';
      return 2;
    } catch (const InvalidArgument& e) {
      err << "sympbw: " << e.what() << '\n';
      return 2;
    } catch (const SizeLimitExceeded& e) {
      err << "sympbw: " << e.what() << " (raise the cap flag)\n";
      return 2;
    } catch (const std::exception& e) {
      err << "sympbw: internal check failed: " << e.what() << '\n';
      return 1;
    }
  }
  err << "sympbw: no subcommand\n";
  return 2;
}

}  // namespace sympbw
