#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "cache.hpp"
#include "jk/jack.hpp"

namespace jk::cli {

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string mu, lambda;
  int n = -1;
  int rmax = -1;
  std::string mode = "alpha";
  std::string zeta, eta, alpha;
  bool independent_beta = false;
  std::string format = "text";
  std::string out, cache_dir, claims, golden;
  std::string ij, side = "R", scale = "r", engine = "interpolation";
};

Rational parse_rational(const std::string& flag, const std::string& s) {
  static const std::regex re(R"(\s*(-?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError(flag + ": not a rational number: " + s);
  Integer num(m[1].str()), den(m[2].matched ? m[2].str() : "1");
  if (den == 0) throw UsageError(flag + ": zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Partition parse_partition(const std::string& flag, const std::string& s) {
  try {
    return Partition::parse(s);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": not a partition: " + s);
  }
}

std::string parts_text(const Partition& p, char sep) {
  std::string s;
  for (int x : p.parts()) s += (s.empty() ? "" : std::string(1, sep)) + std::to_string(x);
  return s;
}

json parts_json(const Partition& p) { return json(p.parts()); }

// Numeric specialization requested on the command line.
struct Point {
  std::string mode = "alpha";
  std::optional<Rational> alpha, beta;
  std::optional<Rational> zeta, eta;
};

Point read_point(const Options& o) {
  Point p;
  p.mode = o.mode;
  if (o.mode == "alpha") {
    if (!o.zeta.empty() || !o.eta.empty()) throw UsageError("--zeta/--eta require --mode zeta-eta");
    if (!o.alpha.empty()) {
      p.alpha = parse_rational("--alpha", o.alpha);
      if (*p.alpha == 0) throw UsageError("--alpha must be nonzero");
      if (!o.independent_beta) p.beta = Rational(1 - *p.alpha);
    }
  } else {
    if (!o.alpha.empty()) throw UsageError("--alpha requires --mode alpha");
    if (o.zeta.empty() != o.eta.empty()) throw UsageError("--zeta and --eta go together");
    if (!o.zeta.empty()) {
      p.zeta = parse_rational("--zeta", o.zeta);
      p.eta = parse_rational("--eta", o.eta);
      if (*p.zeta == 0 || *p.eta == 0) throw UsageError("--zeta and --eta must be nonzero");
      p.alpha = Rational(-1 / (*p.zeta * *p.eta));
      p.beta = Rational(1 / *p.zeta + 1 / *p.eta);
    }
  }
  return p;
}

KPoly at_point(const KPoly& k, const Point& p) {
  if (!p.alpha) return k;
  const std::array<FieldElem, kVarCount> v{FieldElem(*p.alpha),
                                           p.beta ? FieldElem(*p.beta) : FieldElem::variable(Var::beta),
                                           FieldElem::variable(Var::zeta), FieldElem::variable(Var::eta)};
  KPoly out;
  for (const auto& [rho, c] : k.terms())
    out.add(rho, evaluate<FieldElem>(c.num(), v) / evaluate<FieldElem>(c.den(), v));
  return out;
}

void add_point(json& j, const Point& p) {
  if (p.zeta) {
    j["zeta"] = p.zeta->get_str();
    j["eta"] = p.eta->get_str();
  }
  if (p.alpha) j["alpha"] = p.alpha->get_str();
  if (p.beta) j["beta"] = p.beta->get_str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// Terms in display order: weight descending, then reverse lexicographic.
std::vector<std::pair<Partition, FieldElem>> ordered_terms(const KPoly& k) {
  std::vector<std::pair<Partition, FieldElem>> t(k.terms().begin(), k.terms().end());
  std::stable_sort(t.begin(), t.end(), [](const auto& x, const auto& y) {
    if (x.first.weight() != y.first.weight()) return x.first.weight() > y.first.weight();
    return y.first < x.first;
  });
  return t;
}

// m21 for parts below 10, m[12,1] otherwise.
std::string symfun_name(const Partition& kappa) {
  if (kappa.length() == 0) return "1";
  if (kappa.largest() >= 10) return "m[" + parts_text(kappa, ',') + "]";
  std::string s = "m";
  for (int x : kappa.parts()) s += std::to_string(x);
  return s;
}

std::string pretty_text(const Rational& x) { return x.get_str(); }
std::string pretty_text(const FieldElem& x) { return x.pretty(); }

std::string symfun_text(const SymFunFit& f) {
  std::vector<std::pair<Partition, Rational>> t(f.coeffs.begin(), f.coeffs.end());
  std::stable_sort(t.begin(), t.end(), [](const auto& x, const auto& y) {
    if (x.first.weight() != y.first.weight()) return x.first.weight() > y.first.weight();
    return y.first < x.first;
  });
  std::string s;
  for (const auto& [kappa, c] : t) {
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    std::string body = (a == 1 ? "" : a.get_str() + "*") + symfun_name(kappa);
    if (s.empty()) s = neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------

class Context {
 public:
  Context(const Options& o, std::ostream& err) : options(o), err_(err) {
    const char* env = std::getenv("KEROV_CACHE");
    const std::string dir = !o.cache_dir.empty() ? o.cache_dir : env ? env : "";
    if (!dir.empty()) cache_.emplace(dir, kEngineVersion, &err_);
    solver_.emplace(o.engine == "symbolic" ? Engine::symbolic : Engine::interpolation);
  }

  KerovSolver& solver() { return *solver_; }

  const KPoly& K(const Partition& mu) {
    const std::string key = "K " + mu.to_string() + " " + options.engine;
    bool hit = false;
    if (cache_ && !solver_->has(mu)) {
      if (auto p = cache_->get(key)) {
        try {
          solver_->seed(mu, rpoly_from_json(*p));
          hit = true;
        } catch (const std::invalid_argument& e) {
          err_ << "warning: ignoring cache entry for " << mu.to_string() << ": " << e.what() << "\n";
        }
      }
    }
    const bool had = solver_->has(mu);
    const KPoly& k = solver_->K(mu);
    if (cache_ && !hit && !had) cache_->put(key, rpoly_json(mu, "alpha", k));
    return k;
  }

  void rows(int r_max) {
    for (int r = 2; r <= r_max; ++r) K(Partition{r});
  }

  const Options& options;

 private:
  std::ostream& err_;
  std::optional<ResultCache> cache_;
  std::optional<KerovSolver> solver_;
};

// ---------------------------------------------------------------------------

template <class S>
std::string theta_output(int n, const Mode<S>& mode, const Point& p, const std::string& format) {
  ThetaTower<S> tower(mode);
  const auto& t = tower.table(n);
  std::ostringstream os;
  if (format == "json") {
    json j;
    j["n"] = n;
    j["mode"] = p.mode;
    add_point(j, p);
    j["entries"] = json::array();
    for (const auto& lam : t.partitions())
      for (const auto& rho : t.partitions())
        j["entries"].push_back({{"lambda", parts_json(lam)}, {"rho", parts_json(rho)}, {"value", pretty_text(t.at(lam, rho))}});
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "lambda,rho,value\n";
    for (const auto& lam : t.partitions())
      for (const auto& rho : t.partitions())
        os << parts_text(lam, ' ') << "," << parts_text(rho, ' ') << "," << csv_field(pretty_text(t.at(lam, rho))) << "\n";
  } else {
    for (const auto& lam : t.partitions())
      for (const auto& rho : t.partitions())
        os << "theta " << lam.to_string() << " " << rho.to_string() << " = " << pretty_text(t.at(lam, rho)) << "\n";
  }
  return os.str();
}

template <class S>
std::string cumulant_output(const Partition& lam, int n, const Mode<S>& mode, const Point& p, const std::string& format) {
  const auto m = moment_series(lam, n, mode);
  const auto [b, r] = cumulants_from_moments(m);
  std::ostringstream os;
  if (format == "json") {
    json arr = json::array();
    for (const auto* v : {&m, &b, &r}) {
      json j;
      j["lambda"] = parts_json(lam);
      j["kind"] = to_string(v->kind);
      j["mode"] = p.mode;
      add_point(j, p);
      j["values"] = json::array();
      for (int k = 1; k <= n; ++k) j["values"].push_back(pretty_text(v->values[k]));
      arr.push_back(j);
    }
    os << arr.dump(2) << "\n";
  } else if (format == "csv") {
    os << "kind,k,value\n";
    for (const auto* v : {&m, &b, &r})
      for (int k = 1; k <= n; ++k) os << to_string(v->kind) << "," << k << "," << csv_field(pretty_text(v->values[k])) << "\n";
  } else {
    for (const auto* v : {&m, &b, &r})
      for (int k = 1; k <= n; ++k) os << to_string(v->kind) << k << " = " << pretty_text(v->values[k]) << "\n";
  }
  return os.str();
}

std::string kpoly_output(const std::vector<std::pair<Partition, KPoly>>& items, const std::string& prefix,
                         const Point& p, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    if (items.size() == 1) {
      json j = rpoly_json(items[0].first, p.mode, items[0].second);
      add_point(j, p);
      os << j.dump(2) << "\n";
    } else {
      json arr = json::array();
      for (const auto& [mu, k] : items) {
        json j = rpoly_json(mu, p.mode, k);
        add_point(j, p);
        arr.push_back(j);
      }
      os << arr.dump(2) << "\n";
    }
  } else if (format == "csv") {
    os << "mu,rho,coef\n";
    for (const auto& [mu, k] : items)
      for (const auto& [rho, c] : ordered_terms(k))
        os << parts_text(mu, ' ') << "," << parts_text(rho, ' ') << "," << csv_field(coef_text(c)) << "\n";
  } else {
    for (const auto& [mu, k] : items) {
      if (items.size() > 1) os << prefix << parts_text(mu, ',') << " = ";
      os << render_text(k) << "\n";
    }
  }
  return os.str();
}

json terms_json(const RPoly<Rational>& p) {
  json arr = json::array();
  std::vector<std::pair<Partition, Rational>> t(p.terms().begin(), p.terms().end());
  std::stable_sort(t.begin(), t.end(), [](const auto& x, const auto& y) {
    if (x.first.weight() != y.first.weight()) return x.first.weight() > y.first.weight();
    return y.first < x.first;
  });
  for (const auto& [rho, c] : t) arr.push_back({{"rho", parts_json(rho)}, {"coef", c.get_str()}});
  return arr;
}

// ---------------------------------------------------------------------------

struct Golden {
  bool tilde = false;
  Partition mu;
  KPoly value;
  int line = 0;
};

std::vector<Golden> read_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read golden file " + path);
  static const std::regex re(R"(\s*(Kt|K)\s*\[([0-9, ]+)\]\s*=\s*(.+?)\s*)");
  std::vector<Golden> out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::smatch m;
    if (!std::regex_match(line, m, re)) throw std::invalid_argument(path + ":" + std::to_string(no) + ": malformed line");
    out.push_back({m[1] == "Kt", Partition::parse(m[2].str()), parse_kpoly(m[3].str()), no});
  }
  return out;
}

int run_verify(Context& ctx, std::string& text) {
  const Options& o = ctx.options;
  VerifyConfig config;
  if (o.rmax >= 0) config.r_max = o.rmax;
  if (!o.claims.empty()) {
    std::stringstream ss(o.claims);
    std::string id;
    while (std::getline(ss, id, ',')) {
      const auto& cat = claim_catalog();
      if (std::none_of(cat.begin(), cat.end(), [&](const auto& e) { return e.first == id; }))
        throw UsageError("--claims: unknown claim " + id);
      config.claims.push_back(id);
    }
  }
  ctx.rows(config.r_max);
  auto results = verify(ctx.solver(), config);
  if (!o.golden.empty()) {
    for (const auto& g : read_golden(o.golden)) {
      const std::string id = std::string(g.tilde ? "golden Kt" : "golden K") + g.mu.to_string();
      const KPoly& got = g.tilde ? ctx.solver().tilde(g.mu) : ctx.K(g.mu);
      ClaimResult r{id, o.golden + ":" + std::to_string(g.line), CheckStatus::pass, ""};
      if (!(got == g.value)) {
        r.status = CheckStatus::fail;
        r.witness = "computed " + render_text(got) + "; file has " + render_text(g.value);
      }
      results.push_back(r);
    }
  }
  bool failed = false;
  std::ostringstream os;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      json j{{"claim_id", r.id}, {"statement", r.statement}, {"status", to_string(r.status)}};
      if (!r.witness.empty()) j["witness"] = r.witness;
      arr.push_back(j);
    }
    os << arr.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "claim_id,status,witness\n";
    for (const auto& r : results) os << r.id << "," << to_string(r.status) << "," << csv_field(r.witness) << "\n";
  } else {
    for (const auto& r : results) {
      os << (r.status == CheckStatus::pass ? "PASS " : "FAIL ") << r.id << ": " << r.statement;
      if (!r.witness.empty()) os << " -- " << r.witness;
      os << "\n";
    }
  }
  for (const auto& r : results) failed = failed || r.status == CheckStatus::fail;
  text = os.str();
  return failed ? kVerificationFailure : kOk;
}

int run_fit(Context& ctx, std::string& text) {
  const Options& o = ctx.options;
  static const std::regex re(R"(\s*(\d+)\s*,\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(o.ij, m, re)) throw UsageError("--ij expects i,j");
  const int i = std::stoi(m[1]), j = std::stoi(m[2]);
  const int r_max = o.rmax >= 0 ? o.rmax : 9;
  if (r_max < 3) throw UsageError("--rmax must be at least 3 for fit");
  const FitSide side = o.side == "Q" ? FitSide::Q : FitSide::R;
  const FitScale scale = o.scale == "binomial" ? FitScale::binomial : FitScale::r;
  ctx.rows(r_max);
  std::map<int, RPoly<Rational>> comps;
  for (int r = 2; r <= r_max; ++r) {
    const auto g = grade(ctx.K(Partition{r}), r);
    const auto* p = g.find(i, j);
    comps[r] = p ? *p : RPoly<Rational>();
  }
  const std::string name = std::string(side == FitSide::R ? "f" : "g") + std::to_string(i) + std::to_string(j);
  std::ostringstream os;
  // Fit without the last row when that already has full rank, and use the
  // last row as a prediction check.
  std::optional<int> holdout;
  SymFunFit fit;
  try {
    auto head = comps;
    head.erase(r_max);
    fit = fit_structure_function(i, j, side, scale, head);
    holdout = r_max;
  } catch (const FitError&) {
    try {
      fit = fit_structure_function(i, j, side, scale, comps);
    } catch (const FitError& e) {
      if (o.format == "json") {
        json jj{{"function", name}, {"status", "fail"}, {"error", e.what()}, {"witness", e.witness()}};
        os << jj.dump(2) << "\n";
      } else {
        os << "fit " << name << " failed: " << e.what() << "; witness: " << e.witness() << "\n";
      }
      text = os.str();
      return kVerificationFailure;
    }
  }
  bool predicted = true;
  if (holdout) predicted = predict_component(fit, *holdout) == comps.at(*holdout);
  if (o.format == "json") {
    json jj{{"function", name},     {"i", i}, {"j", j}, {"side", o.side}, {"scale", o.scale},
            {"max_degree", fit.max_degree}, {"r_used", fit.r_used}};
    jj["holdout"] = holdout ? json(*holdout) : json(nullptr);
    jj["status"] = predicted ? "pass" : "fail";
    json coeffs = json::array();
    for (const auto& [kappa, c] : fit.coeffs) coeffs.push_back({{"kappa", parts_json(kappa)}, {"coef", c.get_str()}});
    jj["coeffs"] = coeffs;
    os << jj.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "kappa,coef\n";
    for (const auto& [kappa, c] : fit.coeffs) os << parts_text(kappa, ' ') << "," << c.get_str() << "\n";
  } else {
    os << name << " = " << symfun_text(fit) << "\n";
    os << "scale " << (scale == FitScale::r ? "r" : "binomial(r+1,3)") << ", degree <= " << fit.max_degree << ", rows r = "
       << fit.r_used.front() << ".." << fit.r_used.back() << "\n";
    if (holdout) os << "prediction for r = " << *holdout << ": " << (predicted ? "ok" : "MISMATCH") << "\n";
  }
  text = os.str();
  return predicted ? kOk : kVerificationFailure;
}

int dispatch(const std::string& verb, const Options& o, std::ostream& err, std::string& text) {
  Context ctx(o, err);
  const Point p = read_point(o);
  if (verb == "theta") {
    if (o.n < 0) throw UsageError("--n is required");
    if (p.alpha) {
      const auto mode = p.zeta ? Mode<Rational>::zeta_eta_mode(*p.zeta, *p.eta) : Mode<Rational>::alpha_mode(*p.alpha);
      text = theta_output(o.n, mode, p, o.format);
    } else {
      text = theta_output(o.n, o.mode == "alpha" ? symbolic_alpha_mode() : symbolic_zeta_eta_mode(), p, o.format);
    }
    return kOk;
  }
  if (verb == "cumulants") {
    const Partition lam = parse_partition("--lambda", o.lambda);
    const int n = o.n >= 0 ? o.n : 4;
    if (n < 1) throw UsageError("--n must be positive");
    if (p.alpha) {
      const auto mode = p.zeta ? Mode<Rational>::zeta_eta_mode(*p.zeta, *p.eta) : Mode<Rational>::alpha_mode(*p.alpha);
      text = cumulant_output(lam, n, mode, p, o.format);
    } else {
      text = cumulant_output(lam, n, o.mode == "alpha" ? symbolic_alpha_mode() : symbolic_zeta_eta_mode(), p, o.format);
    }
    return kOk;
  }
  if (verb == "kerov" || verb == "kerov-tilde") {
    const Partition mu = parse_partition("--mu", o.mu);
    const KPoly k = verb == "kerov" ? ctx.K(mu) : ctx.solver().tilde(mu);
    text = kpoly_output({{mu, at_point(k, p)}}, "K", p, o.format);
    return kOk;
  }
  if (verb == "table") {
    if (o.rmax < 2) throw UsageError("--rmax must be at least 2");
    std::vector<std::pair<Partition, KPoly>> items;
    for (int r = 2; r <= o.rmax; ++r) items.emplace_back(Partition{r}, at_point(ctx.K(Partition{r}), p));
    text = kpoly_output(items, "K", p, o.format);
    return kOk;
  }
  if (verb == "grade" || verb == "qc") {
    const Partition mu = parse_partition("--mu", o.mu);
    const int top = mu.weight() - mu.length() + 1;
    const auto g = grade(ctx.K(mu), top);
    std::ostringstream os;
    if (o.format == "json") {
      json j;
      j["mu"] = parts_json(mu);
      j["top"] = top;
      j["components"] = json::array();
      for (const auto& c : g.components) {
        json cj{{"i", c.i}, {"j", c.j}, {"weight", top + 1 - 2 * c.i + c.j}, {"R", terms_json(c.poly)}};
        if (verb == "qc") {
          cj["Q"] = terms_json(change_basis(c.poly, Basis::R, Basis::Q));
          cj["C"] = terms_json(change_basis(c.poly, Basis::R, Basis::C));
        }
        j["components"].push_back(cj);
      }
      j["violations"] = g.violations;
      os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
      os << "i,j,basis,rho,coef\n";
      for (const auto& c : g.components)
        for (Basis b : verb == "qc" ? std::vector<Basis>{Basis::R, Basis::Q, Basis::C} : std::vector<Basis>{Basis::R})
          for (const auto& [rho, q] : change_basis(c.poly, Basis::R, b).terms())
            os << c.i << "," << c.j << "," << to_string(b) << "," << parts_text(rho, ' ') << "," << q.get_str() << "\n";
    } else {
      for (const auto& c : g.components) {
        const std::string tag = "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
        if (verb == "grade") {
          os << tag << " weight " << top + 1 - 2 * c.i + c.j << ": " << render_terms(c.poly) << "\n";
        } else {
          os << tag << " R: " << render_terms(c.poly) << "\n";
          os << tag << " Q: " << render_terms(change_basis(c.poly, Basis::R, Basis::Q), 'Q') << "\n";
          os << tag << " C: " << render_terms(change_basis(c.poly, Basis::R, Basis::C), 'C') << "\n";
        }
      }
      for (const auto& v : g.violations) os << "violation: " << v << "\n";
    }
    text = os.str();
    return g.violations.empty() ? kOk : kVerificationFailure;
  }
  if (verb == "content-fit") {
    const Partition mu = parse_partition("--mu", o.mu);
    const int pool = o.n >= 0 ? o.n : mu.weight() + 3;
    const auto f = content_fit(mu, pool);
    bool integral = true;
    for (const auto& [key, c] : f.coeffs) integral = integral && integer_polynomial(c);
    std::ostringstream os;
    if (o.format == "json") {
      json j;
      j["mu"] = parts_json(mu);
      j["terms"] = json::array();
      for (const auto& [key, c] : f.coeffs)
        j["terms"].push_back({{"binomial", key.first}, {"p", parts_json(key.second)}, {"coef", coef_text(c)}});
      j["integral"] = integral;
      os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
      os << "binomial,p,coef\n";
      for (const auto& [key, c] : f.coeffs)
        os << key.first << "," << parts_text(key.second, ' ') << "," << csv_field(coef_text(c)) << "\n";
    } else {
      os << to_text(f) << "\n";
      if (!integral) os << "warning: non-integral coefficient\n";
    }
    text = os.str();
    return integral ? kOk : kVerificationFailure;
  }
  if (verb == "fit") return run_fit(ctx, text);
  if (verb == "verify") return run_verify(ctx, text);
  throw UsageError("unknown verb " + verb);
}

}  // namespace

std::string coef_text(const FieldElem& c) {
  if (c.den().is_constant() && c.den().constant_value() == 1) return c.num().pretty();
  return c.to_text();
}

json rpoly_json(const Partition& mu, const std::string& mode, const KPoly& k) {
  json j;
  j["mu"] = parts_json(mu);
  j["mode"] = mode;
  j["terms"] = json::array();
  for (const auto& [rho, c] : ordered_terms(k)) j["terms"].push_back({{"rho", parts_json(rho)}, {"coef", coef_text(c)}});
  return j;
}

KPoly rpoly_from_json(const json& j) {
  try {
    KPoly out;
    for (const auto& t : j.at("terms")) {
      const Partition rho = Partition::from_unsorted(t.at("rho").get<std::vector<int>>());
      out.add(rho, FieldElem::parse(t.at("coef").get<std::string>()));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Jack characters and Kerov polynomials with exact arithmetic", "kerov"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    s->add_option("--out", o.out, "Write output to this file");
  };
  auto point = [&](CLI::App* s) {
    s->add_option("--mode", o.mode, "Parametrization")->check(CLI::IsMember({"alpha", "zeta-eta"}));
    s->add_option("--alpha", o.alpha, "Specialize alpha (beta = 1 - alpha unless --independent-beta)");
    s->add_option("--zeta", o.zeta, "Specialize zeta (with --eta)");
    s->add_option("--eta", o.eta, "Specialize eta (with --zeta)");
  };
  auto cached = [&](CLI::App* s) {
    s->add_option("--cache-dir", o.cache_dir, "Result cache directory (default: $KEROV_CACHE)");
    s->add_option("--engine", o.engine, "Kerov solver")->check(CLI::IsMember({"interpolation", "symbolic"}));
  };
  std::map<std::string, CLI::App*> verbs;
  auto* theta = verbs["theta"] = app.add_subcommand("theta", "theta^lambda_rho for all partitions of weight n");
  theta->add_option("--n", o.n, "Weight")->required()->check(CLI::Range(0, 30));
  point(theta);
  common(theta);
  auto* cum = verbs["cumulants"] = app.add_subcommand("cumulants", "Moments, Boolean and free cumulants of a diagram");
  cum->add_option("--lambda", o.lambda, "Partition, e.g. 3,1")->required();
  cum->add_option("--n", o.n, "Number of terms (default 4)")->check(CLI::Range(1, 60));
  point(cum);
  common(cum);
  for (const char* v : {"kerov", "kerov-tilde"}) {
    auto* s = verbs[v] = app.add_subcommand(v, std::string(v) == "kerov" ? "K_mu in free cumulants"
                                                                         : "The connected variant of K_mu");
    s->add_option("--mu", o.mu, "Partition without parts 1, e.g. 2,2")->required();
    point(s);
    s->add_flag("--independent-beta", o.independent_beta, "Keep beta free when specializing alpha");
    cached(s);
    common(s);
  }
  auto* grade_v = verbs["grade"] = app.add_subcommand("grade", "Components K^(i,j) by powers of alpha and beta");
  auto* qc = verbs["qc"] = app.add_subcommand("qc", "Graded components in the R, Q and C bases");
  for (auto* s : {grade_v, qc}) {
    s->add_option("--mu", o.mu, "Partition without parts 1")->required();
    cached(s);
    common(s);
  }
  auto* fit = verbs["fit"] = app.add_subcommand("fit", "Fit the symmetric function of a graded component");
  fit->add_option("--ij", o.ij, "Component, e.g. 2,2")->required();
  fit->add_option("--side", o.side, "R or Q basis")->check(CLI::IsMember({"R", "Q"}));
  fit->add_option("--scale", o.scale, "Row factor r or binomial(r+1,3)")->check(CLI::IsMember({"r", "binomial"}));
  fit->add_option("--rmax", o.rmax, "Largest row used (default 9)")->check(CLI::Range(2, 30));
  cached(fit);
  common(fit);
  auto* cf = verbs["content-fit"] = app.add_subcommand("content-fit", "vartheta_mu in powers of contents");
  cf->add_option("--mu", o.mu, "Partition without parts 1")->required();
  cf->add_option("--n", o.n, "Largest |lambda| in the pool (default |mu| + 3)")->check(CLI::Range(1, 20));
  common(cf);
  auto* ver = verbs["verify"] = app.add_subcommand("verify", "Check the claims over K_2..K_rmax");
  ver->add_option("--claims", o.claims, "Comma-separated claim ids (default: all)");
  ver->add_option("--rmax", o.rmax, "Largest row (default 9)")->check(CLI::Range(2, 30));
  ver->add_option("--golden", o.golden, "File of lines K[mu] = ... or Kt[mu] = ... to compare");
  cached(ver);
  common(ver);
  auto* table = verbs["table"] = app.add_subcommand("table", "K_2..K_rmax in display form");
  table->add_option("--rmax", o.rmax, "Largest row")->required()->check(CLI::Range(2, 30));
  point(table);
  table->add_flag("--independent-beta", o.independent_beta, "Keep beta free when specializing alpha");
  cached(table);
  common(table);
  auto* claims = app.add_subcommand("claims", "List the claim ids accepted by verify");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (claims->parsed()) {
    for (const auto& [id, statement] : claim_catalog()) out << id << ": " << statement << "\n";
    return kOk;
  }
  std::string verb;
  for (const auto& [name, s] : verbs)
    if (s->parsed()) verb = name;

  std::string text;
  int code = kOk;
  try {
    code = dispatch(verb, o, err, text);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FitError& e) {
    err << "error: " << e.what() << " (" << e.witness() << ")\n";
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
    f << text;
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return kDomainError;
    }
  }
  return code;
}

}  // namespace jk::cli
