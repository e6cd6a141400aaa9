#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <memory>
#include <sstream>

#include "pinched/cache.hpp"
#include "pinched/render.hpp"

namespace pinched {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 2;
  int d = 0;
  std::string m;
  int pinch = -1;
  std::string field = "GF(32003)";
  int i_max = -1;
  int s_max = -1;
  int threads = 1;
  std::string cache_dir;
  std::string format = "text";
  double budget = 2e8;
  std::string h;
  int expand = -1;
  int k = -1;
  std::string sweep;
  bool faces = false;
};

void add_config_options(CLI::App* sub, RunConfig& rc, bool need_d = true) {
  sub->add_option("-n", rc.n, "number of variables")->capture_default_str()->check(CLI::Range(2, 12));
  auto* d = sub->add_option("-d", rc.d, "degree of the Veronese generators")->check(CLI::Range(2, 64));
  if (need_d) d->required();
  auto* m = sub->add_option("--m", rc.m, "removed generator as a comma list, e.g. 2,1,0");
  auto* p = sub->add_option("--pinch", rc.pinch, "n = 2 only: remove m = (i, d-i)")->check(CLI::NonNegativeNumber);
  m->excludes(p);
}

void add_format_option(CLI::App* sub, RunConfig& rc) {
  sub->add_option("--format", rc.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

void add_engine_options(CLI::App* sub, RunConfig& rc) {
  sub->add_option("--field", rc.field, "coefficient field: QQ or a prime such as GF(2)")->capture_default_str();
  sub->add_option("--imax", rc.i_max, "largest homological degree (default N-2)");
  sub->add_option("--smax", rc.s_max,
                  "largest coarse degree scanned (default imax+3 for n = 2; required for tables when n >= 3)");
  sub->add_option("--threads", rc.threads, "worker threads")->capture_default_str()->check(CLI::Range(1, 256));
  sub->add_option("--cache-dir", rc.cache_dir,
                  std::string("homology cache directory (default $") + kCacheDirEnv + ", else no cache)");
  sub->add_option("--budget", rc.budget, "refuse scans whose subset estimate exceeds this")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

PinchConfig make_config(const RunConfig& rc) {
  if (rc.pinch >= 0) {
    if (rc.n != 2) throw UsageError("--pinch needs n = 2");
    if (rc.pinch > rc.d) throw UsageError("--pinch must lie in [0, d]");
    return PinchConfig::from_pinch_index(rc.d, rc.pinch);
  }
  if (rc.m.empty()) throw UsageError("give the removed generator with --m or --pinch");
  return PinchConfig(rc.n, rc.d, Multidegree::parse(rc.m));
}

FieldSpec make_field(const RunConfig& rc) { return FieldSpec::parse(rc.field); }

// Owns the per-config cache so the engine can borrow it.
struct Engine {
  EngineOptions options;
  std::unique_ptr<ResultCache> cache;

  Engine(const RunConfig& rc, const PinchConfig& config, const FieldSpec& field) {
    options.threads = rc.threads;
    options.subset_budget = rc.budget;
    if (auto dir = resolve_cache_dir(rc.cache_dir.empty() ? std::nullopt : std::optional(rc.cache_dir))) {
      cache = std::make_unique<ResultCache>(*dir, config, field);
      options.cache = cache.get();
    }
  }
};

ScanRange scan_range(const RunConfig& rc, const PinchConfig& config) {
  const int i_max = rc.i_max >= 0 ? rc.i_max : config.big_n() - 2;
  if (rc.s_max >= 0) return {i_max, rc.s_max};
  if (auto s = default_s_max(config, i_max)) return {i_max, *s};
  throw UsageError("--smax is required when n >= 3");
}

std::optional<ExpectedTable> try_expected(const PinchConfig& config) {
  try {
    return expected_for(config);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

json with_schema(json body, const std::string& kind) {
  json out = {{"schema_version", kSchemaVersion}, {"kind", kind}};
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

json mpq_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

// --- subcommands -----------------------------------------------------------

int cmd_gens(const RunConfig& rc, std::ostream& out) {
  const PinchConfig config = make_config(rc);
  const GeneratorSet gens = generate_generators(config);
  if (rc.format == "json") {
    json list = json::array();
    for (const auto& g : gens.gens) list.push_back(g.coords());
    out << with_schema({{"config", config_json(config)}, {"generators", list}}, "generators").dump(2)
        << '\n';
  } else if (rc.format == "csv") {
    out << "index";
    for (int j = 1; j <= config.n(); ++j) out << ",x" << j;
    out << '\n';
    for (int k = 0; k < gens.size(); ++k) out << k << ',' << gens[k].str() << '\n';
  } else {
    out << config.str() << ": " << gens.size() << " generators\n";
    for (const auto& g : gens.gens) out << "  " << g.str() << '\n';
  }
  return kOk;
}

int cmd_member(const RunConfig& rc, std::ostream& out) {
  const PinchConfig config = make_config(rc);
  const Multidegree h = Multidegree::parse(rc.h);
  if (h.size() != config.n()) throw UsageError("--h must have n coordinates");
  const bool closed = is_member_closed(h, config);
  const bool search = is_member_bruteforce(h, config, h.total());
  if (rc.format == "json") {
    out << with_schema({{"config", config_json(config)},
                        {"h", h.coords()},
                        {"member_closed", closed},
                        {"member_search", search}},
                       "membership")
               .dump(2)
        << '\n';
  } else if (rc.format == "csv") {
    out << "h,member_closed,member_search\n\"" << h.str() << "\"," << closed << ',' << search << '\n';
  } else {
    out << "h=(" << h.str() << ") in H: " << (closed ? "yes" : "no") << " (closed form), "
        << (search ? "yes" : "no") << " (search)\n";
  }
  return closed == search ? kOk : kVerifyFailed;
}

int cmd_hilbert(const RunConfig& rc, std::ostream& out) {
  const PinchConfig config = make_config(rc);
  const RationalFunction p = hilbert_closed(config);
  std::vector<int> degrees;
  std::vector<mpq_class> coeffs;
  if (rc.expand >= 0) {
    const auto all = p.expand(rc.expand);
    for (int e = 0; e <= rc.expand; e += config.d()) {
      degrees.push_back(e);
      coeffs.push_back(all[e]);
    }
  }
  if (rc.format == "json") {
    json body = {{"config", config_json(config)}, {"series", rational_function_json(p)}};
    if (rc.expand >= 0) {
      json c = json::array();
      for (const auto& q : coeffs) c.push_back(mpq_json(q));
      body["expansion"] = {{"through", rc.expand}, {"degrees", degrees}, {"coefficients", c}};
    }
    out << with_schema(body, "hilbert_series").dump(2) << '\n';
  } else if (rc.format == "csv") {
    out << "degree,coefficient\n";
    for (std::size_t k = 0; k < degrees.size(); ++k) out << degrees[k] << ',' << coeffs[k] << '\n';
  } else {
    out << config.str() << "\nP(z) = (" << p.numerator().str() << ") / (" << p.denominator().str()
        << ")\n";
    for (std::size_t k = 0; k < degrees.size(); ++k) {
      out << "  dim H_" << degrees[k] << " = " << coeffs[k] << '\n';
    }
  }
  return kOk;
}

int cmd_hpoly(const RunConfig& rc, std::ostream& out) {
  const PinchConfig config = make_config(rc);
  if (config.n() != 2) throw UsageError("hpoly needs n = 2");
  const Polynomial h = h_polynomial(config);
  const Polynomial closed = h_polynomial_closed_form(config.d(), config.pinch_class());
  const bool match = h == closed;
  if (rc.format == "json") {
    json a = json::array(), b = json::array();
    for (const auto& c : h.coeffs()) a.push_back(mpq_json(c));
    for (const auto& c : closed.coeffs()) b.push_back(mpq_json(c));
    out << with_schema({{"config", config_json(config)},
                        {"variable", "w = z^d"},
                        {"h_polynomial", a},
                        {"closed_form", b},
                        {"match", match}},
                       "h_polynomial")
               .dump(2)
        << '\n';
  } else if (rc.format == "csv") {
    out << "power,computed,closed_form\n";
    for (int k = 0; k <= std::max(h.degree(), closed.degree()); ++k) {
      out << k << ',' << h.coeff(k) << ',' << closed.coeff(k) << '\n';
    }
  } else {
    out << config.str() << "\nh(w) = " << h.str("w") << "\nclosed form: " << closed.str("w")
        << "\nmatch: " << (match ? "yes" : "no") << '\n';
  }
  return match ? kOk : kVerifyFailed;
}

int cmd_betti(const RunConfig& rc, std::ostream& out, bool with_classification) {
  const PinchConfig config = make_config(rc);
  const FieldSpec field = make_field(rc);
  const ScanRange range = scan_range(rc, config);
  Engine engine(rc, config, field);
  const BettiTable table = graded_betti(config, field, range.i_max, range.s_max, engine.options);
  const auto expected = config.n() == 2 ? try_expected(config) : std::nullopt;
  std::optional<ClassificationReport> cr;
  if (with_classification) cr = classify(table);

  if (rc.format == "json") {
    json body = table_json(table);
    if (expected) body["expected"] = expected_json(*expected);
    if (cr) body = with_schema({{"table", body}, {"classification", classification_json(*cr)}}, "classification");
    out << body.dump(2) << '\n';
  } else if (rc.format == "csv") {
    if (cr) {
      const json c = classification_json(*cr);
      out << "key,value\n";
      for (auto it = c.begin(); it != c.end(); ++it) out << it.key() << ',' << it.value().dump() << '\n';
    } else {
      out << table_csv(table);
    }
  } else {
    out << table_text(table, expected ? &*expected : nullptr);
    if (expected) {
      for (const auto& c : expected->claims) {
        out << "  " << cell_name(c.cell) << ": " << c.label << '\n';
      }
      if (!expected->unknown.empty()) out << "  ?: no closed value known\n";
    }
    if (cr) {
      out << "pdim " << cr->pdim << "\ndepth " << cr->depth << "\nKrull dimension " << cr->krull_dim
          << "\nCohen-Macaulay " << (cr->is_cm ? "yes" : "no") << "\nGorenstein "
          << (cr->is_gorenstein ? "yes" : "no") << "\nlinearity index " << cr->linearity_index
          << "\nobserved regularity " << cr->observed_regularity << '\n';
    }
  }
  return kOk;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "'");
  }
}

std::vector<PinchConfig> parse_sweep(const std::string& text) {
  std::pair<int, int> n_range{2, 2}, d_range{-1, -1};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("sweep items look like n=2 or d=3..7");
    const std::string key = item.substr(0, eq);
    const auto range = parse_range(item.substr(eq + 1));
    if (key == "n") {
      n_range = range;
    } else if (key == "d") {
      d_range = range;
    } else {
      throw UsageError("unknown sweep key '" + key + "'");
    }
  }
  if (d_range.first < 3 || d_range.second < d_range.first || n_range.first < 2 ||
      n_range.second < n_range.first) {
    throw UsageError("sweep needs d >= 3 and n >= 2 with nonempty ranges");
  }
  std::vector<PinchConfig> configs;
  for (int n = n_range.first; n <= n_range.second; ++n) {
    for (int d = d_range.first; d <= d_range.second; ++d) {
      if (n == 2) {
        for (int i = 0; i <= (d + 1) / 2; ++i) configs.push_back(PinchConfig::from_pinch_index(d, i));
        continue;
      }
      for (const auto& m : compositions(n, d)) {
        if (!std::is_sorted(m.coords().rbegin(), m.coords().rend())) continue;
        configs.emplace_back(n, d, m);
      }
    }
  }
  return configs;
}

int cmd_verify(const RunConfig& rc, std::ostream& out) {
  const FieldSpec field = make_field(rc);
  const std::vector<PinchConfig> configs =
      rc.sweep.empty() ? std::vector<PinchConfig>{make_config(rc)} : parse_sweep(rc.sweep);

  std::vector<VerificationReport> reports;
  for (const auto& config : configs) {
    Engine engine(rc, config, field);
    VerifyOptions vo;
    vo.engine = engine.options;
    if (rc.s_max >= 0 && config.n() > 2) vo.s_max = rc.s_max;
    reports.push_back(verify(config, field, vo));
  }
  const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.all_pass; });

  if (rc.format == "json") {
    if (rc.sweep.empty()) {
      out << report_json(reports.front()).dump(2) << '\n';
    } else {
      json list = json::array();
      for (const auto& r : reports) list.push_back(report_json(r));
      out << with_schema({{"sweep", rc.sweep}, {"field", field.str()}, {"all_pass", all}, {"reports", list}},
                         "verification_sweep")
                 .dump(2)
          << '\n';
    }
  } else if (rc.format == "csv") {
    for (std::size_t k = 0; k < reports.size(); ++k) out << report_csv(reports[k], k == 0);
  } else {
    for (const auto& r : reports) out << report_text(r) << '\n';
    if (!rc.sweep.empty()) {
      out << "summary\n";
      for (const auto& r : reports) {
        const auto failed = std::count_if(r.checks.begin(), r.checks.end(),
                                          [](const Check& c) { return c.judged && !c.passed; });
        out << (r.all_pass ? "PASS  " : "FAIL  ") << r.config.str();
        if (failed) out << "  (" << failed << " failed)";
        out << '\n';
      }
    }
  }
  return all ? kOk : kVerifyFailed;
}

int cmd_canonical(const RunConfig& rc, std::ostream& out) {
  if (rc.k >= rc.d) throw UsageError("-k must satisfy 0 <= k < d");
  std::vector<int> ks;
  if (rc.k >= 0) {
    ks.push_back(rc.k);
  } else {
    for (int k = 0; k < rc.d; ++k) ks.push_back(k);
  }
  bool all = true;
  json rows = json::array();
  std::ostringstream text, csv;
  csv << "n,d,k,partner,holds,sign,shift,involution\n";
  for (int k : ks) {
    const int t = canonical_partner(rc.n, rc.d, k);
    const CanonicalCheck c = canonical_series_check(rc.n, rc.d, k);
    const bool inv = canonical_partner(rc.n, rc.d, t) == k;
    all = all && c.holds && inv;
    rows.push_back({{"k", k}, {"partner", t}, {"holds", c.holds}, {"sign", c.sign}, {"shift", c.shift},
                    {"involution", inv}});
    text << "k=" << k << "  partner t=" << t << "  "
         << (c.holds ? "(-1)^n S_k(1/z) = " + std::string(c.sign > 0 ? "+" : "-") + "z^" +
                           std::to_string(c.shift) + " S_t(z)"
                     : std::string("no monomial quotient"))
         << (inv ? "" : "  partner is not an involution") << '\n';
    csv << rc.n << ',' << rc.d << ',' << k << ',' << t << ',' << c.holds << ',' << c.sign << ','
        << c.shift << ',' << inv << '\n';
  }
  if (rc.format == "json") {
    out << with_schema({{"n", rc.n}, {"d", rc.d}, {"modules", rows}, {"all_hold", all}}, "canonical_check")
               .dump(2)
        << '\n';
  } else if (rc.format == "csv") {
    out << csv.str();
  } else {
    out << "Veronese modules S_{" << rc.n << "," << rc.d << ",k}\n" << text.str();
  }
  return all ? kOk : kVerifyFailed;
}

json faces_json(const SimplicialComplex& c) {
  json out = json::array();
  for (Face f : c.faces()) out.push_back(face_vertices(f));
  return out;
}

int cmd_dualcheck(const RunConfig& rc, std::ostream& out) {
  const PinchConfig config = make_config(rc);
  const FieldSpec field = make_field(rc);
  const Multidegree h = Multidegree::parse(rc.h);
  if (h.size() != config.n()) throw UsageError("--h must have n coordinates");
  const GeneratorSet gens = generate_generators(config);
  const auto built = build_divisor_complex(h, config, gens);
  const SimplicialComplex& c = built.complex;

  json body = {{"config", config_json(config)}, {"h", h.coords()}, {"field", field.str()}};
  bool ok = true;
  if (c.is_void()) {
    body["void"] = true;
  } else {
    const SimplicialComplex dual = alexander_dual(c);
    const bool duality = alexander_duality_holds(c, field);
    const bool involution = dual.is_void() ? c == SimplicialComplex::simplex(c.ground_size(), c.vertex_set())
                                           : alexander_dual(dual) == c;
    const bool dd = boundary_squares_to_zero(c) && boundary_squares_to_zero(dual);
    const bool euler = reduced_euler_characteristic(c) == reduced_homology(c, field).euler_characteristic();
    ok = duality && involution && dd && euler;
    body["void"] = false;
    body["vertices"] = std::popcount(c.vertex_set());
    body["homology"] = reduced_homology(c, field).raw();
    body["dual_homology"] = reduced_homology(dual, field).raw();
    body["alexander_duality"] = duality;
    body["dual_involution"] = involution;
    body["boundary_squares_to_zero"] = dd;
    body["euler_characteristic_matches"] = euler;
    if (rc.faces) {
      json g = json::array();
      for (const auto& a : gens.gens) g.push_back(a.coords());
      body["generators"] = g;
      body["faces"] = faces_json(c);
      body["dual_faces"] = faces_json(dual);
    }
  }
  body["all_hold"] = ok;

  if (rc.format == "json" || (rc.faces && rc.format == "text")) {
    out << with_schema(body, "duality_check").dump(2) << '\n';
  } else if (rc.format == "csv") {
    out << "property,value\n";
    for (auto it = body.begin(); it != body.end(); ++it) {
      if (it.value().is_boolean() || it.value().is_number()) out << it.key() << ',' << it.value().dump() << '\n';
    }
  } else if (c.is_void()) {
    out << "h=(" << h.str() << ") is not in H: the divisor complex is void\n";
  } else {
    auto dims = [](const json& a) {
      std::string s;
      for (const auto& v : a) s += (s.empty() ? "" : " ") + v.dump();
      return s.empty() ? std::string("0") : s;
    };
    out << "h=(" << h.str() << "): " << c.faces().size() << " faces on " << body["vertices"].get<int>()
        << " vertices\n"
        << "reduced homology from degree -1: " << dims(body["homology"]) << '\n'
        << "dual reduced homology from degree -1: " << dims(body["dual_homology"]) << '\n'
        << "Alexander duality " << (body["alexander_duality"].get<bool>() ? "holds" : "FAILS") << '\n'
        << "dual of dual " << (body["dual_involution"].get<bool>() ? "is the complex" : "DIFFERS") << '\n'
        << "boundary squares to zero " << (body["boundary_squares_to_zero"].get<bool>() ? "yes" : "NO") << '\n'
        << "Euler characteristic " << (body["euler_characteristic_matches"].get<bool>() ? "matches" : "DIFFERS")
        << '\n';
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  out << std::boolalpha;
  RunConfig rc;
  CLI::App app{"Pinched Veronese rings: membership, Hilbert series, Betti tables and their verification",
               "pinched"};
  app.require_subcommand(1);
  app.footer("Exit status: 0 success, 1 verification failure, 2 usage error, 3 resource refusal.");

  auto* gens = app.add_subcommand("gens", "list the generators A_{n,d} minus m");
  add_config_options(gens, rc);
  add_format_option(gens, rc);

  auto* member = app.add_subcommand("member", "decide whether h lies in the semigroup");
  member->set_help_flag("--help", "Print this help message and exit");
  add_config_options(member, rc);
  member->add_option("--h", rc.h, "exponent vector, e.g. 4,6")->required();
  add_format_option(member, rc);

  auto* hilbert = app.add_subcommand("hilbert", "closed Hilbert series");
  add_config_options(hilbert, rc);
  hilbert->add_option("--expand", rc.expand, "list dimensions through this degree")->check(CLI::NonNegativeNumber);
  add_format_option(hilbert, rc);

  auto* hpoly = app.add_subcommand("hpoly", "n = 2: h-polynomial in w = z^d against its closed form");
  add_config_options(hpoly, rc);
  add_format_option(hpoly, rc);

  auto* betti = app.add_subcommand("betti", "graded Betti table");
  add_config_options(betti, rc);
  add_engine_options(betti, rc);
  add_format_option(betti, rc);

  auto* cls = app.add_subcommand("classify", "projective dimension, depth, Cohen-Macaulay and Gorenstein");
  add_config_options(cls, rc);
  add_engine_options(cls, rc);
  add_format_option(cls, rc);

  auto* ver = app.add_subcommand("verify", "check computed tables against the closed formulas");
  add_config_options(ver, rc, false);
  add_engine_options(ver, rc);
  add_format_option(ver, rc);
  ver->add_option("--sweep", rc.sweep, "sweep, e.g. \"n=2,d=3..7\"");

  auto* can = app.add_subcommand("canonical", "canonical module check for Veronese modules S_{n,d,k}");
  can->add_option("-n", rc.n, "number of variables")->capture_default_str()->check(CLI::Range(1, 12));
  can->add_option("-d", rc.d, "degree")->required()->check(CLI::Range(1, 64));
  can->add_option("-k", rc.k, "module index, 0 <= k < d (default: all)")->check(CLI::NonNegativeNumber);
  add_format_option(can, rc);

  auto* dual = app.add_subcommand("dualcheck", "Alexander duality and chain checks on one divisor complex");
  dual->set_help_flag("--help", "Print this help message and exit");
  add_config_options(dual, rc);
  dual->add_option("--h", rc.h, "degree of the divisor complex")->required();
  dual->add_option("--field", rc.field, "coefficient field")->capture_default_str();
  dual->add_flag("--faces", rc.faces, "dump faces of the complex and its dual as JSON");
  add_format_option(dual, rc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*gens) return cmd_gens(rc, out);
    if (*member) return cmd_member(rc, out);
    if (*hilbert) return cmd_hilbert(rc, out);
    if (*hpoly) return cmd_hpoly(rc, out);
    if (*betti) return cmd_betti(rc, out, false);
    if (*cls) return cmd_betti(rc, out, true);
    if (*ver) {
      if (rc.sweep.empty() && rc.d == 0) throw UsageError("verify needs -d or --sweep");
      return cmd_verify(rc, out);
    }
    if (*can) return cmd_canonical(rc, out);
    if (*dual) return cmd_dualcheck(rc, out);
  } catch (const ResourceRefusal& e) {
    err << "refused: " << e.what() << " (estimate " << e.estimate() << ", budget " << rc.budget << ")\n";
    return kResource;
  } catch (const InsufficientScan& e) {
    err << "uncertified: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace pinched
