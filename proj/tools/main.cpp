#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcengel/certify.hpp"
#include "pcengel/textio.hpp"

using json = nlohmann::json;
using namespace pcengel;

namespace {

constexpr const char* kSchemaVersion = "1.0.0";

std::string timestamp_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

json with_header(json body) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["generated_at"] = timestamp_now();
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& spec) {
  if (spec == "builtin") return build_catalog();
  namespace fs = std::filesystem;
  if (!fs::is_directory(spec)) throw input_error("not a catalog directory: " + spec);
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(spec))
    if (de.is_regular_file()) files.push_back(de.path());
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> cat;
  for (const auto& f : files) {
    std::vector<CatalogEntry> part;
    try {
      part = parse_text_file(f.string());
    } catch (const input_error& e) {
      throw input_error(f.string() + ": " + e.what());
    }
    for (auto& e : part) cat.push_back(std::move(e));
  }
  return cat;
}

long long smallest_prime_factor(long long n) {
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

json report_to_json(const CertificationReport& r) {
  json j;
  j["suite"] = r.suite;
  j["group"] = r.group;
  j["automorphism"] = r.automorphism.empty() ? json() : json(r.automorphism);
  j["hypotheses_met"] = r.hypotheses_met;
  if (!r.hypothesis_reason.empty()) j["hypothesis_reason"] = r.hypothesis_reason;
  if (r.hypotheses_met) j["conclusion_holds"] = r.conclusion_holds;
  j["witnesses"] = r.witnesses;
  j["observed"] = r.observed;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json filtration_to_json(const Filtration& f) {
  json j;
  j["kind"] = f.kind;
  j["terminates"] = f.terminates;
  json orders = json::array();
  for (const Subgroup& t : f.terms) orders.push_back(t.order());
  j["term_orders"] = orders;
  auto sc = validate_strongly_central(f);
  j["strongly_central"] = sc.ok;
  if (!sc.ok) j["strongly_central_witness"] = sc.witness;
  return j;
}

json ring_to_json(const GradedLieRing& l) {
  json j;
  json comps = json::array();
  for (int v = 1; v <= l.nweights(); ++v) comps.push_back(l.component(v).orders);
  j["component_orders"] = comps;
  j["nilpotency_class"] = l.lie_nilpotency_class();
  j["order"] = l.order();
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw input_error("cannot write: " + out_path);
    out << j.dump(2) << "\n";
  }
}

int conclusion_exit(const std::vector<CertificationReport>& reports) {
  for (const auto& r : reports)
    if (r.hypotheses_met && !r.conclusion_holds) return 1;
  return 0;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t c = s.find(',', pos);
    std::string item = s.substr(pos, c == std::string::npos ? c : c - pos);
    if (!item.empty()) out.push_back(item);
    if (c == std::string::npos) break;
    pos = c + 1;
  }
  return out;
}

int cmd_validate(const std::string& file) {
  auto entries = parse_text_file(file);
  for (const auto& e : entries) {
    std::cout << "group " << e.name << ": order " << e.group->order()
              << ", consistent\n";
    for (const auto& na : e.automorphisms)
      std::cout << "  aut " << na.name << ": order " << na.phi.order()
                << (na.phi.coprime() ? ", coprime" : "") << "\n";
  }
  return 0;
}

int cmd_analyze(const std::string& group, const std::string& filtration,
                const std::string& catalog, const std::string& out_path) {
  auto cat = load_catalog(catalog);
  const CatalogEntry& e = catalog_entry(cat, group);
  Filtration f = filtration == "lcs"
                     ? lcs_filtration(*e.group)
                     : zassenhaus_filtration(
                           *e.group, smallest_prime_factor(e.group->order()));
  json body;
  body["group"] = e.name;
  body["order"] = e.group->order();
  body["filtration"] = filtration_to_json(f);
  auto cls = nilpotency_class(*e.group);
  body["nilpotency_class"] = cls ? json(*cls) : json();
  if (f.terminates && validate_strongly_central(f).ok) {
    GradedLieRing l(*e.group, f);
    body["lie_ring"] = ring_to_json(l);
  }
  emit(with_header(std::move(body)), out_path);
  return 0;
}

int cmd_lie(const std::string& group, long long q, const std::string& aut,
            const std::string& catalog, const std::string& out_path) {
  auto cat = load_catalog(catalog);
  const CatalogEntry& e = catalog_entry(cat, group);
  const Automorphism& phi = catalog_aut(e, aut);
  Filtration f = lcs_filtration(*e.group);
  GradedLieRing l(*e.group, f);
  LieAut lphi = induced_automorphism(l, phi);
  ExtLieRing ext(l, q);
  EigenDecomposition dec(ext, lphi, q);

  json body;
  body["group"] = e.name;
  body["automorphism"] = aut;
  body["q"] = q;
  body["lie_ring"] = ring_to_json(l);
  json eig = json::array();
  for (int v = 1; v <= l.nweights(); ++v) {
    json per_j = json::array();
    for (long long j = 0; j < q; ++j) per_j.push_back(dec.eigencomponent(v, j).size());
    eig.push_back(per_j);
  }
  body["eigencomponent_sizes"] = eig;
  AxiomResult proj = dec.projection_checks();
  body["projections_ok"] = proj.ok;
  if (!proj.ok) body["projection_witness"] = proj.witness;
  AxiomResult grad = grading_check(dec);
  body["grading_ok"] = grad.ok;
  if (!grad.ok) body["grading_witness"] = grad.witness;
  emit(with_header(std::move(body)), out_path);
  return proj.ok && grad.ok ? 0 : 1;
}

std::vector<CertificationReport> run_suites(const std::vector<std::string>& suites,
                                            const std::vector<CatalogEntry>& cat) {
  std::vector<CertificationReport> all;
  for (const std::string& s : suites)
    for (auto& r : run_suite(s, cat)) all.push_back(std::move(r));
  std::sort(all.begin(), all.end(),
            [](const CertificationReport& a, const CertificationReport& b) {
              return std::tie(a.group, a.suite, a.automorphism) <
                     std::tie(b.group, b.suite, b.automorphism);
            });
  return all;
}

int cmd_certify(const std::string& suites_csv, const std::string& catalog,
                const std::string& out_path) {
  auto cat = load_catalog(catalog);
  auto reports = run_suites(split_csv(suites_csv), cat);
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  json body;
  body["reports"] = arr;
  emit(with_header(std::move(body)), out_path);
  return conclusion_exit(reports);
}

// Per-pair linearization sampling: all arguments homogeneous of one weight,
// n between the measured Engel degree and min(n_max, p - 1).
json linearization_section(const std::vector<CatalogEntry>& cat, unsigned seed,
                           int n_max, long long enum_cap) {
  json out = json::array();
  for (const auto& e : cat) {
    const PcGroup& g = *e.group;
    long long p = smallest_prime_factor(g.order());
    long long o = g.order();
    while (o % p == 0) o /= p;
    if (o != 1 || !nilpotency_class(g)) continue;
    for (const auto& na : e.automorphisms) {
      if (na.phi.is_identity() || !is_prime(na.phi.order()) || !na.phi.coprime())
        continue;
      long long q = na.phi.order();
      json row;
      row["group"] = e.name;
      row["automorphism"] = na.name;
      row["q"] = q;
      EngelSet es = right_engel_set(g, seed);
      int n = std::max(1, es.max_degree);
      if (n > n_max || p <= n) {
        row["skipped"] = n > n_max ? "n exceeds budget" : "p <= n";
        out.push_back(std::move(row));
        continue;
      }
      GradedLieRing l(g, lcs_filtration(g));
      LieAut lphi = induced_automorphism(l, na.phi);
      ExtLieRing ext(l, q);
      EigenDecomposition dec(ext, lphi, q);
      std::mt19937_64 rng(seed);
      int samples = 0, vanished = 0;
      for (int t = 0; t < 120; ++t) {
        int v = 1 + (int)(rng() % l.nweights());
        auto x0s = dec.eigen_gens(v, 0);
        ExtLieRing::ExtElt x0 =
            x0s.empty() ? ext.zero() : x0s[rng() % x0s.size()];
        int w = 1 + (int)(rng() % l.nweights());
        if (ext.rank(w) == 0) continue;
        std::vector<ExtLieRing::ExtElt> args;
        for (int i = 0; i < n; ++i)
          args.push_back(ext.basis(w, (int)(rng() % ext.rank(w)),
                                   (int)(rng() % (q - 1))));
        ++samples;
        if (ext.is_zero(linearization_sum(ext, x0, args))) ++vanished;
      }
      (void)enum_cap;
      row["n"] = n;
      row["samples"] = samples;
      row["vanished"] = vanished;
      out.push_back(std::move(row));
    }
  }
  return out;
}

int cmd_batch(const std::string& config_path, const std::string& out_path) {
  std::ifstream in(config_path);
  if (!in) throw input_error("cannot open config: " + config_path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& ex) {
    throw input_error("config parse error: " + std::string(ex.what()));
  }
  std::string catalog = cfg.value("catalog", "builtin");
  std::vector<std::string> suites =
      cfg.value("suites", std::vector<std::string>(known_suites()));
  unsigned seed = cfg.value("seed", 1u);
  long long enum_cap = cfg.value("enumeration_cap", 100000LL);
  int n_max = cfg.value("linearization_n_max", 4);
  if (enum_cap <= 0 || n_max <= 0) throw input_error("caps must be positive");

  auto cat = load_catalog(catalog);

  json body;
  json series = json::array();
  json rings = json::array();
  json engel = json::array();
  for (const auto& e : cat) {
    const PcGroup& g = *e.group;
    json s;
    s["group"] = e.name;
    s["order"] = g.order();
    Filtration f = lcs_filtration(g);
    s["lcs"] = filtration_to_json(f);
    long long p = smallest_prime_factor(g.order());
    long long o = g.order();
    while (o % p == 0) o /= p;
    bool p_group = o == 1;
    if (p_group) s["zassenhaus"] = filtration_to_json(zassenhaus_filtration(g, p));
    series.push_back(std::move(s));

    if (f.terminates) {
      GradedLieRing l(g, f);
      json r = ring_to_json(l);
      r["group"] = e.name;
      rings.push_back(std::move(r));
    }

    json en;
    en["group"] = e.name;
    EngelSet es = right_engel_set(g, seed);
    en["right_engel_whole"] = es.whole;
    en["right_engel_size"] = es.whole ? g.order() : (long long)es.members.size();
    en["max_right_degree"] = es.max_degree;
    en["exhaustive"] = es.exhaustive;
    engel.push_back(std::move(en));
  }
  body["series"] = series;
  body["lie_rings"] = rings;
  body["engel_tables"] = engel;
  body["linearization"] = linearization_section(cat, seed, n_max, enum_cap);

  auto reports = run_suites(suites, cat);
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  body["reports"] = arr;

  emit(with_header(std::move(body)), out_path);
  return conclusion_exit(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcengel: pc-group Engel and graded Lie ring analysis"};
  app.require_subcommand(1);

  std::string file, group, filtration = "lcs", catalog = "builtin", aut;
  std::string suites_csv, config_path, out_path;
  long long extend_q = 0;

  auto* validate = app.add_subcommand("validate", "parse and validate a text file");
  validate->add_option("file", file)->required();

  auto* analyze = app.add_subcommand("analyze", "series and ring analysis");
  analyze->add_option("--group", group)->required();
  analyze->add_option("--filtration", filtration)
      ->check(CLI::IsMember({"lcs", "zassenhaus"}));
  analyze->add_option("--catalog", catalog);
  analyze->add_option("--out", out_path);

  auto* lie = app.add_subcommand("lie", "scalar extension and eigenstructure");
  lie->add_option("--group", group)->required();
  lie->add_option("--extend-q", extend_q)->required();
  lie->add_option("--aut", aut)->required();
  lie->add_option("--catalog", catalog);
  lie->add_option("--out", out_path);

  auto* certify = app.add_subcommand("certify", "run certification suites");
  certify->add_option("--suite", suites_csv)->required();
  certify->add_option("--catalog", catalog);
  certify->add_option("--out", out_path);

  auto* batch = app.add_subcommand("batch", "full run from a config file");
  batch->add_option("--config", config_path)->required();
  batch->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (analyze->parsed()) return cmd_analyze(group, filtration, catalog, out_path);
    if (lie->parsed()) return cmd_lie(group, extend_q, aut, catalog, out_path);
    if (certify->parsed()) return cmd_certify(suites_csv, catalog, out_path);
    return cmd_batch(config_path, out_path);
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const hypothesis_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
