// pgi: construct 2-group families and classical examples, compute the
// normalizer and centralizer invariants, and run the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgi/pgi.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitSpec = 2;
constexpr int kExitCap = 3;

struct GlobalOpts {
  int order_cap = pgi::kDefaultOrderCap;
  int subgroup_cap = pgi::kDefaultSubgroupCap;
  std::string format = "tsv";
  std::string out;
  int workers = 0;
  bool seedless = false; // accepted for interface stability; everything is deterministic
  bool strict = false;

  int effective_workers() const {
    if (workers > 0) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 2;
  }
};

struct SpecOpts {
  std::string spec_file;
  std::string family;
  bool example = false;
  int n = 0;
  std::string s = "-1";
  std::string bsq;
  std::string extra_factors;
  std::string astar;
  std::string z;
  long long p = 0;
  int k = 0;
  long long order = 0;
  int degree = 0;
  std::string gens;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

pgi::Permutation parse_cycles(int degree, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> cur;
  std::string num;
  bool in_cycle = false;
  auto flush_num = [&] {
    if (!num.empty()) {
      cur.push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char c : text) {
    if (c == '(') {
      in_cycle = true;
      cur.clear();
    } else if (c == ')') {
      flush_num();
      if (!in_cycle) throw pgi::SpecError("unbalanced ')' in cycle string");
      if (!cur.empty()) cycles.push_back(cur);
      in_cycle = false;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      num += c;
    } else if (c == ' ' || c == ',') {
      flush_num();
    } else {
      throw pgi::SpecError(std::string("unexpected character '") + c + "' in cycle string");
    }
  }
  if (in_cycle) throw pgi::SpecError("unbalanced '(' in cycle string");
  return pgi::Permutation::from_cycles(degree, cycles);
}

pgi::FamilySpec spec_from_opts(const SpecOpts& o) {
  if (!o.spec_file.empty()) { // a spec file always wins over inline flags
    std::ifstream in(o.spec_file);
    if (!in) throw pgi::SpecError("cannot open spec file " + o.spec_file);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw pgi::SpecError(std::string("malformed JSON in ") + o.spec_file + ": " + e.what());
    }
    return pgi::FamilySpec::from_json(j);
  }
  if (o.example || o.family == "example" || o.family == "sharpness_example")
    return pgi::FamilySpec::make_sharpness(o.p, o.k);
  if (o.family == "f1")
    return pgi::FamilySpec::make_f1(o.n, parse_int_list(o.extra_factors), pgi::s_action_from_string(o.s),
                                    parse_int_list(o.bsq));
  if (o.family == "f2")
    return pgi::FamilySpec::make_f2(o.n, parse_int_list(o.astar), pgi::s_action_from_string(o.s),
                                    parse_int_list(o.z), parse_int_list(o.bsq));
  if (o.family == "cyclic") return pgi::FamilySpec::make_cyclic(o.order);
  if (o.family == "perm") {
    std::vector<std::vector<int>> gens;
    std::string cur;
    for (char c : o.gens + ";") {
      if (c == ';') {
        if (!cur.empty()) gens.push_back(parse_cycles(o.degree, cur).images);
        cur.clear();
      } else {
        cur += c;
      }
    }
    return pgi::FamilySpec::make_perm(o.degree, gens);
  }
  throw pgi::SpecError("no spec given: use --spec FILE or --family {f1,f2,cyclic,perm} or --example");
}

void add_spec_options(CLI::App* cmd, SpecOpts& o) {
  cmd->add_option("--spec", o.spec_file, "FamilySpec JSON file (wins over inline flags)");
  cmd->add_option("--family", o.family, "inline spec kind: f1 | f2 | cyclic | perm");
  cmd->add_flag("--example", o.example, "inline sharpness example (use with --p, --k)");
  cmd->add_option("--n", o.n, "family parameter n");
  cmd->add_option("--s", o.s, "action: -1 or neg_one_plus");
  cmd->add_option("--bsq", o.bsq, "0/1 coefficients over the Omega_1(A) basis, e.g. 1,0");
  cmd->add_option("--extra-factors", o.extra_factors, "f1 extra factor exponents, e.g. 1,1");
  cmd->add_option("--astar", o.astar, "f2 A* factor exponents");
  cmd->add_option("--z", o.z, "f2 z coefficients over the Omega_1(A*) basis");
  cmd->add_option("--p", o.p, "prime for --example");
  cmd->add_option("--k", o.k, "k for --example");
  cmd->add_option("--order", o.order, "order for --family cyclic");
  cmd->add_option("--degree", o.degree, "degree for --family perm");
  cmd->add_option("--gens", o.gens, "semicolon-separated cycle strings, e.g. \"(0 1 2);(0 1)(2 3)\"");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw pgi::Error("cannot write " + path);
  out << text;
}

int cmd_construct(const GlobalOpts& g, const SpecOpts& so) {
  pgi::Construction c = pgi::construct(spec_from_opts(so), g.order_cap);
  const pgi::Group& grp = c.group;
  pgi::SubgroupLattice lat = pgi::all_subgroups(grp, g.subgroup_cap);

  std::ostringstream line;
  line << "order=" << grp.order();
  if (auto pp = grp.as_p_group()) line << " p=" << pp->first;
  line << " center=" << pgi::center(grp).order;
  for (auto it = lat.entries().rbegin(); it != lat.entries().rend(); ++it)
    if (pgi::is_normal(it->sub) && it->sub.abelian()) {
      auto inv = pgi::abelian_invariants(it->sub);
      line << " max_abelian_normal=[";
      for (std::size_t i = 0; i < inv.size(); ++i) line << (i ? "," : "") << inv[i];
      line << "]";
      break;
    }
  line << " dedekind=" << (pgi::is_dedekind(grp) ? "true" : "false");
  line << " tags=";
  auto tags = pgi::structure_tags(grp, lat);
  for (std::size_t i = 0; i < tags.size(); ++i) {
    line << (i ? "," : "") << tags[i].tag;
    if (!tags[i].evidence.empty()) line << "(" << tags[i].evidence << ")";
  }
  std::cout << line.str() << "\n";
  if (!g.out.empty()) write_text(g.out, grp.to_json().dump(2) + "\n");
  return 0;
}

int cmd_invariants(const GlobalOpts& g, const SpecOpts& so) {
  pgi::Construction c = pgi::construct(spec_from_opts(so), g.order_cap);
  const pgi::Group& grp = c.group;
  if (pgi::is_dedekind(grp)) {
    std::cout << "undefined (Dedekind)\n";
    return 0;
  }
  pgi::SubgroupLattice lat = pgi::all_subgroups(grp, g.subgroup_cap);
  auto fmt = [&](const pgi::InvariantValue& v) {
    std::ostringstream os;
    os << v.value;
    if (auto pp = grp.as_p_group()) os << "=" << pp->first << "^" << pgi::valuation(v.value, pp->first);
    os << " witness=" << v.witness_label;
    return os.str();
  };
  std::cout << "mni=" << fmt(pgi::mni(grp, lat)) << "\n";
  std::cout << "mni*=" << fmt(pgi::mni_star(grp)) << "\n";
  std::cout << "mci*=" << fmt(pgi::mci_star(grp)) << "\n";
  return 0;
}

int cmd_subgroups(const GlobalOpts& g, const SpecOpts& so) {
  pgi::Construction c = pgi::construct(spec_from_opts(so), g.order_cap);
  pgi::SubgroupLattice lat = pgi::all_subgroups(c.group, g.subgroup_cap);
  int normal = 0, cyclic = 0;
  for (const auto& e : lat.entries()) {
    if (lat.normal(e)) ++normal;
    if (e.cyclic) ++cyclic;
  }
  std::cout << "subgroups=" << lat.size() << " normal=" << normal << " cyclic=" << cyclic << "\n";
  if (!g.out.empty()) {
    nlohmann::json subs = nlohmann::json::array();
    for (const auto& e : lat.entries())
      subs.push_back({{"members", e.sub.elements()}, {"normal", lat.normal(e)}});
    write_text(g.out, nlohmann::json{{"order", c.group.order()}, {"subgroups", subs}}.dump(2) + "\n");
  }
  return 0;
}

int cmd_corpus(const GlobalOpts& g, const pgi::CorpusConfig& cfg) {
  pgi::Corpus corpus = pgi::build_corpus(cfg);
  std::cout << "entries=" << corpus.entries.size() << " skipped=" << corpus.skipped.size() << "\n";
  if (!g.out.empty()) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& e : corpus.entries)
      items.push_back(
          {{"id", e.id}, {"name", e.name}, {"order", e.group().order()}, {"spec", e.spec.to_json()}});
    write_text(g.out, items.dump(2) + "\n");
  }
  return 0;
}

int cmd_verify(const GlobalOpts& g, const pgi::CorpusConfig& cfg, std::vector<std::string> suites) {
  if (suites.empty()) suites = {"all"};
  auto resolved = pgi::resolve_suites(suites); // rejects unknown names before any work
  pgi::Corpus corpus = pgi::build_corpus(cfg);
  pgi::prepare_lattices(corpus, g.effective_workers());

  bool capped = !corpus.skipped.empty();
  for (const auto& e : corpus.entries)
    if (!e.lat) capped = true;

  pgi::VerificationReport rep = pgi::run_suites(corpus, resolved, g.effective_workers());
  rep.merge(pgi::coverage_report(rep));

  std::string path = g.out;
  if (path.empty()) path = g.format == "json" ? "report.json" : "report.tsv";
  std::ostringstream body;
  if (g.format == "json")
    body << rep.to_json().dump(2) << "\n";
  else
    rep.write_tsv(body);
  write_text(path, body.str());

  std::cout << "pass=" << rep.count(pgi::RowStatus::pass) << " fail=" << rep.count(pgi::RowStatus::fail)
            << " skip=" << rep.count(pgi::RowStatus::skip) << "\n";
  if (!rep.ok()) return kExitFail;
  if (g.strict && capped) return kExitCap;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite 2-group and p-group invariant engine"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may appear after the subcommand

  GlobalOpts g;
  if (const char* env = std::getenv("PGI_ORDER_CAP")) g.order_cap = std::atoi(env);
  app.add_option("--order-cap", g.order_cap, "maximum group order")->capture_default_str();
  app.add_option("--subgroup-cap", g.subgroup_cap, "maximum subgroup count")->capture_default_str();
  app.add_option("--format", g.format, "report format: tsv | json")
      ->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--out", g.out, "output file path");
  app.add_option("--workers", g.workers, "worker threads (0 = hardware)");
  app.add_flag("--seedless", g.seedless, "no-op: every computation is deterministic, no RNG anywhere");
  app.add_flag("--strict", g.strict, "exit 3 when resource caps caused skips");

  SpecOpts construct_opts, invariants_opts, subgroups_opts;
  auto* c_construct = app.add_subcommand("construct", "build a group and print a summary");
  add_spec_options(c_construct, construct_opts);
  auto* c_invariants = app.add_subcommand("invariants", "print mni, mni*, mci* with witnesses");
  add_spec_options(c_invariants, invariants_opts);
  auto* c_subgroups = app.add_subcommand("subgroups", "enumerate the subgroup lattice");
  add_spec_options(c_subgroups, subgroups_opts);

  pgi::CorpusConfig cfg;
  long long only_p = 0;
  auto* c_corpus = app.add_subcommand("corpus", "build the default corpus");
  auto* c_verify = app.add_subcommand("verify", "run verification suites over the corpus");
  std::vector<std::string> suites;
  for (CLI::App* cmd : {c_corpus, c_verify}) {
    cmd->add_option("--corpus-p", only_p, "restrict corpus to p-groups for this prime");
    cmd->add_option("--f1-n-max", cfg.f1_n_max, "largest n in the F1 grid")->capture_default_str();
    cmd->add_option("--f2-n-max", cfg.f2_n_max, "largest n in the F2 grid")->capture_default_str();
  }
  c_verify->add_option("--suite", suites, "suites to run (repeatable); 'all' for everything");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitSpec;
  }

  cfg.order_cap = g.order_cap;
  cfg.subgroup_cap = g.subgroup_cap;
  if (only_p > 0) cfg.only_p = only_p;

  try {
    if (c_construct->parsed()) return cmd_construct(g, construct_opts);
    if (c_invariants->parsed()) return cmd_invariants(g, invariants_opts);
    if (c_subgroups->parsed()) return cmd_subgroups(g, subgroups_opts);
    if (c_corpus->parsed()) return cmd_corpus(g, cfg);
    if (c_verify->parsed()) return cmd_verify(g, cfg, suites);
  } catch (const pgi::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpec;
  } catch (const pgi::ExtensionInvalidError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpec;
  } catch (const pgi::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const pgi::LatticeTooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return 0;
}
