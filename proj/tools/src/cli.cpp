#include "cyclic/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "cyclic/cyclic.hpp"

namespace cyclic::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string cycle;
  std::string one_line;
  int q = 0;
  int k = 0;
  std::string fix;
  int shift = 0;
  std::string dep;
  bool minimal = false;
  std::string group_by;
  std::string format = "text";
  std::string out;
  std::optional<std::uint64_t> budget;
  unsigned jobs = 1;
};

// Accepts "1,3,5", "1 3 5" or "(1,3,5)".
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == ',' || c == '(' || c == ')' || c == '\t') {
      ++i;
      continue;
    }
    int v = 0;
    const char* begin = text.data() + i;
    const auto [end, ec] = std::from_chars(begin, text.data() + text.size(), v);
    if (ec != std::errc() || end == begin)
      throw ParseError("expected an integer in \"" + text + "\"", i);
    values.push_back(v);
    i += static_cast<std::size_t>(end - begin);
  }
  if (values.empty()) throw ParseError("empty vector", 0);
  return values;
}

Cycle read_cycle(const Config& cfg) {
  if (!cfg.cycle.empty()) return Cycle::parse(cfg.cycle);
  if (!cfg.one_line.empty()) return Cycle::parse_one_line(cfg.one_line);
  throw UsageError("a cycle is required: pass --cycle or --one-line");
}

EnumerationOptions enumeration(const Config& cfg) {
  EnumerationOptions opts;
  opts.jobs = cfg.jobs;
  if (cfg.budget) {
    opts.budget = *cfg.budget;
  } else if (const char* env = std::getenv("CYCLIC_BUDGET")) {
    const std::string text = env;
    std::uint64_t v = 0;
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size())
      throw UsageError("CYCLIC_BUDGET must be a positive integer, got \"" +
                       text + "\"");
    opts.budget = v;
  }
  return opts;
}

bool as_json(const Config& cfg) { return cfg.format == "json"; }

std::string join(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

void print_orbit_text(std::ostream& out, const Cycle& sigma,
                      const Orbit& orbit) {
  const FixVector fix = measure_fix(orbit);
  out << "cycle=" << sigma.to_string() << '\n'
      << "k=" << orbit.k() << '\n'
      << "orbit=" << orbit.to_string() << '\n'
      << "denominator=" << orbit.denominator().get_str() << '\n'
      << "numerators=";
  for (std::size_t i = 0; i < orbit.numerators().size(); ++i)
    out << (i ? " " : "") << orbit.numerators()[i].get_str();
  out << '\n'
      << "fix=" << to_string(fix.n) << '\n'
      << "shift=" << fix.shift << '\n'
      << "dep=" << to_string(measure_dep(orbit).w) << '\n';
}

json::json orbit_json(const Cycle& sigma, const Orbit& orbit) {
  json::json j = json::orbit(orbit);
  j["cycle"] = sigma.to_string();
  return j;
}

int cmd_analyze(const Config& cfg, std::ostream& out) {
  const Cycle sigma = read_cycle(cfg);
  const int d = descent(sigma);
  const Signature sig = signature(sigma);
  const TransitionMatrix a = transition_matrix(sigma);
  const auto regularity = regularity_index(sigma);
  const auto rotation = rotation_power(sigma);
  const CombinatorialType type = combinatorial_type(sigma);
  std::optional<Rational> rotation_number;
  if (rotation) {
    rotation_number = Rational(*rotation, sigma.q());
    rotation_number->canonicalize();
  }

  if (as_json(cfg)) {
    json::json members = json::json::array();
    for (const auto& c : type.representatives) members.push_back(c.to_string());
    json::json j{
        {"cycle", sigma.to_string()},
        {"one_line", sigma.to_one_line_string()},
        {"q", sigma.q()},
        {"descent", d},
        {"symmetry", type.symmetry},
        {"signature", sig.bits},
        {"marked", sig.marked_indices()},
        {"transition_matrix", json::matrix(a.entries)},
        {"regularity_index", nullptr},
        {"rotation_number", nullptr},
        {"canonical", type.canonical.to_string()},
        {"type", std::move(members)},
    };
    if (regularity) j["regularity_index"] = *regularity;
    if (rotation_number) j["rotation_number"] = to_string(*rotation_number);
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "cycle=" << sigma.to_string() << '\n'
      << "one-line=" << sigma.to_one_line_string() << '\n'
      << "q=" << sigma.q() << '\n'
      << "des=" << d << '\n'
      << "sym=" << type.symmetry << '\n'
      << "sig=" << to_string(sig.bits) << '\n'
      << "marked=" << join(sig.marked_indices(), ",") << '\n'
      << "regularity=" << (regularity ? std::to_string(*regularity) : "-")
      << '\n';
  if (rotation_number) out << "rotation=" << to_string(*rotation_number) << '\n';
  out << "type=";
  for (std::size_t i = 0; i < type.representatives.size(); ++i)
    out << (i ? " " : "") << type.representatives[i].to_string();
  out << '\n' << "A=\n";
  for (int i = 1; i <= a.q(); ++i) {
    out << ' ';
    for (int j = 1; j <= a.q(); ++j) out << ' ' << a.entries(i, j).get_str();
    out << '\n';
  }
  return kOk;
}

// The realizations picked by --minimal, --fix/--shift or --dep. With no
// selector, `allow_all` returns every realization of sigma under m_k and
// otherwise the minimal one is used.
std::vector<Orbit> select_realizations(const Config& cfg, const Cycle& sigma,
                                       bool allow_all) {
  const bool general = !cfg.fix.empty() || !cfg.dep.empty();
  if (!cfg.minimal && !general && allow_all && cfg.k == 0)
    throw UsageError("pass --minimal, or -k with optional --fix or --dep");
  if (cfg.minimal || (!general && !allow_all)) {
    Orbit orbit = realize_minimal(sigma);
    if (cfg.k != 0 && cfg.k != orbit.k())
      throw UsageError("--minimal realizes under m_d with d = " +
                       std::to_string(orbit.k()) + "; drop -k or pass " +
                       "--fix/--dep");
    return {std::move(orbit)};
  }
  if (cfg.k == 0) throw UsageError("-k is required with --fix or --dep");
  if (!cfg.fix.empty())
    return {realize_general(sigma, cfg.k,
                            FixVector{parse_int_list(cfg.fix), cfg.shift})};
  if (!cfg.dep.empty())
    return {realize_from_dep(sigma, cfg.k, DepVector{parse_int_list(cfg.dep)})};
  std::vector<Orbit> all;
  for (const auto& fix : enumerate_admissible(sigma, cfg.k))
    all.push_back(realize_general(sigma, cfg.k, fix));
  return all;
}

int cmd_realize(const Config& cfg, std::ostream& out) {
  const Cycle sigma = read_cycle(cfg);
  const auto orbits = select_realizations(cfg, sigma, true);
  if (as_json(cfg)) {
    for (const auto& o : orbits) out << orbit_json(sigma, o).dump() << '\n';
    return kOk;
  }
  const bool several = cfg.fix.empty() && cfg.dep.empty() && !cfg.minimal;
  if (several) out << "realizations=" << orbits.size() << '\n';
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (several) out << '\n';
    print_orbit_text(out, sigma, orbits[i]);
  }
  return kOk;
}

int cmd_enumerate(const Config& cfg, std::ostream& out) {
  if (cfg.q == 0 || cfg.k == 0) throw UsageError("enumerate needs --q and -k");
  const EnumerationOptions opts = enumeration(cfg);

  if (cfg.group_by.empty()) {
    std::map<Cycle, Cycle> canonical_of;
    for_each_orbit(cfg.q, cfg.k, opts, [&](const std::vector<std::uint64_t>& n) {
      std::vector<Integer> nums(n.begin(), n.end());
      const Orbit orbit = Orbit::from_numerators(cfg.k, nums);
      const Cycle sigma = classify(orbit);
      if (as_json(cfg)) {
        auto it = canonical_of.find(sigma);
        if (it == canonical_of.end())
          it = canonical_of.emplace(sigma, canonical_representative(sigma)).first;
        out << json::catalog_line(orbit, sigma, it->second).dump() << '\n';
      } else {
        out << sigma.to_string() << '\t' << orbit.to_string() << '\n';
      }
    });
    return kOk;
  }

  const OrbitCatalog catalog = enumerate_orbits(cfg.q, cfg.k, opts);
  const bool by_type = cfg.group_by == "type";
  const auto& groups = by_type ? catalog.by_type : catalog.by_cycle;
  for (const auto& [key, indices] : groups) {
    if (as_json(cfg)) {
      json::json orbits = json::json::array();
      for (auto i : indices) orbits.push_back(json::orbit(catalog.orbits[i]));
      out << json::json{{by_type ? "type" : "cycle", key.to_string()},
                        {"count", indices.size()},
                        {"orbits", std::move(orbits)}}
                 .dump()
          << '\n';
    } else {
      out << (by_type ? "type " : "cycle ") << key.to_string()
          << " count=" << indices.size() << '\n';
      for (auto i : indices) {
        const Orbit& o = catalog.orbits[i];
        out << "  ";
        if (by_type) out << classify(o).to_string() << '\t';
        out << o.to_string() << '\n';
      }
    }
  }
  if (!as_json(cfg)) out << "total=" << catalog.orbits.size() << '\n';
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  if (cfg.q == 0 || cfg.k == 0) throw UsageError("verify needs --q and -k");
  VerifyOptions opts;
  opts.enumeration = enumeration(cfg);
  if (!cfg.cycle.empty() || !cfg.one_line.empty()) {
    const Cycle sigma = read_cycle(cfg);
    if (sigma.q() != cfg.q)
      throw UsageError("--cycle has length " + std::to_string(sigma.q()) +
                       " but --q is " + std::to_string(cfg.q));
    opts.restrict_to_type = sigma;
  }
  const VerifyReport r = verify_counts(cfg.q, cfg.k, opts);

  if (as_json(cfg)) {
    out << json::report(r).dump(2) << '\n';
  } else {
    out << "q=" << r.q << " k=" << r.k << " orbits=" << r.orbit_count.get_str()
        << " expected=" << r.expected_orbit_count.get_str()
        << " checked=" << r.orbits_checked << '\n';
    for (const auto& c : r.cycles)
      out << (c.pass ? "PASS" : "FAIL") << " cycle " << c.sigma.to_string()
          << " des=" << c.descent << " a_q=" << c.last_signature_bit
          << " observed=" << c.observed.get_str()
          << " expected=" << c.expected.get_str() << '\n';
    for (const auto& t : r.types)
      out << (t.pass ? "PASS" : "FAIL") << " type " << t.canonical.to_string()
          << " des=" << t.descent << " sym=" << t.symmetry
          << " observed=" << t.observed.get_str()
          << " expected=" << t.expected.get_str() << '\n';
    for (const auto& m : r.mismatches)
      out << "MISMATCH " << m.sigma.to_string() << " {" << m.orbit.to_string()
          << "}: " << m.detail << '\n';
    out << (r.pass() ? "PASS" : "FAIL") << '\n';
  }
  return r.pass() ? kOk : kVerifyFailed;
}

int cmd_types(const Config& cfg, std::ostream& out) {
  if (cfg.q == 0) throw UsageError("types needs --q");
  for (const auto& type : enumerate_types(cfg.q)) {
    const int d = descent(type.canonical);
    if (as_json(cfg)) {
      json::json members = json::json::array();
      for (const auto& c : type.representatives) members.push_back(c.to_string());
      out << json::json{{"canonical", type.canonical.to_string()},
                        {"size", type.size()},
                        {"descent", d},
                        {"symmetry", type.symmetry},
                        {"members", std::move(members)}}
                 .dump()
          << '\n';
    } else {
      out << type.canonical.to_string() << " size=" << type.size()
          << " des=" << d << " sym=" << type.symmetry << " members=";
      for (std::size_t i = 0; i < type.representatives.size(); ++i)
        out << (i ? " " : "") << type.representatives[i].to_string();
      out << '\n';
    }
  }
  return kOk;
}

int cmd_diagram(const Config& cfg, std::ostream& out) {
  const Cycle sigma = read_cycle(cfg);
  const Orbit orbit = select_realizations(cfg, sigma, false).front();
  const std::string svg = render_diagram(orbit, sigma);
  if (cfg.out.empty()) {
    out << svg;
    return kOk;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.out);
  file << svg;
  if (!file.flush()) throw UsageError("cannot write " + cfg.out);
  return kOk;
}

std::string domain_error_name(const DomainError& e) {
  if (dynamic_cast<const NotRealizable*>(&e)) return "NotRealizable";
  if (dynamic_cast<const RotationCycle*>(&e)) return "RotationCycle";
  if (dynamic_cast<const DegreeTooSmall*>(&e)) return "DegreeTooSmall";
  if (dynamic_cast<const ShiftOutOfRange*>(&e)) return "ShiftOutOfRange";
  if (auto* n = dynamic_cast<const NotAdmissible*>(&e))
    return std::string("NotAdmissible [") + to_string(n->clause()) + "]";
  return "DomainError";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  CLI::App app{"Realizations of q-cycles by the circle maps x -> kx mod 1"};
  app.name("cyclic");
  app.require_subcommand(1);

  auto add_cycle = [&](CLI::App* sub) {
    auto* c = sub->add_option("-c,--cycle", cfg.cycle,
                              "cycle notation, e.g. \"(1 2 4 5 3)\"");
    auto* o = sub->add_option("--one-line", cfg.one_line,
                              "one-line images sigma(1) ... sigma(q)");
    c->excludes(o);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_selector = [&](CLI::App* sub) {
    sub->add_option("-k,--k", cfg.k, "degree of m_k")->check(CLI::Range(2, 64));
    auto* fix = sub->add_option("--fix", cfg.fix, "fixed point distribution n1,...,nq");
    auto* shift = sub->add_option("--shift", cfg.shift,
                                  "fixed points of m_k in (0, x_1)");
    auto* dep = sub->add_option("--dep", cfg.dep, "deployment vector w1,...,w(k-1)");
    auto* minimal = sub->add_flag("--minimal", cfg.minimal,
                                  "the realization under m_d, d = descent");
    fix->excludes(dep);
    shift->needs(fix);
    minimal->excludes(fix)->excludes(dep);
  };
  auto add_enumeration = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "period")->required()->check(CLI::Range(2, 64));
    sub->add_option("-k,--k", cfg.k, "degree")->required()->check(CLI::Range(2, 64));
    sub->add_option("--budget", cfg.budget,
                    "largest allowed k^q (default 10000000 or $CYCLIC_BUDGET)");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
  };

  auto* analyze = app.add_subcommand("analyze", "invariants of a cycle");
  add_cycle(analyze);
  add_format(analyze);

  auto* realize = app.add_subcommand("realize", "construct realizations");
  add_cycle(realize);
  add_selector(realize);
  add_format(realize);

  auto* enumerate = app.add_subcommand("enumerate", "catalog all period-q orbits of m_k");
  add_enumeration(enumerate);
  enumerate->add_option("--group-by", cfg.group_by, "group orbits")
      ->check(CLI::IsMember({"cycle", "type"}));
  add_format(enumerate);

  auto* verify = app.add_subcommand("verify", "check closed-form counts against enumeration");
  add_enumeration(verify);
  add_cycle(verify);
  add_format(verify);

  auto* types = app.add_subcommand("types", "list combinatorial types of q-cycles");
  types->add_option("--q", cfg.q, "length")->required()->check(CLI::Range(2, 64));
  add_format(types);

  auto* diagram = app.add_subcommand("diagram", "SVG circle diagram of a realization");
  add_cycle(diagram);
  add_selector(diagram);
  diagram->add_option("--out", cfg.out, "output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, out);
    if (*realize) return cmd_realize(cfg, out);
    if (*enumerate) return cmd_enumerate(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*types) return cmd_types(cfg, out);
    if (*diagram) return cmd_diagram(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: parse error at position " << e.position() << ": " << e.what()
        << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << domain_error_name(e) << ": " << e.what() << '\n';
    return kDomain;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what()
        << " (raise it with --budget or CYCLIC_BUDGET)\n";
    return kBudget;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace cyclic::cli
