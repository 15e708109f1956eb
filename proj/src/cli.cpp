#include "seifert/cli.hpp"

#include "seifert/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace seifert {

namespace {

std::vector<Int> parse_tuple(const std::string& text) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad multiplicity tuple: '" + text + "'");
    out.emplace_back(item);
  }
  if (out.empty())
    throw std::invalid_argument("bad multiplicity tuple: '" + text + "'");
  return out;
}

// Surgery coefficients are written 1/m with integer m; 1/0 means no surgery.
long long parse_coef(const std::string& text) {
  if (text.rfind("1/", 0) != 0)
    throw std::invalid_argument("surgery coefficient must be of the form 1/m");
  std::string m = text.substr(2);
  std::size_t pos = 0;
  long long val = 0;
  try {
    val = std::stoll(m, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad surgery coefficient: '" + text + "'");
  }
  if (pos != m.size())
    throw std::invalid_argument("bad surgery coefficient: '" + text + "'");
  return val;
}

std::pair<long long, long long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("range must be of the form lo..hi");
  try {
    std::size_t p1 = 0, p2 = 0;
    std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    long long l = std::stoll(lo, &p1), h = std::stoll(hi, &p2);
    if (p1 != lo.size() || p2 != hi.size() || l > h)
      throw std::invalid_argument("");
    return {l, h};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range: '" + text + "'");
  }
}

Int default_fiber(const std::vector<Int>& entries) {
  Int best = 1;
  for (const Int& a : entries)
    if (a > best) best = a;
  return best;
}

Multiplicities select(const std::string& tuple_text, const std::string& fiber_text) {
  std::vector<Int> entries = parse_tuple(tuple_text);
  Int order = fiber_text.empty() ? default_fiber(entries) : Int(fiber_text);
  return Multiplicities::with_fiber_order(std::move(entries), order).first;
}

struct Options {
  std::string tuple;
  std::string fiber;
  std::string coef;
  std::string range;
  std::string cache_path;
  std::string batch_file;
  bool json = false;
  bool dot = false;
  bool verify = false;
  bool timings = false;
};

std::unique_ptr<DCache> open_cache(const Options& opt) {
  auto path = opt.cache_path.empty() ? DCache::default_path()
                                     : std::filesystem::path(opt.cache_path);
  return std::make_unique<DCache>(path);
}

void cmd_invariants(const Options& opt, std::ostream& out) {
  auto m = Multiplicities::sorted(parse_tuple(opt.tuple));
  SeifertInvariants inv = from_multiplicities(m);
  if (opt.json) {
    out << to_json(inv, +1).dump(2) << "\n";
    return;
  }
  out << "e = " << inv.e.get_str() << "\npairs =";
  for (const auto& [a, b] : inv.pairs)
    out << " (" << a.get_str() << "," << b.get_str() << ")";
  out << "\nsign = +1\n";
}

void cmd_plumb(const Options& opt, std::ostream& out) {
  auto m = Multiplicities::sorted(parse_tuple(opt.tuple));
  PlumbingGraph g = plumbing_graph(from_multiplicities(m));
  if (opt.dot) {
    out << export_dot(g);
    return;
  }
  if (opt.json) {
    ordered_json j = to_json(g);
    j["lattice"] = lattice_json(gram_matrix(g));
    out << j.dump(2) << "\n";
    return;
  }
  out << "central weight " << g.central_weight.get_str() << ", " << g.arms.size()
      << " arms, rank " << g.rank() << "\n";
  for (const auto& arm : g.arms) {
    out << " ";
    for (const Int& w : arm) out << " " << w.get_str();
    out << "\n";
  }
}

void cmd_d(const Options& opt, std::ostream& out) {
  auto m = Multiplicities::sorted(parse_tuple(opt.tuple));
  auto cache = open_cache(opt);
  Int d = cached_d(m, cache.get(), opt.verify);
  if (opt.json) {
    ordered_json j;
    j["tuple"] = opt.tuple;
    j["d"] = int_json(d);
    out << j.dump(2) << "\n";
    return;
  }
  out << "d = " << d.get_str() << "\n";
}

void cmd_surger(const Options& opt, std::ostream& out) {
  Multiplicities m = select(opt.tuple, opt.fiber);
  long long coef = opt.coef.empty() ? 0 : parse_coef(opt.coef);
  SurgeryResult r = surger_fiber(from_multiplicities(m), coef);
  if (opt.json) {
    ordered_json j = to_json(r.result);
    j["core_fiber_order"] = int_json(r.core_fiber_order);
    out << j.dump(2) << "\n";
    return;
  }
  out << (r.result.sign < 0 ? "-" : "+") << "Sigma(";
  for (std::size_t i = 0; i < r.result.inv.pairs.size(); ++i)
    out << (i ? "," : "") << r.result.inv.pairs[i].first.get_str();
  out << "), e = " << r.result.inv.e.get_str()
      << ", core fiber order = " << r.core_fiber_order.get_str() << "\n";
}

void cmd_survey(const Options& opt, std::ostream& out) {
  Multiplicities m = select(opt.tuple, opt.fiber);
  auto [lo, hi] = parse_range(opt.range.empty() ? "-4..4" : opt.range);
  DSurvey s = d_survey(from_multiplicities(m), lo, hi);
  if (opt.json) {
    out << to_json(s).dump(2) << "\n";
    return;
  }
  out << "m\td\n";
  for (const auto& [mm, d] : s.values) out << mm << "\t" << d.get_str() << "\n";
  out << "distinct values:";
  for (const Int& d : s.distinct) out << " " << d.get_str();
  out << "\ncardinality = " << s.distinct.size() << "\n";
}

void cmd_alexander(const Options& opt, std::ostream& out) {
  Multiplicities m = select(opt.tuple, opt.fiber);
  IntegerPolynomial p = alexander_fiber(m);
  FoxMilnorResult v = fox_milnor_verdict(p);
  if (opt.json) {
    ordered_json j = to_json(p);
    j["verdict"] = to_json(v);
    out << j.dump(2) << "\n";
    return;
  }
  out << "Delta(t) = " << p.str() << "\n"
      << (v.verdict == SliceVerdict::Obstructed ? "obstructed" : "no obstruction")
      << ": " << v.reason << "\n";
}

void cmd_report(const Options& opt, std::ostream& out) {
  Multiplicities m = select(opt.tuple, opt.fiber);
  auto cache = open_cache(opt);
  ReportRecord r = build_report(m, cache.get());
  if (opt.json)
    out << to_json(r, opt.timings).dump(2) << "\n";
  else
    out << to_markdown(r, opt.timings);
}

int cmd_batch(const Options& opt, std::ostream& out) {
  std::ifstream in(opt.batch_file);
  if (!in)
    throw std::invalid_argument("cannot open batch file: " + opt.batch_file);
  auto cache = open_cache(opt);
  int failures = 0;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;  // blank
    auto last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    if (body.empty() || body[0] == '#') continue;  // comment

    try {
      std::istringstream ls(body);
      std::string tuple_text, fiber_text;
      ls >> tuple_text >> fiber_text;
      Multiplicities m = select(tuple_text, fiber_text);
      ReportRecord r = build_report(m, cache.get());
      out << to_json(r, opt.timings).dump() << "\n";
    } catch (const std::exception& e) {
      ++failures;
      ordered_json j;
      j["input"] = body;
      j["error"] = e.what();
      out << j.dump() << "\n";
    }
  }
  return failures == 0 ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Invariants of Seifert fibered homology spheres and of Dehn "
               "surgeries along their fibers"};
  app.require_subcommand(1);
  Options opt;

  auto add_tuple = [&](CLI::App* cmd) {
    cmd->add_option("tuple", opt.tuple,
                    "fiber multiplicities, e.g. 2,3,5 (comma-separated)")
        ->required();
  };
  auto add_fiber = [&](CLI::App* cmd) {
    cmd->add_option("--fiber-order", opt.fiber,
                    "order of the surgered fiber (default: largest entry; 1 "
                    "selects a regular fiber)");
  };
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json, "emit JSON");
  };
  auto add_cache = [&](CLI::App* cmd) {
    cmd->add_option("--cache", opt.cache_path,
                    "d-invariant cache file (default: $SEIFERT_D_CACHE or "
                    "~/.cache/seifert/d-cache.jsonl)");
  };

  CLI::App* invariants = app.add_subcommand("invariants", "Seifert invariants");
  add_tuple(invariants);
  add_json(invariants);

  CLI::App* plumb = app.add_subcommand("plumb", "plumbing graph and lattice");
  add_tuple(plumb);
  add_json(plumb);
  plumb->add_flag("--dot", opt.dot, "emit DOT graph text");

  CLI::App* d = app.add_subcommand("d", "Heegaard Floer d-invariant");
  add_tuple(d);
  add_json(d);
  add_cache(d);
  d->add_flag("--verify", opt.verify, "recompute cached values and compare");

  CLI::App* surger = app.add_subcommand("surger", "1/m surgery on a fiber");
  add_tuple(surger);
  add_fiber(surger);
  add_json(surger);
  surger->add_option("--coef", opt.coef, "surgery coefficient 1/m (1/0: none)")
      ->required();

  CLI::App* survey = app.add_subcommand("survey", "d of 1/m surgeries over a range");
  add_tuple(survey);
  add_fiber(survey);
  add_json(survey);
  survey->add_option("--range", opt.range, "m range lo..hi (default -4..4)");

  CLI::App* alexander =
      app.add_subcommand("alexander", "Alexander polynomial and slice verdict");
  add_tuple(alexander);
  add_fiber(alexander);
  add_json(alexander);

  CLI::App* report = app.add_subcommand("report", "full invariant report");
  add_tuple(report);
  add_fiber(report);
  add_json(report);
  add_cache(report);
  report->add_flag("--timings", opt.timings, "include timing metadata");

  CLI::App* batch =
      app.add_subcommand("batch", "reports for a file of tuples, one per line");
  batch->add_option("file", opt.batch_file, "input file")->required();
  add_cache(batch);
  batch->add_flag("--timings", opt.timings, "include timing metadata");

  std::vector<const char*> argv;
  argv.push_back("seifert");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (invariants->parsed()) cmd_invariants(opt, out);
    else if (plumb->parsed()) cmd_plumb(opt, out);
    else if (d->parsed()) cmd_d(opt, out);
    else if (surger->parsed()) cmd_surger(opt, out);
    else if (survey->parsed()) cmd_survey(opt, out);
    else if (alexander->parsed()) cmd_alexander(opt, out);
    else if (report->parsed()) cmd_report(opt, out);
    else if (batch->parsed()) return cmd_batch(opt, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace seifert
