// Copyright 2026 The Dendroscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "dendroscope/catalog.hpp"
#include "dendroscope/cohomology.hpp"
#include "dendroscope/coloring.hpp"
#include "dendroscope/dendrite.hpp"
#include "dendroscope/io.hpp"
#include "dendroscope/kgroup.hpp"
#include "dendroscope/perm_group.hpp"
#include "dendroscope/verify_suite.hpp"

namespace dendroscope::cli {

namespace {

using Json = nlohmann::ordered_json;

// A missing or inconsistent flag detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int depth = 0;
  std::optional<std::uint64_t> seed;
  bool uniform = false;
  std::string group;
  std::string model;
  std::string coloring;
  std::string cochain;
  std::vector<std::string> automorphisms;
  std::string tuple;
  std::string image;
  std::string gamma;
  std::string out;
  std::string format = "human";
  std::string level = "quick";
  std::optional<int> x;
  int k = 1;
  int min_separation = 3;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::optional<std::size_t> budget;
  bool timing = false;
};

struct Report {
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::string> lines;  // free-form human lines after the table
  std::string body;                // file payload for --out or stdout
  bool failed = false;             // verify: some check failed
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::size_t enumeration_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("DENDROSCOPE_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw UsageError("DENDROSCOPE_BUDGET must be a non-negative integer");
    }
  }
  return kDefaultEnumerationBudget;
}

std::string load_input(Report& r, const std::string& key, const std::string& path) {
  std::string text = read_file(path);
  r.inputs[key] = {{"path", path}, {"digest", content_digest(text)}};
  return text;
}

DendriteModel load_model(const Options& o, Report& r) {
  if (!o.model.empty()) return parse_model(load_input(r, "model", o.model));
  if (o.n == 0 || o.depth == 0) throw UsageError("--model or both -n and --depth are required");
  r.inputs["model"] = {{"n", o.n}, {"depth", o.depth}};
  return DendriteModel::build(o.n, o.depth);
}

Coloring load_coloring(const Options& o, const DendriteModel& m, Report& r) {
  if (!o.coloring.empty()) return parse_coloring(m, load_input(r, "coloring", o.coloring));
  if (o.uniform) {
    r.inputs["coloring"] = "uniform";
    return uniform_coloring(m);
  }
  if (!o.seed) throw UsageError("--coloring, --uniform or --seed is required");
  r.inputs["coloring"] = {{"seed", *o.seed}};
  return random_coloring(m, *o.seed);
}

PermGroup load_group(const Options& o, Report& r, int n) {
  if (o.group.empty()) throw UsageError("--group is required");
  if (o.group == "trivial" || o.group == "sym" || o.group.rfind("cat:", 0) == 0) {
    if (n == 0) throw UsageError("--group " + o.group + " needs -n");
    r.inputs["group"] = o.group;
    if (o.group == "trivial") return PermGroup::trivial(n);
    if (o.group == "sym") return PermGroup::symmetric(n);
    auto g = catalog_group(n, o.group.substr(4));
    if (!g) throw UsageError("unknown catalog group '" + o.group.substr(4) + "'");
    return *g;
  }
  PermGroup g = parse_group(load_input(r, "group", o.group));
  if (n != 0 && g.degree() != n) {
    throw Error(ErrorCode::kInvalidArgument, "group degree " + std::to_string(g.degree()) + " differs from n = " +
                                                 std::to_string(n));
  }
  return g;
}

std::vector<VertexId> parse_list(const std::string& text, const std::string& flag) {
  std::vector<VertexId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(static_cast<VertexId>(std::stoi(item, &used)));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + item + "' is not a vertex id");
    }
  }
  if (out.empty()) throw UsageError(flag + " must list at least one vertex");
  return out;
}

Perm parse_gamma(const std::string& text, int n) {
  if (text.empty()) throw UsageError("--gamma is required");
  if (text.front() == '[') return Perm::from_images(text);
  return Perm::from_cycles(n, text);
}

Json perm_json(const Perm& p) {
  Json a = Json::array();
  for (auto v : p.images()) a.push_back(static_cast<int>(v));
  return a;
}

void require_vertex(const DendriteModel& m, int v, const std::string& flag) {
  if (!m.contains(v)) throw UsageError(flag + ": vertex " + std::to_string(v) + " is not in the model");
}

// ---- gamma ----

Report gamma_analyze(const Options& o) {
  Report r;
  const PermGroup g = load_group(o, r, o.n);
  const auto orbits = orbits_on_points(g);
  const auto prim = is_primitive(g);
  const bool transitive = is_transitive(g);
  const bool doubly = is_doubly_transitive(g);
  const bool generous = is_generously_transitive(g);
  const bool semi = is_semi_generous(g);
  const std::size_t order = g.order();

  Json orbit_json = Json::array();
  std::string orbit_text;
  for (const auto& orbit : orbits) {
    orbit_json.push_back(orbit);
    orbit_text += "{";
    for (std::size_t i = 0; i < orbit.size(); ++i) orbit_text += (i ? " " : "") + std::to_string(orbit[i]);
    orbit_text += "}";
  }
  std::string prim_text = yes_no(prim.primitive);
  if (prim.reason == PrimitivityReason::kIntransitive) prim_text += " (intransitive)";
  if (prim.reason == PrimitivityReason::kImprimitive) prim_text += " (imprimitive)";

  r.rows = {{"degree", std::to_string(g.degree())},
            {"order", std::to_string(order)},
            {"orbits", orbit_text},
            {"transitive", yes_no(transitive)},
            {"doubly-transitive", yes_no(doubly)},
            {"generous", yes_no(generous)},
            {"semi-generous", yes_no(semi)},
            {"primitive", prim_text}};
  r.result = {{"degree", g.degree()},      {"order", order},         {"orbits", orbit_json},
              {"transitive", transitive},  {"doubly_transitive", doubly}, {"generous", generous},
              {"semi_generous", semi},     {"primitive", prim.primitive}};
  if (prim.reason == PrimitivityReason::kImprimitive) {
    r.result["blocks"] = prim.blocks;
  }
  return r;
}

// ---- model ----

void describe_model(const DendriteModel& m, Report& r) {
  r.rows = {{"n", std::to_string(m.n())},
            {"depth", std::to_string(m.depth())},
            {"vertices", std::to_string(m.num_vertices())},
            {"edges", std::to_string(m.num_edges())},
            {"branch-vertices", std::to_string(m.branch_vertices().size())},
            {"end-stubs", std::to_string(m.end_stubs().size())}};
  r.result = {{"n", m.n()},
              {"depth", m.depth()},
              {"vertices", m.num_vertices()},
              {"edges", m.num_edges()},
              {"branch_vertices", m.branch_vertices().size()},
              {"end_stubs", m.end_stubs().size()}};
}

Report model_build(const Options& o) {
  Report r;
  const auto m = load_model(o, r);
  describe_model(m, r);
  r.body = format_model(m);
  return r;
}

Report model_stats(const Options& o) {
  Report r;
  describe_model(load_model(o, r), r);
  return r;
}

// ---- color ----

Report color_emit(const Options& o, bool uniform) {
  Report r;
  const auto m = load_model(o, r);
  if (!uniform && !o.seed) throw UsageError("--seed is required");
  const Coloring c = uniform ? uniform_coloring(m) : random_coloring(m, *o.seed);
  r.rows = {{"branch-vertices", std::to_string(m.branch_vertices().size())}};
  r.result = {{"branch_vertices", m.branch_vertices().size()}};
  if (uniform) {
    r.rows.emplace_back("root", std::to_string(uniform_coloring_root(m)));
    r.result["root"] = uniform_coloring_root(m);
  } else {
    r.rows.emplace_back("seed", std::to_string(*o.seed));
    r.result["seed"] = *o.seed;
  }
  r.body = format_coloring(m, c);
  return r;
}

Report color_audit(const Options& o) {
  Report r;
  const auto m = load_model(o, r);
  const auto c = load_coloring(o, m, r);
  const auto audit = kaleidoscopic_defects(m, c, o.min_separation, o.jobs);
  r.rows = {{"min-separation", std::to_string(o.min_separation)},
            {"pairs-checked", std::to_string(audit.pairs_checked)},
            {"defects", std::to_string(audit.entries.size())}};
  Json entries = Json::array();
  for (const auto& d : audit.entries) entries.push_back({d.x, d.y, d.i, d.j});
  r.result = {{"min_separation", o.min_separation},
              {"pairs_checked", audit.pairs_checked},
              {"defects", audit.entries.size()},
              {"entries", entries}};
  const std::size_t shown = std::min<std::size_t>(audit.entries.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& d = audit.entries[i];
    r.lines.push_back("missing (" + std::to_string(d.i) + "," + std::to_string(d.j) + ") between " +
                      std::to_string(d.x) + " and " + std::to_string(d.y));
  }
  if (audit.entries.size() > shown) {
    r.lines.push_back(std::to_string(audit.entries.size() - shown) + " more; use --format records for all");
  }
  return r;
}

Report color_recolor(const Options& o) {
  Report r;
  const auto m = load_model(o, r);
  const auto c = load_coloring(o, m, r);
  const auto g = load_group(o, r, m.n());
  const auto rec = recolor_doubly_transitive(m, c, g);
  const auto before = kaleidoscopic_defects(m, c, o.min_separation, o.jobs).entries.size();
  const auto after = kaleidoscopic_defects(m, rec.coloring, o.min_separation, o.jobs).entries.size();
  r.rows = {{"rewrites", std::to_string(rec.rewrites.size())},
            {"shortfalls", std::to_string(rec.shortfalls.size())},
            {"defects-before", std::to_string(before)},
            {"defects-after", std::to_string(after)}};
  Json rewrites = Json::array();
  for (const auto& [v, gamma] : rec.rewrites) rewrites.push_back({{"vertex", v}, {"gamma", perm_json(gamma)}});
  Json shortfalls = Json::array();
  for (const auto& s : rec.shortfalls) shortfalls.push_back({s.v, s.w, s.i, s.j});
  r.result = {{"rewrites", rewrites},
              {"shortfalls", shortfalls},
              {"defects_before", before},
              {"defects_after", after}};
  r.body = format_coloring(m, rec.coloring);
  return r;
}

// ---- k ----

Automorphism load_automorphism(const Options& o, const DendriteModel& m, Report& r) {
  if (o.automorphisms.size() != 1) throw UsageError("exactly one --automorphism is required");
  return parse_automorphism(m, load_input(r, "automorphism", o.automorphisms.front()));
}

Report k_local_action(const Options& o) {
  Report r;
  const auto m = load_model(o, r);
  const auto c = load_coloring(o, m, r);
  const auto a = load_automorphism(o, m, r);
  if (o.x) {
    require_vertex(m, *o.x, "-x");
    const Perm p = local_action(m, c, a, *o.x);
    r.rows = {{"vertex", std::to_string(*o.x)}, {"local-action", p.to_cycles()}};
    r.result = {{"vertex", *o.x}, {"local_action", perm_json(p)}};
    return r;
  }
  Json profile = Json::array();
  std::size_t moved = 0;
  for (VertexId v : m.branch_vertices()) {
    const Perm p = local_action(m, c, a, v);
    profile.push_back({{"vertex", v}, {"local_action", perm_json(p)}});
    if (!p.is_identity()) {
      ++moved;
      r.lines.push_back(std::to_string(v) + ": " + p.to_cycles());
    }
  }
  r.rows = {{"branch-vertices", std::to_string(m.branch_vertices().size())},
            {"non-identity", std::to_string(moved)}};
  r.result = {{"profile", profile}};
  return r;
}

Report k_member(const Options& o) {
  Report r;
  const auto m = load_model(o, r);
  const auto c = load_coloring(o, m, r);
  const auto g = load_group(o, r, m.n());
  const auto a = load_automorphism(o, m, r);
  const auto mem = is_member(m, c, g, a);
  r.rows = {{"member", yes_no(mem.member)}};
  r.result = {{"member", mem.member}};
  if (!mem.member) {
    r.rows.emplace_back("witness-vertex", std::to_string(*mem.vertex));
    r.rows.emplace_back("local-action", mem.action->to_cycles());
    r.result["witness_vertex"] = *mem.vertex;
    r.result["local_action"] = perm_json(*mem.action);
  }
  return r;
}

Report k_split(const Options& o) {
  Report r;
  const auto m = load_model(o, r);
  const auto c = load_coloring(o, m, r);
  const auto g = load_group(o, r, m.n());
  const VertexId x = o.x ? *o.x : uniform_coloring_root(m);
  require_vertex(m, x, "-x");
  const Perm gamma = parse_gamma(o.gamma, m.n());
  const auto a = split_gamma(m, c, g, x, gamma);
  std::size_t moved = 0;
  for (std::size_t v = 0; v < a.size(); ++v) moved += a(static_cast<VertexId>(v)) != static_cast<VertexId>(v);
  r.rows = {{"vertex", std::to_string(x)}, {"gamma", gamma.to_cycles()}, {"moved-vertices", std::to_string(moved)}};
  r.result = {{"vertex", x}, {"gamma", perm_json(gamma)}, {"moved_vertices", moved}};
  r.body = format_automorphism(a);
  return r;
}

Report k_extend(const Options& o) {
  Report r;
  const auto m = load_model(o, r);
  const auto c = load_coloring(o, m, r);
  const auto g = load_group(o, r, m.n());
  const auto dom = parse_list(o.tuple, "--tuple");
  const auto img = parse_list(o.image, "--image");
  if (dom.size() != img.size()) throw UsageError("--tuple and --image must have the same length");
  PartialMap f;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    require_vertex(m, dom[i], "--tuple");
    require_vertex(m, img[i], "--image");
    f.emplace_back(dom[i], img[i]);
  }
  const auto a = extend_partial(m, c, g, f, std::max(enumeration_budget(o) / 10, std::size_t{1}));
  r.rows = {{"extension", a ? "found" : "none"}};
  r.result = {{"found", a.has_value()}};
  if (a) r.body = format_automorphism(*a);
  return r;
}

Report k_orbits(const Options& o) {
  Report r;
  const auto m = load_model(o, r);
  const auto c = load_coloring(o, m, r);
  const auto g = load_group(o, r, m.n());
  const auto count = count_orbits(m, c, g, o.k, enumeration_budget(o), o.jobs);
  r.rows = {{"k", std::to_string(o.k)}, {"orbits", std::to_string(count)}};
  r.result = {{"k", o.k}, {"orbits", count}};
  return r;
}

Report k_same_orbit(const Options& o) {
  Report r;
  const auto m = load_model(o, r);
  const auto c = load_coloring(o, m, r);
  const auto g = load_group(o, r, m.n());
  const auto a = parse_list(o.tuple, "--tuple");
  const auto b = parse_list(o.image, "--image");
  for (VertexId v : a) require_vertex(m, v, "--tuple");
  for (VertexId v : b) require_vertex(m, v, "--image");
  const bool same = same_orbit(m, c, g, a, b);
  r.rows = {{"same-orbit", yes_no(same)}};
  r.result = {{"same_orbit", same}};
  return r;
}

// ---- coh ----

Report coh_rank(const Options& o) {
  Report r;
  const auto g = load_group(o, r, o.n);
  const auto rank = cocycle_space_rank(g.degree(), g);
  r.rows = {{"degree", std::to_string(g.degree())}, {"rank", std::to_string(rank)}};
  r.result = {{"degree", g.degree()}, {"rank", rank}};
  return r;
}

Report coh_generosity(const Options& o) {
  Report r;
  const auto g = load_group(o, r, o.n);
  const auto w = generosity_coboundary(g);
  r.rows = {{"generous", yes_no(is_generously_transitive(g))},
            {"semi-generous", yes_no(is_semi_generous(g))},
            {"witness", w ? "yes" : "no"}};
  r.result = {{"generous", is_generously_transitive(g)}, {"semi_generous", is_semi_generous(g)}};
  if (!w) {
    r.result["witness"] = nullptr;
    return r;
  }
  const auto [x, y, z] = w->triple;
  const Cochain1& d = w->delta;
  r.rows.emplace_back("orbital", "(" + std::to_string(w->orbital[0]) + "," + std::to_string(w->orbital[1]) + ")");
  r.rows.emplace_back("triple", "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
  r.rows.emplace_back("check", "Delta(x,y)=" + std::to_string(d(x, y)) + " Delta(x,z)+Delta(z,y)=" +
                                   std::to_string(d(x, z) + d(z, y)));
  Json delta = Json::array();
  for (int i = 0; i < g.degree(); ++i)
    for (int j = i + 1; j < g.degree(); ++j)
      if (d(i, j) != 0) delta.push_back({i, j, d(i, j)});
  r.result["witness"] = {{"orbital", w->orbital}, {"triple", w->triple}, {"delta", delta}};
  return r;
}

Report coh_omega_verify(const Options& o) {
  Report r;
  const auto m = load_model(o, r);
  const auto c = load_coloring(o, m, r);
  if (o.cochain.empty()) throw UsageError("--cochain is required");
  const Cochain2 omega = parse_cochain(load_input(r, "cochain", o.cochain));
  std::vector<Automorphism> autos;
  for (std::size_t i = 0; i < o.automorphisms.size(); ++i) {
    autos.push_back(parse_automorphism(m, load_input(r, "automorphism" + std::to_string(i), o.automorphisms[i])));
  }
  const auto check = verify_omega(m, c, omega, autos, enumeration_budget(o));
  r.rows = {{"ok", yes_no(check.ok)}, {"quadruples", std::to_string(check.quadruples)}};
  r.result = {{"ok", check.ok}, {"quadruples", check.quadruples}};
  if (!check.ok) {
    const bool cocycle = check.failure == OmegaFailure::kCocycle;
    std::string w;
    for (VertexId v : check.witness) w += (w.empty() ? "" : ",") + std::to_string(v);
    r.rows.emplace_back("failure", cocycle ? "cocycle" : "invariance");
    r.rows.emplace_back("witness", w);
    r.result["failure"] = cocycle ? "cocycle" : "invariance";
    r.result["witness"] = check.witness;
    if (!cocycle) r.result["automorphism"] = check.automorphism;
  }
  return r;
}

// ---- verify ----

Report verify(const Options& o) {
  Report r;
  const VerifyLevel level = o.level == "full" ? VerifyLevel::kFull : VerifyLevel::kQuick;
  const auto results = run_acceptance(level, o.jobs);
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& c : results) {
    passed += c.passed;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (c.passed ? "PASS" : "FAIL") << ' ' << c.id << ' ' << c.name << " (" << c.seconds
         << "s) " << c.detail;
    r.lines.push_back(line.str());
    list.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  r.rows = {{"level", o.level}, {"passed", std::to_string(passed) + "/" + std::to_string(results.size())}};
  r.result = {{"level", o.level}, {"criteria", list}};
  r.failed = passed != results.size();
  return r;
}

// ---- plumbing ----

void write_body(const Options& o, Report& r, std::ostream& out) {
  if (r.body.empty()) return;
  if (!o.out.empty()) {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + o.out);
    file << r.body;
    r.result["output"] = {{"path", o.out}, {"digest", content_digest(r.body)}};
  } else if (o.format == "human") {
    out << r.body;
  } else {
    r.result["text"] = r.body;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kaleidoscopic groups on finite dendrite models", "dendroscope"};
  app.require_subcommand(1);
  Options o;
  std::function<Report(const Options&)> action;
  std::string command;

  auto verb = [&](CLI::App* noun, const std::string& name, const std::string& help,
                  std::function<Report(const Options&)> fn) {
    CLI::App* cmd = noun->add_subcommand(name, help);
    cmd->add_option("--format", o.format, "human or records")->check(CLI::IsMember({"human", "records"}));
    cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", o.budget, "enumeration cap");
    cmd->add_flag("--timing", o.timing, "add wall-clock duration to records");
    cmd->callback([&, fn, full = noun->get_name() + " " + name] {
      action = fn;
      command = full;
    });
    return cmd;
  };
  auto model_flags = [&](CLI::App* cmd) {
    cmd->add_option("-n", o.n, "branching order");
    cmd->add_option("-d,--depth", o.depth, "refinement depth");
    cmd->add_option("--model", o.model, "model file")->check(CLI::ExistingFile);
  };
  auto coloring_flags = [&](CLI::App* cmd) {
    cmd->add_option("--coloring", o.coloring, "coloring file")->check(CLI::ExistingFile);
    cmd->add_option("--seed", o.seed, "seed of a random coloring");
    cmd->add_flag("--uniform", o.uniform, "use the uniform coloring");
  };
  auto group_flag = [&](CLI::App* cmd) {
    cmd->add_option("--group", o.group, "FILE, trivial, sym or cat:NAME")->required();
  };

  CLI::App* gamma = app.add_subcommand("gamma", "local permutation groups");
  gamma->require_subcommand(1);
  {
    auto* c = verb(gamma, "analyze", "orbit and transitivity properties", gamma_analyze);
    group_flag(c);
    c->add_option("-n", o.n, "degree for trivial, sym and cat:NAME");
  }

  CLI::App* model = app.add_subcommand("model", "finite dendrite models");
  model->require_subcommand(1);
  {
    auto* c = verb(model, "build", "write a model file", model_build);
    model_flags(c);
    c->add_option("-o,--out", o.out, "output file");
    c = verb(model, "stats", "vertex and edge counts", model_stats);
    model_flags(c);
    c->add_option("file", o.model, "model file")->check(CLI::ExistingFile);
  }

  CLI::App* color = app.add_subcommand("color", "colorings");
  color->require_subcommand(1);
  {
    auto* c = verb(color, "random", "write a random coloring", [](const Options& opt) { return color_emit(opt, false); });
    model_flags(c);
    c->add_option("--seed", o.seed, "seed")->required();
    c->add_option("-o,--out", o.out, "output file");
    c = verb(color, "uniform", "write the uniform coloring", [](const Options& opt) { return color_emit(opt, true); });
    model_flags(c);
    c->add_option("-o,--out", o.out, "output file");
    c = verb(color, "audit", "kaleidoscopic defects", color_audit);
    model_flags(c);
    coloring_flags(c);
    c->add_option("--min-sep,--min-separation", o.min_separation, "minimum pair distance")->check(CLI::Range(2, 1 << 20));
    c = verb(color, "recolor", "recoloring for a doubly transitive group", color_recolor);
    model_flags(c);
    coloring_flags(c);
    group_flag(c);
    c->add_option("--min-sep,--min-separation", o.min_separation, "minimum pair distance")->check(CLI::Range(2, 1 << 20));
    c->add_option("-o,--out", o.out, "output file");
  }

  CLI::App* k = app.add_subcommand("k", "kaleidoscopic groups");
  k->require_subcommand(1);
  {
    auto* c = verb(k, "local-action", "local action of an automorphism", k_local_action);
    model_flags(c);
    coloring_flags(c);
    c->add_option("--automorphism", o.automorphisms, "automorphism file")->check(CLI::ExistingFile);
    c->add_option("-x", o.x, "branch vertex");
    c = verb(k, "member", "membership in the kaleidoscopic group", k_member);
    model_flags(c);
    coloring_flags(c);
    group_flag(c);
    c->add_option("--automorphism", o.automorphisms, "automorphism file")->check(CLI::ExistingFile)->required();
    c = verb(k, "split", "splitting section at a branch vertex", k_split);
    model_flags(c);
    coloring_flags(c);
    group_flag(c);
    c->add_option("-x", o.x, "branch vertex (default: uniform coloring root)");
    c->add_option("--gamma", o.gamma, "permutation in cycle or [image] notation")->required();
    c->add_option("-o,--out", o.out, "output file");
    c = verb(k, "extend", "extend a partial map", k_extend);
    model_flags(c);
    coloring_flags(c);
    group_flag(c);
    c->add_option("--tuple", o.tuple, "domain vertices a,b,c")->required();
    c->add_option("--image", o.image, "image vertices a,b,c")->required();
    c->add_option("-o,--out", o.out, "output file");
    c = verb(k, "orbits", "orbits on tuples of branch vertices", k_orbits);
    model_flags(c);
    coloring_flags(c);
    group_flag(c);
    c->add_option("-k", o.k, "tuple length")->check(CLI::PositiveNumber);
    c = verb(k, "same-orbit", "compare two tuples", k_same_orbit);
    model_flags(c);
    coloring_flags(c);
    group_flag(c);
    c->add_option("--tuple", o.tuple, "first tuple a,b,c")->required();
    c->add_option("--image", o.image, "second tuple a,b,c")->required();
  }

  CLI::App* coh = app.add_subcommand("coh", "cochains and cocycles");
  coh->require_subcommand(1);
  {
    auto* c = verb(coh, "rank", "rank of invariant alternating 2-cocycles", coh_rank);
    group_flag(c);
    c->add_option("-n", o.n, "degree");
    c = verb(coh, "generosity", "generosity decision with witness", coh_generosity);
    group_flag(c);
    c->add_option("-n", o.n, "degree");
    c = verb(coh, "omega-verify", "check the lifted cocycle on a model", coh_omega_verify);
    model_flags(c);
    coloring_flags(c);
    c->add_option("--cochain", o.cochain, "cochain file")->check(CLI::ExistingFile);
    c->add_option("--automorphism", o.automorphisms, "automorphism files to test invariance")
        ->check(CLI::ExistingFile);
  }

  {
    CLI::App* c = app.add_subcommand("verify", "run the acceptance checks");
    c->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    c->add_option("--format", o.format, "human or records")->check(CLI::IsMember({"human", "records"}));
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    c->add_flag("--timing", o.timing, "add wall-clock duration to records");
    c->callback([&] {
      action = verify;
      command = "verify";
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Json record{{"schema", kReportSchema}, {"command", command}, {"args", args}};
  try {
    Report r = action(o);
    write_body(o, r, out);
    if (o.format == "records") {
      record["inputs"] = r.inputs;
      record["result"] = r.result;
      if (o.timing) {
        record["duration_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
      out << record.dump() << '\n';
    } else {
      // A payload on stdout stays parseable; the summary moves to stderr.
      std::ostream& table = (!r.body.empty() && o.out.empty()) ? err : out;
      std::size_t width = 0;
      for (const auto& [key, value] : r.rows) width = std::max(width, key.size());
      for (const auto& [key, value] : r.rows) table << key << ':' << std::string(width - key.size() + 1, ' ') << value << '\n';
      for (const auto& line : r.lines) table << line << '\n';
    }
    return r.failed ? 1 : 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    if (o.format == "records") {
      record["error"] = std::string(e.name());
      record["message"] = e.what();
      out << record.dump() << '\n';
    }
    return e.code() == ErrorCode::kParseError ? 2 : 1;
  }
}

}  // namespace dendroscope::cli
