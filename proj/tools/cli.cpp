#include "cli.hpp"

#include "twinv/checks.hpp"
#include "twinv/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace twinv {

namespace {

struct Config {
  std::string type;
  std::string inv;
  std::vector<std::string> levi;
  bool empty_filter = false;
  std::optional<std::string> xi;
  std::optional<std::string> lambda;
  std::string c = "1";
  std::size_t cap = kDefaultEnumerationCap;
  std::string format;
  std::string out;
  bool extended = false;
};

struct Context {
  RootSystemPtr rs;
  std::optional<DiagramInvolution> theta;
  Rational c;
};

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Context load(const Config& cfg) {
  if (cfg.type.empty()) throw InputError("--type: a root system type is required");
  Context ctx;
  try {
    ctx.rs = build_root_system(cfg.type);
  } catch (const InputError& e) {
    throw InputError(std::string("--type: ") + e.what());
  }
  try {
    ctx.theta.emplace(DiagramInvolution::parse(ctx.rs, cfg.inv));
  } catch (const InputError& e) {
    throw InputError(std::string("--inv: ") + e.what());
  }
  try {
    ctx.c = parse_rational(cfg.c);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--c: ") + e.what());
  }
  if (weyl_order(*ctx.rs) > cfg.cap)
    throw CapExceeded("|W(" + cfg.type + ")| = " + std::to_string(weyl_order(*ctx.rs)) + " exceeds cap " + std::to_string(cfg.cap));
  return ctx;
}

std::string format_of(const Config& cfg, std::initializer_list<const char*> allowed) {
  std::string f = cfg.format.empty() ? *allowed.begin() : cfg.format;
  for (const char* a : allowed)
    if (f == a) return f;
  std::string msg = "--format: '" + f + "' is not one of";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw InputError(msg);
}

LeviSubset single_levi(const Config& cfg, const RootSystem& rs) {
  if (cfg.levi.size() > 1) throw InputError("--levi: this command takes a single Levi");
  try {
    return cfg.levi.empty() ? LeviSubset() : parse_levi(cfg.levi.front(), rs.rank());
  } catch (const InputError& e) {
    throw InputError(std::string("--levi: ") + e.what());
  }
}

Vertex read_vertex(const Config& cfg, const Context& ctx) {
  auto s = single_levi(cfg, *ctx.rs);
  WeylElement xi = WeylElement::identity(ctx.rs);
  try {
    if (cfg.xi) xi = parse_word(ctx.rs, *cfg.xi);
  } catch (const InputError& e) {
    throw InputError(std::string("--xi: ") + e.what());
  }
  if (auto why = vertex_violation(*ctx.theta, s, xi))
    throw InputError("--levi/--xi: (" + s.to_string() + ", " + xi.to_string() + ") is not a vertex: " + *why);
  return Vertex{s, xi};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json header(const Context& ctx) { return Json{{"type", ctx.rs->type_spec()}, {"theta", ctx.theta->one_based()}}; }

std::string cmd_enumerate(const Config& cfg) {
  auto ctx = load(cfg);
  auto fmt = format_of(cfg, {"text", "json"});
  auto twisted = enumerate_twisted(*ctx.theta, cfg.cap);
  std::vector<WeylElement> list;
  std::optional<LeviSubset> s;
  if (!cfg.levi.empty()) {
    s = single_levi(cfg, *ctx.rs);
    for (auto& v : enumerate_admissible(*ctx.theta, *s, twisted)) list.push_back(v.xi);
  } else {
    list = twisted;
  }
  if (fmt == "json") {
    Json j = header(ctx);
    if (s) j["levi"] = to_json(*s);
    j["count"] = list.size();
    Json xs = Json::array();
    for (const auto& w : list) xs.push_back(to_json(w));
    j["xi"] = std::move(xs);
    return dump(j);
  }
  std::ostringstream os;
  os << ctx.rs->type_spec() << ", theta " << ctx.theta->to_string();
  if (s) os << ", Levi " << s->to_string();
  os << ": " << list.size() << (s ? " admissible" : "") << " twisted involutions\n";
  for (const auto& w : list) os << "  " << w.to_string() << "\n";
  return os.str();
}

std::string cmd_graph(const Config& cfg) {
  auto ctx = load(cfg);
  auto fmt = format_of(cfg, {"dot", "json"});
  std::optional<std::vector<LeviSubset>> filter;
  if (cfg.empty_filter) {
    if (!cfg.levi.empty()) throw InputError("--empty-filter: cannot be combined with --levi");
    filter.emplace();
  } else if (!cfg.levi.empty()) {
    filter.emplace();
    for (const auto& l : cfg.levi) {
      try {
        filter->push_back(parse_levi(l, ctx.rs->rank()));
      } catch (const InputError& e) {
        throw InputError(std::string("--levi: ") + e.what());
      }
    }
  }
  auto g = build_graph(*ctx.theta, filter, cfg.cap);
  return fmt == "dot" ? graph_to_dot(g) : graph_to_json(g);
}

std::string cmd_classify(const Config& cfg) {
  auto ctx = load(cfg);
  auto fmt = format_of(cfg, {"text", "json"});
  std::vector<Vertex> vs;
  if (cfg.xi) {
    vs.push_back(read_vertex(cfg, ctx));
  } else {
    auto twisted = enumerate_twisted(*ctx.theta, cfg.cap);
    std::vector<LeviSubset> levis = cfg.levi.empty() ? all_levis(ctx.rs->rank()) : std::vector<LeviSubset>{single_levi(cfg, *ctx.rs)};
    for (auto s : levis)
      for (auto& v : enumerate_admissible(*ctx.theta, s, twisted)) vs.push_back(std::move(v));
  }
  Json arr = Json::array();
  std::ostringstream os;
  for (const auto& v : vs) {
    auto rep = is_maximal(*ctx.theta, v);
    Json j = to_json(v);
    j["maximal"] = rep.maximal;
    j["weight"] = weight(*ctx.theta, v);
    os << v.to_string() << "  weight " << weight(*ctx.theta, v);
    if (rep.maximal) {
      j["L"] = to_json(*rep.levi_l);
      os << "  maximal, L = " << rep.levi_l->to_string() << "\n";
    } else {
      j["witness"] = *rep.witness + 1;
      os << "  not maximal, ascent alpha_" << *rep.witness + 1 << "\n";
    }
    arr.push_back(std::move(j));
  }
  if (fmt == "json") {
    Json j = header(ctx);
    j["vertices"] = std::move(arr);
    return dump(j);
  }
  return os.str();
}

std::string cmd_path(const Config& cfg) {
  auto ctx = load(cfg);
  auto fmt = format_of(cfg, {"text", "json"});
  auto v = read_vertex(cfg, ctx);
  auto p = path_to_maximal(*ctx.theta, v);
  if (fmt == "json") {
    Json j = header(ctx);
    Json vs = Json::array(), labels = Json::array();
    for (const auto& u : p.vertices) {
      Json ju = to_json(u);
      ju["weight"] = weight(*ctx.theta, u);
      vs.push_back(std::move(ju));
    }
    for (const auto& e : p.edges) labels.push_back(e.alpha + 1);
    j["vertices"] = std::move(vs);
    j["labels"] = std::move(labels);
    return dump(j);
  }
  std::ostringstream os;
  os << p.vertices.front().to_string() << " [maximal, weight " << weight(*ctx.theta, p.vertices.front()) << "]\n";
  for (const auto& e : p.edges)
    os << "  --alpha_" << e.alpha + 1 << "--> " << e.target.to_string() << " [weight " << weight(*ctx.theta, e.target) << "]\n";
  return os.str();
}

std::string cmd_plan(const Config& cfg) {
  auto ctx = load(cfg);
  auto fmt = format_of(cfg, {"json", "text"});
  auto p = functional_equation_plan(*ctx.theta, read_vertex(cfg, ctx), ctx.c);
  return fmt == "json" ? dump(plan_to_json(p)) : plan_to_text(p);
}

std::string cmd_certificate(const Config& cfg) {
  auto ctx = load(cfg);
  auto fmt = format_of(cfg, {"json", "text"});
  auto cert = distinction_certificate(*ctx.theta, read_vertex(cfg, ctx), ctx.c);
  return fmt == "json" ? dump(certificate_to_json(cert)) : certificate_to_text(cert);
}

std::string cmd_cone(const Config& cfg) {
  auto ctx = load(cfg);
  auto fmt = format_of(cfg, {"json", "text"});
  auto v = read_vertex(cfg, ctx);
  Json j = header(ctx);
  j["vertex"] = to_json(v);
  j["c"] = to_pq_string(ctx.c);
  std::ostringstream os;
  if (cfg.lambda) {
    RationalVector lam;
    try {
      lam = parse_rational_vector(*cfg.lambda);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--lambda: ") + e.what());
    }
    if (static_cast<int>(lam.size()) != ctx.rs->rank())
      throw InputError("--lambda: expected " + std::to_string(ctx.rs->rank()) + " coordinates");
    auto res = in_cone_DMtheta(*ctx.theta, v, lam, ctx.c);
    j["lambda"] = to_json(lam);
    j["pass"] = res.pass;
    j["in_minus_eigenspace"] = res.in_minus_eigenspace;
    Json wit = Json::array();
    if (res.witness) wit.push_back(Json{{"root", to_json(res.witness->restriction)},
                                        {"lift", to_json(RationalVector::from_ints(res.witness->lifts.front()))},
                                        {"pairing", to_pq_string(res.witness_pairing)}});
    j["witnesses"] = std::move(wit);
    os << (res.pass ? "pass" : "fail") << ": lambda = " << lam.to_string() << ", c = " << ctx.c.get_str() << "\n";
    if (!res.in_minus_eigenspace) os << "  lambda_M is not in the -1 eigenspace of xi theta\n";
    if (res.witness)
      os << "  witness " << res.witness->restriction.to_string() << " with pairing " << res.witness_pairing.get_str() << "\n";
  } else {
    auto s = sample_cone_point(*ctx.theta, v, ctx.c);
    j["sample"] = to_json(s.lambda);
    j["scale"] = to_pq_string(s.scale);
    j["pass"] = true;
    os << "sample " << s.lambda.to_string() << " (t = " << s.scale.get_str() << ")\n";
  }
  return fmt == "json" ? dump(j) : os.str();
}

std::string cmd_check(const Config& cfg, bool& all_pass) {
  auto fmt = format_of(cfg, {"text", "json"});
  std::vector<std::string> types;
  if (!cfg.type.empty()) {
    types.push_back(cfg.type);
    try {
      build_root_system(cfg.type);
    } catch (const InputError& e) {
      throw InputError(std::string("--type: ") + e.what());
    }
  } else {
    types = cfg.extended ? extended_check_types() : default_check_types();
  }
  std::vector<Rational> cs = {0, 1, 10};
  try {
    Rational c = parse_rational(cfg.c);
    if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--c: ") + e.what());
  }
  auto report = run_checks(types, cfg.cap, cs);
  all_pass = report.all_pass();
  if (fmt == "json") return dump(report.to_json());
  return report.to_text();
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoFailure("cannot open '" + cfg.out + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoFailure("failed writing '" + cfg.out + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted involutions, orbit graphs and functional-equation plans for Weyl groups", "twinv"};
  app.set_config("--config", "", "INI file of key = value defaults; flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--type", cfg.type, "Root system, e.g. A3 or A2xB3");
  // Config files split comma lists into several values; join them back.
  auto comma_list = [](CLI::Option* o) { o->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join); };
  comma_list(app.add_option("--inv", cfg.inv, "Diagram involution as a 1-based permutation, e.g. 2,1 (empty = identity)"));
  app.add_option("--levi", cfg.levi, "Levi subset, 1-based, e.g. \"1,3\" (repeatable for graph)")->allow_extra_args(false);
  app.add_flag("--empty-filter", cfg.empty_filter, "graph: use an empty Levi filter");
  comma_list(app.add_option("--xi", cfg.xi, "Twisted involution as a reduced word, e.g. \"1,2\" (empty = e)"));
  comma_list(app.add_option("--lambda", cfg.lambda, "Comma separated rationals in simple-root coordinates"));
  app.add_option("--c", cfg.c, "Cone threshold (rational)")->capture_default_str();
  app.add_option("--cap", cfg.cap, "Largest Weyl group that may be enumerated")->capture_default_str();
  app.add_option("--format", cfg.format, "json, dot or text (per command)");
  app.add_option("--out", cfg.out, "Write output to this file");
  app.add_flag("--extended", cfg.extended, "check: add F4 and E6 to the default matrix");

  std::string command;
  for (auto [name, help] : std::initializer_list<std::pair<const char*, const char*>>{
           {"enumerate", "List twisted involutions, or admissible ones for --levi"},
           {"graph", "Export the orbit graph as DOT or JSON"},
           {"classify", "Maximality and L for vertices"},
           {"path", "Path from a maximal vertex down to the given vertex"},
           {"plan", "Functional-equation plan for a vertex"},
           {"certificate", "Distinction certificate for a vertex"},
           {"cone", "Cone membership of --lambda, or a cone sample"},
           {"check", "Run the invariant suite"}}) {
    app.add_subcommand(name, help)->callback([&command, n = std::string(name)] { command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  try {
    std::string text;
    int code = kExitOk;
    if (command == "enumerate") text = cmd_enumerate(cfg);
    else if (command == "graph") text = cmd_graph(cfg);
    else if (command == "classify") text = cmd_classify(cfg);
    else if (command == "path") text = cmd_path(cfg);
    else if (command == "plan") text = cmd_plan(cfg);
    else if (command == "certificate") text = cmd_certificate(cfg);
    else if (command == "cone") text = cmd_cone(cfg);
    else if (command == "check") {
      bool pass = false;
      text = cmd_check(cfg, pass);
      if (!pass) code = kExitCheckFailed;
    }
    emit(cfg, text, out);
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace twinv
