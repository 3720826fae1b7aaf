#include "crn_cli/app.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "crn/corpus.hpp"
#include "crn_cli/pipeline.hpp"

#ifndef CRN_VERSION
#define CRN_VERSION "0.0.0"
#endif

namespace crn::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Loaded {
  ReactionNetwork net;
  std::string hash;
};

Loaded load(const std::string& path) {
  std::string text = read_file(path);
  return {parse_network(text, path), fnv1a_hex(text)};
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("CRN_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw InputError(std::string("CRN_SEED is not an unsigned integer: ") + s);
    }
  }
  return 42;
}

FamilyRequest parse_family(const std::string& s) {
  if (s == "auto") return FamilyRequest::automatic;
  if (s == "type-c") return FamilyRequest::type_c;
  if (s == "cube") return FamilyRequest::cube;
  if (s == "subset-sum") return FamilyRequest::subset_sum;
  throw InputError("unknown family '" + s + "'");
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  ordered_json manifest(const std::string& command, const std::string& hash) const {
    ordered_json m;
    m["command"] = command;
    m["tool_version"] = CRN_VERSION;
    if (!hash.empty()) m["input_hash"] = hash;
    return m;
  }

  void emit(ordered_json report) {
    if (timing_) {
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      report["manifest"]["timing_seconds"] = s;
    }
    if (json_)
      out_ << report.dump(2) << "\n";
    else
      out_ << pretty(report);
  }

  int cmd_parse();
  int cmd_factorize();
  int cmd_classify();
  int cmd_graph();
  int cmd_cone();
  int cmd_verify();
  int cmd_simulate();
  int cmd_corpus();

  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

  bool json_ = false, timing_ = false;
  std::string file_;
  std::string format_ = "json";
  std::string kind_ = "r";
  bool dot_ = false;
  std::string family_ = "auto";
  bool emit_ball_ = false;
  VerifyOptions vopt_;
  std::string x0_;
  std::size_t checkpoints_ = kCheckpoints;
  std::string network_;
  bool all_ = false;
  std::string export_dir_;
};

int Runner::cmd_parse() {
  auto in = load(file_);
  if (format_ == "crn") {
    out_ << serialize_crn(in.net);
    return kApplies;
  }
  if (format_ == "json-network") {
    out_ << serialize_json(in.net);
    return kApplies;
  }
  ordered_json j;
  j["manifest"] = manifest("parse", in.hash);
  j["network"] = network_json(in.net);
  emit(std::move(j));
  return kApplies;
}

int Runner::cmd_factorize() {
  auto in = load(file_);
  auto rep = classify(in.net);
  ordered_json j = factorization_json(rep);
  j["manifest"] = manifest("factorize", in.hash);
  emit(std::move(j));
  return rep.factorizable ? kApplies : kDoesNotApply;
}

int Runner::cmd_classify() {
  auto in = load(file_);
  auto rep = classify(in.net);
  ordered_json j;
  j["manifest"] = manifest("classify", in.hash);
  j["report"] = classification_json(in.net, rep);
  emit(std::move(j));
  return rep.theorem1_applies ? kApplies : kDoesNotApply;
}

int Runner::cmd_graph() {
  auto in = load(file_);
  if (kind_ == "r") {
    auto g = r_graph(in.net);
    if (dot_) {
      out_ << to_dot(g, in.net);
      return kApplies;
    }
    ordered_json j;
    j["manifest"] = manifest("graph", in.hash);
    j["graph"] = graph_json(g, in.net);
    emit(std::move(j));
    return kApplies;
  }
  const bool bip = kind_ == "bipartite";
  if (!bip && kind_ != "ri") throw InputError("unknown graph kind '" + kind_ + "'");
  if (dot_) {
    out_ << (bip ? to_dot(bipartite_graph(in.net), in.net) : to_dot(ri_graph(in.net), in.net));
    return kApplies;
  }
  ordered_json j;
  j["manifest"] = manifest("graph", in.hash);
  if (bip)
    j["graph"] = graph_json(bipartite_graph(in.net), in.net, true);
  else
    j["graph"] = graph_json(ri_graph(in.net), in.net, false);
  emit(std::move(j));
  return kApplies;
}

int Runner::cmd_cone() {
  auto in = load(file_);
  auto rep = classify(in.net);
  ordered_json j;
  j["manifest"] = manifest("cone", in.hash);
  try {
    auto cc = construct_cone(in.net, rep, parse_family(family_), emit_ball_);
    j["cone"] = cone_json(cc, emit_ball_);
  } catch (const std::invalid_argument& e) {
    j["error"] = e.what();
    emit(std::move(j));
    return kDoesNotApply;
  } catch (const GeometryError& e) {
    j["error"] = e.what();
    emit(std::move(j));
    return kDoesNotApply;
  }
  emit(std::move(j));
  return kApplies;
}

int Runner::cmd_verify() {
  auto in = load(file_);
  vopt_.family = parse_family(family_);
  ordered_json j;
  j["manifest"] = manifest("verify", in.hash);
  j["manifest"]["seed"] = vopt_.seed;
  try {
    auto res = verify_network(in.net, vopt_);
    j["report"] = std::move(res.report);
    emit(std::move(j));
    return res.verified ? kApplies : kDoesNotApply;
  } catch (const GeometryError& e) {
    j["error"] = e.what();
  } catch (const std::invalid_argument& e) {
    j["error"] = e.what();
  }
  emit(std::move(j));
  return kDoesNotApply;
}

int Runner::cmd_simulate() {
  auto in = load(file_);
  std::vector<double> x0;
  {
    std::stringstream ss(x0_);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        x0.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw InputError("bad --x0 entry '" + tok + "'");
      }
    }
  }
  if (x0.size() != in.net.n())
    throw InputError("--x0 needs " + std::to_string(in.net.n()) + " comma-separated values");
  auto kin = mass_action(in.net, kinetics_for(in.net, vopt_, 0));
  auto tr = integrate(in.net, kin, x0, vopt_.t_final, vopt_.dt, checkpoints_);
  out_ << "t";
  for (const auto& s : in.net.species) out_ << "," << s;
  out_ << "\n";
  char buf[32];
  for (std::size_t c = 0; c < tr.times.size(); ++c) {
    std::snprintf(buf, sizeof buf, "%.17g", tr.times[c]);
    out_ << buf;
    for (double v : tr.states[c]) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out_ << "," << buf;
    }
    out_ << "\n";
  }
  return kApplies;
}

int Runner::cmd_corpus() {
  std::vector<std::string> names;
  if (!network_.empty()) {
    names.push_back(network_);
  } else {
    for (const auto& e : corpus())
      if (all_ || e.biochemical) names.push_back(e.name);
  }
  if (!export_dir_.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(fs::path(export_dir_) / "expected");
    for (const auto& e : corpus()) {
      std::ofstream(fs::path(export_dir_) / (e.name + ".crn")) << e.text;
      auto net = corpus_network(e.name);
      std::ofstream(fs::path(export_dir_) / "expected" / (e.name + ".json"))
          << classification_json(net, classify(net)).dump(2) << "\n";
    }
    err_ << "wrote " << corpus().size() << " fixtures to " << export_dir_ << "\n";
    return kApplies;
  }
  std::size_t classified = 0, verified = 0;
  ordered_json all = ordered_json::array();
  for (const auto& name : names) {
    ReactionNetwork net = corpus_network(name);
    VerifyOptions opt = vopt_;
    for (const auto& e : corpus())
      if (e.name == name) opt.assume_persistent = opt.assume_persistent || e.assume_persistent;
    if (name.rfind("processive_phosphorylation", 0) == 0) opt.assume_persistent = true;
    auto rep = classify(net);
    classified += rep.theorem1_applies;
    VerifyOutcome res;
    std::string error;
    try {
      res = verify_network(net, opt);
    } catch (const std::exception& e) {
      error = e.what();
    }
    verified += res.verified;
    if (json_) {
      ordered_json j;
      j["network"] = name;
      j["classification"] = classification_json(net, rep);
      if (error.empty())
        j["verification"] = std::move(res.report);
      else
        j["error"] = error;
      all.push_back(std::move(j));
    } else {
      out_ << name << ": " << (rep.theorem1_applies ? "classified" : "not classified") << " ("
           << to_string(rep.cone_family) << "), " << (res.verified ? "verified" : "not verified");
      if (error.empty() && res.report.contains("monotonicity"))
        out_ << " [min pairing " << res.report["monotonicity"]["min_pairing"].get<double>() << ", contractive pairs "
             << res.report["contractivity"]["strictly_decreasing_overall"].get<std::size_t>() << "/"
             << res.report["contractivity"]["pairs"].get<std::size_t>() << "]";
      if (!error.empty()) out_ << " error: " << error;
      out_ << "\n";
    }
  }
  const std::string summary = std::to_string(classified) + "/" + std::to_string(names.size()) + " classified, " +
                              std::to_string(verified) + "/" + std::to_string(names.size()) + " verified";
  if (json_) {
    ordered_json j;
    j["manifest"] = manifest("corpus", "");
    j["manifest"]["seed"] = vopt_.seed;
    j["networks"] = std::move(all);
    j["summary"] = summary;
    emit(std::move(j));
  } else {
    out_ << summary << "\n";
  }
  return verified == names.size() ? kApplies : kDoesNotApply;
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Reaction-network factorization, monotone cones and contractivity checks", "crn"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CRN_VERSION);
  try {
    vopt_.seed = default_seed();
  } catch (const InputError& e) {
    err_ << "error: " << e.what() << "\n";
    return kInputError;
  }

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("FILE", file_, "network file (.crn text or JSON)")->required();
    sub->add_flag("--json", json_, "emit JSON instead of the pretty report");
    sub->add_flag("--timing", timing_, "include wall-clock timing in the manifest");
  };
  auto with_kinetics = [&](CLI::App* sub) {
    sub->add_option("--seed", vopt_.seed, "master seed (default: CRN_SEED or 42)");
    sub->add_flag("--stated-rates", vopt_.stated_rates, "use kf/kr from the file");
  };

  auto* parse = app.add_subcommand("parse", "parse and normalize a network");
  with_file(parse);
  parse->add_option("--format", format_, "json (report), crn or json-network")
      ->check(CLI::IsMember({"json", "crn", "json-network"}));
  auto* fact = app.add_subcommand("factorize", "Γ = PND factorization");
  with_file(fact);
  auto* cls = app.add_subcommand("classify", "factorization, classes and graph conditions");
  with_file(cls);
  auto* graph = app.add_subcommand("graph", "R-, RI- or species-reaction graph");
  with_file(graph);
  graph->add_option("--kind", kind_, "r, ri or bipartite")->check(CLI::IsMember({"r", "ri", "bipartite"}));
  graph->add_flag("--dot", dot_, "emit Graphviz DOT");
  auto* cone = app.add_subcommand("cone", "viable set, lifted cone, duals and norm ball");
  with_file(cone);
  cone->add_option("--family", family_, "auto, type-c, cube or subset-sum");
  cone->add_flag("--emit-ball", emit_ball_, "also build the contraction norm ball");
  auto* verify = app.add_subcommand("verify", "numerical monotonicity and contractivity checks");
  with_file(verify);
  with_kinetics(verify);
  verify->add_option("--states", vopt_.states, "random states per kinetic seed");
  verify->add_option("--kinetic-seeds", vopt_.kinetic_seeds, "number of kinetic parameter draws");
  verify->add_option("--pairs", vopt_.pairs, "compatible pairs for contractivity");
  verify->add_option("--t-final", vopt_.t_final, "contractivity horizon");
  verify->add_option("--dt", vopt_.dt, "RK4 step");
  verify->add_option("--convergence-starts", vopt_.convergence_starts, "initial conditions in one class");
  verify->add_option("--convergence-t", vopt_.convergence_t, "convergence horizon");
  verify->add_option("--convergence-dt", vopt_.convergence_dt, "convergence step");
  verify->add_option("--family", family_, "auto, type-c, cube or subset-sum");
  verify->add_flag("--assume-persistent", vopt_.assume_persistent, "treat the network as persistent");
  verify->add_flag("!--no-witnesses", vopt_.witnesses, "skip the face witness table");
  auto* sim = app.add_subcommand("simulate", "CSV trajectory");
  sim->add_option("FILE", file_, "network file")->required();
  with_kinetics(sim);
  sim->add_option("--x0", x0_, "comma-separated initial state")->required();
  sim->add_option("--t-final", vopt_.t_final, "horizon");
  sim->add_option("--dt", vopt_.dt, "RK4 step");
  sim->add_option("--checkpoints", checkpoints_, "output rows after t = 0");
  auto* corp = app.add_subcommand("corpus", "classify and verify the bundled networks");
  corp->add_flag("--json", json_, "emit JSON");
  corp->add_flag("--timing", timing_, "include timing");
  corp->add_flag("--all", all_, "include the introductory examples");
  corp->add_option("--network", network_, "single network; processive_phosphorylation:N for other chain lengths");
  corp->add_option("--seed", vopt_.seed, "master seed");
  corp->add_option("--pairs", vopt_.pairs, "compatible pairs per network");
  corp->add_option("--states", vopt_.states, "states per kinetic seed");
  corp->add_option("--export", export_dir_, "write corpus .crn files and expected reports to DIR");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    int code = app.exit(e, o, er);
    out_ << o.str();
    err_ << er.str();
    return code == 0 ? kApplies : kInputError;
  }

  try {
    if (*parse) return cmd_parse();
    if (*fact) return cmd_factorize();
    if (*cls) return cmd_classify();
    if (*graph) return cmd_graph();
    if (*cone) return cmd_cone();
    if (*verify) return cmd_verify();
    if (*sim) return cmd_simulate();
    if (*corp) return cmd_corpus();
  } catch (const ParseError& e) {
    err_ << file_ << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err_ << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceCapError& e) {
    err_ << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    err_ << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << "\n";
    return kDoesNotApply;
  }
  return kInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace crn::cli
