#include "orient/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "orient/analysis.hpp"
#include "orient/bounds.hpp"
#include "orient/constructions.hpp"
#include "orient/errors.hpp"
#include "orient/morphisms.hpp"
#include "orient/oracle.hpp"
#include "orient/sequence_io.hpp"

namespace orient::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string version_string() {
  return std::string("orientseq ") + kToolVersion + " (report format " +
         std::to_string(kReportFormat) + ")";
}

Json big(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return static_cast<std::uint64_t>(v);
  }
  return v.str();
}

std::string text(const RingSequence& s) { return format_ring(s); }

Json symbols_json(const RingSequence& s) {
  return Json(std::vector<Symbol>(s.symbols().begin(), s.symbols().end()));
}

Json verdict(const RingSequence& s, std::size_t n) {
  Json v;
  v["ring"] = text(s);
  v["q"] = s.q();
  v["period"] = s.period();
  v["order"] = n;
  v["n_window"] = is_n_window(s, n);
  v["orientable"] = is_orientable(s, n);
  v["negative_orientable"] = is_negative_orientable(s, n);
  v["special"] = is_special(s, n);
  v["weight_mod_q"] = weight_mod_q(s);
  v["alt_weight_mod_q"] = alt_weight_mod_q(s);
  if (n >= 2) {
    const auto b = period_bound(s.q(), static_cast<std::uint32_t>(n)).table_bound;
    v["within_bound"] = !is_orientable(s, n) || BigInt(s.period()) <= b;
  }
  return v;
}

std::vector<std::uint32_t> parse_list(const std::string& spec, const char* what) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(spec);
  std::string part;
  try {
    while (std::getline(ss, part, ',')) {
      const auto dots = part.find("..");
      if (dots == std::string::npos) {
        out.push_back(static_cast<std::uint32_t>(std::stoul(part)));
        continue;
      }
      const auto lo = std::stoul(part.substr(0, dots));
      const auto hi = std::stoul(part.substr(dots + 2));
      if (hi < lo) throw UsageError(std::string("empty range for ") + what);
      for (auto x = lo; x <= hi; ++x) out.push_back(static_cast<std::uint32_t>(x));
    }
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const UsageError*>(&e)) throw;
    throw UsageError(std::string("cannot parse ") + what + " '" + spec + "'");
  }
  if (out.empty()) throw UsageError(std::string("empty list for ") + what);
  return out;
}

SequenceKind parse_kind(const std::string& s) {
  if (s == "orientable") return SequenceKind::orientable;
  if (s == "negative_orientable" || s == "negative") return SequenceKind::negative_orientable;
  if (s == "special") return SequenceKind::special;
  throw UsageError("unknown kind '" + s + "'");
}

RingSequence single_ring(const std::string& file, std::optional<std::uint32_t> q) {
  const auto f = read_sequence_file(file, q);
  if (f.rings.size() != 1) {
    throw ParseError(file + ": expected exactly one ring, found " + std::to_string(f.rings.size()));
  }
  return f.rings.front();
}

struct Common {
  bool json = false;
  std::string out_file;
};

class Session {
 public:
  Session(std::ostream& out, const Common& common, std::string command)
      : out_(out), common_(common) {
    report_["command"] = std::move(command);
    report_["inputs"] = Json::object();
    report_["results"] = Json::object();
    report_["verification"] = Json::array();
    report_["version"] = version_string();
  }

  Json& inputs() { return report_["inputs"]; }
  Json& results() { return report_["results"]; }

  // Records the verdict for an emitted ring; a ring that does not have the
  // promised property aborts the command.
  void verify(const RingSequence& s, std::size_t n, const std::string& expect) {
    auto v = verdict(s, n);
    v["expected"] = expect;
    bool ok = v["n_window"].get<bool>();
    if (expect == "orientable") ok = v["orientable"].get<bool>();
    if (expect == "negative_orientable") ok = v["negative_orientable"].get<bool>();
    if (expect == "special") ok = v["special"].get<bool>();
    if (v.contains("within_bound")) ok = ok && v["within_bound"].get<bool>();
    v["passed"] = ok;
    report_["verification"].push_back(v);
    if (!ok) {
      emit();
      throw VerificationError("emitted ring " + text(s) + " is not " + expect + " of order " +
                              std::to_string(n));
    }
  }

  // Writes rings to --out, or to $ORIENTSEQ_OUTPUT_DIR/<default_name>, and
  // checks that the file reads back identically.
  void save(const std::vector<RingSequence>& rings, const std::string& default_name) {
    fs::path target;
    if (!common_.out_file.empty()) {
      target = common_.out_file;
    } else if (const char* dir = std::getenv("ORIENTSEQ_OUTPUT_DIR"); dir && *dir) {
      target = fs::path(dir) / default_name;
    } else {
      return;
    }
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    write_sequence_file(target, rings);
    const auto back = read_sequence_file(target);
    if (back.rings != rings) throw VerificationError("round trip of " + target.string() + " failed");
    report_["results"]["output_file"] = target.string();
    line("wrote " + target.string());
  }

  void line(const std::string& s) {
    if (!common_.json) out_ << s << "\n";
  }

  void emit() {
    if (common_.json) out_ << report_.dump(2) << "\n";
  }

 private:
  std::ostream& out_;
  const Common& common_;
  Json report_;
};

// --- subcommands ---------------------------------------------------------

struct VerifyArgs {
  std::string file;
  std::size_t n = 0;
  std::optional<std::uint32_t> q;
  std::string expect;
};

int cmd_verify(Session& s, const VerifyArgs& a) {
  s.inputs() = {{"file", a.file}, {"n", a.n}};
  if (a.q) s.inputs()["q"] = *a.q;
  if (!a.expect.empty()) s.inputs()["expect"] = a.expect;
  const auto f = read_sequence_file(a.file, a.q);
  Json rings = Json::array();
  bool all = true;
  for (const auto& r : f.rings) {
    auto v = verdict(r, a.n);
    if (!a.expect.empty()) {
      const bool ok = v.contains(a.expect) && v[a.expect].is_boolean() && v[a.expect].get<bool>();
      v["meets_expectation"] = ok;
      all = all && ok;
    }
    s.line(text(r) + ": period " + std::to_string(r.period()) + ", " +
           (v["orientable"].get<bool>() ? "orientable" : "not orientable") + ", " +
           (v["negative_orientable"].get<bool>() ? "negative orientable" : "not negative orientable") +
           " (order " + std::to_string(a.n) + ")");
    rings.push_back(std::move(v));
  }
  s.results()["rings"] = rings;
  if (f.rings.size() == 1) {
    s.results()["orientable"] = rings[0]["orientable"];
    s.results()["period"] = rings[0]["period"];
  }
  s.emit();
  if (!all) throw VerificationError("expectation '" + a.expect + "' not met");
  return 0;
}

struct BoundArgs {
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  bool diagnostic = false;
};

int cmd_bound(Session& s, const BoundArgs& a) {
  s.inputs() = {{"q", a.q}, {"n", a.n}, {"diagnostic", a.diagnostic}};
  const auto r = period_bound(a.q, a.n, a.diagnostic);
  auto& res = s.results();
  res["nonsymmetric_count"] = big(r.nonsymmetric_count);
  res["naive_bound"] = big(r.naive_bound);
  res["parity_bound"] = big(r.parity_bound);
  res["strengthened_bound"] = r.strengthened_bound ? big(*r.strengthened_bound) : Json(nullptr);
  if (r.diagnostic_strengthened) res["diagnostic_strengthened"] = big(*r.diagnostic_strengthened);
  res["table_bound"] = big(r.table_bound);
  res["parity_anomaly"] = r.parity_anomaly;
  res["notes"] = r.applicability_notes;
  s.line("period bound for q=" + std::to_string(a.q) + ", n=" + std::to_string(a.n) + ": " +
         r.table_bound.str() + " (" + r.applicability_notes + ")");
  if (r.diagnostic_strengthened) {
    s.line("diagnostic strengthened value: " + r.diagnostic_strengthened->str());
  }
  s.emit();
  return 0;
}

struct TableArgs {
  std::string qs = "2,3,4,5";
  std::string ns = "2..7";
  std::string format = "text";
};

int cmd_table(Session& s, std::ostream& out, bool json, const TableArgs& a) {
  const auto qs = parse_list(a.qs, "--q");
  const auto ns = parse_list(a.ns, "--n");
  s.inputs() = {{"q", qs}, {"n", ns}, {"format", a.format}};
  const auto table = bounds_table(qs, ns);
  Json rows = Json::array();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    Json row = Json::array();
    for (const auto& v : table[i]) row.push_back(big(v));
    rows.push_back({{"q", qs[i]}, {"bounds", row}});
  }
  s.results()["n"] = ns;
  s.results()["rows"] = rows;
  if (!json) {
    const char* sep = a.format == "csv" ? "," : "\t";
    out << "q\\n";
    for (const auto n : ns) out << sep << n;
    out << "\n";
    for (std::size_t i = 0; i < qs.size(); ++i) {
      out << qs[i];
      for (const auto& v : table[i]) out << sep << v.str();
      out << "\n";
    }
  }
  s.emit();
  return 0;
}

struct ConstructArgs {
  std::optional<std::uint32_t> prime;
  std::vector<std::string> join;
  std::string stitch;
  std::string recurse;
  std::size_t n = 0;
  std::size_t n0 = 0;
  std::size_t steps = 0;
  Symbol beta = 1;
  Symbol gamma = 1;
  std::string alteration;
  bool search_alteration = false;
  std::optional<std::uint32_t> q;
};

Json trace_json(const RecursionTrace& t) {
  Json steps = Json::array();
  for (const auto& st : t.steps) {
    steps.push_back({{"order", st.order},
                     {"period", st.period},
                     {"weight_mod_q", st.weight_mod_q},
                     {"kind", to_string(st.kind)},
                     {"residue", st.residue ? Json(*st.residue) : Json(nullptr)}});
  }
  return {{"steps", steps}, {"final", text(t.final)}};
}

int run_recursion(Session& s, const RingSequence& starter, std::size_t n0, std::size_t steps) {
  const auto t = recursive_generate(starter, n0, steps);
  s.results()["trace"] = trace_json(t);
  for (const auto& st : t.steps) {
    s.line("order " + std::to_string(st.order) + ": period " + std::to_string(st.period) + ", " +
           to_string(st.kind) + ", weight " + std::to_string(st.weight_mod_q));
  }
  const auto& last = t.steps.back();
  s.verify(t.final, last.order, to_string(last.kind));
  s.save({t.final}, "recurse-q" + std::to_string(starter.q()) + "-n" + std::to_string(last.order) + ".seq");
  s.line("final: " + text(t.final));
  s.emit();
  return 0;
}

int cmd_construct(Session& s, const ConstructArgs& a) {
  const int modes = (a.prime ? 1 : 0) + (a.join.empty() ? 0 : 1) + (a.stitch.empty() ? 0 : 1) +
                    (a.recurse.empty() ? 0 : 1);
  if (modes != 1) throw UsageError("construct needs exactly one of --prime, --join, --stitch, --recurse");

  if (a.prime) {
    s.inputs() = {{"prime", *a.prime}};
    const auto r = prime_order2(*a.prime);
    s.results()["mode"] = "prime";
    s.results()["ring"] = text(r);
    s.results()["period"] = r.period();
    s.results()["note"] = "symbol at position i*p + j is (i+1)*j mod p";
    s.line(text(r) + " (period " + std::to_string(r.period()) + ")");
    s.verify(r, 2, "orientable");
    s.save({r}, "prime-" + std::to_string(*a.prime) + ".seq");
    s.emit();
    return 0;
  }
  if (!a.join.empty()) {
    if (a.join.size() != 2) throw UsageError("--join takes two files");
    if (a.n == 0) throw UsageError("--join needs --n");
    s.inputs() = {{"join", a.join}, {"n", a.n}};
    const auto x = single_ring(a.join[0], a.q);
    const auto y = single_ring(a.join[1], a.q);
    const auto pair = find_conjugate_pair(x, y, a.n);
    const auto r = join_conjugate(x, y, a.n);
    s.results()["mode"] = "join";
    if (pair) s.results()["pair"] = {{"s_index", pair->s_index}, {"t_index", pair->t_index}};
    s.results()["ring"] = text(r);
    s.results()["period"] = r.period();
    s.line(text(r) + " (period " + std::to_string(r.period()) + ")");
    const bool both_orientable = is_orientable(x, a.n) && is_orientable(y, a.n) &&
                                 are_o_disjoint(x, y, a.n);
    s.verify(r, a.n, both_orientable ? "orientable" : "n_window");
    s.save({r}, "join.seq");
    s.emit();
    return 0;
  }
  if (!a.stitch.empty()) {
    if (a.n == 0) throw UsageError("--stitch needs --n");
    s.inputs() = {{"stitch", a.stitch}, {"n", a.n}, {"beta", a.beta}, {"gamma", a.gamma}};
    const auto x = single_ring(a.stitch, a.q);
    const auto r = stitch_alternating(x, a.beta, a.gamma, a.n);
    auto& res = s.results();
    res["mode"] = "stitch";
    res["ring"] = text(r.ring);
    res["period"] = r.ring.period();
    res["order"] = r.order;
    res["join_points"] = r.join_points;
    res["input_special_except_uniform"] = r.input_special_except_uniform;
    res["orientable"] = r.orientable;
    res["negative_orientable"] = r.negative_orientable;
    s.line(text(r.ring) + " (period " + std::to_string(r.ring.period()) + ", order " +
           std::to_string(r.order) + ")");
    s.verify(r.ring, r.order, r.input_special_except_uniform ? "orientable" : "n_window");
    std::vector<RingSequence> emitted{r.ring};
    if (!a.alteration.empty()) {
      const auto alt = single_ring(a.alteration, r.ring.q());
      const auto rep = check_alteration(alt, r.order, a.gamma);
      res["alteration"] = {{"ring", text(alt)},
                           {"n_window", rep.n_window},
                           {"orientable", rep.orientable},
                           {"negative_orientable", rep.negative_orientable},
                           {"special_except_uniform", rep.special_except_uniform},
                           {"weight_mod_q", rep.weight_mod_q},
                           {"contains_uniform_run", rep.contains_uniform_run},
                           {"valid", rep.valid}};
      s.line(std::string("alteration ") + text(alt) + ": " + (rep.valid ? "valid" : "invalid"));
    }
    if (a.search_alteration) {
      const auto found = search_alteration(r, a.gamma);
      res["alteration_search"] = {{"experimental", true},
                                  {"candidates", found.candidates},
                                  {"found", found.found ? Json(text(*found.found)) : Json(nullptr)}};
      if (found.found) {
        s.verify(*found.found, r.order, "n_window");
        emitted.push_back(*found.found);
      }
      s.line("alteration search: " + (found.found ? text(*found.found) : std::string("none found")) +
             " after " + std::to_string(found.candidates) + " candidates");
    }
    s.save(emitted, "stitch.seq");
    s.emit();
    return 0;
  }
  if (a.n0 == 0) throw UsageError("--recurse needs --n0");
  s.inputs() = {{"recurse", a.recurse}, {"n0", a.n0}, {"steps", a.steps}};
  s.results()["mode"] = "recurse";
  return run_recursion(s, single_ring(a.recurse, a.q), a.n0, a.steps);
}

struct LiftArgs {
  std::string file;
  std::string map = "D";
  Symbol beta = 1;
  std::size_t n = 0;
  std::optional<std::uint32_t> q;
};

int cmd_lift(Session& s, const LiftArgs& a) {
  if (a.map != "D" && a.map != "A") throw UsageError("--map must be D or A");
  s.inputs() = {{"file", a.file}, {"map", a.map}, {"n", a.n}};
  if (a.map == "D") s.inputs()["beta"] = a.beta;
  const auto x = single_ring(a.file, a.q);
  const auto r = a.map == "D" ? lift_D(x, a.beta, a.n) : lift_A(x, a.n);
  auto& res = s.results();
  res["order"] = r.order;
  res["order_h"] = r.order_h;
  res["relation"] = to_string(r.relation);
  res["classification"] = to_string(r.classification);
  Json cycles = Json::array();
  std::vector<RingSequence> rings;
  for (const auto& c : r.cycles) {
    cycles.push_back({{"ring", text(c.ring)},
                      {"period", c.ring.period()},
                      {"first_start", c.first_start},
                      {"shifts", c.shifts},
                      {"orientable", c.orientable},
                      {"negative_orientable", c.negative_orientable}});
    s.line(text(c.ring) + " period " + std::to_string(c.ring.period()) + " x" +
           std::to_string(c.shifts));
    s.verify(c.ring, r.order, "n_window");
    rings.push_back(c.ring);
  }
  res["cycles"] = cycles;
  res["pairwise_disjoint"] = r.pairwise_disjoint;
  res["pairwise_o_disjoint"] = r.pairwise_o_disjoint;
  res["pairwise_no_disjoint"] = r.pairwise_no_disjoint;
  s.line(std::string("case ") + to_string(r.classification) + ", h=" + std::to_string(r.order_h));
  s.save(rings, "lift-" + a.map + ".seq");
  s.emit();
  return 0;
}

struct ExtendArgs {
  std::string file;
  std::string map = "D";
  std::size_t n = 0;
  std::optional<std::uint32_t> q;
};

int cmd_extend(Session& s, const ExtendArgs& a) {
  if (a.map != "D" && a.map != "A") throw UsageError("--map must be D or A");
  s.inputs() = {{"file", a.file}, {"map", a.map}, {"n", a.n}};
  const auto x = single_ring(a.file, a.q);
  const bool was_orientable = is_orientable(x, a.n);
  const auto e = a.map == "D" ? extend_D(x, a.n) : extend_A(x, a.n);
  auto& res = s.results();
  res["ring"] = text(e.ring);
  res["period"] = e.ring.period();
  res["residue"] = e.residue;
  res["position"] = e.position ? Json(*e.position) : Json(nullptr);
  res["run_length"] = e.run_length;
  res["weight_mod_q"] = e.weight_mod_q;
  res["alt_weight_mod_q"] = e.alt_weight_mod_q;
  s.line(text(e.ring) + " (period " + std::to_string(e.ring.period()) + ")");
  s.verify(e.ring, a.n, was_orientable ? "orientable" : "negative_orientable");
  s.save({e.ring}, "extend-" + a.map + ".seq");
  s.emit();
  return 0;
}

struct RecurseArgs {
  std::string file;
  bool auto_starter = false;
  std::uint32_t q = 3;
  std::size_t n0 = 0;
  std::size_t steps = 1;
};

int cmd_recurse(Session& s, const RecurseArgs& a) {
  if (a.n0 == 0) throw UsageError("recurse needs --n0");
  s.inputs() = {{"n0", a.n0}, {"steps", a.steps}};
  RingSequence starter{{0}, 2};
  if (a.auto_starter) {
    s.inputs()["auto_starter"] = true;
    s.inputs()["q"] = a.q;
    const auto found = find_starters(a.q, a.n0, StarterQuery{SequenceKind::orientable, Symbol{1}, true, 1});
    if (found.rings.empty()) {
      throw PreconditionError("no good weight-1 orientable starter for q=" + std::to_string(a.q) +
                              ", n=" + std::to_string(a.n0));
    }
    starter = found.rings.front();
  } else {
    if (a.file.empty()) throw UsageError("recurse needs a starter file or --auto-starter");
    s.inputs()["file"] = a.file;
    starter = single_ring(a.file, std::nullopt);
  }
  s.results()["starter"] = text(starter);
  return run_recursion(s, starter, a.n0, a.steps);
}

struct SearchArgs {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::string kind = "orientable";
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
  bool no_symmetry = false;
  std::string checkpoint;
  std::uint64_t checkpoint_every = 0;
  std::string resume;
  bool starters = false;
  std::optional<Symbol> weight;
  bool any_weight = false;
  bool no_good = false;
  std::size_t limit = 0;
};

int cmd_search(Session& s, const SearchArgs& a) {
  if (a.starters) {
    if (a.q == 0 || a.n == 0) throw UsageError("search --starters needs --q and --n");
    StarterQuery query;
    query.kind = parse_kind(a.kind);
    query.weight_mod_q = a.any_weight ? std::nullopt : std::optional<Symbol>(a.weight.value_or(1));
    query.good = !a.no_good;
    query.limit = a.limit;
    if (a.max_nodes) query.max_nodes = a.max_nodes;
    s.inputs() = {{"q", a.q}, {"n", a.n}, {"kind", a.kind}, {"starters", true},
                  {"weight_mod_q", query.weight_mod_q ? Json(*query.weight_mod_q) : Json(nullptr)},
                  {"good", query.good}, {"limit", a.limit}};
    const auto r = find_starters(a.q, a.n, query);
    Json rings = Json::array();
    for (const auto& x : r.rings) {
      rings.push_back(text(x));
      s.line(text(x) + " (period " + std::to_string(x.period()) + ")");
      s.verify(x, a.n, a.kind == "negative" ? "negative_orientable" : a.kind);
    }
    s.results()["starters"] = rings;
    s.results()["exhaustive"] = r.exhaustive;
    s.results()["nodes_explored"] = r.nodes_explored;
    s.line(std::to_string(r.rings.size()) + " starter(s)");
    s.save(r.rings, "starters-q" + std::to_string(a.q) + "-n" + std::to_string(a.n) + ".seq");
    s.emit();
    return 0;
  }

  SearchOptions opt;
  opt.max_nodes = a.max_nodes;
  opt.max_seconds = a.max_seconds;
  opt.symmetry = !a.no_symmetry;
  opt.kind = parse_kind(a.kind);
  opt.checkpoint_every = a.checkpoint_every;
  if (!a.checkpoint.empty()) opt.checkpoint = a.checkpoint;
  SearchOutcome r;
  if (!a.resume.empty()) {
    s.inputs() = {{"resume", a.resume}, {"max_nodes", a.max_nodes}, {"max_seconds", a.max_seconds}};
    r = resume_search(a.resume, opt);
  } else {
    if (a.q == 0 || a.n == 0) throw UsageError("search needs --q and --n");
    s.inputs() = {{"q", a.q}, {"n", a.n}, {"kind", a.kind}, {"max_nodes", a.max_nodes},
                  {"max_seconds", a.max_seconds}, {"symmetry", opt.symmetry}};
    r = max_orientable_period(a.q, a.n, opt);
  }
  auto& res = s.results();
  res["q"] = r.q;
  res["n"] = r.n;
  res["kind"] = to_string(r.kind);
  res["max_period_found"] = r.max_period_found;
  res["witness"] = r.witness ? Json(text(*r.witness)) : Json(nullptr);
  res["exhaustive"] = r.exhaustive;
  res["stopped_at_bound"] = r.stopped_at_bound;
  res["nodes_explored"] = r.nodes_explored;
  res["node_limit_hit"] = r.node_limit_hit;
  res["wall_limit_hit"] = r.wall_limit_hit;
  res["symmetry_reduced"] = r.symmetry_reduced;
  if (!a.checkpoint.empty() || !a.resume.empty()) {
    res["checkpoint"] = a.checkpoint.empty() ? a.resume : a.checkpoint;
  }
  s.line("q=" + std::to_string(r.q) + " n=" + std::to_string(r.n) + ": best period " +
         std::to_string(r.max_period_found) + (r.exhaustive ? " (exhaustive)" : " (budget reached)") +
         ", " + std::to_string(r.nodes_explored) + " nodes");
  if (r.witness) {
    s.line("witness " + text(*r.witness));
    s.verify(*r.witness, r.n, to_string(r.kind));
    s.save({*r.witness}, "search-q" + std::to_string(r.q) + "-n" + std::to_string(r.n) + ".seq");
  }
  s.emit();
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify, extend and bound orientable sequences", "orientseq"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_flag("--json", common.json, "Print the JSON report instead of text");
  app.add_option("--out", common.out_file, "Write emitted sequences to this file");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the window properties of every ring in a file");
  verify_cmd->add_option("file", verify.file)->required();
  verify_cmd->add_option("--n", verify.n, "Window length")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--q", verify.q, "Alphabet size when the file has no header");
  verify_cmd->add_option("--expect", verify.expect, "Fail unless this verdict holds")
      ->check(CLI::IsMember({"n_window", "orientable", "negative_orientable", "special"}));

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Upper bound on the period of an orientable sequence");
  bound_cmd->add_option("--q", bound.q)->required();
  bound_cmd->add_option("--n", bound.n)->required();
  bound_cmd->add_flag("--diagnostic", bound.diagnostic,
                      "Also evaluate the odd-q strengthened formula at n = 4, 5");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Grid of period bounds");
  table_cmd->add_option("--q", table.qs, "List such as 2,3,4,5 or 2..5");
  table_cmd->add_option("--n", table.ns, "List such as 2..7");
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"text", "csv"}));

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build a sequence");
  construct_cmd->add_option("--prime", construct.prime, "Order-2 sequence over Z_p");
  construct_cmd->add_option("--join", construct.join, "Join two disjoint sequences")->expected(2);
  construct_cmd->add_option("--stitch", construct.stitch, "Lift and stitch a weight-0 sequence");
  construct_cmd->add_option("--recurse", construct.recurse, "Run the order-raising recursion");
  construct_cmd->add_option("--n", construct.n, "Order of the input sequences");
  construct_cmd->add_option("--n0", construct.n0, "Order of the recursion starter");
  construct_cmd->add_option("--steps", construct.steps, "Recursion steps");
  construct_cmd->add_option("--beta", construct.beta, "Multiplier of D");
  construct_cmd->add_option("--gamma", construct.gamma, "Symbol of the uniform run");
  construct_cmd->add_option("--alteration", construct.alteration,
                            "Check a hand-made alteration of the stitched sequence");
  construct_cmd->add_flag("--search-alteration", construct.search_alteration,
                          "Experimental local search for an alteration");
  construct_cmd->add_option("--q", construct.q, "Alphabet size when files have no header");

  LiftArgs lift;
  auto* lift_cmd = app.add_subcommand("lift", "All preimages under D_beta or A");
  lift_cmd->add_option("file", lift.file)->required();
  lift_cmd->add_option("--map", lift.map)->check(CLI::IsMember({"D", "A"}));
  lift_cmd->add_option("--beta", lift.beta);
  lift_cmd->add_option("--n", lift.n, "Order of the input")->required();
  lift_cmd->add_option("--q", lift.q);

  ExtendArgs extend;
  auto* extend_cmd = app.add_subcommand("extend", "Apply the extension operator E_a");
  extend_cmd->add_option("file", extend.file)->required();
  extend_cmd->add_option("--map", extend.map)->check(CLI::IsMember({"D", "A"}));
  extend_cmd->add_option("--n", extend.n)->required();
  extend_cmd->add_option("--q", extend.q);

  RecurseArgs recurse;
  auto* recurse_cmd = app.add_subcommand("recurse", "Raise the order of a good weight-1 starter");
  recurse_cmd->add_option("file", recurse.file);
  recurse_cmd->add_flag("--auto-starter", recurse.auto_starter, "Take the longest starter from the oracle");
  recurse_cmd->add_option("--q", recurse.q, "Alphabet size for --auto-starter");
  recurse_cmd->add_option("--n0", recurse.n0)->required();
  recurse_cmd->add_option("--steps", recurse.steps);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for long orientable sequences");
  search_cmd->add_option("--q", search.q);
  search_cmd->add_option("--n", search.n);
  search_cmd->add_option("--kind", search.kind)
      ->check(CLI::IsMember({"orientable", "negative_orientable", "negative", "special"}));
  search_cmd->add_option("--max-nodes", search.max_nodes);
  search_cmd->add_option("--max-seconds", search.max_seconds);
  search_cmd->add_flag("--no-symmetry", search.no_symmetry);
  search_cmd->add_option("--checkpoint", search.checkpoint, "Checkpoint file to write");
  search_cmd->add_option("--checkpoint-every", search.checkpoint_every, "Nodes between checkpoints");
  search_cmd->add_option("--resume", search.resume, "Continue from a checkpoint");
  search_cmd->add_flag("--starters", search.starters, "List recursion starters instead");
  search_cmd->add_option("--weight", search.weight, "Starter weight mod q (default 1)");
  search_cmd->add_flag("--any-weight", search.any_weight);
  search_cmd->add_flag("--no-good", search.no_good, "Do not require zero runs <= n-2");
  search_cmd->add_option("--limit", search.limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << version_string() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto* sub = app.get_subcommands().front();
  Session session(out, common, sub->get_name());
  try {
    if (sub == verify_cmd) return cmd_verify(session, verify);
    if (sub == bound_cmd) return cmd_bound(session, bound);
    if (sub == table_cmd) return cmd_table(session, out, common.json, table);
    if (sub == construct_cmd) return cmd_construct(session, construct);
    if (sub == lift_cmd) return cmd_lift(session, lift);
    if (sub == extend_cmd) return cmd_extend(session, extend);
    if (sub == recurse_cmd) return cmd_recurse(session, recurse);
    if (sub == search_cmd) return cmd_search(session, search);
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return 1;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace orient::cli
