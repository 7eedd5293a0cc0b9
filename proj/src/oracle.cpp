#include "orient/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "orient/bounds.hpp"
#include "orient/constructions.hpp"
#include "orient/errors.hpp"

namespace orient {

bool naive_is_n_window(const RingSequence& s, std::size_t n) {
  const auto m = s.period();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (window(s, i, n) == window(s, j, n)) return false;
    }
  }
  return true;
}

bool naive_is_orientable(const RingSequence& s, std::size_t n) {
  if (!naive_is_n_window(s, n)) return false;
  const auto m = s.period();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (window(s, i, n) == reverse(window(s, j, n))) return false;
    }
  }
  return true;
}

bool naive_is_negative_orientable(const RingSequence& s, std::size_t n) {
  if (!naive_is_n_window(s, n)) return false;
  const auto m = s.period();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (window(s, i, n) == negate(reverse(window(s, j, n)))) return false;
    }
  }
  return true;
}

namespace {

using Code = std::uint32_t;
using Clock = std::chrono::steady_clock;

constexpr const char* kCheckpointMagic = "orientseq-search-checkpoint 1";

// B_n(q) with vertices coded big-endian: u_0 is the most significant digit.
class Graph {
 public:
  Graph(std::uint32_t q, std::size_t n, SequenceKind kind, std::uint64_t cap)
      : q_(q), n_(n), kind_(kind) {
    if (q < 2) throw std::invalid_argument("search requires q >= 2");
    if (n < 1) throw std::invalid_argument("search requires n >= 1");
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
      size *= q;
      if (size > cap) throw std::invalid_argument("q^n exceeds the search vertex cap");
    }
    size_ = static_cast<Code>(size);
    high_ = size_ / q;

    allowed_.assign(size_, 0);
    partners_.assign(size_, {size_, size_});
    key_.assign(size_, 0);
    std::vector<Symbol> d(n);
    for (Code v = 0; v < size_; ++v) {
      decode(v, d);
      const auto r = rev(d);
      const auto nr = neg(r);
      const bool sym_rev = r == v;
      const bool sym_neg = nr == v;
      switch (kind) {
        case SequenceKind::orientable:
          allowed_[v] = !sym_rev;
          partners_[v] = {r, size_};
          break;
        case SequenceKind::negative_orientable:
          allowed_[v] = !sym_neg;
          partners_[v] = {nr, size_};
          break;
        case SequenceKind::special:
          allowed_[v] = !sym_rev && !sym_neg;
          partners_[v] = {r, nr};
          break;
      }
      key_[v] = orbit_min(d);
    }
  }

  std::uint32_t q() const { return q_; }
  std::size_t n() const { return n_; }
  SequenceKind kind() const { return kind_; }
  Code size() const { return size_; }
  Code succ(Code v, std::uint32_t c) const { return (v % high_) * q_ + c; }
  bool allowed(Code v) const { return allowed_[v] != 0; }
  const std::array<Code, 2>& partners(Code v) const { return partners_[v]; }
  Code key(Code v) const { return key_[v]; }

  RingSequence ring(const std::vector<Code>& path) const {
    std::vector<Symbol> out;
    out.reserve(path.size());
    for (const auto v : path) out.push_back(v / high_);
    return RingSequence(std::move(out), Alphabet(q_));
  }

 private:
  void decode(Code v, std::vector<Symbol>& d) const {
    for (std::size_t i = n_; i-- > 0;) {
      d[i] = v % q_;
      v /= q_;
    }
  }
  Code encode(const std::vector<Symbol>& d) const {
    Code v = 0;
    for (const auto x : d) v = v * q_ + x;
    return v;
  }
  Code rev(std::vector<Symbol> d) const {
    std::reverse(d.begin(), d.end());
    return encode(d);
  }
  Code neg(Code v) const {
    std::vector<Symbol> d(n_);
    decode(v, d);
    for (auto& x : d) x = (q_ - x) % q_;
    return encode(d);
  }

  // Smallest code in the orbit of d under the kind's symmetry group.
  Code orbit_min(const std::vector<Symbol>& d) const {
    Code best = std::numeric_limits<Code>::max();
    std::vector<Symbol> t(n_);
    const bool translations = kind_ == SequenceKind::orientable;
    const std::uint32_t shifts = translations ? q_ : 1;
    const std::uint32_t signs = translations ? 1 : 2;
    for (std::uint32_t lambda = 0; lambda < shifts; ++lambda) {
      for (std::uint32_t sign = 0; sign < signs; ++sign) {
        for (std::size_t i = 0; i < n_; ++i) {
          const auto x = sign ? (q_ - d[i]) % q_ : d[i];
          t[i] = (x + lambda) % q_;
        }
        best = std::min({best, encode(t), rev(t)});
      }
    }
    return best;
  }

  std::uint32_t q_;
  std::size_t n_;
  SequenceKind kind_;
  Code size_ = 0;
  Code high_ = 0;
  std::vector<std::uint8_t> allowed_;
  std::vector<std::array<Code, 2>> partners_;
  std::vector<Code> key_;
};

enum class Rank { orbit, code, none };

// Depth-first path growth from a fixed start vertex v0. A vertex is eligible
// when it is allowed and its rank is at least that of v0.
class Walk {
 public:
  Walk(const Graph& g, Code v0, Rank rank) : g_(g), v0_(v0), rank_(rank) {
    used_.assign(g.size(), 0);
    blocked_.assign(g.size(), 0);
    for (Code v = 0; v < g.size(); ++v) free_ += eligible(v) ? 1 : 0;
  }

  bool eligible(Code v) const {
    if (!g_.allowed(v)) return false;
    switch (rank_) {
      case Rank::orbit: return g_.key(v) >= g_.key(v0_);
      case Rank::code: return v >= v0_;
      case Rank::none: return true;
    }
    return false;
  }
  bool usable(Code v) const { return eligible(v) && !used_[v] && blocked_[v] == 0; }

  void push(Code v, std::uint32_t next = 0) {
    if (usable(v)) --free_;
    used_[v] = 1;
    for (const auto p : g_.partners(v)) {
      if (p == g_.size()) continue;
      if (blocked_[p]++ == 0 && !used_[p] && eligible(p)) --free_;
    }
    path_.push_back(v);
    next_.push_back(next);
  }

  void pop() {
    const auto v = path_.back();
    path_.pop_back();
    next_.pop_back();
    for (const auto p : g_.partners(v)) {
      if (p == g_.size()) continue;
      if (--blocked_[p] == 0 && !used_[p] && eligible(p)) ++free_;
    }
    used_[v] = 0;
    if (usable(v)) ++free_;
  }

  // Longest cycle still reachable from the current path.
  std::size_t reach() const {
    const auto extra = g_.kind() == SequenceKind::special ? free_ : free_ / 2;
    return path_.size() + extra;
  }

  Code start() const { return v0_; }
  bool empty() const { return path_.empty(); }
  Code top() const { return path_.back(); }
  std::uint32_t& next() { return next_.back(); }
  const std::vector<Code>& path() const { return path_; }
  const std::vector<std::uint32_t>& frames() const { return next_; }

 private:
  const Graph& g_;
  Code v0_;
  Rank rank_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint16_t> blocked_;
  std::vector<Code> path_;
  std::vector<std::uint32_t> next_;
  std::size_t free_ = 0;
};

struct Resume {
  Code start = 0;
  std::vector<Code> path;
  std::vector<std::uint32_t> next;
};

struct CheckpointData {
  std::uint32_t q = 0;
  std::size_t n = 0;
  SequenceKind kind = SequenceKind::orientable;
  bool reduced = true;
  std::uint64_t nodes = 0;
  std::size_t best = 0;
  std::optional<std::vector<Symbol>> witness;
  std::optional<Resume> resume;
};

SequenceKind parse_kind(const std::string& s) {
  if (s == "orientable") return SequenceKind::orientable;
  if (s == "negative_orientable") return SequenceKind::negative_orientable;
  if (s == "special") return SequenceKind::special;
  throw ParseError("checkpoint: unknown kind '" + s + "'");
}

void write_checkpoint(const std::filesystem::path& file, const CheckpointData& c) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write checkpoint " + file.string());
  out << kCheckpointMagic << "\n";
  out << "q " << c.q << "\nn " << c.n << "\nkind " << to_string(c.kind) << "\n";
  out << "reduced " << (c.reduced ? 1 : 0) << "\nnodes " << c.nodes << "\nbest " << c.best << "\n";
  out << "witness";
  if (c.witness) {
    out << " ";
    for (std::size_t i = 0; i < c.witness->size(); ++i) out << (i ? "," : "") << (*c.witness)[i];
  } else {
    out << " -";
  }
  out << "\nstart " << (c.resume ? std::to_string(c.resume->start) : "-") << "\nframes";
  if (c.resume) {
    for (std::size_t i = 0; i < c.resume->path.size(); ++i) {
      out << " " << c.resume->path[i] << ":" << c.resume->next[i];
    }
  }
  out << "\n";
}

CheckpointData read_checkpoint(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot read checkpoint " + file.string());
  std::string line;
  if (!std::getline(in, line) || line != kCheckpointMagic) {
    throw ParseError("checkpoint: missing header '" + std::string(kCheckpointMagic) + "'");
  }
  CheckpointData c;
  bool seen_start = false;
  std::optional<Code> start;
  std::vector<std::pair<Code, std::uint32_t>> frames;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    ls >> field;
    std::string rest;
    std::getline(ls, rest);
    if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
    try {
      if (field == "q") {
        c.q = static_cast<std::uint32_t>(std::stoul(rest));
      } else if (field == "n") {
        c.n = std::stoul(rest);
      } else if (field == "kind") {
        c.kind = parse_kind(rest);
      } else if (field == "reduced") {
        c.reduced = rest == "1";
      } else if (field == "nodes") {
        c.nodes = std::stoull(rest);
      } else if (field == "best") {
        c.best = std::stoul(rest);
      } else if (field == "witness") {
        if (rest != "-") {
          std::vector<Symbol> w;
          std::istringstream ws(rest);
          std::string tok;
          while (std::getline(ws, tok, ',')) w.push_back(static_cast<Symbol>(std::stoul(tok)));
          c.witness = std::move(w);
        }
      } else if (field == "start") {
        seen_start = true;
        if (rest != "-") start = static_cast<Code>(std::stoul(rest));
      } else if (field == "frames") {
        std::istringstream fs(rest);
        std::string tok;
        while (fs >> tok) {
          const auto colon = tok.find(':');
          if (colon == std::string::npos) throw ParseError("checkpoint: bad frame '" + tok + "'");
          frames.emplace_back(static_cast<Code>(std::stoul(tok.substr(0, colon))),
                              static_cast<std::uint32_t>(std::stoul(tok.substr(colon + 1))));
        }
      } else {
        throw ParseError("checkpoint: unknown field '" + field + "'");
      }
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const ParseError*>(&e)) throw;
      throw ParseError("checkpoint: bad value in line '" + line + "'");
    }
  }
  if (c.q < 2 || c.n < 1 || !seen_start) throw ParseError("checkpoint: incomplete file");
  if (start) {
    Resume r{*start, {}, {}};
    for (const auto& [v, next] : frames) {
      r.path.push_back(v);
      r.next.push_back(next);
    }
    if (r.path.empty() || r.path.front() != *start) {
      throw ParseError("checkpoint: frames do not begin at the start vertex");
    }
    c.resume = std::move(r);
  }
  return c;
}

class MaxSearch {
 public:
  MaxSearch(std::uint32_t q, std::size_t n, const SearchOptions& options)
      : graph_(q, n, options.kind, options.vertex_cap), options_(options) {
    // The period bound is proved for orientable sequences only.
    if (options.kind != SequenceKind::orientable || n < 2) {
      target_ = std::numeric_limits<std::size_t>::max();
    } else if (const auto b = table_bound_u64(q, static_cast<std::uint32_t>(n))) {
      target_ = static_cast<std::size_t>(*b);
    }
    outcome_.q = q;
    outcome_.n = n;
    outcome_.kind = options.kind;
    outcome_.symmetry_reduced = options.symmetry;
  }

  SearchOutcome run(const CheckpointData* from) {
    started_ = Clock::now();
    std::optional<Resume> resume;
    if (from) {
      outcome_.resumed = true;
      nodes_ = from->nodes;
      best_ = from->best;
      if (from->witness) best_path_symbols_ = *from->witness;
      if (!from->resume) return finish(true);
      resume = from->resume;
    }
    for (Code v0 = resume ? resume->start : 0; v0 < graph_.size(); ++v0) {
      if (!graph_.allowed(v0)) continue;
      if (options_.symmetry && graph_.key(v0) != v0) continue;
      Walk walk(graph_, v0, options_.symmetry ? Rank::orbit : Rank::none);
      if (resume && resume->start == v0) {
        for (std::size_t i = 0; i < resume->path.size(); ++i) {
          const auto v = resume->path[i];
          if (v >= graph_.size() || (i > 0 && !walk.usable(v))) {
            throw ParseError("checkpoint: frame vertex " + std::to_string(v) + " is not usable");
          }
          walk.push(v, resume->next[i]);
        }
        resume.reset();
      } else {
        walk.push(v0);
        ++nodes_;
      }
      if (!explore(walk)) return finish(false);
      if (best_ >= target_) {
        outcome_.stopped_at_bound = true;
        return finish(true);
      }
    }
    return finish(true);
  }

 private:
  // Returns false when a budget stops the search; the walk is then left intact.
  bool explore(Walk& walk) {
    const auto q = graph_.q();
    while (!walk.empty()) {
      if (walk.reach() <= best_ || best_ >= target_) {
        walk.pop();
        continue;
      }
      auto& next = walk.next();
      if (next == q) {
        walk.pop();
        continue;
      }
      const auto w = graph_.succ(walk.top(), next++);
      if (w == walk.start()) {
        if (walk.path().size() > best_) record(walk.path());
        continue;
      }
      if (!walk.usable(w)) continue;
      if (budget_exhausted(walk)) return false;
      walk.push(w);
      ++nodes_;
      if (options_.checkpoint && options_.checkpoint_every &&
          nodes_ % options_.checkpoint_every == 0) {
        save(&walk);
      }
    }
    return true;
  }

  bool budget_exhausted(const Walk& walk) {
    if (options_.max_nodes && nodes_ >= options_.max_nodes) {
      outcome_.node_limit_hit = true;
    } else if (options_.max_seconds > 0 && (nodes_ & 0xfff) == 0 &&
               std::chrono::duration<double>(Clock::now() - started_).count() > options_.max_seconds) {
      outcome_.wall_limit_hit = true;
    } else {
      return false;
    }
    if (options_.checkpoint) save(&walk);
    return true;
  }

  void record(const std::vector<Code>& path) {
    best_ = path.size();
    const auto ring = graph_.ring(path);
    best_path_symbols_.assign(ring.symbols().begin(), ring.symbols().end());
  }

  void save(const Walk* walk) {
    CheckpointData c;
    c.q = graph_.q();
    c.n = graph_.n();
    c.kind = graph_.kind();
    c.reduced = options_.symmetry;
    c.nodes = nodes_;
    c.best = best_;
    if (!best_path_symbols_.empty()) c.witness = best_path_symbols_;
    if (walk) c.resume = Resume{walk->start(), walk->path(), walk->frames()};
    write_checkpoint(*options_.checkpoint, c);
  }

  SearchOutcome finish(bool complete) {
    outcome_.exhaustive = complete;
    outcome_.nodes_explored = nodes_;
    outcome_.max_period_found = best_;
    if (!best_path_symbols_.empty()) {
      outcome_.witness = canonical_rotation(RingSequence(best_path_symbols_, Alphabet(graph_.q())));
      if (outcome_.witness->period() != best_ ||
          !has_kind(*outcome_.witness, graph_.n(), graph_.kind())) {
        throw VerificationError("search witness failed verification");
      }
    }
    if (complete && options_.checkpoint) save(nullptr);
    return outcome_;
  }

  Graph graph_;
  SearchOptions options_;
  std::size_t target_ = std::numeric_limits<std::size_t>::max();
  SearchOutcome outcome_;
  std::uint64_t nodes_ = 0;
  std::size_t best_ = 0;
  std::vector<Symbol> best_path_symbols_;
  Clock::time_point started_;
};

}  // namespace

SearchOutcome max_orientable_period(std::uint32_t q, std::size_t n, const SearchOptions& options) {
  MaxSearch search(q, n, options);
  return search.run(nullptr);
}

SearchOutcome resume_search(const std::filesystem::path& checkpoint, SearchOptions options) {
  const auto data = read_checkpoint(checkpoint);
  options.kind = data.kind;
  options.symmetry = data.reduced;
  if (!options.checkpoint) options.checkpoint = checkpoint;
  MaxSearch search(data.q, data.n, options);
  return search.run(&data);
}

StarterSearch find_starters(std::uint32_t q, std::size_t n, const StarterQuery& query) {
  const Graph g(q, n, query.kind, std::uint64_t{1} << 22);
  StarterSearch result;
  result.exhaustive = true;
  std::vector<RingSequence> found;
  for (Code v0 = 0; v0 < g.size() && result.exhaustive; ++v0) {
    if (!g.allowed(v0)) continue;
    Walk walk(g, v0, Rank::code);
    walk.push(v0);
    ++result.nodes_explored;
    while (!walk.empty()) {
      auto& next = walk.next();
      if (next == q) {
        walk.pop();
        continue;
      }
      const auto w = g.succ(walk.top(), next++);
      if (w == v0) {
        auto ring = g.ring(walk.path());
        if (ring.period() == walk.path().size() &&
            (!query.weight_mod_q || weight_mod_q(ring) == *query.weight_mod_q) &&
            (!query.good || is_good(ring, n))) {
          found.push_back(canonical_rotation(ring));
        }
        continue;
      }
      if (!walk.usable(w)) continue;
      if (query.max_nodes && result.nodes_explored >= query.max_nodes) {
        result.exhaustive = false;
        break;
      }
      walk.push(w);
      ++result.nodes_explored;
    }
  }
  std::sort(found.begin(), found.end(), [](const RingSequence& a, const RingSequence& b) {
    if (a.period() != b.period()) return a.period() > b.period();
    return a < b;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (const auto& r : found) {
    if (!has_kind(r, n, query.kind)) throw VerificationError("starter failed verification");
  }
  if (query.limit && found.size() > query.limit) {
    found.erase(found.begin() + static_cast<std::ptrdiff_t>(query.limit), found.end());
  }
  result.rings = std::move(found);
  return result;
}

}  // namespace orient
