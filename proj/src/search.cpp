#include "kcross/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <mutex>
#include <thread>

#include "kcross/constructions.hpp"

namespace kcross {

std::uint64_t SearchOutcome::value() const {
  if (!exact()) fail(Errc::inexact, "search returned an interval, not a value");
  return lo;
}

KneserGraph::KneserGraph(GroundSet ground) : ground_(ground) {
  if (ground.n < 2 * ground.k) fail(Errc::precondition, "Kneser graph requires n >= 2k");
  std::uint64_t count = ground.num_ksets();
  if (count > kMaxSearchVertices)
    fail(Errc::limit, "C(n,k) = " + std::to_string(count) + " exceeds the 256-vertex search cap");
  order_ = static_cast<int>(count);
  vmask_.resize(static_cast<std::size_t>(order_));
  for_each_kset(ground.n, ground.k, [&](std::uint64_t mask, std::uint64_t rank) {
    vmask_[static_cast<std::size_t>(rank)] = mask;
  });
  adj_.assign(static_cast<std::size_t>(order_), {});
  for (int v = 0; v < order_; ++v) {
    for (int u = 0; u < order_; ++u)
      if (u != v && (vmask_[static_cast<std::size_t>(v)] & vmask_[static_cast<std::size_t>(u)]) == 0)
        adj_[static_cast<std::size_t>(v)].set(u);
    all_.set(v);
  }
  contain_.assign(static_cast<std::size_t>(ground.n), {});
  for (int v = 0; v < order_; ++v)
    for (int e : mask_to_elements(vmask_[static_cast<std::size_t>(v)]))
      contain_[static_cast<std::size_t>(e - 1)].set(v);
}

bool KneserGraph::side_is_star(const VertexSet& side) const {
  if (side.empty()) return true;
  for (int e = 1; e <= ground_.n; ++e)
    if (side.subset_of(containing(e))) return true;
  return false;
}

Family KneserGraph::to_family(const VertexSet& side) const {
  Family f(ground_);
  side.for_each([&](int v) { f.insert_rank(static_cast<std::uint64_t>(v)); });
  return f;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t node_limit = 0;  // 0 = unlimited
  Clock::time_point deadline{};
  bool has_deadline = false;
  std::atomic<bool> exhausted{false};

  bool tick() {
    std::uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (node_limit && n > node_limit) {
      exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    if (has_deadline && (n & 1023) == 0 && Clock::now() > deadline) {
      exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
};

struct Node {
  VertexSet in_a, in_b, cand_a, cand_b;
  int cnt_a = 0, cnt_b = 0;
};

struct Feasibility {
  const KneserGraph& graph;
  std::uint64_t t;
  bool star_free;
  bool allow_overlap;
  Budget* budget;
  std::atomic<bool> found{false};
  std::mutex cert_mu;
  VertexSet cert_a, cert_b;

  explicit Feasibility(const KneserGraph& g) : graph(g), t(0), star_free(false), allow_overlap(false), budget(nullptr) {}

  void record(const VertexSet& a, const VertexSet& b) {
    std::lock_guard<std::mutex> lock(cert_mu);
    if (found.load(std::memory_order_relaxed)) return;
    cert_a = a;
    cert_b = b;
    found.store(true, std::memory_order_release);
  }

  bool side_forced_star(const VertexSet& placed, const VertexSet& cand) const {
    VertexSet all = placed | cand;
    return graph.side_is_star(all);
  }

  // Returns true when the subtree is fully handled (closed or pruned);
  // false when the node still needs branching.
  bool close_or_prune(const Node& nd) {
    std::uint64_t max_a = static_cast<std::uint64_t>(nd.cnt_a + nd.cand_a.count());
    std::uint64_t max_b = static_cast<std::uint64_t>(nd.cnt_b + nd.cand_b.count());
    if (max_a < t || max_b < t) return true;  // count prune
    if (star_free) {
      if (side_forced_star(nd.in_a, nd.cand_a)) return true;
      if (side_forced_star(nd.in_b, nd.cand_b)) return true;
    }
    // Closing: no Kneser edge between the two candidate pools.
    bool conflict = false;
    nd.cand_a.for_each([&](int v) {
      if (!conflict && graph.adj(v).intersects(nd.cand_b)) conflict = true;
    });
    if (conflict) return false;
    if (allow_overlap) {
      VertexSet a = nd.in_a | nd.cand_a;
      VertexSet b = nd.in_b | nd.cand_b;
      if (star_free && (graph.side_is_star(a) || graph.side_is_star(b))) return true;
      record(a, b);
      return true;
    }
    VertexSet shared = nd.cand_a & nd.cand_b;
    if (star_free && !shared.empty()) return false;  // split would decide star status: keep branching
    VertexSet only_a = nd.cand_a;
    only_a.subtract(shared);
    VertexSet only_b = nd.cand_b;
    only_b.subtract(shared);
    std::uint64_t base_a = static_cast<std::uint64_t>(nd.cnt_a + only_a.count());
    std::uint64_t base_b = static_cast<std::uint64_t>(nd.cnt_b + only_b.count());
    std::uint64_t s = static_cast<std::uint64_t>(shared.count());
    if (base_a + base_b + s < 2 * t) return true;  // even the whole pool is short
    if (star_free) {  // shared is empty here
      VertexSet a = nd.in_a | only_a;
      VertexSet b = nd.in_b | only_b;
      if (graph.side_is_star(a) || graph.side_is_star(b)) return true;
      record(a, b);
      return true;
    }
    // Deal shared vertices: A takes what it lacks, B the rest.
    std::uint64_t need_a = t > base_a ? t - base_a : 0;
    VertexSet a = nd.in_a | only_a;
    VertexSet b = nd.in_b | only_b;
    shared.for_each([&](int v) {
      if (need_a > 0) {
        a.set(v);
        --need_a;
      } else {
        b.set(v);
      }
    });
    record(a, b);
    return true;
  }

  int pick_branch_vertex(const Node& nd) const {
    VertexSet undecided = nd.cand_a | nd.cand_b;
    int best = -1, best_score = -1;
    undecided.for_each([&](int v) {
      int score = (graph.adj(v) & undecided).count();
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    });
    return best;
  }

  Node child_assign_a(const Node& nd, int v) const {
    Node c = nd;
    c.in_a.set(v);
    ++c.cnt_a;
    c.cand_a.clear(v);
    c.cand_b.clear(v);
    c.cand_b.subtract(graph.adj(v));
    return c;
  }
  Node child_assign_b(const Node& nd, int v) const {
    Node c = nd;
    c.in_b.set(v);
    ++c.cnt_b;
    c.cand_b.clear(v);
    c.cand_a.clear(v);
    c.cand_a.subtract(graph.adj(v));
    return c;
  }
  Node child_assign_both(const Node& nd, int v) const {
    Node c = nd;
    c.in_a.set(v);
    c.in_b.set(v);
    ++c.cnt_a;
    ++c.cnt_b;
    c.cand_a.clear(v);
    c.cand_b.clear(v);
    c.cand_a.subtract(graph.adj(v));
    c.cand_b.subtract(graph.adj(v));
    return c;
  }
  Node child_assign_neither(const Node& nd, int v) const {
    Node c = nd;
    c.cand_a.clear(v);
    c.cand_b.clear(v);
    return c;
  }

  void dfs(const Node& nd) {
    if (found.load(std::memory_order_relaxed) || budget->exhausted.load(std::memory_order_relaxed))
      return;
    if (!budget->tick()) return;
    if (close_or_prune(nd)) return;
    int v = pick_branch_vertex(nd);
    if (v < 0) return;  // no candidates left; count prune already decided
    bool in_a = nd.cand_a.test(v);
    bool in_b = nd.cand_b.test(v);
    if (in_a) dfs(child_assign_a(nd, v));
    if (in_b) dfs(child_assign_b(nd, v));
    if (allow_overlap && in_a && in_b) dfs(child_assign_both(nd, v));
    dfs(child_assign_neither(nd, v));
  }
};

struct LevelOutcome {
  int feasible = -1;  // 1 yes, 0 proven infeasible, -1 interrupted
  VertexSet a, b;
  std::uint64_t nodes = 0;
};

LevelOutcome solve_level(const KneserGraph& graph, std::uint64_t t, const SearchOptions& opts,
                         Budget& budget, bool fix_symmetry) {
  Feasibility fs(graph);
  fs.t = t;
  fs.star_free = opts.star_free;
  fs.allow_overlap = opts.allow_overlap;
  fs.budget = &budget;

  Node root;
  root.cand_a = graph.all_vertices();
  root.cand_b = graph.all_vertices();

  std::vector<Node> roots;
  if (fix_symmetry && t >= 1) {
    // The Kneser graph is vertex-transitive and the roles of A and B are
    // symmetric, so some optimal labeling puts vertex 0 = [1..k] in A.
    roots.push_back(fs.child_assign_a(root, 0));
    if (opts.allow_overlap) roots.push_back(fs.child_assign_both(root, 0));
  } else {
    roots.push_back(root);
  }

  std::uint64_t nodes_before = budget.nodes.load(std::memory_order_relaxed);
  int workers = std::max(1, opts.workers);
  if (workers == 1) {
    for (const Node& r : roots) fs.dfs(r);
  } else {
    // Expand a frontier, then let the pool race over it. The feasibility
    // answer is schedule-independent; the certificate is canonicalized by a
    // sequential rerun below.
    std::deque<Node> frontier(roots.begin(), roots.end());
    std::size_t want = static_cast<std::size_t>(workers) * 8;
    while (frontier.size() < want && !frontier.empty() &&
           !fs.found.load(std::memory_order_relaxed)) {
      Node nd = frontier.front();
      frontier.pop_front();
      if (!budget.tick()) break;
      if (fs.close_or_prune(nd)) continue;
      int v = fs.pick_branch_vertex(nd);
      if (v < 0) continue;
      bool in_a = nd.cand_a.test(v);
      bool in_b = nd.cand_b.test(v);
      if (in_a) frontier.push_back(fs.child_assign_a(nd, v));
      if (in_b) frontier.push_back(fs.child_assign_b(nd, v));
      if (opts.allow_overlap && in_a && in_b) frontier.push_back(fs.child_assign_both(nd, v));
      frontier.push_back(fs.child_assign_neither(nd, v));
    }
    std::vector<Node> work(frontier.begin(), frontier.end());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= work.size()) return;
          fs.dfs(work[i]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  LevelOutcome out;
  out.nodes = budget.nodes.load(std::memory_order_relaxed) - nodes_before;
  if (fs.found.load(std::memory_order_acquire)) {
    out.feasible = 1;
    out.a = fs.cert_a;
    out.b = fs.cert_b;
    if (workers > 1) {
      // Certificate must not depend on thread scheduling: rerun the
      // deterministic single-thread search at the same level.
      Budget rerun;
      Feasibility fs2(graph);
      fs2.t = t;
      fs2.star_free = opts.star_free;
      fs2.allow_overlap = opts.allow_overlap;
      fs2.budget = &rerun;
      for (const Node& r : roots) fs2.dfs(r);
      if (fs2.found.load(std::memory_order_acquire)) {
        out.a = fs2.cert_a;
        out.b = fs2.cert_b;
      }
      out.nodes += rerun.nodes.load(std::memory_order_relaxed);
    }
  } else if (budget.exhausted.load(std::memory_order_relaxed)) {
    out.feasible = -1;
  } else {
    out.feasible = 0;
  }
  return out;
}

struct LowerBound {
  std::uint64_t value = 0;
  std::optional<FamilyPair> pair;
};

void consider(LowerBound& best, FamilyPair&& p) {
  std::uint64_t v = std::min(p.a.size(), p.b.size());
  if (v > best.value || !best.pair) {
    best.value = v;
    best.pair = std::move(p);
  }
}

LowerBound construction_lower_bound(int n, int k, bool star_free, bool allow_overlap) {
  LowerBound best;
  if (!star_free) {
    consider(best, half_star_split(n, k));
    if (k >= 3) consider(best, section3_pair(n, k));
    if (allow_overlap) {
      // Both sides the full star at 1: min = C(n-1,k-1), the Pyber maximum.
      GroundSet g(n, k);
      Family star(g);
      for_each_kset(n, k, [&](std::uint64_t mask, std::uint64_t rank) {
        if (mask & 1u) star.insert_rank(rank);
      });
      consider(best, FamilyPair(star, star));
    }
  } else {
    if (k >= 2) consider(best, prop22_pair(n, k));
    if (k >= 5 && n > 2 * k + 1) {
      try {
        consider(best, prop55_pair(n, k));
      } catch (const Error&) {
        // target unreachable at this (n,k); the prop22 pair stands
      }
    }
    if (allow_overlap) {
      // A = B = a punctured star: the largest non-star intersecting family.
      GroundSet g(n, k);
      std::uint64_t p_mask = low_bits(k + 1) & ~std::uint64_t{1};  // [2,k+1]
      Family hm(g);
      for_each_kset(n, k, [&](std::uint64_t mask, std::uint64_t rank) {
        if ((mask & 1u) && (mask & p_mask)) hm.insert_rank(rank);
      });
      hm.insert(p_mask);
      consider(best, FamilyPair(hm, hm));
    }
  }
  return best;
}

std::uint64_t proven_upper_bound(int n, int k, bool star_free, bool allow_overlap) {
  std::uint64_t x = choose64(n - 1, k - 1);
  std::uint64_t u = choose64(n - k - 1, k - 1);
  std::uint64_t v = choose64(n - k, k - 1);
  std::uint64_t hm = x - u + 1;
  std::uint64_t ub = x;  // Pyber: min <= C(n-1,k-1) for any cross-intersecting pair
  if (!allow_overlap) {
    // Disjoint pairs: a star side forces either the same-center count bound
    // floor(x/2) or the defector bound hm-1; star-free pairs obey hm.
    ub = std::min(ub, std::max(x / 2, hm));
    bool strict_grey = 2 * u < x && x < 2 * v;
    if (strict_grey) ub = std::min(ub, (x + static_cast<std::uint64_t>(n - k - 1)) / 2);
  }
  if (star_free) ub = std::min(ub, hm);
  return ub;
}

void verify_certificate(const SearchOutcome& out) {
  if (!out.certificate) {
    if (out.lo != 0) fail(Errc::invariant, "missing certificate");
    return;
  }
  const FamilyPair& p = *out.certificate;
  if (std::min(p.a.size(), p.b.size()) < out.lo)
    fail(Errc::invariant, "certificate below reported lower bound");
  std::vector<PairCheck> checks{PairCheck::cross};
  if (!out.allow_overlap) checks.push_back(PairCheck::disjoint);
  if (out.star_free) checks.push_back(PairCheck::star_free);
  if (!verify_pair(p, checks).all_pass) fail(Errc::invariant, "certificate fails mode checks");
}

}  // namespace

SearchOutcome exact_maxmin(int n, int k, const SearchOptions& opts) {
  if (n < 2 * k + 1) fail(Errc::precondition, "exact_maxmin requires n >= 2k+1");
  KneserGraph graph((GroundSet(n, k)));
  auto start = Clock::now();

  SearchOutcome out;
  out.ground = graph.ground();
  out.star_free = opts.star_free;
  out.allow_overlap = opts.allow_overlap;
  out.symmetry_fixed = opts.symmetry_fix;

  LowerBound lb = construction_lower_bound(n, k, opts.star_free, opts.allow_overlap);
  std::uint64_t hi = proven_upper_bound(n, k, opts.star_free, opts.allow_overlap);
  if (lb.value > hi) fail(Errc::invariant, "construction exceeds the proven upper bound");
  out.lo = lb.value;
  out.certificate = std::move(lb.pair);

  Budget budget;
  budget.node_limit = opts.node_limit;
  if (opts.time_limit_ms) {
    budget.deadline = start + std::chrono::milliseconds(opts.time_limit_ms);
    budget.has_deadline = true;
  }

  std::uint64_t t = hi;
  while (t > out.lo) {
    LevelOutcome lv = solve_level(graph, t, opts, budget, opts.symmetry_fix);
    out.levels.push_back({t, lv.feasible, lv.nodes});
    if (lv.feasible == 1) {
      out.lo = t;
      out.certificate = FamilyPair(graph.to_family(lv.a), graph.to_family(lv.b));
      break;
    }
    if (lv.feasible == -1) break;  // budget exhausted: interval [lo, t]
    --t;
  }
  out.hi = t;
  out.nodes = budget.nodes.load(std::memory_order_relaxed);
  out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  verify_certificate(out);
  return out;
}

SearchOutcome exhaustive_labelings(int n, int k, bool star_free, bool allow_overlap) {
  KneserGraph graph((GroundSet(n, k)));
  const int V = graph.order();
  if (V > 62) fail(Errc::limit, "exhaustive oracle handles at most 62 vertices");
  const double labels = allow_overlap ? 4.0 : 3.0;
  double states = 1.0;
  for (int i = 0; i < V; ++i) {
    states *= labels;
    if (states > 2147483648.0)  // 2^31 label-space cap
      fail(Errc::limit, "label space exceeds the exhaustive-oracle cap");
  }
  auto start = Clock::now();

  // Single-word mirrors of the graph tables.
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(V), 0);
  for (int v = 0; v < V; ++v)
    for (int u = 0; u < V; ++u)
      if (graph.adj(v).test(u)) adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  std::vector<std::uint64_t> contain(static_cast<std::size_t>(n), 0);
  for (int e = 1; e <= n; ++e)
    for (int v = 0; v < V; ++v)
      if (graph.containing(e).test(v)) contain[static_cast<std::size_t>(e - 1)] |= std::uint64_t{1} << v;

  auto side_star = [&](std::uint64_t side) {
    if (side == 0) return true;
    for (int e = 0; e < n; ++e)
      if ((side & ~contain[static_cast<std::size_t>(e)]) == 0) return true;
    return false;
  };

  std::uint64_t best = 0;
  std::uint64_t best_a = 0, best_b = 0;
  bool have_best = false;
  std::uint64_t nodes = 0, leaves = 0;

  // Depth-first over labelings; assignments that already violate the
  // cross-intersecting condition are dead ends for every extension, so the
  // walk stays exact while only visiting valid labelings.
  struct Frame {
    std::uint64_t a, b;
    int v;
  };
  auto eval_leaf = [&](std::uint64_t a, std::uint64_t b) {
    ++leaves;
    std::uint64_t va = static_cast<std::uint64_t>(std::popcount(a));
    std::uint64_t vb = static_cast<std::uint64_t>(std::popcount(b));
    std::uint64_t val = std::min(va, vb);
    if (val <= best && have_best) return;
    if (star_free && (side_star(a) || side_star(b))) return;
    if (!have_best || val > best) {
      best = val;
      best_a = a;
      best_b = b;
      have_best = true;
    }
  };
  // Recursive lambda via explicit stack to keep frames small.
  std::vector<Frame> stack;
  stack.push_back({0, 0, 0});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    ++nodes;
    if (f.v == V) {
      eval_leaf(f.a, f.b);
      continue;
    }
    std::uint64_t bit = std::uint64_t{1} << f.v;
    // reverse push order so exploration runs A, B, both, neither
    stack.push_back({f.a, f.b, f.v + 1});  // neither
    if (allow_overlap && (adj[static_cast<std::size_t>(f.v)] & (f.a | f.b)) == 0)
      stack.push_back({f.a | bit, f.b | bit, f.v + 1});
    if ((adj[static_cast<std::size_t>(f.v)] & f.a) == 0) stack.push_back({f.a, f.b | bit, f.v + 1});
    if ((adj[static_cast<std::size_t>(f.v)] & f.b) == 0) stack.push_back({f.a | bit, f.b, f.v + 1});
  }

  SearchOutcome out;
  out.ground = graph.ground();
  out.star_free = star_free;
  out.allow_overlap = allow_overlap;
  out.lo = out.hi = best;
  out.nodes = nodes;
  out.states = leaves;
  if (best > 0) {
    Family fa(graph.ground()), fb(graph.ground());
    for (int v = 0; v < V; ++v) {
      if (best_a & (std::uint64_t{1} << v)) fa.insert_rank(static_cast<std::uint64_t>(v));
      if (best_b & (std::uint64_t{1} << v)) fb.insert_rank(static_cast<std::uint64_t>(v));
    }
    out.certificate = FamilyPair(std::move(fa), std::move(fb));
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  verify_certificate(out);
  return out;
}

}  // namespace kcross
