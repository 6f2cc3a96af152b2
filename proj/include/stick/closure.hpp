#pragma once
// Baseline forced-pair engine.  Computes the least relation over A u B closed
// under the forcing rules:
//   O  : a_i before a_j for i < j (kept implicit),
//   A  : a_i before b_j for every edge,
//   TB : a support a_t strictly between two successive neighbors of b_j
//        (below a_{k_j}) forces every b_h in N(a_t) before b_j,
//   FB': a support a_t with k_j < t <= m_j forces every b_h in N(a_t)
//        before b_j,
//   T  : transitivity.
// Because A-predecessor sets are downward closed, only m_j (the largest
// forced A-predecessor of b_j) is stored; the B x B part is kept as
// predecessor/successor bitsets.  A derivation log supports replay and cycle
// certificates.  Worst case O(|A| * |E|) plus bitset transitive maintenance;
// this module is the correctness oracle, not the fast path.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "stick/instance.hpp"

namespace stick {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(static_cast<std::size_t>((n + 64) / 64), 0) {}
  bool test(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }
  // this |= other; returns true if anything changed.
  bool merge(const Bitset& o) {
    bool changed = false;
    for (std::size_t x = 0; x < w_.size(); ++x) {
      std::uint64_t nw = w_[x] | o.w_[x];
      changed |= nw != w_[x];
      w_[x] = nw;
    }
    return changed;
  }
  template <typename F>
  void for_each(F f) const {
    for (std::size_t x = 0; x < w_.size(); ++x) {
      std::uint64_t w = w_[x];
      while (w) {
        int bit = std::countr_zero(w);
        f(static_cast<int>(x * 64) + bit);
        w &= w - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

enum class Rule : std::uint8_t { TB, FBp, FB, T };

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::TB: return "TB";
    case Rule::FBp: return "FB'";
    case Rule::FB: return "FB";
    case Rule::T: return "T";
  }
  return "?";
}

struct Derivation {
  Rule rule;
  int support = 0;  // A-index for TB/FB'/FB
  int witness = 0;  // b_w for FB; intermediate b for T
};

struct ForcedRelation {
  int n_a = 0, n_b = 0;
  std::vector<int> m;        // m[j]: largest A-index with a_t before b_j
  std::vector<Bitset> pred;  // pred[j]: B-predecessors of b_j
  std::vector<Bitset> succ;  // succ[h]: B-successors of b_h
  // log[h * (n_b+1) + j]: first derivation of (b_h, b_j); rule A/O pairs are
  // implicit and never logged.
  std::vector<std::optional<Derivation>> log;

  bool precedes_bb(int h, int j) const { return pred[j].test(h); }
  bool precedes_ab(int i, int j) const { return i <= m[j]; }
  const std::optional<Derivation>& log_of(int h, int j) const {
    return log[static_cast<std::size_t>(h) * (n_b + 1) + j];
  }
  std::vector<std::pair<int, int>> b_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= n_b; ++j)
      pred[j].for_each([&](int h) { out.emplace_back(h, j); });
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct CycleCertificate {
  // B-indices c_1..c_k with each consecutive pair (and c_k -> c_1) forced.
  std::vector<int> cycle;
};

struct ClosureResult {
  ForcedRelation relation;                 // meaningful even when cyclic
  std::optional<CycleCertificate> cycle;   // present iff a pair forced both ways
  bool acyclic() const { return !cycle.has_value(); }
};

enum class ClosureEngine {
  Fixpoint,          // TB + FB', worklist keyed on B vertices (default)
  SupportOrdered,    // TB + FB', worklist is a min-heap on the support index
  LiteralFB,         // TB + literal FB (explicit b_w), naive fixpoint sweeps
};

namespace detail {

struct ClosureState {
  const Instance* g;
  ForcedRelation rel;
  std::optional<CycleCertificate> cycle;

  std::optional<Derivation>& log_at(int h, int j) {
    return rel.log[static_cast<std::size_t>(h) * (rel.n_b + 1) + j];
  }

  // Records (b_h, b_j) with its first derivation, closes transitively, and
  // propagates m values.  Returns the B vertices whose m grew or whose pred
  // set changed (for re-scanning).  Detects cycles.
  template <typename Enqueue>
  void add_pair(int h, int j, Derivation d, Enqueue enqueue) {
    if (h == j || rel.pred[j].test(h)) return;
    if (cycle) return;
    if (rel.pred[h].test(j)) {
      cycle = CycleCertificate{{j, h}};
      // Log the closing pair so the certificate replays.
      if (!log_at(h, j)) log_at(h, j) = d;
      return;
    }
    log_at(h, j) = d;
    // New pairs: (p, s) for p in pred[h] u {h}, s in succ[j] u {j}.
    std::vector<int> ps{h}, ss{j};
    rel.pred[h].for_each([&](int p) { ps.push_back(p); });
    rel.succ[j].for_each([&](int s) { ss.push_back(s); });
    for (int s : ss) {
      bool changed = false;
      for (int p : ps) {
        if (p == s) continue;  // cannot happen when acyclic so far
        if (!rel.pred[s].test(p)) {
          rel.pred[s].set(p);
          rel.succ[p].set(s);
          changed = true;
          if (!(p == h && s == j) && !log_at(p, s)) {
            // T through h (p != h) or through j (p == h, s != j).
            log_at(p, s) = Derivation{Rule::T, 0, p == h ? j : h};
          }
        }
      }
      if (changed) {
        int nm = rel.m[s];
        for (int p : ps) nm = std::max(nm, rel.m[p]);
        bump_m(s, nm, enqueue);
        enqueue(s);
      }
    }
  }

  // m[j] grows monotonically; growth propagates to successors.
  template <typename Enqueue>
  void bump_m(int j, int nm, Enqueue enqueue) {
    if (nm <= rel.m[j]) return;
    rel.m[j] = nm;
    enqueue(j);
    rel.succ[j].for_each([&](int s) { bump_m(s, nm, enqueue); });
  }
};

}  // namespace detail

// Least fixpoint of the forcing rules.  Cyclic input yields a certificate,
// not an error.
inline ClosureResult forcing_closure(const Instance& g,
                                     ClosureEngine engine = ClosureEngine::Fixpoint) {
  detail::ClosureState st;
  st.g = &g;
  st.rel.n_a = g.n_a;
  st.rel.n_b = g.n_b;
  st.rel.m.assign(static_cast<std::size_t>(g.n_b) + 1, 0);
  st.rel.pred.assign(static_cast<std::size_t>(g.n_b) + 1, Bitset(g.n_b + 1));
  st.rel.succ.assign(static_cast<std::size_t>(g.n_b) + 1, Bitset(g.n_b + 1));
  st.rel.log.assign(static_cast<std::size_t>(g.n_b + 1) * (g.n_b + 1), std::nullopt);
  for (int j = 1; j <= g.n_b; ++j) st.rel.m[j] = g.k(j);

  if (engine == ClosureEngine::LiteralFB) {
    // Naive sweeps to fixpoint with TB + literal FB; desk-scale only.
    auto noop = [](int) {};
    bool changed = true;
    while (changed && !st.cycle) {
      changed = false;
      auto before = st.rel.b_pairs();
      for (int j = 1; j <= g.n_b && !st.cycle; ++j) {
        // TB: supports strictly between successive neighbors of b_j.
        for (int t = g.one(j) + 1; t < g.k(j); ++t) {
          if (g.has_edge(t, j)) continue;
          for (int h : g.a_nbrs[t]) st.add_pair(h, j, {Rule::TB, t, 0}, noop);
        }
        // FB: b_w before b_j, t > k_j, a_t b_w and a_t b_h edges.
        std::vector<int> ws;
        st.rel.pred[j].for_each([&](int w) { ws.push_back(w); });
        for (int w : ws)
          for (int t : g.b_nbrs[w]) {
            if (t <= g.k(j)) continue;
            for (int h : g.a_nbrs[t]) st.add_pair(h, j, {Rule::FB, t, w}, noop);
          }
        // m from rule A + transitivity.
        int nm = g.k(j);
        st.rel.pred[j].for_each([&](int w) { nm = std::max(nm, st.rel.m[w]); });
        st.bump_m(j, nm, noop);
      }
      changed = st.rel.b_pairs() != before;
    }
    return {std::move(st.rel), std::move(st.cycle)};
  }

  // Window of enabled supports for b_j: {t : 1_j < t <= m_j, t not in N(b_j)}
  // (TB in its successive-neighbors form for t < k_j, FB' for t > k_j),
  // re-scanned incrementally as m_j grows.
  std::vector<int> scanned_to(static_cast<std::size_t>(g.n_b) + 1, 0);
  for (int j = 1; j <= g.n_b; ++j) scanned_to[j] = g.one(j);

  if (engine == ClosureEngine::SupportOrdered) {
    // Min-heap of (support, b_j) events; fires lowest supports first.
    using Ev = std::pair<int, int>;
    std::priority_queue<Ev, std::vector<Ev>, std::greater<>> heap;
    std::vector<int> queued_to = scanned_to;
    auto enqueue = [&](int j) {
      for (int t = queued_to[j] + 1; t <= st.rel.m[j]; ++t)
        if (!g.has_edge(t, j)) heap.emplace(t, j);
      queued_to[j] = st.rel.m[j];
    };
    for (int j = 1; j <= g.n_b; ++j) enqueue(j);
    while (!heap.empty() && !st.cycle) {
      auto [t, j] = heap.top();
      heap.pop();
      Rule r = t < g.k(j) ? Rule::TB : Rule::FBp;
      for (int h : g.a_nbrs[t]) st.add_pair(h, j, {r, t, 0}, enqueue);
    }
    return {std::move(st.rel), std::move(st.cycle)};
  }

  std::vector<char> in_queue(static_cast<std::size_t>(g.n_b) + 1, 0);
  std::vector<int> queue;
  auto enqueue = [&](int j) {
    if (!in_queue[j]) {
      in_queue[j] = 1;
      queue.push_back(j);
    }
  };
  for (int j = 1; j <= g.n_b; ++j) enqueue(j);
  while (!queue.empty() && !st.cycle) {
    int j = queue.back();
    queue.pop_back();
    in_queue[j] = 0;
    while (scanned_to[j] < st.rel.m[j] && !st.cycle) {
      int t = ++scanned_to[j];
      if (g.has_edge(t, j)) continue;
      Rule r = t < g.k(j) ? Rule::TB : Rule::FBp;
      for (int h : g.a_nbrs[t]) st.add_pair(h, j, {r, t, 0}, enqueue);
    }
  }
  return {std::move(st.rel), std::move(st.cycle)};
}

inline std::vector<int> m_values(const ForcedRelation& rel) { return rel.m; }

struct WeakPairSet {
  std::vector<std::pair<int, int>> pairs;  // (b_h, b_j) with b_h weakly before b_j
};

// Weak forced pairs: incomparable B-pairs ordered by strictly smaller m.
inline WeakPairSet weak_pairs(const ForcedRelation& rel) {
  WeakPairSet w;
  for (int h = 1; h <= rel.n_b; ++h)
    for (int j = 1; j <= rel.n_b; ++j) {
      if (h == j || rel.precedes_bb(h, j) || rel.precedes_bb(j, h)) continue;
      if (rel.m[h] < rel.m[j]) w.pairs.emplace_back(h, j);
    }
  return w;
}

// Validates one logged pair by replaying its derivation (recursively for T).
inline bool replay_pair(const Instance& g, const ForcedRelation& rel, int h, int j) {
  if (h == j) return false;
  const auto& d = rel.log_of(h, j);
  if (!d) return false;
  switch (d->rule) {
    case Rule::TB:
      return d->support > g.one(j) && d->support < g.k(j) &&
             !g.has_edge(d->support, j) && g.has_edge(d->support, h);
    case Rule::FBp:
      return d->support > g.k(j) && d->support <= rel.m[j] && g.has_edge(d->support, h);
    case Rule::FB:
      return d->support > g.k(j) && rel.precedes_bb(d->witness, j) &&
             g.has_edge(d->support, d->witness) && g.has_edge(d->support, h);
    case Rule::T:
      return replay_pair(g, rel, h, d->witness) && replay_pair(g, rel, d->witness, j);
  }
  return false;
}

// Validates a cycle certificate step by step against the derivation log.
inline bool replay_cycle(const Instance& g, const ClosureResult& res) {
  if (!res.cycle) return false;
  const auto& c = res.cycle->cycle;
  if (c.size() < 2) return false;
  for (std::size_t x = 0; x < c.size(); ++x)
    if (!replay_pair(g, res.relation, c[x], c[(x + 1) % c.size()])) return false;
  return true;
}

// A ground order extending the forced relation with every b_j strictly
// between a_{m_j} and a_{m_j+1}; B-origins sharing an m value are emitted in
// a topological order of the forced relation, ties by B-index.
inline std::optional<GroundOrder> reference_canonical(const Instance& g,
                                                      const ClosureResult& res) {
  if (!res.acyclic()) return std::nullopt;
  const auto& rel = res.relation;
  std::vector<std::vector<int>> at(static_cast<std::size_t>(g.n_a) + 1);
  for (int j = 1; j <= g.n_b; ++j) at[rel.m[j]].push_back(j);
  GroundOrder order;
  for (int i = 1; i <= g.n_a; ++i) {
    order.push_back(a_origin(i));
    auto group = at[i];
    // topological order within the group, lowest index first
    std::vector<char> placed(static_cast<std::size_t>(g.n_b) + 1, 0);
    for (std::size_t done = 0; done < group.size();) {
      for (int j : group) {
        if (placed[j]) continue;
        bool ready = true;
        for (int h : group)
          if (!placed[h] && h != j && rel.precedes_bb(h, j)) ready = false;
        if (ready) {
          order.push_back(b_origin(j));
          placed[j] = 1;
          ++done;
        }
      }
    }
  }
  return order;
}

inline std::optional<GroundOrder> reference_canonical(const Instance& g) {
  return reference_canonical(g, forcing_closure(g));
}

}  // namespace stick
