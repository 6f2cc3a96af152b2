#pragma once
// Core data model: bipartite instances with a fixed A order, ground orders,
// and ordered adjacency matrices.
//
// Conventions: A-origins a_1..a_{n_a} and B-origins b_1..b_{n_b} are 1-based
// everywhere; index 0 of adjacency vectors is unused.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stick {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Instance {
  int n_a = 0;
  int n_b = 0;
  std::vector<std::vector<int>> b_nbrs;  // b_nbrs[j] = sorted A-indices of N(b_j)
  std::vector<std::vector<int>> a_nbrs;  // a_nbrs[i] = sorted B-indices of N(a_i)

  bool has_edge(int a, int b) const {
    const auto& v = b_nbrs[b];
    return std::binary_search(v.begin(), v.end(), a);
  }
  int one(int b) const { return b_nbrs[b].front(); }  // 1_j
  int k(int b) const { return b_nbrs[b].back(); }     // k_j
  std::size_t edge_count() const {
    std::size_t m = 0;
    for (int j = 1; j <= n_b; ++j) m += b_nbrs[j].size();
    return m;
  }
};

struct BProfile {
  int one_j = 0;  // smallest A-neighbor index
  int k_j = 0;    // largest A-neighbor index
};

inline std::vector<BProfile> b_profiles(const Instance& g) {
  std::vector<BProfile> p(static_cast<std::size_t>(g.n_b) + 1);
  for (int j = 1; j <= g.n_b; ++j) p[j] = {g.one(j), g.k(j)};
  return p;
}

// Builds a validated Instance from an edge list.  Throws ParseError on
// out-of-range indices or isolated B vertices; duplicate edges are merged.
inline Instance make_instance(int n_a, int n_b,
                              const std::vector<std::pair<int, int>>& edges) {
  if (n_a < 0 || n_b < 0) throw ParseError("negative vertex count");
  Instance g;
  g.n_a = n_a;
  g.n_b = n_b;
  g.b_nbrs.assign(static_cast<std::size_t>(n_b) + 1, {});
  g.a_nbrs.assign(static_cast<std::size_t>(n_a) + 1, {});
  for (auto [a, b] : edges) {
    if (a < 1 || a > n_a) throw ParseError("A-index out of range: " + std::to_string(a));
    if (b < 1 || b > n_b) throw ParseError("B-index out of range: " + std::to_string(b));
    g.b_nbrs[b].push_back(a);
    g.a_nbrs[a].push_back(b);
  }
  for (auto* lists : {&g.b_nbrs, &g.a_nbrs})
    for (auto& v : *lists) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  for (int j = 1; j <= n_b; ++j)
    if (g.b_nbrs[j].empty())
      throw ParseError("isolated B vertex b" + std::to_string(j));
  return g;
}

struct ParseOptions {
  bool strip_isolated = false;  // drop isolated B vertices instead of erroring
};

struct ParseResult {
  Instance instance;
  std::vector<std::string> warnings;  // duplicate edges, stripped vertices
  std::vector<int> stripped_b;        // original indices of removed B vertices
};

// Parses the line-oriented instance format:
//   p astick <n_a> <n_b>
//   e <a_index> <b_index>     (one per edge, 1-based)
// '#' starts a comment; blank lines are ignored.
inline ParseResult parse_instance(const std::string& text, ParseOptions opt = {}) {
  ParseResult res;
  std::istringstream in(text);
  std::string line;
  int n_a = -1, n_b = -1, lineno = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<char>> seen;  // duplicate detection
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto bad = [&](const std::string& why) -> ParseError {
      return ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    if (tok == "p") {
      std::string kind;
      if (n_a >= 0) throw bad("duplicate problem line");
      if (!(ls >> kind >> n_a >> n_b) || kind != "astick" || n_a < 0 || n_b < 0)
        throw bad("malformed problem line (expected `p astick <n_a> <n_b>`)");
      seen.assign(static_cast<std::size_t>(n_a) + 1,
                  std::vector<char>(static_cast<std::size_t>(n_b) + 1, 0));
    } else if (tok == "e") {
      int a, b;
      if (n_a < 0) throw bad("edge before problem line");
      if (!(ls >> a >> b)) throw bad("malformed edge line");
      if (a < 1 || a > n_a) throw bad("A-index out of range: " + std::to_string(a));
      if (b < 1 || b > n_b) throw bad("B-index out of range: " + std::to_string(b));
      if (seen[a][b]) {
        res.warnings.push_back("duplicate edge a" + std::to_string(a) + " b" +
                               std::to_string(b) + " ignored");
      } else {
        seen[a][b] = 1;
        edges.emplace_back(a, b);
      }
    } else {
      throw bad("unknown line type `" + tok + "`");
    }
    std::string extra;
    if (ls >> extra) throw bad("trailing tokens");
  }
  if (n_a < 0) throw ParseError("missing problem line");

  std::vector<char> has_nbr(static_cast<std::size_t>(n_b) + 1, 0);
  for (auto [a, b] : edges) has_nbr[b] = 1;
  std::vector<int> remap(static_cast<std::size_t>(n_b) + 1, 0);
  int kept = 0;
  for (int j = 1; j <= n_b; ++j) {
    if (has_nbr[j]) {
      remap[j] = ++kept;
    } else if (opt.strip_isolated) {
      res.stripped_b.push_back(j);
      res.warnings.push_back("removed isolated B vertex b" + std::to_string(j));
    } else {
      throw ParseError("isolated B vertex b" + std::to_string(j));
    }
  }
  if (kept != n_b)
    for (auto& [a, b] : edges) b = remap[b];
  res.instance = make_instance(n_a, kept, edges);
  return res;
}

inline std::string serialize_instance(const Instance& g) {
  std::ostringstream out;
  out << "p astick " << g.n_a << ' ' << g.n_b << '\n';
  for (int b = 1; b <= g.n_b; ++b)
    for (int a : g.b_nbrs[b]) out << "e " << a << ' ' << b << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Ground orders

enum class Kind : std::uint8_t { A, B };

struct Origin {
  Kind kind;
  int index;  // 1-based within its side
  friend bool operator==(const Origin&, const Origin&) = default;
};

inline Origin a_origin(int i) { return {Kind::A, i}; }
inline Origin b_origin(int j) { return {Kind::B, j}; }

// A total left-to-right order of all origins on the ground line.
using GroundOrder = std::vector<Origin>;

inline std::string format_origin(const Origin& o) {
  return (o.kind == Kind::A ? "a" : "b") + std::to_string(o.index);
}

inline std::string format_ground_order(const GroundOrder& order) {
  std::string s;
  for (const auto& o : order) {
    if (!s.empty()) s += ' ';
    s += format_origin(o);
  }
  return s;
}

inline GroundOrder parse_ground_order(const std::string& text) {
  GroundOrder order;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'b'))
      throw ParseError("bad origin token `" + tok + "`");
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(tok.substr(1), &used);
      if (used + 1 != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad origin token `" + tok + "`");
    }
    if (idx < 1) throw ParseError("bad origin token `" + tok + "`");
    order.push_back({tok[0] == 'a' ? Kind::A : Kind::B, idx});
  }
  return order;
}

// Checks that `order` is a permutation of all origins of `g` with the
// A-subsequence in index order.  Returns an error message, or empty if valid.
inline std::string validate_ground_order(const Instance& g, const GroundOrder& order) {
  if (static_cast<int>(order.size()) != g.n_a + g.n_b)
    return "order has " + std::to_string(order.size()) + " tokens, expected " +
           std::to_string(g.n_a + g.n_b);
  std::vector<char> seen_a(static_cast<std::size_t>(g.n_a) + 1, 0);
  std::vector<char> seen_b(static_cast<std::size_t>(g.n_b) + 1, 0);
  int last_a = 0;
  for (const auto& o : order) {
    auto& seen = o.kind == Kind::A ? seen_a : seen_b;
    int n = o.kind == Kind::A ? g.n_a : g.n_b;
    if (o.index < 1 || o.index > n || seen[o.index])
      return "bad or repeated origin " + format_origin(o);
    seen[o.index] = 1;
    if (o.kind == Kind::A) {
      if (o.index <= last_a) return "A-origins out of index order at " + format_origin(o);
      last_a = o.index;
    }
  }
  return {};
}

// Positions of every origin in `order`, 1-based ground slots.
struct OrderPositions {
  std::vector<int> a;  // a[i] = slot of a_i
  std::vector<int> b;  // b[j] = slot of b_j
};

inline OrderPositions order_positions(const Instance& g, const GroundOrder& order) {
  OrderPositions pos;
  pos.a.assign(static_cast<std::size_t>(g.n_a) + 1, 0);
  pos.b.assign(static_cast<std::size_t>(g.n_b) + 1, 0);
  for (std::size_t s = 0; s < order.size(); ++s) {
    const auto& o = order[s];
    (o.kind == Kind::A ? pos.a : pos.b)[o.index] = static_cast<int>(s) + 1;
  }
  return pos;
}

// ---------------------------------------------------------------------------
// Ordered adjacency matrix: rows = A-origins in A order, columns = B-origins
// in a given B order.

struct OrderedMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> b_order;       // b_order[q-1] = B-index in column q
  std::vector<std::uint8_t> data; // row-major, entry (i,q) at (i-1)*cols+(q-1)

  bool at(int i, int q) const {
    return data[static_cast<std::size_t>(i - 1) * cols + (q - 1)] != 0;
  }
};

inline OrderedMatrix ordered_matrix(const Instance& g, const std::vector<int>& b_order) {
  if (static_cast<int>(b_order.size()) != g.n_b)
    throw ParseError("b_order size mismatch");
  std::vector<char> seen(static_cast<std::size_t>(g.n_b) + 1, 0);
  for (int b : b_order) {
    if (b < 1 || b > g.n_b || seen[b]) throw ParseError("b_order is not a permutation");
    seen[b] = 1;
  }
  OrderedMatrix m;
  m.rows = g.n_a;
  m.cols = g.n_b;
  m.b_order = b_order;
  m.data.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
  for (int q = 1; q <= m.cols; ++q)
    for (int a : g.b_nbrs[b_order[q - 1]])
      m.data[static_cast<std::size_t>(a - 1) * m.cols + (q - 1)] = 1;
  return m;
}

// B order induced by a ground order (subsequence of B-origins).
inline std::vector<int> induced_b_order(const GroundOrder& order) {
  std::vector<int> b;
  for (const auto& o : order)
    if (o.kind == Kind::B) b.push_back(o.index);
  return b;
}

}  // namespace stick
