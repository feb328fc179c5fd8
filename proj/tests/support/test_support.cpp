#include "test_support.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace testsupport {

std::vector<std::string> edge_ids(const Digraph& g) {
  std::vector<std::string> ids;
  for (std::size_t e = 0; e < g.edge_count(); ++e) ids.push_back(g.edge_id(e));
  return ids;
}

Integer cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    const Integer minor = cofactor_determinant(m.minor(0, c));
    if (c % 2 == 0) {
      total += m(0, c) * minor;
    } else {
      total -= m(0, c) * minor;
    }
  }
  return total;
}

namespace {

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  choose(n, k, 0, cur, out);
  return out;
}

}  // namespace

std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<Integer> divisors(r + 1);
  divisors[0] = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    Integer g = 0;
    for (const auto& rows : subsets(m.rows(), k)) {
      for (const auto& cols : subsets(m.cols(), k)) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cofactor_determinant(sub).get_mpz_t());
      }
    }
    divisors[k] = g;
  }
  std::vector<Integer> factors(r);
  for (std::size_t k = 1; k <= r; ++k) {
    factors[k - 1] = divisors[k - 1] == 0 ? Integer(0) : Integer(divisors[k] / divisors[k - 1]);
  }
  return factors;
}

std::vector<std::vector<bool>> transitive_closure(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) reach[v][v] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const std::size_t s = g.source(e);
      const std::size_t t = g.target(e);
      for (std::size_t u = 0; u < n; ++u) {
        if (reach[u][s] && !reach[u][t]) {
          reach[u][t] = true;
          changed = true;
        }
      }
    }
  }
  return reach;
}

bool strongly_connected_by_closure(const Digraph& g) {
  const auto reach = transitive_closure(g);
  for (const auto& row : reach) {
    if (!std::all_of(row.begin(), row.end(), [](bool b) { return b; })) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> all_paths(const Digraph& g, std::size_t n) {
  std::vector<std::vector<std::size_t>> paths;
  if (n == 0) return paths;
  for (std::size_t e = 0; e < g.edge_count(); ++e) paths.push_back({e});
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<std::vector<std::size_t>> longer;
    for (const auto& p : paths) {
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (g.source(e) != g.target(p.back())) continue;
        auto q = p;
        q.push_back(e);
        longer.push_back(std::move(q));
      }
    }
    paths = std::move(longer);
  }
  return paths;
}

std::string relabeled_canonical(const Digraph& g, const std::function<std::string(const std::string&)>& vertex_name,
                                const std::function<std::string(const std::string&)>& edge_name) {
  std::vector<std::string> lines;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) lines.push_back("v " + vertex_name(g.vertex_id(v)));
  std::sort(lines.begin(), lines.end());
  std::vector<std::string> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    edges.push_back("e " + edge_name(g.edge_id(e)) + " " + vertex_name(g.vertex_id(g.source(e))) + " " +
                    vertex_name(g.vertex_id(g.target(e))));
  }
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  for (const auto& l : lines) out << l << "\n";
  for (const auto& l : edges) out << l << "\n";
  return out.str();
}

std::string splice_words(const std::string& path_label) {
  std::string word;
  std::stringstream ss(path_label);
  std::string part;
  while (std::getline(ss, part, '|')) {
    if (word.empty()) {
      word = part;
    } else {
      word += part.back();
    }
  }
  return word;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> pick(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = pick(rng);
  }
  return m;
}

std::vector<Digraph> random_source_free_corpus(std::uint64_t seed, std::size_t count, std::size_t max_v,
                                               std::size_t max_e) {
  sandgraph::Rng rng(seed);
  std::vector<Digraph> out;
  while (out.size() < count) {
    std::uniform_int_distribution<std::size_t> pick_v(2, max_v);
    const std::size_t v = pick_v(rng);
    std::uniform_int_distribution<std::size_t> pick_e(v, std::max(v, max_e));
    Digraph g = sandgraph::random_source_free(rng, v, pick_e(rng));
    // Every other graph must also be sink-free so that the counts are not all zero.
    if (out.size() % 2 == 0) {
      bool sink = false;
      for (std::size_t u = 0; u < g.vertex_count(); ++u) sink = sink || g.outdegree(u) == 0;
      if (sink) continue;
    }
    out.push_back(std::move(g));
  }
  return out;
}

Integer trees_by_edge_subsets(const Digraph& g, std::size_t root) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  Integer count = 0;
  for (const auto& chosen : subsets(g.edge_count(), n - 1)) {
    std::vector<int> out(n, 0);
    std::vector<std::size_t> next(n, n);
    bool ok = true;
    for (std::size_t e : chosen) {
      const std::size_t s = g.source(e);
      if (s == root || ++out[s] > 1) {
        ok = false;
        break;
      }
      next[s] = g.target(e);
    }
    if (!ok) continue;
    for (std::size_t v = 0; v < n && ok; ++v) {
      std::size_t cur = v;
      for (std::size_t steps = 0; cur != root; ++steps) {
        if (steps > n) {
          ok = false;
          break;
        }
        cur = next[cur];
      }
    }
    if (ok) count += 1;
  }
  return count;
}

}  // namespace testsupport
