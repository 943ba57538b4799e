#pragma once

// Exact finite-length quantities over F^n with |F| = q: Hamming ball volumes,
// the Ahlswede-Khachatrian anticodes S(d,n), exhaustive maximum-clique oracles
// for A_q(n,d) and A*_q(n,d), and the Delsarte / Bassalygo-Elias inequalities.
//
// Words are radix-q integers; coordinate i is digit i (least significant first).

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ratebound/qcontext.hpp"

namespace ratebound {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an exhaustive search would exceed the vertex budget.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t required, std::uint64_t cap)
      : std::runtime_error("search space of " + std::to_string(required) + " words exceeds the vertex cap of " +
                           std::to_string(cap) + " (set RATEBOUND_VERTEX_CAP to raise it)"),
        required_(required),
        cap_(cap) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultVertexCap = 4096;

/// Vertex budget for the clique oracles; RATEBOUND_VERTEX_CAP overrides the default.
inline std::uint64_t vertex_cap() {
  if (const char* env = std::getenv("RATEBOUND_VERTEX_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultVertexCap;
}

inline BigInt big_pow(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// V_q(n,r) = sum_{i<=r} C(n,i)(q-1)^i.
inline BigInt ball_volume(int q, int n, int r) {
  if (q < 2) throw DomainError("ball_volume: q must be >= 2");
  if (n < 0 || r < 0 || r > n) throw DomainError("ball_volume: need 0 <= r <= n");
  BigInt total = 0;
  BigInt power = 1;
  for (int i = 0; i <= r; ++i) {
    total += binomial(n, i) * power;
    power *= q - 1;
  }
  return total;
}

namespace detail {

inline long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace detail

/// r_{d,n} = max{0, min{ceil((d-1)/2), ceil((n-d-q+1)/(q-2))}}. For q = 2 the
/// second term is read as its q -> 2+ limit: +inf if n-d-1 > 0, 0 if n-d-1 = 0,
/// -inf if n-d-1 < 0.
inline int ak_radius(int q, int n, int d) {
  if (q < 2) throw DomainError("ak_radius: q must be >= 2");
  if (d < 0 || d > n) throw DomainError("ak_radius: need 0 <= d <= n");
  const long first = detail::ceil_div(d - 1, 2);
  long second;
  if (q == 2) {
    const long m = n - d - 1;
    second = m > 0 ? std::numeric_limits<long>::max() : (m == 0 ? 0 : std::numeric_limits<long>::min());
  } else {
    second = detail::ceil_div(static_cast<long>(n) - d - q + 1, q - 2);
  }
  return static_cast<int>(std::max(0L, std::min(first, second)));
}

/// S(d,n) = B(r; n-d+2r) x F^{d-2r}.
struct AnticodeShape {
  int q;
  int n;
  int d;
  int r;
  int core_length;
  int free_coords;
  BigInt size;
};

inline AnticodeShape ak_shape(int q, int n, int d) {
  const int r = ak_radius(q, n, d);
  const int core = n - d + 2 * r;
  const int free = d - 2 * r;
  return {q, n, d, r, core, free, ball_volume(q, core, r) * big_pow(q, free)};
}

/// |S(d,n)|, the maximum anticode size.
inline BigInt ak_size(int q, int n, int d) { return ak_shape(q, n, d).size; }

/// Natural log of a positive BigInt.
inline double log_big(const BigInt& v) {
  if (v <= 0) throw DomainError("log_big: non-positive argument");
  const std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 1000) return std::log(v.convert_to<double>());
  const std::size_t shift = bits - 64;
  const BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

/// ln V_q(n,r) by log-sum-exp over log-binomials.
inline double log_ball_volume(int q, int n, int r) {
  if (r < 0 || r > n) throw DomainError("log_ball_volume: need 0 <= r <= n");
  const double lq1 = std::log(static_cast<double>(q - 1));
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i)
    terms.push_back(std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) + i * lq1);
  const double peak = *std::max_element(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - peak);
  return peak + std::log(sum);
}

/// ln |S(d,n)|; exact arithmetic for n <= 64, log-space beyond.
inline double log_ak_size(int q, int n, int d) {
  if (n <= 64) return log_big(ak_size(q, n, d));
  const int r = ak_radius(q, n, d);
  return log_ball_volume(q, n - d + 2 * r, r) + (d - 2 * r) * std::log(static_cast<double>(q));
}

// ---------------------------------------------------------------------------
// Words and distances

using Word = std::vector<int>;

inline std::uint64_t space_size(int q, int n) {
  std::uint64_t s = 1;
  for (int i = 0; i < n; ++i) {
    if (s > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(q))
      return std::numeric_limits<std::uint64_t>::max();
    s *= static_cast<std::uint64_t>(q);
  }
  return s;
}

inline Word decode_word(int q, int n, std::uint32_t code) {
  Word w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint32_t>(q));
    code /= static_cast<std::uint32_t>(q);
  }
  return w;
}

inline int hamming_distance(const Word& a, const Word& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline int max_pairwise_distance(const std::vector<Word>& words) {
  int best = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) best = std::max(best, hamming_distance(words[i], words[j]));
  return best;
}

inline int min_pairwise_distance(const std::vector<Word>& words) {
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, hamming_distance(words[i], words[j]));
  return best;
}

/// The explicit words of S(d,n): the first n-d+2r coordinates have weight <= r,
/// the remaining d-2r are free.
inline std::vector<std::uint32_t> ak_members(int q, int n, int d) {
  const std::uint64_t total = space_size(q, n);
  if (total > vertex_cap()) throw CapExceeded(total, vertex_cap());
  const AnticodeShape s = ak_shape(q, n, d);
  std::vector<std::uint32_t> out;
  for (std::uint32_t code = 0; code < total; ++code) {
    const Word w = decode_word(q, n, code);
    int weight = 0;
    for (int i = 0; i < s.core_length; ++i) weight += w[static_cast<std::size_t>(i)] != 0;
    if (weight <= s.r) out.push_back(code);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maximum clique: branch and bound with greedy colouring bounds over bitsets,
// vertices visited in static index order. Deterministic; the first maximum
// clique found in that order is the witness.

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Index of the lowest set bit; size() if none.
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return n_;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  void and_not(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
  }

  bool subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

class CliqueSolver {
 public:
  explicit CliqueSolver(std::vector<Bitset> adjacency) : adj_(std::move(adjacency)) {}

  std::vector<std::size_t> solve() {
    best_.clear();
    Bitset all(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) all.set(v);
    std::vector<std::size_t> current;
    expand(all, current);
    return best_;
  }

 private:
  bool is_clique(const Bitset& r) const {
    bool ok = true;
    r.for_each([&](std::size_t v) {
      if (!ok) return;
      Bitset others = r;
      others.reset(v);
      ok = others.subset_of(adj_[v]);
    });
    return ok;
  }

  void expand(Bitset candidates, std::vector<std::size_t>& current) {
    if (is_clique(candidates)) {
      if (current.size() + candidates.count() > best_.size()) {
        best_ = current;
        candidates.for_each([&](std::size_t v) { best_.push_back(v); });
      }
      return;
    }
    // Greedy colouring in index order; vertices listed by nondecreasing colour.
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    Bitset uncoloured = candidates;
    std::size_t k = 0;
    while (!uncoloured.none()) {
      ++k;
      Bitset q = uncoloured;
      while (!q.none()) {
        const std::size_t v = q.first();
        q.reset(v);
        q.and_not(adj_[v]);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      Bitset next = candidates;
      next &= adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(next, current);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<Bitset> adj_;
  std::vector<std::size_t> best_;
};

/// Maximum clique of the graph on `vertices` (word codes) with an edge between
/// distinct words whose distance satisfies `edge`. Returns indices into `vertices`.
template <class EdgePredicate>
std::vector<std::size_t> max_clique_on(int q, int n, const std::vector<std::uint32_t>& vertices, EdgePredicate&& edge) {
  std::vector<Word> words;
  words.reserve(vertices.size());
  for (auto c : vertices) words.push_back(decode_word(q, n, c));
  std::vector<Bitset> adj(vertices.size(), Bitset(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (edge(hamming_distance(words[i], words[j]))) {
        adj[i].set(j);
        adj[j].set(i);
      }
  std::vector<std::size_t> clique = CliqueSolver(std::move(adj)).solve();
  std::sort(clique.begin(), clique.end());
  return clique;
}

// ---------------------------------------------------------------------------
// Oracles

enum class OracleKind { max_code, max_anticode };

struct OracleResult {
  int q;
  int n;
  int d;
  OracleKind kind;
  std::size_t size;
  std::vector<Word> witness;
};

/// Raised when a witness fails its own pairwise-distance certificate.
class WitnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void check_oracle_args(int q, int n, int d) {
  if (q < 2) throw DomainError("oracle: q must be >= 2");
  if (n < 0 || d < 0 || d > n) throw DomainError("oracle: need 0 <= d <= n");
  const std::uint64_t total = space_size(q, n);
  if (total > vertex_cap()) throw CapExceeded(total, vertex_cap());
}

inline void certify(const OracleResult& r) {
  if (r.witness.size() != r.size) throw WitnessError("oracle witness size mismatch");
  for (std::size_t i = 0; i < r.witness.size(); ++i)
    for (std::size_t j = i + 1; j < r.witness.size(); ++j) {
      const int dist = hamming_distance(r.witness[i], r.witness[j]);
      const bool ok = r.kind == OracleKind::max_code ? dist >= r.d : dist <= r.d;
      if (!ok || dist == 0) throw WitnessError("oracle witness violates its distance constraint");
    }
}

/// Both distance graphs are invariant under translation of F^n = (Z/q)^n, so
/// some maximum clique contains the zero word: search its neighbourhood only.
template <class EdgePredicate>
OracleResult transitive_oracle(int q, int n, int d, OracleKind kind, EdgePredicate&& edge) {
  check_oracle_args(q, n, d);
  const auto total = static_cast<std::uint32_t>(space_size(q, n));
  const Word zero(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> neighbours;
  for (std::uint32_t c = 1; c < total; ++c)
    if (edge(hamming_distance(zero, decode_word(q, n, c)))) neighbours.push_back(c);
  const std::vector<std::size_t> clique = max_clique_on(q, n, neighbours, edge);
  OracleResult r{q, n, d, kind, clique.size() + 1, {zero}};
  for (std::size_t i : clique) r.witness.push_back(decode_word(q, n, neighbours[i]));
  certify(r);
  return r;
}

}  // namespace detail

/// A*_q(n,d): largest set of words with all pairwise distances <= d.
inline OracleResult oracle_max_anticode(int q, int n, int d) {
  return detail::transitive_oracle(q, n, d, OracleKind::max_anticode, [d](int dist) { return dist <= d; });
}

/// A_q(n,d): largest set of words with all pairwise distances >= d.
inline OracleResult oracle_max_code(int q, int n, int d) {
  return detail::transitive_oracle(q, n, d, OracleKind::max_code, [d](int dist) { return dist >= d; });
}

/// A_q(n,d;L): largest code of minimum distance d inside the word set L.
inline std::size_t max_code_within(int q, int n, int d, const std::vector<std::uint32_t>& subset) {
  if (subset.empty()) return 0;
  return max_clique_on(q, n, subset, [d](int dist) { return dist >= d; }).size();
}

struct BassalygoEliasInstance {
  int w;                 // anticode diameter of L = S(w,n)
  BigInt l_size;         // |L|
  std::size_t code_in_l; // A_q(n,d;L)
  bool pass;             // A_q(n,d) |L| <= q^n A_q(n,d;L)
};

struct DelsarteReport {
  int q;
  int n;
  int d;
  std::size_t code_size;     // A_q(n,d)
  BigInt anticode_size;      // A*_q(n,d-1) = |S(d-1,n)|
  BigInt space;              // q^n
  bool delsarte_pass;        // A_q(n,d) A*_q(n,d-1) <= q^n
  std::vector<BassalygoEliasInstance> bassalygo_elias;
  bool pass;
};

/// Delsarte's code-anticode bound and the Bassalygo-Elias lemma with L = S(w,n)
/// for every w in [0, n], all in exact integer arithmetic.
inline DelsarteReport delsarte_check(int q, int n, int d) {
  if (d < 1) throw DomainError("delsarte_check: need d >= 1");
  const OracleResult code = oracle_max_code(q, n, d);
  DelsarteReport rep{q, n, d, code.size, ak_size(q, n, d - 1), big_pow(q, n), false, {}, false};
  rep.delsarte_pass = BigInt(rep.code_size) * rep.anticode_size <= rep.space;
  rep.pass = rep.delsarte_pass;
  for (int w = 0; w <= n; ++w) {
    const std::vector<std::uint32_t> members = ak_members(q, n, w);
    const std::size_t inside = max_code_within(q, n, d, members);
    const BigInt l_size = members.size();
    const bool ok = BigInt(rep.code_size) * l_size <= rep.space * inside;
    rep.bassalygo_elias.push_back({w, l_size, inside, ok});
    rep.pass = rep.pass && ok;
  }
  return rep;
}

/// n^{-1} log_q |S(floor(delta n), n)| for each n.
inline std::vector<double> rate_convergence(const QContext& ctx, double delta, const std::vector<int>& n_list) {
  delta = detail::clamp_to(delta, 0.0, 1.0, "rate_convergence");
  std::vector<double> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    if (n < ctx.q()) throw DomainError("rate_convergence: each n must be >= q");
    const int d = std::min(n, static_cast<int>(std::floor(delta * n + 1e-9)));
    out.push_back(log_ak_size(ctx.q(), n, d) / (n * ctx.ln_q()));
  }
  return out;
}

}  // namespace ratebound
