#include "turan/poly.hpp"

#include <map>
#include <mutex>

#include "turan/errors.hpp"
#include "turan/rng.hpp"

namespace turan {

namespace {

// Small exact binomial; callers here stay far below 64-bit range except
// monomial_count, which saturates explicitly.
std::uint64_t binom_sat(long long n, long long r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (long long i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - r + i);
    acc /= static_cast<unsigned __int128>(i);
    if (acc > static_cast<unsigned __int128>(UINT64_MAX)) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::uint64_t monomial_count(int num_vars, int degree) {
  if (num_vars < 0 || degree < 0)
    throw ParamError("monomial_count needs num_vars >= 0 and degree >= 0");
  return binom_sat(static_cast<long long>(num_vars) + degree, std::min(num_vars, degree));
}

std::uint64_t monomial_rank(const std::vector<int>& exponents) {
  const int n = static_cast<int>(exponents.size());
  long long t = 0;
  for (int e : exponents) {
    if (e < 0) throw ParamError("negative exponent");
    t += e;
  }
  // Degree blocks come first: all monomials of total degree < t.
  std::uint64_t rank = binom_sat(t - 1 + n, n);
  // Within a block, larger first exponents come first; peel one variable at
  // a time. With f = remaining degree and e the current exponent, the
  // monomials ranked earlier at this position number C(f-e-1 + m, m) summed
  // via the hockey-stick identity, where m counts the variables left.
  long long f = t;
  for (int i = 0; i < n - 1; ++i) {
    const int m = n - 1 - i;
    const long long e = exponents[static_cast<size_t>(i)];
    rank += binom_sat(f - e - 1 + m, m);
    f -= e;
  }
  return rank;
}

std::vector<int> monomial_unrank(std::uint64_t rank, int num_vars) {
  if (num_vars <= 0) {
    if (rank != 0) throw ParamError("rank out of range for zero variables");
    return {};
  }
  // Find the degree block.
  long long t = 0;
  while (binom_sat(t + num_vars, num_vars) <= rank) ++t;
  std::uint64_t within = rank - binom_sat(t - 1 + num_vars, num_vars);
  std::vector<int> out(static_cast<size_t>(num_vars), 0);
  long long f = t;
  for (int i = 0; i < num_vars - 1; ++i) {
    const int m = num_vars - 1 - i;
    // The earlier-count C(f-e-1+m, m) grows as e shrinks; the coordinate is
    // the smallest e whose earlier-count still fits under `within`.
    long long e = 0;
    while (binom_sat(f - e - 1 + m, m) > within) ++e;
    within -= binom_sat(f - e - 1 + m, m);
    out[static_cast<size_t>(i)] = static_cast<int>(e);
    f -= e;
  }
  out[static_cast<size_t>(num_vars - 1)] = static_cast<int>(f);
  if (within != 0) throw InternalError("monomial_unrank inconsistency");
  return out;
}

namespace {

// First-variable substitution schedule for polynomials with a given
// (num_vars, degree) shape: monomial i carries exponent e1[i] on the first
// variable and its tail lands at slot out_rank[i] of the dense table one
// variable down. Shared by every poly of that shape, so built once.
struct FoldLevel {
  std::vector<std::uint32_t> e1;
  std::vector<std::uint32_t> out_rank;
  std::uint64_t out_size = 0;
};

struct EvalPlan {
  int num_vars = 0;
  int degree = 0;
  std::vector<FoldLevel> levels;  // folding n vars -> n-1, for n = num_vars..2
};

const EvalPlan& eval_plan(int num_vars, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, EvalPlan> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(num_vars, degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  EvalPlan plan;
  plan.num_vars = num_vars;
  plan.degree = degree;
  for (int n = num_vars; n >= 2; --n) {
    FoldLevel lvl;
    const std::uint64_t m = monomial_count(n, degree);
    lvl.e1.reserve(m);
    lvl.out_rank.reserve(m);
    lvl.out_size = monomial_count(n - 1, degree);
    for (std::uint64_t r = 0; r < m; ++r) {
      std::vector<int> evec = monomial_unrank(r, n);
      lvl.e1.push_back(static_cast<std::uint32_t>(evec[0]));
      std::vector<int> tail(evec.begin() + 1, evec.end());
      lvl.out_rank.push_back(static_cast<std::uint32_t>(monomial_rank(tail)));
    }
    plan.levels.push_back(std::move(lvl));
  }
  return cache.emplace(key, std::move(plan)).first->second;
}

// v^e for v < q, e <= degree, laid out as vpow[v * (degree+1) + e].
std::vector<std::uint32_t> power_table(std::uint32_t q, int degree) {
  std::vector<std::uint32_t> vpow(static_cast<size_t>(q) * (degree + 1));
  for (std::uint32_t v = 0; v < q; ++v) {
    std::uint64_t acc = 1;
    for (int e = 0; e <= degree; ++e) {
      vpow[static_cast<size_t>(v) * (degree + 1) + static_cast<size_t>(e)] =
          static_cast<std::uint32_t>(acc);
      acc = acc * v % q;
    }
  }
  return vpow;
}

// Substitute the first variable with value v: in * v^e1 accumulated into
// out. Products stay below 2^30 and at most degree+1 land per slot, so a
// lazy u64 accumulator is safe for any modulus below 2^15 (every desk q is).
void fold_once(const FoldLevel& lvl, const std::vector<std::uint32_t>& in,
               std::uint32_t v, std::uint32_t q, const std::vector<std::uint32_t>& vpow,
               int degree, std::vector<std::uint64_t>& scratch,
               std::vector<std::uint32_t>& out) {
  scratch.assign(static_cast<size_t>(lvl.out_size), 0);
  const std::uint32_t* pw = &vpow[static_cast<size_t>(v) * (degree + 1)];
  for (size_t i = 0; i < in.size(); ++i) {
    scratch[lvl.out_rank[i]] += static_cast<std::uint64_t>(in[i]) * pw[lvl.e1[i]];
  }
  out.resize(static_cast<size_t>(lvl.out_size));
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint32_t>(scratch[i] % q);
}

std::uint32_t horner_1var(const std::vector<std::uint32_t>& coeffs, std::uint32_t v,
                          std::uint32_t q) {
  std::uint64_t acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = (acc * v + coeffs[i]) % q;
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

std::uint32_t MultiPoly::eval_raw(const std::vector<std::uint32_t>& point) const {
  if (static_cast<int>(point.size()) != num_vars)
    throw ParamError("eval point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(num_vars));
  for (std::uint32_t c : point)
    if (c >= q) throw ParamError("eval point coordinate not reduced mod q");
  if (num_vars == 0) return coeffs.empty() ? 0 : coeffs[0];
  if (q >= (1u << 15)) throw ParamError("modulus too large for the evaluator");

  const EvalPlan& plan = eval_plan(num_vars, max_degree);
  const std::vector<std::uint32_t> vpow = power_table(q, max_degree);
  std::vector<std::uint32_t> cur = coeffs, next;
  std::vector<std::uint64_t> scratch;
  for (int li = 0; li < static_cast<int>(plan.levels.size()); ++li) {
    fold_once(plan.levels[static_cast<size_t>(li)], cur, point[static_cast<size_t>(li)], q, vpow,
              max_degree, scratch, next);
    cur.swap(next);
  }
  return horner_1var(cur, point[static_cast<size_t>(num_vars - 1)], q);
}

FqScalar MultiPoly::eval(const std::vector<FqScalar>& point) const {
  std::vector<std::uint32_t> raw;
  raw.reserve(point.size());
  for (const FqScalar& s : point) {
    if (s.q != q) throw ParamError("eval point in wrong field");
    raw.push_back(s.value);
  }
  return FqScalar(eval_raw(raw), q);
}

MultiPoly zero_poly(std::uint32_t q, int num_vars, int degree) {
  if (!is_prime(q)) throw ParamError("field modulus must be prime, got " + std::to_string(q));
  if (num_vars < 0 || degree < 0) throw ParamError("num_vars and degree must be >= 0");
  MultiPoly p;
  p.q = q;
  p.num_vars = num_vars;
  p.max_degree = degree;
  p.coeffs.assign(static_cast<size_t>(monomial_count(num_vars, degree)), 0);
  return p;
}

MultiPoly sample_poly(std::uint32_t q, int num_vars, int degree, std::uint64_t seed,
                      std::uint64_t monomial_limit) {
  const std::uint64_t m = monomial_count(num_vars, degree);
  if (m > monomial_limit)
    throw LimitError("polynomial would have " + std::to_string(m) +
                         " monomials, limit is " + std::to_string(monomial_limit),
                     monomial_limit, m);
  MultiPoly p = zero_poly(q, num_vars, degree);
  Rng rng(seed);
  for (auto& c : p.coeffs) c = static_cast<std::uint32_t>(rng.uniform_below(q));
  return p;
}

std::vector<std::uint32_t> grid_values(const MultiPoly& p, std::uint64_t point_limit) {
  if (p.num_vars == 0) return {p.coeffs.empty() ? 0u : p.coeffs[0]};
  if (p.q >= (1u << 15)) throw ParamError("modulus too large for the evaluator");
  unsigned __int128 pts = 1;
  for (int i = 0; i < p.num_vars; ++i) pts *= p.q;
  if (pts > static_cast<unsigned __int128>(point_limit))
    throw LimitError("grid has more points than the evaluation limit " +
                         std::to_string(point_limit),
                     point_limit, static_cast<std::uint64_t>(std::min<unsigned __int128>(pts, UINT64_MAX)));
  const std::uint64_t total = static_cast<std::uint64_t>(pts);

  const EvalPlan& plan = eval_plan(p.num_vars, p.max_degree);
  const std::vector<std::uint32_t> vpow = power_table(p.q, p.max_degree);
  std::vector<std::uint32_t> out(static_cast<size_t>(total));
  // One reusable coefficient buffer per live level keeps allocation out of
  // the recursion.
  std::vector<std::vector<std::uint32_t>> bufs(static_cast<size_t>(p.num_vars));
  std::vector<std::uint64_t> scratch;

  // Depth i has num_vars - i free variables; stride between sibling blocks
  // is q^(num_vars - i - 1).
  std::vector<std::uint64_t> stride(static_cast<size_t>(p.num_vars));
  {
    std::uint64_t s = 1;
    for (int i = p.num_vars - 1; i >= 0; --i) {
      stride[static_cast<size_t>(i)] = s;
      s *= p.q;
    }
  }

  struct Rec {
    const MultiPoly& p;
    const EvalPlan& plan;
    const std::vector<std::uint32_t>& vpow;
    std::vector<std::vector<std::uint32_t>>& bufs;
    std::vector<std::uint64_t>& scratch;
    std::vector<std::uint64_t>& stride;
    std::vector<std::uint32_t>& out;

    void walk(int depth, const std::vector<std::uint32_t>& cur, std::uint64_t base) {
      const int live = p.num_vars - depth;
      if (live == 1) {
        for (std::uint32_t v = 0; v < p.q; ++v)
          out[static_cast<size_t>(base + v)] = horner_1var(cur, v, p.q);
        return;
      }
      const FoldLevel& lvl = plan.levels[static_cast<size_t>(depth)];
      for (std::uint32_t v = 0; v < p.q; ++v) {
        fold_once(lvl, cur, v, p.q, vpow, p.max_degree, scratch,
                  bufs[static_cast<size_t>(depth)]);
        walk(depth + 1, bufs[static_cast<size_t>(depth)],
             base + v * stride[static_cast<size_t>(depth)]);
      }
    }
  } rec{p, plan, vpow, bufs, scratch, stride, out};
  rec.walk(0, p.coeffs, 0);
  return out;
}

DerivedConstants derive_constants(int k, int a, int b) {
  DerivedConstants c;
  c.s = static_cast<long long>(b) * (b - a + k - 1) + a + 1;
  c.d = static_cast<long long>(b) * c.s - 1;
  return c;
}

bool q_meets_degree_threshold(std::uint32_t q, long long d) {
  // q >= C(d+1, 2) = d(d+1)/2
  unsigned __int128 bound = static_cast<unsigned __int128>(d) * (d + 1) / 2;
  return static_cast<unsigned __int128>(q) >= bound;
}

}  // namespace turan
