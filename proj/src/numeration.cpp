#include "heapgames/numeration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace heapgames {

u64 isqrt(u128 v) {
  if (v == 0) return 0;
  u64 root = static_cast<u64>(std::sqrt(static_cast<long double>(v)));
  while (root > 0 && u128{root} * root > v) --root;
  while (root < ~u64{0} && (u128{root} + 1) * (u128{root} + 1) <= v) ++root;
  return root;
}

const char* to_string(TailParity p) {
  switch (p) {
    case TailParity::Evil: return "evil";
    case TailParity::Old: return "old";
    case TailParity::ZeroBoth: return "both";
  }
  return "?";
}

namespace {

thread_local u64 g_digit_ops = 0;

// Per-thread base table per (s,t), grown on demand. `saturated` means the
// next base would not fit in 64 bits, which no input within the value
// contract can require.
struct BaseCache {
  std::vector<u64> u;
  bool saturated = false;

  bool grow_once(const GameParams& params) {
    if (saturated) return false;
    u128 next = u128{params.r()} * u[u.size() - 1] + u128{params.s} * u[u.size() - 2];
    if (next > ~u64{0}) {
      saturated = true;
      return false;
    }
    u.push_back(static_cast<u64>(next));
    return true;
  }
};

BaseCache& cache_for(const GameParams& params) {
  thread_local std::map<std::pair<u64, u64>, BaseCache> caches;
  auto [it, fresh] = caches.try_emplace({params.s, params.t});
  if (fresh) it->second.u = {1, params.s + params.t};
  return it->second;
}

// Bases covering values up to `v` (top base > v when possible).
const BaseCache& bases_covering(const GameParams& params, u64 v) {
  BaseCache& c = cache_for(params);
  while (c.u.back() <= v && c.grow_once(params)) {
  }
  return c;
}

// At least `count` bases when they fit in 64 bits.
const BaseCache& bases_counted(const GameParams& params, std::size_t count) {
  BaseCache& c = cache_for(params);
  while (c.u.size() < count && c.grow_once(params)) {
  }
  return c;
}

// u_i as a 128-bit value, tolerating exactly one index past saturation.
u128 base_wide(const GameParams& params, const std::vector<u64>& u, std::size_t i) {
  if (i < u.size()) return u[i];
  if (i == u.size())
    return u128{params.r()} * u[i - 1] + u128{params.s} * u[i - 2];
  throw std::overflow_error("base index beyond 64-bit range");
}

std::size_t effective_len(const Representation& rep) {
  std::size_t n = rep.digits.size();
  while (n > 0 && rep.digits[n - 1] == 0) --n;
  return n;
}

}  // namespace

u64 digit_ops() { return g_digit_ops; }
void reset_digit_ops() { g_digit_ops = 0; }

Bases bases_up_to(const GameParams& params, u64 limit) {
  limit = std::max<u64>(limit, 1);
  Bases b{params, {1, params.s + params.t}};
  while (b.u.back() <= limit) {
    u128 next = u128{params.r()} * b.u[b.u.size() - 1] + u128{params.s} * b.u[b.u.size() - 2];
    if (next > ~u64{0}) throw std::overflow_error("numeration base exceeds 64-bit width");
    b.u.push_back(static_cast<u64>(next));
  }
  return b;
}

Representation represent(const GameParams& params, u64 m) {
  Representation rep;
  if (m == 0) return rep;
  const auto& cache = bases_covering(params, m);
  const auto& u = cache.u;
  std::size_t top = std::upper_bound(u.begin(), u.end(), m) - u.begin();
  // top is the first base > m; when all stored bases are <= m the next base
  // would overflow 64 bits, so it exceeds m anyway.
  rep.digits.assign(top, 0);
  u64 rem = m;
  for (std::size_t i = top; i-- > 0;) {
    ++g_digit_ops;
    rep.digits[i] = rem / u[i];
    rem %= u[i];
  }
  return rep;
}

u64 value(const GameParams& params, const Representation& rep) {
  std::size_t len = effective_len(rep);
  if (len == 0) return 0;
  const auto& u = bases_counted(params, len).u;
  if (u.size() < len) throw std::overflow_error("representation value exceeds 64-bit width");
  u128 acc = 0;
  for (std::size_t i = 0; i < len; ++i) {
    ++g_digit_ops;
    acc += u128{rep.digits[i]} * u[i];
  }
  if (acc > ~u64{0}) throw std::overflow_error("representation value exceeds 64-bit width");
  return static_cast<u64>(acc);
}

u128 shifted_value_wide(const GameParams& params, const Representation& rep) {
  std::size_t len = effective_len(rep);
  if (len == 0) return 0;
  const auto& u = bases_counted(params, len + 1).u;
  u128 acc = 0;
  for (std::size_t i = 0; i < len; ++i) {
    ++g_digit_ops;
    acc += u128{rep.digits[i]} * base_wide(params, u, i + 1);
  }
  return acc;
}

u64 shifted_value(const GameParams& params, const Representation& rep) {
  u128 acc = shifted_value_wide(params, rep);
  if (acc > ~u64{0}) throw std::overflow_error("shifted value exceeds 64-bit width");
  return static_cast<u64>(acc);
}

bool validate(const GameParams& params, const Representation& rep) {
  const u64 r = params.r();
  const u64 q = params.q();
  if (!rep.digits.empty() && rep.digits.back() == 0) return false;  // non-canonical
  for (std::size_t i = 0; i < rep.digits.size(); ++i) {
    ++g_digit_ops;
    if (rep.digits[i] > r) return false;
    if (i + 1 < rep.digits.size() && rep.digits[i + 1] == r && rep.digits[i] > q) return false;
  }
  return true;
}

Representation left_shift(const Representation& rep) {
  if (rep.is_zero()) return rep;
  Representation out;
  out.digits.reserve(rep.digits.size() + 1);
  out.digits.push_back(0);
  for (u64 d : rep.digits) {
    ++g_digit_ops;
    out.digits.push_back(d);
  }
  return out;
}

Representation right_shift(const Representation& rep) {
  if (rep.is_zero() || rep.digits[0] != 0)
    throw MalformedRepError("right shift requires a trailing zero digit");
  Representation out;
  out.digits.reserve(rep.digits.size() - 1);
  for (std::size_t i = 1; i < rep.digits.size(); ++i) {
    ++g_digit_ops;
    out.digits.push_back(rep.digits[i]);
  }
  return out;
}

TailParity tail_parity(const Representation& rep) {
  if (rep.is_zero()) return TailParity::ZeroBoth;
  std::size_t zeros = 0;
  while (zeros < rep.digits.size() && rep.digits[zeros] == 0) {
    ++g_digit_ops;
    ++zeros;
  }
  ++g_digit_ops;
  return zeros % 2 == 0 ? TailParity::Evil : TailParity::Old;
}

Representation increment(const GameParams& params, const Representation& rep) {
  if (!validate(params, rep)) throw MalformedRepError("increment of an invalid representation");
  if (rep.is_zero()) return Representation{{1}};

  const u64 q = params.q();
  const u64 r = params.r();
  auto digit = [&rep](std::size_t i) { return i < rep.digits.size() ? rep.digits[i] : u64{0}; };

  // Adding 1 telescopes the maximal alternating tail into a single bump one
  // position above it; which alternation applies is decided by d_0.
  //   d_0 = q: tail q,r,q,r,...  -> bump at even position 2k (result evil)
  //   d_0 = r: tail r,q,r,q,...  -> bump at odd position 2k+1 (result old)
  //   q < d_0 < r: no tail, bump d_0 itself (result evil)
  std::size_t bump;
  u64 d0 = rep.digits[0];
  if (d0 == q) {
    std::size_t k = 0;
    while (digit(2 * k) == q && digit(2 * k + 1) == r) {
      g_digit_ops += 2;
      ++k;
    }
    bump = 2 * k;
  } else if (d0 == r) {
    std::size_t k = 0;
    while (digit(2 * k + 1) == q && digit(2 * k + 2) == r) {
      g_digit_ops += 2;
      ++k;
    }
    bump = 2 * k + 1;
  } else {
    bump = 0;  // q < d_0 < r or d_0 < q; the coupling rule cannot break
  }

  Representation out = rep;
  if (out.digits.size() <= bump) out.digits.resize(bump + 1, 0);
  for (std::size_t i = 0; i < bump; ++i) out.digits[i] = 0;
  out.digits[bump] += 1;
  ++g_digit_ops;
  return out;
}

u64 rank_evil(const GameParams& params, u64 x) {
  if (x == 0) return 0;
  Representation rx = represent(params, x);
  const u64 r = params.r();
  const u64 q = params.q();
  const std::size_t len = rx.digits.size();

  // Counts valid digit strings of length len (leading zeros allowed) that are
  // lexicographically <= R(x) and end in an even number of zeros, excluding
  // the all-zero string. State: tight, previous digit == r, parity of the
  // current low-end zero run, any nonzero digit seen.
  auto idx = [](int tight, int prev_r, int parity, int nonzero) {
    return tight * 8 + prev_r * 4 + parity * 2 + nonzero;
  };
  u64 dp[16] = {0};
  dp[idx(1, 0, 0, 0)] = 1;

  for (std::size_t pos = len; pos-- > 0;) {
    ++g_digit_ops;
    u64 next[16] = {0};
    u64 cap = rx.digits[pos];
    for (int tight = 0; tight < 2; ++tight)
      for (int prev_r = 0; prev_r < 2; ++prev_r)
        for (int parity = 0; parity < 2; ++parity)
          for (int nonzero = 0; nonzero < 2; ++nonzero) {
            u64 ways = dp[idx(tight, prev_r, parity, nonzero)];
            if (ways == 0) continue;
            u64 limit = prev_r ? q : r;  // allowed digit ceiling here

            if (tight) {
              // digits strictly below cap fall free; cap itself stays tight
              if (cap >= 1) next[idx(0, 0, parity ^ 1, nonzero)] += ways;  // d = 0
              u64 mid = std::min(cap == 0 ? 0 : cap - 1, r - 1);
              if (mid >= 1) next[idx(0, 0, 0, 1)] += ways * mid;  // d in [1..cap-1]
              int p2 = cap == r ? 1 : 0;
              if (cap == 0)
                next[idx(1, p2, parity ^ 1, nonzero)] += ways;
              else
                next[idx(1, p2, 0, 1)] += ways;
            } else {
              next[idx(0, 0, parity ^ 1, nonzero)] += ways;  // d = 0
              u64 mid = std::min(limit, r - 1);
              if (mid >= 1) next[idx(0, 0, 0, 1)] += ways * mid;  // d in [1..mid]
              if (limit == r) next[idx(0, 1, 0, 1)] += ways;      // d = r
            }
          }
    std::copy(std::begin(next), std::end(next), std::begin(dp));
  }

  u64 total = 0;
  for (int tight = 0; tight < 2; ++tight)
    for (int prev_r = 0; prev_r < 2; ++prev_r)
      total += dp[idx(tight, prev_r, 0, 1)];
  return total;
}

u64 select_evil(const GameParams& params, u64 n) {
  if (n == 0) return 0;
  // A-gaps are at most 2, so V_n <= 2n; clamp to the value contract.
  u64 hi = n > (kValueMax - 2) / 2 ? kValueMax : 2 * n + 2;
  if (rank_evil(params, hi) < n)
    throw std::overflow_error("select_evil: index beyond the 64-bit value contract");
  u64 lo = 0;  // smallest x with rank_evil(x) >= n
  while (lo < hi) {
    u64 mid = lo + (hi - lo) / 2;
    if (rank_evil(params, mid) >= n)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

SequenceTable evil_old_pairs(const GameParams& params, u64 n_max) {
  SequenceTable table{params, TableSource::EvilOld, {}};
  table.rows.reserve(n_max + 1);
  table.rows.push_back({0, 0, 0});
  Representation rep;
  u64 v = 0;
  for (u64 k = 1; k <= n_max; ++k) {
    do {
      rep = increment(params, rep);
      ++v;
    } while (tail_parity(rep) == TailParity::Old);
    table.rows.push_back({k, v, shifted_value(params, rep)});
  }
  return table;
}

std::string render_digits(const GameParams& params, const Representation& rep) {
  if (rep.is_zero()) return "0";
  std::string out;
  bool dotted = params.r() > 9;
  for (std::size_t i = rep.digits.size(); i-- > 0;) {
    out += std::to_string(rep.digits[i]);
    if (dotted && i > 0) out += '.';
  }
  return out;
}

Representation parse_digits(const GameParams& params, const std::string& text) {
  if (text.empty()) throw MalformedRepError("empty digit string");
  if (text == "0") return {};
  std::vector<u64> big_endian;
  if (params.r() > 9) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t dot = text.find('.', start);
      std::string part = text.substr(start, dot == std::string::npos ? dot : dot - start);
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw MalformedRepError("bad digit field '" + part + "'");
      big_endian.push_back(std::stoull(part));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw MalformedRepError(std::string("bad digit '") + c + "'");
      big_endian.push_back(static_cast<u64>(c - '0'));
    }
  }
  Representation rep;
  rep.digits.assign(big_endian.rbegin(), big_endian.rend());
  return rep;
}

}  // namespace heapgames
