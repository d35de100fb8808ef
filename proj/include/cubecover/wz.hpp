#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubecover/binomial.hpp"
#include "cubecover/integer.hpp"
#include "cubecover/rational.hpp"
#include "cubecover/report.hpp"

namespace cubecover {

/// Parameters of the diagonal product sum
///   S1(r) = sum_{u=0}^{r} (-1)^{u+a} C(m,u) C(m-1-u, r-u) C(m-1-u, r-a),
/// with a = |A| and m = n - |A|. The identity S1 = 1 is claimed on the
/// index range of the matrix (a <= r < n/2); the sum itself is defined for
/// any parameters that keep every upper index nonnegative, which the
/// induction replay needs when it walks r upward from 0 past a.
struct S1Params {
  int n = 0;
  int a = 0;
  int r = 0;

  int m() const { return n - a; }

  void validate() const {
    if (n < 1 || a < 0 || a > n || r < 0) {
      throw std::invalid_argument("S1Params: need n >= 1, 0 <= a <= n, r >= 0");
    }
    if (r >= m()) {
      // u = m would hit C(m-1-u, .) with negative upper index; the display
      // only means what it says below this bound (and the claim domain
      // r < n/2 <= m is well inside it).
      throw std::invalid_argument("S1Params: need r < n - a to evaluate the displayed sum");
    }
  }

  bool claim_valid() const { return a <= r && 2 * r < n; }
};

/// Parameters of the off-diagonal product sum
///   S2(r) = sum_{u=0}^{r} (-1)^{u+a} C(m,u) C(n-1-a-u, r-u) C(n-1-b-u, r-b),
/// with a = |A|, b = |B|, w = |A cap B| and m = n - |A cup B|. A != B is
/// encoded as (a, b, w) != (a, a, a). The identity S2 = 0 is claimed for
/// a, b <= r < n/2.
struct S2Params {
  int n = 0;
  int a = 0;
  int b = 0;
  int w = 0;
  int r = 0;

  int m() const { return n - a - b + w; }

  void validate() const {
    if (n < 1 || a < 0 || a > n || b < 0 || b > n || r < 0) {
      throw std::invalid_argument("S2Params: need n >= 1, 0 <= a,b <= n, r >= 0");
    }
    if (w < 0 || w > a || w > b) {
      throw std::invalid_argument("S2Params: need 0 <= w <= min(a, b)");
    }
    if (a + b - w > n) {
      throw std::invalid_argument("S2Params: |A union B| = a + b - w exceeds n");
    }
    const int top = r < m() ? r : m();  // effective summation bound: C(m,u)=0 beyond m
    if (n - 1 - a - top < 0 || n - 1 - b - top < 0) {
      throw std::invalid_argument("S2Params: displayed sum hits a negative upper index");
    }
  }

  bool claim_valid() const {
    return a <= r && b <= r && !(a == b && b == w) && 2 * r < n;
  }
};

/// Exact value of S1 as displayed (upper limit r; terms with C(m,u) = 0 drop
/// out, which is why summing to r is safe).
inline Integer s1(const S1Params& p) {
  p.validate();
  Integer acc(0);
  for (int u = 0; u <= p.r; ++u) {
    const Integer lead = binomial(p.m(), u);
    if (lead.is_zero()) continue;
    Integer term = lead * binomial(p.m() - 1 - u, p.r - u) * binomial(p.m() - 1 - u, p.r - p.a);
    if (((u + p.a) & 1) != 0) term = -term;
    acc += term;
  }
  return acc;
}

/// Exact value of S2 as displayed.
inline Integer s2(const S2Params& p) {
  p.validate();
  Integer acc(0);
  for (int u = 0; u <= p.r; ++u) {
    const Integer lead = binomial(p.m(), u);
    if (lead.is_zero()) continue;
    Integer term =
        lead * binomial(p.n - 1 - p.a - u, p.r - u) * binomial(p.n - 1 - p.b - u, p.r - p.b);
    if (((u + p.a) & 1) != 0) term = -term;
    acc += term;
  }
  return acc;
}

/// Direct value and closed form of the partial alternating sum
///   sum_{u=t}^{r*} (-1)^{s-u} C(s-t, u-t)
/// whose three cases drive the collapse of the Moebius relation.
struct AltSumResult {
  Integer direct;
  Integer closed_form;
  bool match = false;
};

inline AltSumResult partial_alternating_sum(int s, int t, int r_star) {
  if (!(0 <= t && t <= r_star && r_star <= s)) {
    throw std::invalid_argument("partial_alternating_sum: need 0 <= t <= r* <= s");
  }
  AltSumResult res;
  res.direct = Integer(0);
  for (int u = t; u <= r_star; ++u) {
    Integer term = binomial(s - t, u - t);
    if (((s - u) & 1) != 0) term = -term;
    res.direct += term;
  }
  if (t == s && s == r_star) {
    res.closed_form = Integer(1);
  } else if (t < s && s == r_star) {
    res.closed_form = Integer(0);
  } else {
    res.closed_form = binomial(s - 1 - t, r_star - t);
    if (((s - r_star) & 1) != 0) res.closed_form = -res.closed_form;
  }
  res.match = res.direct == res.closed_form;
  return res;
}

enum class SumId { S1, S2 };

inline std::string to_string(SumId id) { return id == SumId::S1 ? "S1" : "S2"; }

// ---------------------------------------------------------------------------
// The two certified recurrences. Coefficients transcribed once, literally,
// from the certificate displays; the test suite keeps an independently keyed
// copy and cross-checks both at random points.
// ---------------------------------------------------------------------------

inline Integer s1_c0(long long a, long long m, long long r) {
  return Integer(-(a - r - 1) * (m - r - 1) * (a + m - 2 * r - 4) * (a + m - r - 1));
}

inline Integer s1_c1(long long a, long long m, long long r) {
  const long long core = a * a * m - a * a * r - a * a + a * m * m - 2 * a * m * r - 2 * a * m +
                         a * r * r + a * r - a - m * m * r - m * m + m * r * r + m * r - m +
                         2 * r * r + 6 * r + 4;
  return Integer((a + m - 2 * r - 3) * core);
}

inline Integer s1_c2(long long a, long long m, long long r) {
  return Integer(-(r + 2) * (a - r - 2) * (m - r - 2) * (a + m - 2 * r - 2));
}

inline Integer s2_c0(long long a, long long b, long long m, long long w, long long r) {
  return Integer(-(a - r - 1) * (b + m - r - w - 1) * (a + b + m - 2 * r - w - 4) *
                 (a + b + m - r - w - 1));
}

inline Integer s2_c1(long long a, long long b, long long m, long long w, long long r) {
  const long long core =
      a * a * b - a * a * r - a * a * w - 2 * a * a + a * b * b + a * b * m - 2 * a * b * r -
      3 * a * b * w - 4 * a * b - 2 * a * m * w - a * m + a * r * r + 4 * a * r * w + 5 * a * r +
      2 * a * w * w + 7 * a * w + 5 * a - b * b * r - b * b * w - 2 * b * b - 2 * b * m * w -
      b * m + b * r * r + 4 * b * r * w + 5 * b * r + 2 * b * w * w + 7 * b * w + 5 * b +
      m * m * r - m * m * w + m * m - m * r * r + 2 * m * r * w - m * r + 2 * m * w * w +
      4 * m * w + m - 3 * r * r * w - 2 * r * r - 3 * r * w * w - 11 * r * w - 6 * r - w * w * w -
      5 * w * w - 9 * w - 4;
  return Integer(-(a + b + m - 2 * r - w - 3) * core);
}

inline Integer s2_c2(long long a, long long b, long long m, long long w, long long r) {
  return Integer((r + 2) * (b - r - 2) * (-a - m + r + w + 2) * (a + b + m - 2 * r - w - 2));
}

/// c0 S(r) + c1 S(r+1) + c2 S(r+2) with S taken from the direct sums, so the
/// residual is evidence independent of any recurrence propagation. Exactly
/// zero wherever the certificate holds.
inline Integer recurrence_residual(const S1Params& p) {
  if (2 * (p.r + 2) >= p.n) {
    throw std::invalid_argument("recurrence_residual: need r + 2 < n/2");
  }
  const Integer v0 = s1({p.n, p.a, p.r});
  const Integer v1 = s1({p.n, p.a, p.r + 1});
  const Integer v2 = s1({p.n, p.a, p.r + 2});
  return s1_c0(p.a, p.m(), p.r) * v0 + s1_c1(p.a, p.m(), p.r) * v1 + s1_c2(p.a, p.m(), p.r) * v2;
}

inline Integer recurrence_residual(const S2Params& p) {
  if (2 * (p.r + 2) >= p.n) {
    throw std::invalid_argument("recurrence_residual: need r + 2 < n/2");
  }
  const Integer v0 = s2({p.n, p.a, p.b, p.w, p.r});
  const Integer v1 = s2({p.n, p.a, p.b, p.w, p.r + 1});
  const Integer v2 = s2({p.n, p.a, p.b, p.w, p.r + 2});
  return s2_c0(p.a, p.b, p.m(), p.w, p.r) * v0 + s2_c1(p.a, p.b, p.m(), p.w, p.r) * v1 +
         s2_c2(p.a, p.b, p.m(), p.w, p.r) * v2;
}

/// Replays the induction that pins the identities, one parameter set at a
/// time for r = 0..r_max:
///   - base cases r = 0, 1 must equal the claimed value (1 for S1, 0 for S2)
///     wherever the tuple is inside the claim domain;
///   - each step's leading coefficient c2 is checked; a zero is recorded as
///     a finding (the certificate degenerates there) but the direct values
///     still must satisfy the residual identity;
///   - wherever c2 != 0 the recurrence-propagated value must reproduce the
///     direct sum, and every claim-domain value must equal the claim.
inline Report replay_induction(SumId id, int n, int a, int b, int w, int r_max) {
  if (2 * r_max >= n) {
    throw std::invalid_argument("replay_induction: need r_max < n/2");
  }
  if (r_max < 0) throw std::invalid_argument("replay_induction: need r_max >= 0");

  Report rep;
  rep.command = "replay-induction";
  rep.params["sum"] = to_string(id);
  rep.params["n"] = std::to_string(n);
  rep.params["a"] = std::to_string(a);
  if (id == SumId::S2) {
    rep.params["b"] = std::to_string(b);
    rep.params["w"] = std::to_string(w);
  }
  rep.params["r_max"] = std::to_string(r_max);

  const Integer claim = id == SumId::S1 ? Integer(1) : Integer(0);
  auto direct = [&](int r) {
    return id == SumId::S1 ? s1({n, a, r}) : s2({n, a, b, w, r});
  };
  auto in_claim = [&](int r) {
    return id == SumId::S1 ? S1Params{n, a, r}.claim_valid()
                           : S2Params{n, a, b, w, r}.claim_valid();
  };
  auto lead_coeff = [&](int r) {
    return id == SumId::S1 ? s1_c2(a, n - a, r) : s2_c2(a, b, n - a - b + w, w, r);
  };

  std::vector<Integer> values;
  for (int r = 0; r <= r_max; ++r) values.push_back(direct(r));

  // Base cases.
  for (int r = 0; r <= r_max && r <= 1; ++r) {
    DetailRecord d;
    d.params["check"] = "base-case";
    d.params["r"] = std::to_string(r);
    d.expected = claim.to_string();
    d.got = values[r].to_string();
    if (in_claim(r)) {
      d.pass = values[r] == claim;
    } else {
      d.informational = true;
      d.note = "outside claim domain (recorded only)";
    }
    rep.details.push_back(std::move(d));
  }

  // Induction steps.
  for (int r = 0; r + 2 <= r_max; ++r) {
    const Integer c0 = id == SumId::S1 ? s1_c0(a, n - a, r) : s2_c0(a, b, n - a - b + w, w, r);
    const Integer c1 = id == SumId::S1 ? s1_c1(a, n - a, r) : s2_c1(a, b, n - a - b + w, w, r);
    const Integer c2 = lead_coeff(r);

    const Integer residual = c0 * values[r] + c1 * values[r + 1] + c2 * values[r + 2];
    {
      DetailRecord d;
      d.params["check"] = "residual";
      d.params["r"] = std::to_string(r);
      d.expected = "0";
      d.got = residual.to_string();
      d.pass = residual.is_zero();
      rep.details.push_back(std::move(d));
    }

    if (c2.is_zero()) {
      DetailRecord d;
      d.params["check"] = "leading-coefficient";
      d.params["r"] = std::to_string(r);
      d.got = "0";
      d.note = "finding: c2 vanishes here; the recurrence cannot pin S(r+2) at this step";
      d.informational = true;
      rep.details.push_back(std::move(d));
      continue;
    }

    // Propagation: the value the recurrence forces for S(r+2) must be the
    // direct sum. (Equivalent to residual = 0 once c2 != 0; recorded as its
    // own evidence line, computed over the rationals so a failing run still
    // reports the forced value.)
    const Rational forced(-(c0 * values[r] + c1 * values[r + 1]), c2);
    DetailRecord d;
    d.params["check"] = "propagation";
    d.params["r"] = std::to_string(r + 2);
    d.expected = values[r + 2].to_string();
    d.got = forced.to_string();
    d.pass = forced == Rational(values[r + 2]);
    rep.details.push_back(std::move(d));
  }

  // Claimed value on every claim-domain point up to r_max.
  for (int r = 0; r <= r_max; ++r) {
    if (!in_claim(r)) continue;
    DetailRecord d;
    d.params["check"] = "claimed-value";
    d.params["r"] = std::to_string(r);
    d.expected = claim.to_string();
    d.got = values[r].to_string();
    d.pass = values[r] == claim;
    rep.details.push_back(std::move(d));
  }

  rep.finalize();
  return rep;
}

}  // namespace cubecover
