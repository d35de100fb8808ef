#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cubecover/binomial.hpp"
#include "cubecover/report.hpp"
#include "cubecover/subset_lattice.hpp"
#include "cubecover/util.hpp"

namespace cubecover {

/// Multilinear polynomial on {0,1}^n, stored as a sparse table from monomial
/// support mask to nonzero coefficient. On the cube x^k = x, so restricting
/// to multilinear representatives loses nothing; it also makes alpha_J
/// literally the stored coefficient of prod_{j in J} x_j.
template <class F>
class MultilinearPoly {
 public:
  using Value = typename F::Value;

  MultilinearPoly(int n, F field) : n_(n), field_(field) { require_dimension(n); }

  int n() const { return n_; }
  const F& field() const { return field_; }
  const std::map<SubsetMask, Value>& coeffs() const { return coeffs_; }

  void check_mask(SubsetMask mask) const {
    if (n_ < 32 && (mask >> n_) != 0) {
      throw std::invalid_argument("MultilinearPoly: mask " + mask_to_hex(mask) +
                                  " outside dimension " + std::to_string(n_));
    }
  }

  /// Sets the coefficient of prod_{i in mask} x_i; a zero value erases the
  /// term so that stored coefficients are always nonzero.
  void set_coeff(SubsetMask mask, const Value& v) {
    check_mask(mask);
    if (v.is_zero()) {
      coeffs_.erase(mask);
    } else {
      coeffs_.insert_or_assign(mask, v);
    }
  }

  void add_to_coeff(SubsetMask mask, const Value& v) {
    check_mask(mask);
    auto it = coeffs_.find(mask);
    if (it == coeffs_.end()) {
      if (!v.is_zero()) coeffs_.emplace(mask, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) coeffs_.erase(it);
  }

  Value coeff(SubsetMask mask) const {
    check_mask(mask);
    auto it = coeffs_.find(mask);
    return it == coeffs_.end() ? field_.zero() : it->second;
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Max weight of a stored mask; nullopt for the zero polynomial (kept
  /// distinct from 0 so degree-0 logic never sees the sentinel).
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [mask, v] : coeffs_) {
      const int w = weight(mask);
      if (!d || w > *d) d = w;
    }
    return d;
  }

  friend bool operator==(const MultilinearPoly& a, const MultilinearPoly& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int n_;
  F field_;
  std::map<SubsetMask, Value> coeffs_;
};

/// f(v) = sum of coefficients whose support is contained in v: a monomial is
/// 1 at a 0/1 vertex exactly when all its variables are switched on there.
template <class F>
typename F::Value evaluate(const MultilinearPoly<F>& f, SubsetMask v) {
  f.check_mask(v);
  auto acc = f.field().zero();
  for (const auto& [mask, c] : f.coeffs()) {
    if ((mask & v) == mask) acc += c;
  }
  return acc;
}

/// Values of f at all 2^n vertices; the zeta transform of the coefficient
/// table.
template <class F>
LatticeTable<F> eval_table(const MultilinearPoly<F>& f) {
  LatticeTable<F> t(f.n(), f.field());
  for (const auto& [mask, c] : f.coeffs()) t.at(mask) = c;
  return zeta_transform(std::move(t));
}

/// alpha_J for all J, recovered from the vertex values by Moebius inversion.
/// For a multilinear polynomial this reproduces the stored coefficients; the
/// transform route makes that an actual round-trip rather than a copy.
template <class F>
LatticeTable<F> alpha_of(const MultilinearPoly<F>& f) {
  return mobius_transform(eval_table(f));
}

template <class F>
using AlphaTable = LatticeTable<F>;

namespace detail {

inline std::map<std::string, std::string> nr_params(int n, int r, const FieldKind& kind) {
  return {{"n", std::to_string(n)}, {"r", std::to_string(r)}, {"field", kind.to_string()}};
}

}  // namespace detail

/// Degree-support condition: alpha_J = 0 for every |J| >= n - r. Holds for
/// any polynomial of degree < n - r; a violation pinpoints the first bad J.
template <class F>
Report check_star(const MultilinearPoly<F>& f, int r) {
  Report rep;
  rep.command = "check-star";
  rep.params = detail::nr_params(f.n(), r, f.field().kind());

  const auto alpha = alpha_of(f);
  const int n = f.n();
  std::size_t checked = 0;
  for (SubsetMask j = 0; j < alpha.size(); ++j) {
    if (weight(j) < n - r) continue;
    ++checked;
    if (!alpha.at(j).is_zero()) {
      DetailRecord d;
      d.params["J"] = mask_to_hex(j);
      d.params["size"] = std::to_string(weight(j));
      d.expected = "0";
      d.got = alpha.at(j).to_string();
      d.note = "alpha_J != 0 with |J| >= n - r";
      d.pass = false;
      rep.details.push_back(std::move(d));
      rep.finalize();
      return rep;
    }
  }
  DetailRecord ok;
  ok.params["sets_checked"] = std::to_string(checked);
  ok.note = "alpha_J = 0 for all |J| >= n - r";
  rep.details.push_back(std::move(ok));
  rep.finalize();
  return rep;
}

/// For f vanishing on all vertices of weight > r, Moebius inversion collapses
/// to a linear relation on the low-size coefficient sums: for every |J| = s
/// with r < s <= n,
///   alpha_J = (-1)^{s-r} sum_{t=0}^{r} C(s-1-t, r-t) sum_{B subset J, |B|=t} alpha_B.
/// The precondition is re-checked and its violation reported distinctly.
template <class F>
Report check_double_star_relation(const MultilinearPoly<F>& f, int r) {
  Report rep;
  rep.command = "check-double-star";
  rep.params = detail::nr_params(f.n(), r, f.field().kind());
  const int n = f.n();
  if (r < 0 || r > n) throw std::invalid_argument("check_double_star_relation: bad r");

  const auto values = eval_table(f);
  for (SubsetMask v = 0; v < values.size(); ++v) {
    if (weight(v) > r && !values.at(v).is_zero()) {
      DetailRecord d;
      d.params["vertex"] = mask_to_hex(v);
      d.params["weight"] = std::to_string(weight(v));
      d.expected = "0";
      d.got = values.at(v).to_string();
      d.note = "precondition violated: f does not vanish on all vertices of weight > r";
      d.pass = false;
      rep.details.push_back(std::move(d));
      rep.finalize();
      return rep;
    }
  }

  const auto alpha = mobius_transform(values);
  const F& field = f.field();
  std::size_t checked = 0;
  for (SubsetMask j = 0; j < alpha.size(); ++j) {
    const int s = weight(j);
    if (s <= r) continue;
    ++checked;

    // Bucket alpha over the proper submasks of J by size; s > r >= 0 means
    // J itself never lands in a bucket.
    std::vector<typename F::Value> by_size(static_cast<std::size_t>(r) + 1, field.zero());
    by_size[0] += alpha.at(0);
    for (SubsetMask b = (j - 1) & j; b != 0; b = (b - 1) & j) {
      const int t = weight(b);
      if (t <= r) by_size[t] += alpha.at(b);
    }

    auto rhs = field.zero();
    for (int t = 0; t <= r; ++t) {
      rhs += field.from_integer(binomial(s - 1 - t, r - t)) * by_size[t];
    }
    if (((s - r) & 1) != 0) rhs = -rhs;

    if (rhs != alpha.at(j)) {
      DetailRecord d;
      d.params["J"] = mask_to_hex(j);
      d.params["size"] = std::to_string(s);
      d.expected = rhs.to_string();
      d.got = alpha.at(j).to_string();
      d.note = "linear relation violated";
      d.pass = false;
      rep.details.push_back(std::move(d));
      rep.finalize();
      return rep;
    }
  }

  DetailRecord ok;
  ok.params["sets_checked"] = std::to_string(checked);
  ok.note = "relation holds for every |J| > r";
  rep.details.push_back(std::move(ok));
  rep.finalize();
  return rep;
}

/// Value profile of the symmetric witness prod_{s=r+1}^{n} (x_1+...+x_n - s)
/// at the vertices of each weight. The product has n - r linear factors, so
/// it certifies a degree-(n-r) polynomial without expanding 2^n coefficients.
template <class F>
struct WeightProfile {
  int n;
  int r;
  std::vector<typename F::Value> value_at_weight;  // length n + 1

  int degree() const { return n - r; }
};

/// Requires characteristic 0 or p > n, otherwise the weights r+1..n are not
/// distinguished from 0..r modulo p and the vanishing pattern breaks.
template <class F>
WeightProfile<F> construct_extremal(int n, int r, F field) {
  require_dimension(n);
  if (r < 0 || r > n) {
    throw std::invalid_argument("construct_extremal: need 0 <= r <= n");
  }
  if (field.kind().is_prime() && field.kind().prime_modulus() <= static_cast<std::uint64_t>(n)) {
    throw std::invalid_argument("construct_extremal: characteristic too small, need p > n but p = " +
                                std::to_string(field.kind().prime_modulus()));
  }
  WeightProfile<F> profile{n, r, {}};
  profile.value_at_weight.reserve(n + 1);
  for (int w = 0; w <= n; ++w) {
    auto v = field.one();
    for (int s = r + 1; s <= n; ++s) v *= field.from_int(w - s);
    profile.value_at_weight.push_back(v);
  }
  return profile;
}

// ---------------------------------------------------------------------------
// Polynomial text format
//
//   line 1:  n=<N> field=<rational|fp:P>
//   others:  <coefficient> <mask-hex>     (# starts a comment)
//
// Bit i of the mask (least significant first) is variable x_{i+1};
// coefficients are decimal integers or a/b.
// ---------------------------------------------------------------------------

using AnyPoly = std::variant<MultilinearPoly<RationalDomain>, MultilinearPoly<PrimeDomain>>;

inline int poly_dimension(const AnyPoly& p) {
  return std::visit([](const auto& f) { return f.n(); }, p);
}

inline FieldKind poly_field_kind(const AnyPoly& p) {
  return std::visit([](const auto& f) { return f.field().kind(); }, p);
}

template <class F>
void write_poly(std::ostream& os, const MultilinearPoly<F>& f) {
  os << "n=" << f.n() << " field=" << f.field().kind().to_string() << "\n";
  for (const auto& [mask, c] : f.coeffs()) {
    os << c.to_string() << " " << mask_to_hex(mask) << "\n";
  }
}

inline void write_poly(std::ostream& os, const AnyPoly& p) {
  std::visit([&os](const auto& f) { write_poly(os, f); }, p);
}

inline AnyPoly read_poly(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("poly file: missing header");
  std::istringstream header(line);
  std::string n_part, field_part;
  if (!(header >> n_part >> field_part) || n_part.rfind("n=", 0) != 0 ||
      field_part.rfind("field=", 0) != 0) {
    throw std::invalid_argument("poly file: bad header '" + line + "'");
  }
  int n = 0;
  try {
    n = std::stoi(n_part.substr(2));
  } catch (const std::exception&) {
    throw std::invalid_argument("poly file: bad dimension in header '" + line + "'");
  }
  const FieldKind kind = FieldKind::parse(field_part.substr(6));

  return with_field(kind, [&](auto field) -> AnyPoly {
    MultilinearPoly<decltype(field)> f(n, field);
    std::string body;
    std::size_t line_no = 1;
    while (std::getline(is, body)) {
      ++line_no;
      const auto hash = body.find('#');
      if (hash != std::string::npos) body = body.substr(0, hash);
      std::istringstream row(body);
      std::string coeff_text, mask_text;
      if (!(row >> coeff_text)) continue;  // blank or comment-only line
      std::string extra;
      if (!(row >> mask_text) || (row >> extra)) {
        throw std::invalid_argument("poly file line " + std::to_string(line_no) +
                                    ": expected '<coefficient> <mask-hex>'");
      }
      const SubsetMask mask = mask_from_hex(mask_text);
      f.add_to_coeff(mask, field.from_string(coeff_text));
    }
    return AnyPoly(std::move(f));
  });
}

}  // namespace cubecover
