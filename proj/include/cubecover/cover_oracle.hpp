#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubecover/exact_linalg.hpp"
#include "cubecover/multilinear.hpp"
#include "cubecover/report.hpp"
#include "cubecover/subset_lattice.hpp"

namespace cubecover {

inline constexpr int kMaxOracleDim = 12;

/// One run of the brute-force degree oracle: find the least degree of a
/// polynomial vanishing at every vertex of weight > r and nonzero at every
/// vertex of weight <= r.
struct CoverInstance {
  int n;
  int r;
  FieldKind field;

  void validate() const {
    if (n < 1 || n > kMaxOracleDim) {
      throw std::invalid_argument("CoverInstance: need 1 <= n <= " +
                                  std::to_string(kMaxOracleDim));
    }
    if (r < 0 || r > n) throw std::invalid_argument("CoverInstance: need 0 <= r <= n");
  }
};

/// Basis of the multilinear polynomials of degree <= d vanishing on every
/// vertex of weight > r. Constraint rows are those vertices, columns the
/// monomials of degree <= d in canonical order, entry 1 exactly when the
/// monomial's support lies inside the vertex.
template <class F>
std::vector<MultilinearPoly<F>> vanishing_nullspace(int n, int r, F field, int d) {
  require_dimension(n);
  if (r < 0 || r > n) throw std::invalid_argument("vanishing_nullspace: need 0 <= r <= n");
  if (d < 0 || d > n) throw std::invalid_argument("vanishing_nullspace: need 0 <= d <= n");

  const RankOrder monomials = enumerate_up_to_rank(n, d);
  std::vector<SubsetMask> constraints;
  for (int w = r + 1; w <= n; ++w) {
    for (SubsetMask v : masks_of_weight(n, w)) constraints.push_back(v);
  }

  FieldMatrix<F> m(constraints.size(), monomials.size(), field);
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      const SubsetMask s = monomials.mask_at(j);
      if ((s & constraints[i]) == s) m.at(i, j) = field.one();
    }
  }

  std::vector<MultilinearPoly<F>> basis;
  for (const auto& vec : nullspace(m)) {
    MultilinearPoly<F> f(n, field);
    for (std::size_t j = 0; j < vec.size(); ++j) f.set_coeff(monomials.mask_at(j), vec[j]);
    basis.push_back(std::move(f));
  }
  return basis;
}

/// Either a combination of the basis nonzero at every low-weight vertex, or
/// the vertex that blocks one: a vertex whose evaluation functional vanishes
/// on the whole nullspace, which certifies that no polynomial of this degree
/// fits the pattern.
template <class F>
struct WitnessSearch {
  std::optional<MultilinearPoly<F>> witness;
  std::optional<SubsetMask> blocker;
};

/// Incremental construction: keep a candidate g; when g is zero at the next
/// vertex v, pick a basis element h nonzero at v and replace g by g + c h,
/// scanning c = 1, 2, ... until every already-secured vertex stays nonzero.
/// Each secured vertex forbids at most one c, so any field with more elements
/// than low-weight vertices guarantees the scan terminates. Deterministic:
/// vertices in canonical order, first usable basis element, ascending c.
template <class F>
WitnessSearch<F> witness_from_nullspace(const std::vector<MultilinearPoly<F>>& basis,
                                        const std::vector<SubsetMask>& low_vertices, F field) {
  WitnessSearch<F> out;
  if (basis.empty()) {
    if (!low_vertices.empty()) out.blocker = low_vertices.front();
    return out;
  }
  const int n = basis.front().n();

  // Vertex values of each basis element via the zeta transform.
  std::vector<LatticeTable<F>> basis_values;
  basis_values.reserve(basis.size());
  for (const auto& h : basis) basis_values.push_back(eval_table(h));

  std::vector<typename F::Value> g_coeffs;  // combination over the basis
  std::vector<typename F::Value> g_values;  // g at each low vertex
  g_coeffs.assign(basis.size(), field.zero());
  g_values.assign(low_vertices.size(), field.zero());

  for (std::size_t vi = 0; vi < low_vertices.size(); ++vi) {
    if (!g_values[vi].is_zero()) continue;
    const SubsetMask v = low_vertices[vi];

    std::size_t hi = basis.size();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!basis_values[k].at(v).is_zero()) {
        hi = k;
        break;
      }
    }
    if (hi == basis.size()) {
      out.blocker = v;  // functional vanishes on the whole nullspace
      return out;
    }

    // At most (#secured + 1) values of c are forbidden, so any field with
    // more elements than protected vertices yields a hit within the cap.
    const long long scan_cap = static_cast<long long>(low_vertices.size()) + 2;
    for (long long c = 1;; ++c) {
      if (c > scan_cap) {
        throw std::invalid_argument(
            "witness_from_nullspace: field too small for the incremental scan");
      }
      const auto lambda = field.from_int(c);
      bool ok = !(g_values[vi] + lambda * basis_values[hi].at(v)).is_zero();
      for (std::size_t u = 0; u < vi && ok; ++u) {
        ok = !(g_values[u] + lambda * basis_values[hi].at(low_vertices[u])).is_zero();
      }
      if (ok) {
        g_coeffs[hi] += lambda;
        for (std::size_t u = 0; u < low_vertices.size(); ++u) {
          g_values[u] += lambda * basis_values[hi].at(low_vertices[u]);
        }
        break;
      }
    }
  }

  MultilinearPoly<F> g(n, field);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (g_coeffs[k].is_zero()) continue;
    for (const auto& [mask, coeff] : basis[k].coeffs()) {
      g.add_to_coeff(mask, g_coeffs[k] * coeff);
    }
  }
  out.witness = std::move(g);
  return out;
}

/// Lower-bound evidence for one infeasible degree.
struct BlockerCertificate {
  int degree;
  SubsetMask vertex;
  std::size_t nullspace_dim;
};

/// The oracle's full answer: least feasible degree, a witness there, and a
/// blocker for every degree below it.
template <class F>
struct DegreeCertificate {
  int d_min = -1;
  std::optional<MultilinearPoly<F>> witness;
  std::vector<BlockerCertificate> blockers;
};

inline std::vector<SubsetMask> low_weight_vertices(int n, int r) {
  std::vector<SubsetMask> out;
  for (int w = 0; w <= r; ++w) {
    for (SubsetMask v : masks_of_weight(n, w)) out.push_back(v);
  }
  return out;
}

/// Ascends d = 0, 1, ... and stops at the first degree where a witness
/// exists. Requires more field elements than protected vertices so that the
/// incremental scan in witness_from_nullspace always terminates (and so a
/// missing witness always yields a blocker).
template <class F>
DegreeCertificate<F> min_cover_degree(int n, int r, F field) {
  CoverInstance{n, r, field.kind()}.validate();
  const auto low = low_weight_vertices(n, r);
  if (field.kind().is_prime() && field.kind().prime_modulus() <= low.size()) {
    throw std::invalid_argument(
        "min_cover_degree: field too small for witness construction; need p > " +
        std::to_string(low.size()));
  }

  DegreeCertificate<F> cert;
  for (int d = 0; d <= n; ++d) {
    auto basis = vanishing_nullspace(n, r, field, d);
    auto search = witness_from_nullspace(basis, low, field);
    if (search.witness) {
      cert.d_min = d;
      cert.witness = std::move(search.witness);
      return cert;
    }
    cert.blockers.push_back(BlockerCertificate{d, *search.blocker, basis.size()});
  }
  throw std::logic_error("min_cover_degree: no witness up to degree n (unreachable)");
}

/// Re-checks a certificate from scratch: the witness has the exact
/// zero/nonzero pattern, and every blocker's functional vanishes on a freshly
/// recomputed nullspace basis.
template <class F>
bool recheck_certificate(int n, int r, F field, const DegreeCertificate<F>& cert,
                         std::string* why = nullptr) {
  const auto values = eval_table(*cert.witness);
  for (SubsetMask v = 0; v < values.size(); ++v) {
    const bool should_vanish = weight(v) > r;
    if (should_vanish != values.at(v).is_zero()) {
      if (why) *why = "witness value pattern broken at vertex " + mask_to_hex(v);
      return false;
    }
  }
  const auto deg = cert.witness->degree();
  const int degree = deg ? *deg : 0;  // constant-1 witness for r = n has degree 0
  if (degree > cert.d_min) {
    if (why) *why = "witness degree exceeds d_min";
    return false;
  }
  for (const auto& blocker : cert.blockers) {
    for (const auto& h : vanishing_nullspace(n, r, field, blocker.degree)) {
      if (!evaluate(h, blocker.vertex).is_zero()) {
        if (why) {
          *why = "blocker at degree " + std::to_string(blocker.degree) + " does not block";
        }
        return false;
      }
    }
  }
  return true;
}

/// Theorem sweep: for every 1 <= n <= n_max and 0 <= r <= n the oracle must
/// land exactly at d_min = n - r, with certificates re-verified and the
/// symmetric witness profile cross-checked as the independent upper bound.
template <class F>
Report verify_theorem(int n_max, F field) {
  if (n_max < 1 || n_max > kMaxOracleDim) {
    throw std::invalid_argument("verify_theorem: need 1 <= n_max <= " +
                                std::to_string(kMaxOracleDim));
  }
  Report rep;
  rep.command = "verify-theorem";
  rep.params["n_max"] = std::to_string(n_max);
  rep.params["field"] = field.kind().to_string();

  for (int n = 1; n <= n_max; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto cert = min_cover_degree(n, r, field);
      DetailRecord d;
      d.params["n"] = std::to_string(n);
      d.params["r"] = std::to_string(r);
      d.expected = std::to_string(n - r);
      d.got = std::to_string(cert.d_min);
      d.pass = cert.d_min == n - r;
      if (d.pass && cert.blockers.size() != static_cast<std::size_t>(n - r)) {
        d.pass = false;
        d.note = "expected one blocker per degree below n - r";
      }
      if (d.pass) {
        std::string why;
        if (!recheck_certificate(n, r, field, cert, &why)) {
          d.pass = false;
          d.note = "certificate recheck failed: " + why;
        } else {
          d.note = "witness + " + std::to_string(cert.blockers.size()) + " blockers verified";
        }
      }
      // Independent upper-bound witness: the symmetric profile vanishes on
      // weights > r and nowhere below, at degree n - r.
      if (d.pass) {
        const auto profile = construct_extremal(n, r, field);
        for (int w = 0; w <= n; ++w) {
          const bool should_vanish = w > r;
          if (should_vanish != profile.value_at_weight[w].is_zero()) {
            d.pass = false;
            d.note = "symmetric witness profile broken at weight " + std::to_string(w);
            break;
          }
        }
      }
      rep.details.push_back(std::move(d));
    }
  }
  rep.finalize();
  return rep;
}

}  // namespace cubecover
