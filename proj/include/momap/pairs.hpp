#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "momap/core.hpp"
#include "momap/rational.hpp"

namespace momap {

/// E = ⊕ O(dᵢ) over a curve with a section / morphism φ given summand-wise.
struct SplitPairData {
  std::vector<long> summand_degrees;
  std::vector<bool> phi_nonzero;     // φᵢ ≢ 0
  std::optional<long> d_phi_degree;  // deg D_φ (rank 2 oriented pairs, φ ≠ 0)
  Rational tau = 0;

  int rank() const { return static_cast<int>(summand_degrees.size()); }
  bool phi_is_zero() const { return std::none_of(phi_nonzero.begin(), phi_nonzero.end(), [](bool b) { return b; }); }
};

enum class PairClass { Stable, PolystableNotStable, NotPolystable };

inline const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::Stable: return "Stable";
    case PairClass::PolystableNotStable: return "PolystableNotStable";
    case PairClass::NotPolystable: return "NotPolystable";
  }
  return "?";
}

/// A candidate subsheaf: the sum of the summands in `summands`, or, when
/// `twist` > 0, the line subsheaf O(d − twist) of the single listed summand.
struct Subsheaf {
  std::vector<int> summands;
  long twist = 0;
  long degree = 0;
  int rank = 0;

  std::string str() const {
    if (twist > 0) return "O(" + std::to_string(degree) + ") in summand " + std::to_string(summands.front());
    std::string s = "sum of summands {";
    for (std::size_t i = 0; i < summands.size(); ++i) s += (i ? "," : "") + std::to_string(summands[i]);
    return s + "}";
  }
};

struct PairVerdict {
  PairClass cls = PairClass::Stable;
  std::string reason;
  std::optional<Subsheaf> violated;
};

inline void validate_pair(const SplitPairData& p) {
  if (p.summand_degrees.empty()) throw Error(ErrorCode::InvalidArgument, "no summands");
  if (p.phi_nonzero.size() != p.summand_degrees.size())
    throw Error(ErrorCode::InvalidArgument, "phi pattern needs one flag per summand");
}

/// Rank-2 oriented pair (E, φ), E = O(d₁) ⊕ O(d₂).
inline PairVerdict oriented_pair_classify(const SplitPairData& p) {
  if (p.rank() != 2) throw Error(ErrorCode::RankMismatch, "oriented pair classification needs rank 2");
  validate_pair(p);
  const long d1 = p.summand_degrees[0], d2 = p.summand_degrees[1];
  PairVerdict out;
  if (p.phi_is_zero()) {
    if (d1 == d2) {
      out.cls = PairClass::PolystableNotStable;
      out.reason = "phi = 0 and E splits into equal-slope summands";
    } else {
      out.cls = PairClass::NotPolystable;
      out.reason = "phi = 0 and the larger summand destabilizes";
      Subsheaf f;
      f.summands = {d1 > d2 ? 0 : 1};
      f.degree = std::max(d1, d2);
      f.rank = 1;
      out.violated = f;
    }
    return out;
  }
  if (!p.d_phi_degree) throw Error(ErrorCode::InvalidArgument, "deg(D_phi) required when phi != 0");
  const long dd = *p.d_phi_degree;
  long bound = std::numeric_limits<long>::max();
  for (int i = 0; i < 2; ++i)
    if (p.phi_nonzero[i]) bound = std::min(bound, p.summand_degrees[i]);
  if (dd < 0 || dd > bound)
    throw Error(ErrorCode::InvalidArgument, "deg(D_phi) must lie between 0 and the least degree of a nonzero component");
  // μ(O(D_φ)) < μ(E) ⇔ 2·deg D_φ < d₁ + d₂.
  if (2 * dd < d1 + d2) {
    out.cls = PairClass::Stable;
    out.reason = "mu(O(D_phi)) < mu(E)";
  } else {
    out.cls = PairClass::NotPolystable;
    out.reason = "mu(O(D_phi)) >= mu(E)";
    Subsheaf f;
    f.degree = dd;
    f.rank = 1;
    out.violated = f;
  }
  return out;
}

/// Candidate subsheaves: all nonempty summand subsets, then line subsheaves
/// O(dᵢ − k), 1 ≤ k ≤ max(0, dᵢ − ⌊−τ⌋), at most 4·max(1, max|dᵢ|) of them.
inline std::vector<Subsheaf> quot_candidates(const SplitPairData& p) {
  validate_pair(p);
  const int r = p.rank();
  if (r > 20) throw Error(ErrorCode::InvalidArgument, "too many summands");
  std::vector<Subsheaf> out;
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    Subsheaf f;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) {
        f.summands.push_back(i);
        f.degree += p.summand_degrees[i];
        ++f.rank;
      }
    out.push_back(f);
  }
  long maxd = 1;
  for (long d : p.summand_degrees) maxd = std::max(maxd, std::abs(d));
  const std::size_t cap = static_cast<std::size_t>(4 * maxd);
  const BigInt fl = floor_of(-p.tau);
  std::size_t twists = 0;
  for (int i = 0; i < r && twists < cap; ++i) {
    const BigInt kmax_big = std::max(BigInt(0), BigInt(p.summand_degrees[i]) - fl);
    const long kmax = kmax_big > BigInt(cap) ? static_cast<long>(cap) : kmax_big.convert_to<long>();
    for (long k = 1; k <= kmax && twists < cap; ++k, ++twists) {
      Subsheaf f;
      f.summands = {i};
      f.twist = k;
      f.degree = p.summand_degrees[i] - k;
      f.rank = 1;
      out.push_back(f);
    }
  }
  return out;
}

/// τ-stability of (E, φ: E → E₀) over the split candidate set:
///   μ(E/F) > −τ whenever rk F < r, and μ(F) < −τ whenever F ⊆ ker φ.
inline PairVerdict quot_pair_classify(const SplitPairData& p) {
  const auto cands = quot_candidates(p);
  const int r = p.rank();
  long total = 0;
  for (long d : p.summand_degrees) total += d;
  const Rational bound = -p.tau;
  PairVerdict out;
  for (const auto& f : cands) {
    if (f.rank < r) {
      const Rational q(total - f.degree, r - f.rank);
      if (!(q > bound)) {
        out.cls = PairClass::NotPolystable;
        out.reason = "mu(E/F) = " + to_string(q) + " <= -tau = " + to_string(bound);
        out.violated = f;
        return out;
      }
    }
    bool in_kernel = true;
    for (int i : f.summands) in_kernel = in_kernel && !p.phi_nonzero[i];
    if (in_kernel) {
      const Rational m(f.degree, f.rank);
      if (!(m < bound)) {
        out.cls = PairClass::NotPolystable;
        out.reason = "F in ker(phi) with mu(F) = " + to_string(m) + " >= -tau = " + to_string(bound);
        out.violated = f;
        return out;
      }
    }
  }
  out.cls = PairClass::Stable;
  out.reason = "all candidate inequalities hold strictly";
  return out;
}

}  // namespace momap
