#pragma once

// Compound surgery operations: the cork/plug twist (dot <-> 0 exchange on a
// two-component sub-diagram), stabilization, rational blow-down of a linear
// chain, and the H1(T^3) bookkeeping of logarithmic transforms.

#include "kirby/constructions.hpp"
#include "kirby/diagram.hpp"
#include "kirby/forms.hpp"
#include "kirby/homology.hpp"
#include "kirby/moves.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace kirby {

namespace detail {

// Exchange the kinds of a dotted component and a 0-framed partner, keeping
// all linking numbers. The partner may not link any other dotted circle.
inline HandleDecomposition exchange_dot_zero(HandleDecomposition hd,
                                             const std::string& d_id,
                                             const std::string& k_id,
                                             const char* what) {
  int d = require_kind(hd, d_id, Kind::dotted, what);
  int k = require_kind(hd, k_id, Kind::framed, what);
  if (hd.comp(k).framing != 0)
    throw move_error(std::string(what) + ": framing of '" + k_id +
                     "' is not 0");
  for (int other : hd.dotted_indices())
    if (other != d && hd.lk(k, other) != 0)
      throw move_error(std::string(what) + ": '" + k_id +
                       "' links dotted circle '" + hd.comp(other).id + "'");
  hd.make_framed(d, 0);
  hd.make_dotted(k);
  return hd;
}

}  // namespace detail

// Cork twist: requires the cork skeleton lk(d,k) = +-1.
inline HandleDecomposition cork_twist(HandleDecomposition hd,
                                      const std::string& d_id,
                                      const std::string& k_id) {
  int d = detail::require_kind(hd, d_id, Kind::dotted, "corktwist");
  int k = detail::require_kind(hd, k_id, Kind::framed, "corktwist");
  Int l = hd.lk(d, k);
  if (l != 1 && l != -1)
    throw move_error("corktwist: lk(" + d_id + "," + k_id + ") is not +-1");
  return detail::exchange_dot_zero(std::move(hd), d_id, k_id, "corktwist");
}

// Plug twist: the partner links the dot any number of times.
inline HandleDecomposition plug_twist(HandleDecomposition hd,
                                      const std::string& d_id,
                                      const std::string& b_id) {
  return detail::exchange_dot_zero(std::move(hd), d_id, b_id, "plugtwist");
}

// Stabilization: surger the 1-handle d to a 0-framed 2-handle. The parity of
// the summand this produces is read off downstream with the forms module.
inline HandleDecomposition stabilize(HandleDecomposition hd,
                                     const std::string& d_id) {
  detail::require_kind(hd, d_id, Kind::dotted, "stabilize");
  return dot_zero_swap(std::move(hd), d_id);
}

// Replace a linear chain (framings -p-2, -2, ..., -2, consecutive linking 1)
// by the rational ball block. External components may link only the chain
// end; they are re-routed over the new dotted circle with the same linking.
inline HandleDecomposition rational_blowdown(
    HandleDecomposition hd, const std::vector<std::string>& chain) {
  if (chain.empty()) throw move_error("rbd: empty chain");
  const Int p = Int(chain.size()) + 1;
  std::vector<int> idx;
  for (const std::string& id : chain)
    idx.push_back(detail::require_kind(hd, id, Kind::framed, "rbd"));
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] == idx[b]) throw move_error("rbd: repeated chain id");
  for (size_t i = 0; i < idx.size(); ++i) {
    Int want = i == 0 ? Int(-p - 2) : Int(-2);
    if (hd.comp(idx[i]).framing != want)
      throw move_error("rbd: chain framing mismatch at '" + chain[i] + "'");
    for (size_t j = i + 1; j < idx.size(); ++j) {
      Int want_lk = j == i + 1 ? Int(1) : Int(0);
      if (hd.lk(idx[i], idx[j]) != want_lk)
        throw move_error("rbd: chain linking mismatch between '" + chain[i] +
                         "' and '" + chain[j] + "'");
    }
  }
  for (int d : hd.dotted_indices())
    for (int c : idx)
      if (hd.lk(d, c) != 0)
        throw move_error("rbd: dotted circle '" + hd.comp(d).id +
                         "' links the chain");
  for (int c = 0; c < hd.size(); ++c) {
    bool in_chain = false;
    for (int ci : idx)
      if (ci == c) in_chain = true;
    if (in_chain) continue;
    for (size_t i = 1; i < idx.size(); ++i)
      if (hd.lk(c, idx[i]) != 0)
        throw move_error("rbd: external component '" + hd.comp(c).id +
                         "' links interior chain component '" + chain[i] +
                         "'");
  }
  std::map<std::string, Int> lambda;
  for (int c = 0; c < hd.size(); ++c) {
    bool in_chain = false;
    for (int ci : idx)
      if (ci == c) in_chain = true;
    if (!in_chain && hd.lk(c, idx[0]) != 0)
      lambda[hd.comp(c).id] = hd.lk(c, idx[0]);
  }
  std::vector<std::string> chain_ids = chain;
  for (const std::string& id : chain_ids) hd.remove(*hd.index_of(id));
  std::string dot_id = "D", partner_id = "K";
  for (int suffix = 1; hd.has(dot_id) || hd.has(partner_id); ++suffix) {
    dot_id = "D" + std::to_string(suffix);
    partner_id = "K" + std::to_string(suffix);
  }
  hd.add_dotted(dot_id);
  hd.add_framed(partner_id, p - 1);
  hd.set_lk(*hd.index_of(dot_id), *hd.index_of(partner_id), p);
  for (const auto& [id, l] : lambda)
    hd.set_lk(*hd.index_of(id), *hd.index_of(dot_id), l);
  return hd;
}

// The boundary automorphism of the torus neighborhood, acting on
// H1(S^1)^3 = Z^3 with the basis (alpha, beta, gamma).
inline Mat<Int> phi_matrix(const Int& p) {
  if (p < 0) throw error("phi_matrix: p must be >= 0");
  Mat<Int> m(3, 3);
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = -1;
  m(2, 2) = p;
  return m;
}

inline Mat<Int> phi_inverse(const Int& p) {
  return inverse_unimodular(phi_matrix(p));
}

using CurveClass = std::array<Int, 3>;  // (alpha, beta, gamma) coordinates

struct LogTransformResult {
  HandleDecomposition hd;
  std::map<std::string, CurveClass> curves;  // transformed metadata
};

// Logarithmic transform with multiplicity p on a torus block (d1, d2, t).
// Boundary-curve metadata for externally-linked components is transformed by
// phi_p^{-1}; the homological linking into the block is recomputed from the
// transformed coordinates (alpha -> lk with d1, beta -> d2, gamma -> t).
inline LogTransformResult log_transform(
    HandleDecomposition hd, const std::string& d1_id, const std::string& d2_id,
    const std::string& t_id, const Int& p,
    const std::map<std::string, CurveClass>& curves = {}) {
  int d1 = detail::require_kind(hd, d1_id, Kind::dotted, "logt");
  int d2 = detail::require_kind(hd, d2_id, Kind::dotted, "logt");
  int t = detail::require_kind(hd, t_id, Kind::framed, "logt");
  if (d1 == d2) throw move_error("logt: block ids must be distinct");
  if (hd.comp(t).framing != 0)
    throw move_error("logt: torus handle framing is not 0");
  if (hd.lk(t, d1) != 0 || hd.lk(t, d2) != 0)
    throw move_error("logt: block does not match the torus skeleton");
  auto is_block = [&](int c) { return c == d1 || c == d2 || c == t; };
  for (const auto& [id, cls] : curves) {
    auto ci = hd.index_of(id);
    if (!ci) throw move_error("logt: unknown component '" + id + "'");
    if (is_block(*ci))
      throw move_error("logt: curve metadata on block component '" + id + "'");
    if (hd.lk(*ci, d1) != cls[0] || hd.lk(*ci, d2) != cls[1] ||
        hd.lk(*ci, t) != cls[2])
      throw move_error("logt: curve metadata for '" + id +
                       "' does not match the diagram linking");
  }
  for (int c = 0; c < hd.size(); ++c) {
    if (is_block(c)) continue;
    if ((hd.lk(c, d1) != 0 || hd.lk(c, d2) != 0 || hd.lk(c, t) != 0) &&
        curves.find(hd.comp(c).id) == curves.end())
      throw move_error("logt: missing curve metadata for '" + hd.comp(c).id +
                       "'");
  }
  Mat<Int> inv = phi_inverse(p);
  LogTransformResult out;
  for (const auto& [id, cls] : curves) {
    std::vector<Int> v = mat_vec(inv, {cls[0], cls[1], cls[2]});
    int ci = *hd.index_of(id);
    if (hd.comp(ci).kind == Kind::dotted && (v[0] != 0 || v[1] != 0))
      throw move_error("logt: transform would link dotted '" + id +
                       "' with a block 1-handle");
    hd.set_lk(ci, d1, v[0]);
    hd.set_lk(ci, d2, v[1]);
    hd.set_lk(ci, t, v[2]);
    out.curves[id] = {v[0], v[1], v[2]};
  }
  out.hd = std::move(hd);
  return out;
}

// Homological before/after comparison of a twist, populated from the
// homology and quadratic-forms modules.
struct TwistReport {
  HomologySummary before, after;
  CongruenceVerdict forms;
  bool euler_equal = false;
  bool h1_equal = false;
  bool h2_equal = false;

  bool necessary_conditions_pass() const {
    return euler_equal && h1_equal && h2_equal && forms.equivalent();
  }
};

inline TwistReport make_twist_report(const HandleDecomposition& before,
                                     const HandleDecomposition& after,
                                     const CongruenceBudget& budget = {}) {
  TwistReport r;
  r.before = homology(before);
  r.after = homology(after);
  r.euler_equal = r.before.euler == r.after.euler;
  r.h1_equal = r.before.h1 == r.after.h1;
  r.h2_equal = r.before.h2_rank == r.after.h2_rank;
  r.forms = congruent(r.before.form, r.after.form, budget);
  return r;
}

}  // namespace kirby
