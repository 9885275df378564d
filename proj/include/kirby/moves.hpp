#pragma once

// Primitive Kirby moves on linking data. Pure functions: each takes a
// decomposition by value and returns the moved one, throwing move_error on a
// precondition violation. Sign conventions are fixed here once: a slide of i
// over j with sign s is congruence by the elementary matrix adding s*(row j)
// to (row i); an eps-framed blow-down subtracts eps*lk(i,u)*lk(j,u).

#include "kirby/diagram.hpp"

#include <map>
#include <string>
#include <vector>

namespace kirby {

struct move_error : error {
  using error::error;
};

namespace detail {

inline int require_kind(const HandleDecomposition& hd, const std::string& id,
                        Kind k, const char* what) {
  auto i = hd.index_of(id);
  if (!i) throw move_error(std::string(what) + ": no component '" + id + "'");
  if (hd.comp(*i).kind != k)
    throw move_error(std::string(what) + ": component '" + id + "' is " +
                     (hd.comp(*i).kind == Kind::dotted ? "dotted" : "framed"));
  return *i;
}

inline int check_sign(int sign, const char* what) {
  if (sign != 1 && sign != -1)
    throw move_error(std::string(what) + ": sign must be +1 or -1");
  return sign;
}

}  // namespace detail

// Slide 2-handle i over 2-handle j. framing(i) += framing(j) + 2*s*lk(i,j);
// lk(i,c) += s*lk(j,c) for every other component c (including c = j, where
// lk(j,j) is the framing of j).
inline HandleDecomposition slide_2_over_2(HandleDecomposition hd,
                                          const std::string& i_id,
                                          const std::string& j_id, int sign) {
  detail::check_sign(sign, "slide");
  if (i_id == j_id) throw move_error("slide: cannot slide a handle over itself");
  int i = detail::require_kind(hd, i_id, Kind::framed, "slide");
  int j = detail::require_kind(hd, j_id, Kind::framed, "slide");
  std::vector<Int> row_j(hd.size());
  for (int c = 0; c < hd.size(); ++c) row_j[c] = hd.lk(j, c);
  Int new_framing = hd.comp(i).framing + hd.comp(j).framing +
                    2 * Int(sign) * hd.lk(i, j);
  for (int c = 0; c < hd.size(); ++c) {
    if (c == i) continue;
    hd.set_lk(i, c, hd.lk(i, c) + Int(sign) * row_j[c]);
  }
  hd.set_framing(i, new_framing);
  return hd;
}

// Slide 2-handle i over the 1-handle d: only lk(i,d) moves, by +-1.
inline HandleDecomposition slide_2_over_1(HandleDecomposition hd,
                                          const std::string& i_id,
                                          const std::string& d_id, int sign) {
  detail::check_sign(sign, "slide1");
  int i = detail::require_kind(hd, i_id, Kind::framed, "slide1");
  int d = detail::require_kind(hd, d_id, Kind::dotted, "slide1");
  hd.set_lk(i, d, hd.lk(i, d) + sign);
  return hd;
}

// Connected sum with +-CP^2, composed with slides recorded by the linking
// vector v over framed ids, so that blow_down(new_id) restores the input.
inline HandleDecomposition blow_up(HandleDecomposition hd,
                                   const std::string& new_id, int sign,
                                   const std::map<std::string, Int>& v = {}) {
  detail::check_sign(sign, "blowup");
  if (hd.has(new_id))
    throw move_error("blowup: id '" + new_id + "' already exists");
  std::vector<std::pair<int, Int>> links;
  for (const auto& [id, val] : v) {
    int idx = detail::require_kind(hd, id, Kind::framed, "blowup lk");
    if (val != 0) links.emplace_back(idx, val);
  }
  for (const auto& [a, va] : links)
    for (const auto& [b, vb] : links) {
      if (a > b) continue;
      Int delta = Int(sign) * va * vb;
      if (a == b)
        hd.set_framing(a, hd.comp(a).framing + delta);
      else
        hd.set_lk(a, b, hd.lk(a, b) + delta);
    }
  hd.add_framed(new_id, sign);
  int u = *hd.index_of(new_id);
  for (const auto& [a, va] : links) hd.set_lk(u, a, va);
  return hd;
}

// Remove a +-1-framed component u: lk(i,j) -= eps*lk(i,u)*lk(j,u) for the
// remaining framed handles, framings included.
inline HandleDecomposition blow_down(HandleDecomposition hd,
                                     const std::string& u_id) {
  int u = detail::require_kind(hd, u_id, Kind::framed, "blowdown");
  Int eps = hd.comp(u).framing;
  if (eps != 1 && eps != -1)
    throw move_error("blowdown: framing of '" + u_id + "' is not +-1");
  for (int d : hd.dotted_indices())
    if (hd.lk(u, d) != 0)
      throw move_error("blowdown: '" + u_id + "' links dotted circle '" +
                       hd.comp(d).id + "'");
  auto fs = hd.framed_indices();
  for (size_t a = 0; a < fs.size(); ++a) {
    if (fs[a] == u) continue;
    for (size_t b = a; b < fs.size(); ++b) {
      if (fs[b] == u) continue;
      Int delta = eps * hd.lk(fs[a], u) * hd.lk(fs[b], u);
      if (fs[a] == fs[b])
        hd.set_framing(fs[a], hd.comp(fs[a]).framing - delta);
      else
        hd.set_lk(fs[a], fs[b], hd.lk(fs[a], fs[b]) - delta);
    }
  }
  hd.remove(u);
  return hd;
}

// Cancel the 1-handle d against the 2-handle k with |lk(k,d)| = 1. Every
// other framed handle is slid over k until its linking with d is 0; the
// slides are honest slide_2_over_2 calls so a trace replays them.
inline HandleDecomposition cancel_pair(HandleDecomposition hd,
                                       const std::string& d_id,
                                       const std::string& k_id) {
  int d = detail::require_kind(hd, d_id, Kind::dotted, "cancel");
  int k = detail::require_kind(hd, k_id, Kind::framed, "cancel");
  Int lkd = hd.lk(k, d);
  if (lkd != 1 && lkd != -1)
    throw move_error("cancel: lk(" + k_id + "," + d_id + ") is not +-1");
  for (int i : hd.framed_indices()) {
    if (i == k) continue;
    Int t = -hd.lk(i, d) * lkd;
    int s = t < 0 ? -1 : 1;
    const std::string i_id = hd.comp(i).id;
    for (Int c = 0; c < t_abs(t); ++c)
      hd = slide_2_over_2(std::move(hd), i_id, k_id, s);
  }
  d = *hd.index_of(d_id);
  k = *hd.index_of(k_id);
  hd.remove(std::max(d, k));
  hd.remove(std::min(d, k));
  return hd;
}

// Exchange a dot with a 0-framing on a single component. A framed component
// must have framing 0 and may not link any dotted circle (the result must
// keep dotted circles unlinked).
inline HandleDecomposition dot_zero_swap(HandleDecomposition hd,
                                         const std::string& c_id) {
  auto ci = hd.index_of(c_id);
  if (!ci) throw move_error("dotswap: no component '" + c_id + "'");
  int c = *ci;
  if (hd.comp(c).kind == Kind::dotted) {
    hd.make_framed(c, 0);
    return hd;
  }
  if (hd.comp(c).framing != 0)
    throw move_error("dotswap: framing of '" + c_id + "' is not 0");
  for (int d : hd.dotted_indices())
    if (hd.lk(c, d) != 0)
      throw move_error("dotswap: '" + c_id + "' links dotted circle '" +
                       hd.comp(d).id + "'");
  hd.make_dotted(c);
  return hd;
}

}  // namespace kirby
