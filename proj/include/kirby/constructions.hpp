#pragma once

// Canonical algebraic models of the standard building blocks: the one
// 1-handle/one 2-handle corks W_n and positrons, the plugs W_{m,n}, the
// linear plumbing chains C_p with their rational balls B_p, and the torus
// and fishtail neighborhoods. Parameters that only change the (out-of-model)
// diagram isotopy survive as labels.

#include "kirby/diagram.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace kirby {

struct BlockModel {
  HandleDecomposition hd;
  std::map<std::string, std::string> designated;  // role name -> component id
};

namespace detail {

inline std::string int_str(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace detail

// Mazur-type cork skeleton: dotted d, 0-framed partner k, lk(d,k) = 1.
inline BlockModel cork_w(const Int& n) {
  if (n < 1) throw error("cork_w: n must be >= 1");
  BlockModel b;
  b.hd.set_name("W_" + detail::int_str(n));
  b.hd.add_dotted("d");
  b.hd.add_framed("k", 0);
  b.hd.set_lk(0, 1, 1);
  b.designated = {{"dot", "d"}, {"partner", "k"}};
  return b;
}

// Positron: same algebraic skeleton as cork_w, kept as a distinct label.
inline BlockModel positron(const Int& n) {
  if (n < 1) throw error("positron: n must be >= 1");
  BlockModel b = cork_w(n);
  b.hd.set_name("Wbar_" + detail::int_str(n));
  return b;
}

// Plug skeleton: dotted d; -m-framed meridian a with lk(a,d) = 1; 0-framed
// partner b with lk(b,d) = n and lk(a,b) = 1.
inline BlockModel plug_w(const Int& m, const Int& n) {
  if (m < 1 || n < 1) throw error("plug_w: require m >= 1 and n >= 1");
  BlockModel b;
  b.hd.set_name("W_" + detail::int_str(m) + "_" + detail::int_str(n));
  b.hd.add_dotted("d");
  b.hd.add_framed("a", -m);
  b.hd.add_framed("b", 0);
  b.hd.set_lk(0, 1, 1);  // d-a
  b.hd.set_lk(0, 2, n);  // d-b
  b.hd.set_lk(1, 2, 1);  // a-b
  b.designated = {{"dot", "d"}, {"partner", "b"}, {"meridian", "a"}};
  return b;
}

// Linear plumbing chain with framings (-p-2, -2, ..., -2); boundary the lens
// space L(p^2, p-1).
inline BlockModel cp_chain(const Int& p) {
  if (p < 2) throw error("cp_chain: p must be >= 2");
  BlockModel b;
  b.hd.set_name("C_" + detail::int_str(p));
  const int count = to_int(p - 1);
  for (int i = 1; i <= count; ++i)
    b.hd.add_framed("c" + std::to_string(i), i == 1 ? Int(-p - 2) : Int(-2));
  for (int i = 1; i < count; ++i) b.hd.set_lk(i - 1, i, 1);
  b.designated = {{"end", "c1"}};
  return b;
}

// Rational ball with the same boundary as cp_chain(p): dotted D and a
// 2-handle K running p times over it. The 2-handle framing p-1 is a
// convention; no invariant in scope depends on it.
inline BlockModel bp_ball(const Int& p) {
  if (p < 2) throw error("bp_ball: p must be >= 2");
  BlockModel b;
  b.hd.set_name("B_" + detail::int_str(p));
  b.hd.add_dotted("D");
  b.hd.add_framed("K", p - 1);
  b.hd.set_lk(0, 1, p);
  b.designated = {{"dot", "D"}, {"partner", "K"}};
  return b;
}

// T^2 x B^2: two 1-handles and a 0-framed 2-handle, all algebraic linking 0.
inline BlockModel t2xb2_block() {
  BlockModel b;
  b.hd.set_name("T2xB2");
  b.hd.add_dotted("d1");
  b.hd.add_dotted("d2");
  b.hd.add_framed("t", 0);
  b.designated = {{"dot1", "d1"}, {"dot2", "d2"}, {"torus", "t"}};
  return b;
}

// Fishtail neighborhood: torus block plus a -1-framed vanishing cycle
// meeting the torus handle once. Algebraic model only; the vanishing-cycle
// linking is not determined by any invariant in scope.
inline BlockModel fishtail_block() {
  BlockModel b = t2xb2_block();
  b.hd.set_name("Fishtail");
  b.hd.add_framed("v", -1);
  b.hd.set_lk(*b.hd.index_of("v"), *b.hd.index_of("t"), 1);
  b.designated["vanishing"] = "v";
  return b;
}

struct ExternalComponent {
  std::string id;
  Int framing = 0;
  std::map<std::string, Int> links;  // other id -> linking number
};

// Union over the common 0-handle: add framed components with declared
// cross-linking. Links may reference existing components or earlier extras.
inline HandleDecomposition attach_external(
    HandleDecomposition hd, const std::vector<ExternalComponent>& extras) {
  for (const ExternalComponent& e : extras) {
    if (hd.has(e.id))
      throw error("attach_external: id '" + e.id + "' already exists");
    hd.add_framed(e.id, e.framing);
    int ei = *hd.index_of(e.id);
    for (const auto& [other, v] : e.links) {
      auto oi = hd.index_of(other);
      if (!oi) throw error("attach_external: unknown component '" + other + "'");
      if (*oi == ei)
        throw error("attach_external: self-linking is the framing");
      hd.set_lk(ei, *oi, v);
    }
  }
  return hd;
}

}  // namespace kirby
