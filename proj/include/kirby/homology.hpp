#pragma once

// Exact homological invariants of a handle decomposition. H1 is the cokernel
// of the dotted-framed linking map (Smith reduction), H2 the integer kernel
// of the framed-to-dotted boundary map, and the intersection form is the
// framed linking block restricted to that kernel.

#include "kirby/diagram.hpp"
#include "kirby/forms.hpp"
#include "kirby/linalg.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace kirby {

struct AbelianGroup {
  Int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, each divides the next

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

  std::string str() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
      os << "Z";
      first = false;
    } else if (free_rank > 1) {
      os << "Z^" << free_rank;
      first = false;
    }
    for (const Int& t : torsion) {
      if (!first) os << " + ";
      os << "Z/" << t;
      first = false;
    }
    return os.str();
  }
};

struct HomologySummary {
  Int euler = 0;
  AbelianGroup h1;
  int h2_rank = 0;
  SymMat form;  // intersection form on H2
  bool three_handle_warning = false;

  bool operator==(const HomologySummary& o) const {
    return euler == o.euler && h1 == o.h1 && h2_rank == o.h2_rank &&
           form == o.form;
  }
  bool operator!=(const HomologySummary& o) const { return !(*this == o); }
};

inline Int euler_characteristic(const HandleDecomposition& hd) {
  Int dotted = 0, framed = 0;
  for (const Component& c : hd.components())
    (c.kind == Kind::dotted ? dotted : framed) += 1;
  return hd.n0() - dotted + framed - hd.n3() + hd.n4();
}

// D[d][k] = lk(d, k), dotted rows, framed columns (component order).
inline Mat<Int> dotted_framed_matrix(const HandleDecomposition& hd) {
  auto ds = hd.dotted_indices();
  auto fs = hd.framed_indices();
  Mat<Int> m(int(ds.size()), int(fs.size()));
  for (size_t r = 0; r < ds.size(); ++r)
    for (size_t c = 0; c < fs.size(); ++c) m(int(r), int(c)) = hd.lk(ds[r], fs[c]);
  return m;
}

// Framed-block of the linking matrix, in component order.
inline SymMat framed_block(const HandleDecomposition& hd) {
  auto fs = hd.framed_indices();
  SymMat q(int(fs.size()));
  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = i; j < fs.size(); ++j)
      q.set(int(i), int(j), hd.lk(fs[i], fs[j]));
  return q;
}

inline AbelianGroup h1(const HandleDecomposition& hd) {
  Mat<Int> d = dotted_framed_matrix(hd);
  std::vector<Int> factors = invariant_factors(d);
  AbelianGroup g;
  g.free_rank = Int(d.rows()) - Int(factors.size());
  for (const Int& f : factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

inline HomologySummary homology(const HandleDecomposition& hd) {
  HomologySummary s;
  s.euler = euler_characteristic(hd);
  s.h1 = h1(hd);
  Mat<Int> d = dotted_framed_matrix(hd);
  Mat<Int> ker = kernel_basis(d);
  s.h2_rank = ker.cols();
  s.form = restrict_form(framed_block(hd), ker);
  s.three_handle_warning = hd.n3() > 0;
  return s;
}

inline Int form_determinant(const HandleDecomposition& hd) {
  if (!hd.dotted_indices().empty())
    throw error("form_determinant: decomposition has dotted components");
  return form_det(framed_block(hd));
}

}  // namespace kirby
