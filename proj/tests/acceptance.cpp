// Acceptance suite: one line per criterion, exact checks with per-criterion
// time budgets. Exits nonzero if any criterion fails. Criterion 8 runs the
// elimination kernels over machine integers on the full small-matrix space;
// the same templated code paths back the arbitrary-precision API.

#include "test_util.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace kirby;
using testutil::Rng;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    ok = false;
    if (note.empty()) note = why;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = secs < limit_seconds;
  bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion-%d %s (%.2fs, limit %.0fs)%s%s\n",
              pass ? "PASS" : "FAIL", id, name.c_str(), secs, limit_seconds,
              out.note.empty() ? "" : " -- ", out.note.c_str());
  std::fflush(stdout);
}

SymMat plug_before(const Int& m, const Int& n) {
  SymMat q(2);
  q.set(0, 0, -2 * n - m * n * n);
  q.set(0, 1, 1);
  q.set(1, 1, -1);
  return q;
}

SymMat plug_after(const Int& m, const Int& n) {
  SymMat q(2);
  q.set(0, 0, -2 * n - m * n * n);
  q.set(0, 1, -1 - m * n);
  q.set(1, 1, -1 - m);
  return q;
}

HandleDecomposition plug_ambient(const Int& m, const Int& n) {
  BlockModel plug = plug_w(m, n);
  ExternalComponent e{"e", -1, {{"b", 1}}};
  return attach_external(plug.hd, {e});
}

// --- criterion 8 helpers: closed-form minors over machine integers --------

long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// determinantal divisors d1, d2, d3 of an r x c matrix (r, c <= 3)
void dd_small(const Mat<long long>& m, long long d[3]) {
  const int r = m.rows(), c = m.cols();
  d[0] = d[1] = d[2] = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) d[0] = gcd_ll(d[0], m(i, j));
  for (int i0 = 0; i0 < r; ++i0)
    for (int i1 = i0 + 1; i1 < r; ++i1)
      for (int j0 = 0; j0 < c; ++j0)
        for (int j1 = j0 + 1; j1 < c; ++j1)
          d[1] = gcd_ll(d[1], m(i0, j0) * m(i1, j1) - m(i0, j1) * m(i1, j0));
  if (r == 3 && c == 3) {
    long long det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                    m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                    m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    d[2] = det < 0 ? -det : det;
  }
}

bool check_small_matrix(const Mat<long long>& m, Outcome& out) {
  long long d[3];
  dd_small(m, d);
  std::vector<long long> want;
  long long prev = 1;
  for (int k = 0; k < 3; ++k) {
    if (d[k] == 0) break;
    want.push_back(d[k] / prev);
    prev = d[k];
  }
  std::vector<long long> got = invariant_factors(m);
  if (got != want) {
    out.fail("invariant factors mismatch");
    return false;
  }
  Mat<long long> ker = kernel_basis(m);
  if (ker.cols() != m.cols() - int(got.size())) {
    out.fail("kernel dimension mismatch");
    return false;
  }
  for (int j = 0; j < ker.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      long long acc = 0;
      for (int k = 0; k < m.cols(); ++k) acc += m(i, k) * ker(k, j);
      if (acc != 0) {
        out.fail("kernel vector does not solve");
        return false;
      }
    }
  }
  if (ker.cols() > 0) {
    // primitivity: gcd of maximal minors of the basis equals 1
    long long kd[3];
    dd_small(ker, kd);
    if (kd[ker.cols() - 1] != 1) {
      out.fail("kernel basis not primitive");
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "plug intersection forms, exact", 1.0, [](Outcome& out) {
    for (Int m = 1; m <= 5; ++m)
      for (Int n = 2; n <= 5; ++n) {
        HandleDecomposition x = plug_ambient(m, n);
        if (homology(x).form != plug_before(m, n))
          out.fail("before-form mismatch");
        if (homology(plug_twist(x, "d", "b")).form != plug_after(m, n))
          out.fail("after-form mismatch");
      }
  });

  criterion(2, "plug forms distinct via represents(-1)", 5.0, [](Outcome& out) {
    for (Int m = 1; m <= 5; ++m)
      for (Int n = 2; n <= 5; ++n) {
        SymMat a = plug_before(m, n), b = plug_after(m, n);
        CongruenceVerdict v = congruent(a, b);
        if (!v.distinct() || v.invariant != "represents(-1)")
          out.fail("verdict not represents(-1)");
        RepResult ra = represents(a, -1);
        RepResult rb = represents(b, -1);
        if (!ra.vec || sym_eval(a, *ra.vec) != -1)
          out.fail("before-form must represent -1");
        if (rb.vec || !rb.certified)
          out.fail("after-form must certifiably not represent -1");
      }
  });

  criterion(3, "enlargement forms are diag(1,-1,-1)", 30.0, [](Outcome& out) {
    SymMat target = diag_form({1, -1, -1});
    for (Int m = 1; m <= 5; ++m)
      for (Int n = 2; n <= 5; ++n) {
        SymMat w1(3), w2(3);
        w1.set(0, 0, -1);
        w1.set(1, 1, -m);
        w1.set(1, 2, 1);
        w2.set(0, 0, -2 * n - n * n * m);
        w2.set(0, 1, 1);
        w2.set(0, 2, 1);
        w2.set(2, 2, -1);
        for (const SymMat* q : {&w1, &w2}) {
          CongruenceVerdict v = congruent(*q, target);
          if (!v.equivalent() ||
              !verify_congruence_witness(*q, target, v.witness))
            out.fail("missing verified witness");
        }
      }
  });

  criterion(4, "stabilization parity dichotomy", 5.0, [](Outcome& out) {
    SymMat hyp(2);
    hyp.set(0, 1, 1);
    SymMat odd = diag_form({1, -1});
    for (int m = 1; m <= 10; ++m) {
      SymMat q(2);
      q.set(0, 1, 1);
      q.set(1, 1, -m);
      const SymMat& want = m % 2 == 0 ? hyp : odd;
      const SymMat& other = m % 2 == 0 ? odd : hyp;
      CongruenceVerdict v = congruent(q, want);
      if (!v.equivalent() || !verify_congruence_witness(q, want, v.witness))
        out.fail("missing verified witness at m=" + std::to_string(m));
      if (!congruent(q, other).distinct())
        out.fail("wrong-parity target not rejected");
    }
  });

  criterion(5, "phi matrices", 1.0, [](Outcome& out) {
    for (Int p = 0; p <= 50; ++p) {
      Mat<Int> f = phi_matrix(p);
      if (det_bareiss(f) != 1) out.fail("det != 1");
      if (p <= 10) {
        Mat<Int> want(3, 3);
        want(0, 0) = 1;
        want(1, 2) = 1;
        want(2, 1) = -1;
        want(2, 2) = p;
        if (f != want) out.fail("matrix mismatch");
      }
    }
  });

  criterion(6, "chain and rational-ball invariants", 5.0, [](Outcome& out) {
    for (Int p = 2; p <= 12; ++p) {
      BlockModel c = cp_chain(p);
      HomologySummary sc = homology(c.hd);
      Int det = form_determinant(c.hd);
      Inertia in = inertia(sc.form);
      if (in.neg != sc.h2_rank || in.zero != 0)
        out.fail("chain not negative definite");
      if (signature(sc.form) != -(to_int(p) - 1)) out.fail("chain signature");
      if (t_abs(det) != p * p) out.fail("chain determinant");
      HomologySummary sb = homology(bp_ball(p).hd);
      if (!(sb.h1 == AbelianGroup{0, {p}}) || sb.h2_rank != 0)
        out.fail("ball homology");
      std::vector<std::string> ids;
      for (const Component& comp : c.hd.components()) ids.push_back(comp.id);
      HomologySummary sr = homology(rational_blowdown(c.hd, ids));
      if (sr.euler - sc.euler != -(p - 1)) out.fail("delta chi");
      if (sc.h2_rank - sr.h2_rank != to_int(p) - 1) out.fail("delta b2");
      int sig_before = signature(sc.form);
      int sig_after = 0;  // empty form
      if (sig_after - sig_before != to_int(p) - 1) out.fail("delta sigma");
    }
  });

  criterion(7, "involutions and inverse pairs on 1000 diagrams", 30.0,
            [](Outcome& out) {
    Rng rng(20240817);
    for (int it = 0; it < 1000; ++it) {
      HandleDecomposition hd = testutil::random_hd(rng, 6, 4);
      // blow_up then blow_down with a random linking vector
      std::map<std::string, Int> v;
      for (int f : hd.framed_indices())
        v[hd.comp(f).id] = testutil::rand_int(rng, -4, 4);
      int sign = it % 2 ? 1 : -1;
      if (blow_down(blow_up(hd, "u*", sign, v), "u*") != hd)
        out.fail("blow pair");
      // dotswap twice on a dotted component
      auto dotted = hd.dotted_indices();
      if (!dotted.empty()) {
        const std::string id = hd.comp(dotted[0]).id;
        if (dot_zero_swap(dot_zero_swap(hd, id), id) != hd)
          out.fail("dotswap pair");
      }
      // slide +/- pair
      auto framed = hd.framed_indices();
      if (framed.size() >= 2) {
        const std::string a = hd.comp(framed[0]).id;
        const std::string b = hd.comp(framed[1]).id;
        if (slide_2_over_2(slide_2_over_2(hd, a, b, 1), a, b, -1) != hd)
          out.fail("slide pair");
      }
      if (!framed.empty() && !dotted.empty()) {
        const std::string a = hd.comp(framed[0]).id;
        const std::string d = hd.comp(dotted[0]).id;
        if (slide_2_over_1(slide_2_over_1(hd, a, d, 1), a, d, -1) != hd)
          out.fail("slide1 pair");
      }
      // plant a cork pair and twist twice
      HandleDecomposition planted = hd;
      planted.add_dotted("d*");
      planted.add_framed("k*", 0);
      planted.set_lk(*planted.index_of("d*"), *planted.index_of("k*"),
                     it % 2 ? 1 : -1);
      for (int f : planted.framed_indices())
        if (planted.comp(f).id != "k*")
          planted.set_lk(f, *planted.index_of("d*"),
                         testutil::rand_int(rng, -4, 4));
      if (cork_twist(cork_twist(planted, "d*", "k*"), "k*", "d*") != planted)
        out.fail("cork twist involution");
      // plant a plug partner: 0-framed, linking the dot n times
      HandleDecomposition plugged = planted;
      plugged.set_lk(*plugged.index_of("d*"), *plugged.index_of("k*"),
                     testutil::rand_int(rng, -4, 4));
      if (plug_twist(plug_twist(plugged, "d*", "k*"), "k*", "d*") != plugged)
        out.fail("plug twist involution");
    }
  });

  criterion(8, "oracle equivalence on all small matrices", 120.0,
            [](Outcome& out) {
    long long sweep = 0;
    Rng rng(424242);
    for (int r = 1; r <= 3 && out.ok; ++r)
      for (int c = 1; c <= 3 && out.ok; ++c) {
        Mat<long long> m(r, c);
        const int cells = r * c;
        std::vector<int> digit(cells, 0);
        for (;;) {
          for (int i = 0; i < cells; ++i) m(i / c, i % c) = digit[i] - 3;
          ++sweep;
          if (!check_small_matrix(m, out)) break;
          // tie the machine-integer sweep to the full pipeline on a sample
          if (sweep % 4099 == 0) {
            HandleDecomposition hd;
            for (int i = 0; i < r; ++i) hd.add_dotted("d" + std::to_string(i));
            for (int j = 0; j < c; ++j) hd.add_framed("k" + std::to_string(j), 0);
            for (int i = 0; i < r; ++i)
              for (int j = 0; j < c; ++j) hd.set_lk(i, r + j, Int(m(i, j)));
            AbelianGroup g = h1(hd);
            long long d[3];
            dd_small(m, d);
            std::vector<Int> want_t;
            long long prev = 1;
            for (int k = 0; k < 3 && d[k] != 0; ++k) {
              if (d[k] / prev > 1) want_t.push_back(Int(d[k] / prev));
              prev = d[k];
            }
            int rank = 0;
            for (int k = 0; k < 3 && d[k] != 0; ++k) rank = k + 1;
            if (g.torsion != want_t || g.free_rank != Int(r - rank)) {
              out.fail("h1 pipeline mismatch");
              break;
            }
          }
          int i = cells - 1;
          while (i >= 0 && digit[i] == 6) digit[i--] = 0;
          if (i < 0) break;
          ++digit[i];
        }
      }
    if (out.ok && sweep != 7LL + 49 + 343 + 49 + 2401 + 117649 + 343 +
                               117649 + 40353607)
      out.fail("sweep did not cover the full space");
    // congruent agrees with word search on constructed pairs
    for (int it = 0; it < 300 && out.ok; ++it) {
      int n = 1 + it % 3;
      SymMat q = testutil::random_sym(rng, n, 8);
      Mat<Int> u = testutil::random_unimodular(rng, n, 3);
      SymMat q2 = restrict_form(q, u);
      CongruenceVerdict v = congruent(q, q2);
      if (!v.equivalent() || !verify_congruence_witness(q, q2, v.witness))
        out.fail("congruent missed a constructed equivalence");
    }
  });

  criterion(9, "legendrian invariants", 5.0, [](Outcome& out) {
    if (classical_invariants(parse_front("lcusp 0\nrcusp 0\n")).tb != -1)
      out.fail("saucer tb");
    LegendrianFront trefoil = parse_front(
        "lcusp 0\nlcusp 1\ncross 2\ncross 2\ncross 2\nrcusp 1\nrcusp 0\n");
    if (classical_invariants(trefoil).tb != 1) out.fail("trefoil tb");
    Rng rng(555);
    for (int it = 0; it < 200; ++it) {
      LegendrianFront f = testutil::random_knot_front(rng);
      ClassicalInvariants before = classical_invariants(f);
      int at = -1, q = 0;
      for (int tries = 0; tries < 64 && at < 0; ++tries) {
        int cand =
            std::uniform_int_distribution<int>(1, int(f.events.size()))(rng);
        int live = testutil::strand_count_before(f, cand);
        if (live > 0) {
          at = cand;
          q = std::uniform_int_distribution<int>(0, live - 1)(rng);
        }
      }
      if (at < 0) continue;
      testutil::insert_zigzag(f, at, q);
      if (classical_invariants(f).tb != before.tb - 1) {
        out.fail("zig-zag did not lower tb by one");
        break;
      }
    }
    LegendrianFront saucer = parse_front("lcusp 0\nrcusp 0\n");
    SteinReport rep = stein_check(
        {{"a", saucer, -2}, {"b", saucer, -1}, {"c", trefoil, 0}});
    if (!rep.handles[0].pass || rep.handles[1].pass || !rep.handles[2].pass)
      out.fail("stein boundary cases");
  });

  criterion(10, "script replay matches direct rational blow-down", 5.0,
            [](Outcome& out) {
    BlockModel c2 = cp_chain(2);
    ApplyResult r2 = apply_script(
        c2.hd, parse_script("blowup u +\nslide c1 over u +\n"
                            "slide c1 over u +\ndotswap c1\n"));
    if (!r2.ok || homology(r2.hd) != homology(rational_blowdown(c2.hd, {"c1"})))
      out.fail("p=2 replay mismatch");
    BlockModel c3 = cp_chain(3);
    ApplyResult r3 = apply_script(
        c3.hd, parse_script("blowup u +\nslide c1 over u +\nslide c1 over u "
                            "+\nblowdown c1\nslide u over c2 -\ndotswap u\n"));
    if (!r3.ok ||
        homology(r3.hd) != homology(rational_blowdown(c3.hd, {"c1", "c2"})))
      out.fail("p=3 replay mismatch");
  });

  if (failures == 0)
    std::printf("acceptance: all criteria pass\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
