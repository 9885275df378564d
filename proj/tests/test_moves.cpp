#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace kirby;
using testutil::Rng;

namespace {

HandleDecomposition two_framed(long long fk, long long fa, long long l) {
  HandleDecomposition hd;
  hd.add_framed("k", fk);
  hd.add_framed("a", fa);
  hd.set_lk(0, 1, l);
  return hd;
}

}  // namespace

TEST_CASE("slide_2_over_2") {
  SECTION("unlinked slide over a 0-framed handle changes nothing but lk") {
    HandleDecomposition hd = two_framed(3, 0, 0);
    HandleDecomposition out = slide_2_over_2(hd, "k", "a", 1);
    REQUIRE(out.comp(0).framing == 3);
    REQUIRE(out.lk("k", "a") == 0);
  }
  SECTION("hand-checked congruence on the (0 1; 1 -4) block") {
    HandleDecomposition hd = two_framed(0, -4, 1);
    HandleDecomposition out = slide_2_over_2(hd, "k", "a", 1);
    REQUIRE(out.comp(*out.index_of("k")).framing == -2);
    REQUIRE(out.lk("k", "a") == -3);
    REQUIRE(out.comp(*out.index_of("a")).framing == -4);
  }
  SECTION("framed-block determinant is a slide invariant") {
    Rng rng(61);
    for (int it = 0; it < 100; ++it) {
      HandleDecomposition hd = testutil::random_hd(rng);
      auto framed = hd.framed_indices();
      if (framed.size() < 2) continue;
      Int before = form_det(framed_block(hd));
      int a = int(framed[it % framed.size()]);
      int b = int(framed[(it + 1) % framed.size()]);
      if (a == b) continue;
      HandleDecomposition out = slide_2_over_2(
          hd, hd.comp(a).id, hd.comp(b).id, it % 2 == 0 ? 1 : -1);
      REQUIRE(form_det(framed_block(out)) == before);
    }
  }
  SECTION("errors") {
    HandleDecomposition hd = two_framed(0, 0, 0);
    REQUIRE_THROWS_AS(slide_2_over_2(hd, "k", "k", 1), move_error);
    REQUIRE_THROWS_AS(slide_2_over_2(hd, "k", "nope", 1), move_error);
    REQUIRE_THROWS_AS(slide_2_over_2(hd, "k", "a", 2), move_error);
  }
}

TEST_CASE("slide_2_over_1") {
  HandleDecomposition hd;
  hd.add_framed("i", 2);
  hd.add_dotted("d");
  hd.set_lk(0, 1, 1);
  SECTION("single slide moves only the dotted linking") {
    HandleDecomposition out = slide_2_over_1(hd, "i", "d", -1);
    REQUIRE(out.lk("i", "d") == 0);
    REQUIRE(out.comp(0).framing == 2);
  }
  SECTION("inverse pair") {
    HandleDecomposition out =
        slide_2_over_1(slide_2_over_1(hd, "i", "d", 1), "i", "d", -1);
    REQUIRE(out == hd);
  }
  SECTION("cork block slide changes H1 to Z/2") {
    HandleDecomposition cork = cork_w(1).hd;
    HandleDecomposition out = slide_2_over_1(cork, "k", "d", 1);
    REQUIRE(out.lk("k", "d") == 2);
    REQUIRE(h1(out) == AbelianGroup{0, {2}});
  }
  SECTION("kind errors") {
    REQUIRE_THROWS_AS(slide_2_over_1(hd, "d", "i", 1), move_error);
  }
}

TEST_CASE("blow_up") {
  SECTION("disjoint blow-up of the four-ball") {
    HandleDecomposition out = blow_up(HandleDecomposition{}, "e", -1);
    REQUIRE(out.size() == 1);
    REQUIRE(out.comp(0).framing == -1);
    REQUIRE(euler_characteristic(out) == 2);
  }
  SECTION("blow_up then blow_down is the identity") {
    Rng rng(67);
    for (int it = 0; it < 200; ++it) {
      HandleDecomposition hd = testutil::random_hd(rng);
      std::map<std::string, Int> v;
      for (int f : hd.framed_indices())
        v[hd.comp(f).id] = testutil::rand_int(rng, -3, 3);
      int sign = it % 2 == 0 ? 1 : -1;
      HandleDecomposition up = blow_up(hd, "fresh", sign, v);
      REQUIRE(euler_characteristic(up) == euler_characteristic(hd) + 1);
      REQUIRE(blow_down(up, "fresh") == hd);
    }
  }
  SECTION("blow-up on the chain end realizes the expected signature") {
    BlockModel c = cp_chain(5);
    HandleDecomposition out = blow_up(c.hd, "e", -1, {{"c1", 1}});
    HomologySummary s = homology(out);
    REQUIRE(s.h2_rank == 5);
    REQUIRE(signature(s.form) == -5);
  }
  SECTION("errors") {
    HandleDecomposition cork = cork_w(1).hd;
    REQUIRE_THROWS_AS(blow_up(cork, "d", 1), move_error);  // id collision
    REQUIRE_THROWS_AS(blow_up(cork, "e", 1, {{"d", 1}}),
                      move_error);  // dotted in v
  }
}

TEST_CASE("blow_down") {
  SECTION("single -1-framed unknot blows down to nothing") {
    HandleDecomposition hd;
    hd.add_framed("u", -1);
    REQUIRE(blow_down(hd, "u") == HandleDecomposition{});
  }
  SECTION("hand-checked transformations") {
    HandleDecomposition hd;
    hd.add_framed("u", -1);
    hd.add_framed("k", 0);
    hd.set_lk(0, 1, 1);
    HandleDecomposition out = blow_down(hd, "u");
    REQUIRE(out.size() == 1);
    REQUIRE(out.comp(0).framing == 1);  // f' = 0 - (-1)*1^2

    HandleDecomposition hd2;
    hd2.add_framed("u", 1);
    hd2.add_framed("k", 0);
    hd2.set_lk(0, 1, 2);
    HandleDecomposition out2 = blow_down(hd2, "u");
    REQUIRE(out2.comp(0).framing == -4);  // f' = 0 - (+1)*4
  }
  SECTION("closed form equals the slide-then-delete replay") {
    Rng rng(71);
    for (int it = 0; it < 200; ++it) {
      HandleDecomposition hd = testutil::random_hd(rng);
      int sign = it % 2 == 0 ? 1 : -1;
      std::map<std::string, Int> v;
      for (int f : hd.framed_indices())
        v[hd.comp(f).id] = testutil::rand_int(rng, -3, 3);
      HandleDecomposition up = blow_up(hd, "u", sign, v);
      // replay: slide every framed handle over u until it unlinks, delete u
      HandleDecomposition replay = up;
      for (int f : replay.framed_indices()) {
        const std::string id = replay.comp(f).id;
        if (id == "u") continue;
        Int t = -replay.lk(replay.require(id), replay.require("u")) * sign;
        int s = t < 0 ? -1 : 1;
        for (Int c = 0; c < t_abs(t); ++c)
          replay = slide_2_over_2(replay, id, "u", s);
        REQUIRE(replay.lk(replay.require(id), replay.require("u")) == 0);
      }
      replay.remove(*replay.index_of("u"));
      REQUIRE(blow_down(up, "u") == replay);
    }
  }
  SECTION("errors") {
    HandleDecomposition hd;
    hd.add_framed("u", 2);
    REQUIRE_THROWS_AS(blow_down(hd, "u"), move_error);
    HandleDecomposition hd2;
    hd2.add_framed("u", 1);
    hd2.add_dotted("d");
    hd2.set_lk(0, 1, 1);
    REQUIRE_THROWS_AS(blow_down(hd2, "u"), move_error);
  }
}

TEST_CASE("cancel_pair") {
  SECTION("cork block cancels to the four-ball") {
    REQUIRE(cancel_pair(cork_w(3).hd, "d", "k") == HandleDecomposition{});
  }
  SECTION("spectator handle is slid off the dot first") {
    HandleDecomposition hd;
    hd.add_dotted("d");
    hd.add_framed("k", 0);
    hd.add_framed("e", -1);
    hd.set_lk(0, 1, 1);  // lk(d,k)
    hd.set_lk(0, 2, 1);  // lk(d,e)
    HandleDecomposition out = cancel_pair(hd, "d", "k");
    REQUIRE(out.size() == 1);
    REQUIRE(out.comp(0).id == "e");
    REQUIRE(out.comp(0).framing == -1);
    REQUIRE(h1(out).trivial());
  }
  SECTION("euler characteristic is preserved") {
    Rng rng(73);
    for (int it = 0; it < 100; ++it) {
      HandleDecomposition hd = testutil::random_hd(rng);
      hd.add_dotted("cd");
      hd.add_framed("ck", testutil::rand_int(rng, -2, 2));
      hd.set_lk(*hd.index_of("cd"), *hd.index_of("ck"), it % 2 ? 1 : -1);
      for (int f : hd.framed_indices())
        if (hd.comp(f).id != "ck")
          hd.set_lk(f, *hd.index_of("cd"), testutil::rand_int(rng, -2, 2));
      Int chi = euler_characteristic(hd);
      HandleDecomposition out = cancel_pair(hd, "cd", "ck");
      REQUIRE(euler_characteristic(out) == chi);
      REQUIRE(h1(out) == h1(hd));
    }
  }
  SECTION("errors") {
    HandleDecomposition hd;
    hd.add_dotted("d");
    hd.add_framed("k", 0);
    hd.set_lk(0, 1, 2);
    REQUIRE_THROWS_AS(cancel_pair(hd, "d", "k"), move_error);
  }
}

TEST_CASE("dot_zero_swap") {
  SECTION("cork dot becomes the hyperbolic block") {
    HandleDecomposition out = dot_zero_swap(cork_w(1).hd, "d");
    REQUIRE(out.dotted_indices().empty());
    REQUIRE(homology(out).form == parse_sym_matrix("0,1;1,0"));
    REQUIRE(euler_characteristic(out) ==
            euler_characteristic(cork_w(1).hd) + 2);
  }
  SECTION("swap twice is the identity") {
    HandleDecomposition hd = cork_w(1).hd;
    REQUIRE(dot_zero_swap(dot_zero_swap(hd, "d"), "d") == hd);
  }
  SECTION("nonzero framing rejected") {
    HandleDecomposition hd;
    hd.add_framed("k", -1);
    REQUIRE_THROWS_AS(dot_zero_swap(hd, "k"), move_error);
  }
  SECTION("swap may not create dotted-dotted linking") {
    HandleDecomposition hd;
    hd.add_framed("k", 0);
    hd.add_dotted("d");
    hd.set_lk(0, 1, 1);
    REQUIRE_THROWS_AS(dot_zero_swap(hd, "k"), move_error);
  }
}

TEST_CASE("move scripts: parsing and trace semantics") {
  SECTION("empty script returns the input with an empty trace") {
    ApplyResult r = apply_script(cork_w(1).hd, parse_script(""));
    REQUIRE(r.ok);
    REQUIRE(r.trace.entries.empty());
    REQUIRE(r.hd == cork_w(1).hd);
  }
  SECTION("blowup/blowdown pair through the engine") {
    ApplyResult r = apply_script(
        cork_w(1).hd, parse_script("blowup e - lk k:2\nblowdown e\n"));
    REQUIRE(r.ok);
    REQUIRE(r.hd == cork_w(1).hd);
    REQUIRE(r.trace.entries.size() == 2);
    REQUIRE(r.trace.entries[0].euler == 2);
    REQUIRE(r.trace.entries[1].euler == 1);
  }
  SECTION("execution aborts at the first failing move") {
    ApplyResult r = apply_script(
        cork_w(1).hd, parse_script("dotswap d\nblowdown k\ndotswap d\n"));
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.failed_index == 1);
    REQUIRE(r.trace.entries.size() == 2);
    REQUIRE(r.trace.entries.back().ok == false);
    REQUIRE_FALSE(r.trace.entries.back().violation.empty());
    // state after the last successful move
    REQUIRE(r.hd == dot_zero_swap(cork_w(1).hd, "d"));
  }
  SECTION("grammar errors carry line numbers") {
    REQUIRE_THROWS_AS(parse_script("slide a b +\n"), parse_error);
    REQUIRE_THROWS_AS(parse_script("blowup e\n"), parse_error);
    REQUIRE_THROWS_AS(parse_script("blowup e + lk k\n"), parse_error);
    REQUIRE_THROWS_AS(parse_script("frobnicate x\n"), parse_error);
    REQUIRE_THROWS_AS(parse_script("slide a over b ?\n"), parse_error);
    try {
      parse_script("dotswap d\nnope\n");
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      REQUIRE(e.line == 2);
    }
  }
}

TEST_CASE("slide sequences preserve the congruence class of the block") {
  Rng rng(109);
  for (int it = 0; it < 40; ++it) {
    int n = std::uniform_int_distribution<int>(2, 4)(rng);
    HandleDecomposition hd;
    for (int i = 0; i < n; ++i)
      hd.add_framed("k" + std::to_string(i), testutil::rand_int(rng, -3, 3));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        hd.set_lk(i, j, testutil::rand_int(rng, -2, 2));
    SymMat before = framed_block(hd);
    for (int step = 0; step < 5; ++step) {
      int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
      int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
      if (a == b) continue;
      hd = slide_2_over_2(hd, hd.comp(a).id, hd.comp(b).id,
                          step % 2 ? 1 : -1);
    }
    SymMat after = framed_block(hd);
    CongruenceVerdict v = congruent(before, after);
    REQUIRE(v.equivalent());
    REQUIRE(verify_congruence_witness(before, after, v.witness));
  }
}

TEST_CASE("euler bookkeeping across random move sequences") {
  Rng rng(79);
  for (int it = 0; it < 100; ++it) {
    HandleDecomposition hd = testutil::random_hd(rng);
    Int chi = euler_characteristic(hd);
    int fresh = 0;
    for (int step = 0; step < 6; ++step) {
      int pick = std::uniform_int_distribution<int>(0, 3)(rng);
      auto framed = hd.framed_indices();
      auto dotted = hd.dotted_indices();
      if (pick == 0 && framed.size() >= 2) {
        int a = framed[std::uniform_int_distribution<size_t>(
            0, framed.size() - 1)(rng)];
        int b = framed[std::uniform_int_distribution<size_t>(
            0, framed.size() - 1)(rng)];
        if (a == b) continue;
        hd = slide_2_over_2(hd, hd.comp(a).id, hd.comp(b).id,
                            step % 2 ? 1 : -1);
        // slides preserve euler
      } else if (pick == 1 && !framed.empty() && !dotted.empty()) {
        hd = slide_2_over_1(hd, hd.comp(framed[0]).id, hd.comp(dotted[0]).id,
                            step % 2 ? 1 : -1);
      } else if (pick == 2) {
        hd = blow_up(hd, "f" + std::to_string(fresh++), step % 2 ? 1 : -1);
        chi += 1;
      } else if (pick == 3 && !dotted.empty()) {
        const std::string id = hd.comp(dotted[0]).id;
        hd = dot_zero_swap(hd, id);
        chi += 2;
      }
      REQUIRE(euler_characteristic(hd) == chi);
    }
  }
}
