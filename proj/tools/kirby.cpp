// kirby -- command-line surface for the handle-calculus engine.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include "kirby/kirby.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace kirby;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw error("cannot write '" + out_path + "'");
  out << text;
}

HandleDecomposition load_diagram(const std::string& path) {
  HandleDecomposition hd = parse_diagram(read_input(path));
  ValidationReport rep = validate(hd);
  if (!rep.ok) {
    std::ostringstream os;
    os << "invalid diagram:";
    for (const Violation& v : rep.violations) {
      os << " " << v.invariant;
      for (const std::string& id : v.ids) os << " " << id;
      os << ";";
    }
    throw error(os.str());
  }
  return hd;
}

std::string format_plain_matrix(const Mat<Int>& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ';';
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
  }
  return os.str();
}

void print_form_lines(std::ostream& os, const SymMat& q) {
  os << "form " << format_sym_matrix(q) << "\n";
  os << "parity " << (parity(q) == Parity::even ? "even" : "odd") << "\n";
  Int d = form_det(q);
  if (q.n() > 0 && d == 0)
    os << "signature degenerate\n";
  else
    os << "signature " << signature(q) << "\n";
  os << "det " << d << "\n";
}

void print_summary(std::ostream& os, const HomologySummary& s,
                   const std::optional<std::string>& name) {
  if (name) os << "manifold " << *name << "\n";
  os << "euler " << s.euler << "\n";
  os << "h1 " << s.h1.str() << "\n";
  os << "h2_rank " << s.h2_rank << "\n";
  print_form_lines(os, s.form);
  if (s.three_handle_warning)
    os << "warning 3-handles present; form computed from the 2-handle "
          "kernel\n";
}

int cmd_invariants(const std::string& file) {
  HandleDecomposition hd = load_diagram(file);
  print_summary(std::cout, homology(hd), hd.name());
  return 0;
}

int cmd_apply(const std::string& file, const std::string& script_file,
              const std::string& out) {
  HandleDecomposition hd = load_diagram(file);
  MoveScript script = parse_script(read_input(script_file));
  ApplyResult res = apply_script(std::move(hd), script);
  for (const TraceEntry& e : res.trace.entries) {
    std::cerr << "[" << e.move_index << "] " << e.move_text
              << " -> components=" << e.components << " euler=" << e.euler;
    if (!e.ok) std::cerr << " ERROR: " << e.violation;
    std::cerr << "\n";
  }
  if (!res.ok) {
    std::cerr << "script aborted at move " << res.failed_index << ": "
              << res.error_message << "\n";
    return 2;
  }
  write_output(out, serialize(res.hd));
  return 0;
}

struct CheckLine {
  std::string name;
  std::string a, b;
  bool match;
};

int cmd_homeo_check(const std::string& file_a, const std::string& file_b,
                    int budget_words) {
  HandleDecomposition ha = load_diagram(file_a);
  HandleDecomposition hb = load_diagram(file_b);
  HomologySummary sa = homology(ha), sb = homology(hb);
  std::vector<CheckLine> lines;
  auto add = [&](const std::string& n, const std::string& a,
                 const std::string& b) {
    lines.push_back({n, a, b, a == b});
  };
  std::ostringstream ea, eb;
  ea << sa.euler;
  eb << sb.euler;
  add("euler", ea.str(), eb.str());
  add("h1", sa.h1.str(), sb.h1.str());
  add("h2_rank", std::to_string(sa.h2_rank), std::to_string(sb.h2_rank));
  Int da = form_det(sa.form), db = form_det(sb.form);
  std::ostringstream das, dbs;
  das << da;
  dbs << db;
  add("det", das.str(), dbs.str());
  auto sig_str = [](const SymMat& q, const Int& d) {
    if (q.n() > 0 && d == 0) return std::string("degenerate");
    return std::to_string(signature(q));
  };
  add("signature", sig_str(sa.form, da), sig_str(sb.form, db));
  add("parity", parity(sa.form) == Parity::even ? "even" : "odd",
      parity(sb.form) == Parity::even ? "even" : "odd");
  bool ok = true;
  for (const CheckLine& l : lines) {
    std::cout << l.name << " " << l.a << " " << l.b << " "
              << (l.match ? "match" : "MISMATCH") << "\n";
    ok = ok && l.match;
  }
  CongruenceBudget budget;
  budget.word_length = budget_words;
  CongruenceVerdict v = congruent(sa.form, sb.form, budget);
  if (v.equivalent()) {
    std::cout << "congruence equivalent witness "
              << format_plain_matrix(v.witness) << "\n";
  } else if (v.distinct()) {
    std::cout << "congruence distinct " << v.invariant << " (" << v.detail
              << ")\n";
    ok = false;
  } else {
    std::cout << "congruence unknown (budget exhausted)\n";
    ok = false;
  }
  std::cout << "necessary conditions " << (ok ? "pass" : "fail") << "\n";
  return ok ? 0 : 1;
}

int cmd_construct(const std::string& what, const std::vector<Int>& args,
                  const std::string& out) {
  BlockModel b;
  if (what == "cork")
    b = cork_w(args.at(0));
  else if (what == "positron")
    b = positron(args.at(0));
  else if (what == "plug")
    b = plug_w(args.at(0), args.at(1));
  else if (what == "cp")
    b = cp_chain(args.at(0));
  else if (what == "bp")
    b = bp_ball(args.at(0));
  else if (what == "t2")
    b = t2xb2_block();
  else if (what == "fishtail")
    b = fishtail_block();
  else
    throw error("unknown block '" + what + "'");
  write_output(out, serialize(b.hd));
  return 0;
}

int cmd_rbd(const std::string& file, const std::string& chain_csv,
            const std::string& out) {
  HandleDecomposition hd = load_diagram(file);
  std::vector<std::string> chain = detail::split_csv(chain_csv);
  write_output(out, serialize(rational_blowdown(std::move(hd), chain)));
  return 0;
}

int cmd_phi(const Int& p) {
  Mat<Int> m = phi_matrix(p);
  std::cout << format_plain_matrix(m) << "\n";
  std::cout << "det " << det_bareiss(m) << "\n";
  std::cout << "inverse " << format_plain_matrix(phi_inverse(p)) << "\n";
  return 0;
}

kirby::CurveClass parse_curve_triple(const std::string& spec,
                                     std::string& id_out) {
  size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw error("curve spec must be <id>:<a>,<b>,<g>");
  id_out = spec.substr(0, colon);
  auto parts = detail::split_csv(spec.substr(colon + 1));
  if (parts.size() != 3) throw error("curve spec must be <id>:<a>,<b>,<g>");
  kirby::CurveClass c;
  for (int i = 0; i < 3; ++i) c[i] = detail::parse_int_token(parts[i], 0);
  return c;
}

int cmd_logt(const std::string& file, const std::string& block_csv,
             const Int& p, const std::vector<std::string>& curve_specs,
             const std::string& out) {
  HandleDecomposition hd = load_diagram(file);
  auto block = detail::split_csv(block_csv);
  if (block.size() != 3) throw error("--block needs d1,d2,t");
  std::map<std::string, CurveClass> curves;
  for (const std::string& spec : curve_specs) {
    std::string id;
    CurveClass c = parse_curve_triple(spec, id);
    curves[id] = c;
  }
  LogTransformResult res =
      log_transform(std::move(hd), block[0], block[1], block[2], p, curves);
  for (const auto& [id, c] : res.curves)
    std::cerr << "curve " << id << " -> " << c[0] << "," << c[1] << ","
              << c[2] << "\n";
  write_output(out, serialize(res.hd));
  return 0;
}

int cmd_tb(const std::string& file) {
  LegendrianFront f = parse_front(read_input(file));
  FrontAnalysis a = analyze_front(f);
  std::cout << "components " << a.components << "\n";
  for (int c = 0; c < a.components; ++c) {
    const ClassicalInvariants& inv = a.per_component[c];
    std::cout << "component " << (c + 1) << " tb " << inv.tb << " rot "
              << inv.rot << " writhe " << inv.writhe << " cusps " << inv.cusps
              << "\n";
  }
  return 0;
}

int cmd_stein(const std::string& file) {
  std::istringstream in(read_input(file));
  std::vector<SteinAssignment> handles;
  std::string raw;
  std::string front_text;
  int line = 0;
  auto flush = [&](SteinAssignment* current) {
    if (!current) return;
    current->front = parse_front(front_text);
    handles.push_back(*current);
    front_text.clear();
  };
  std::optional<SteinAssignment> current;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = detail::tokenize_line(raw);
    if (toks.empty()) continue;
    if (toks[0] == "handle") {
      if (toks.size() != 3)
        throw parse_error("usage: handle <name> <framing>", line);
      flush(current ? &*current : nullptr);
      current = SteinAssignment{};
      current->name = toks[1];
      current->framing = detail::parse_int_token(toks[2], line);
    } else {
      if (!current)
        throw parse_error("front events must follow a handle line", line);
      front_text += raw + "\n";
    }
  }
  flush(current ? &*current : nullptr);
  if (handles.empty()) throw error("stein: no handles in input");
  SteinReport rep = stein_check(handles);
  for (const SteinHandleResult& h : rep.handles)
    std::cout << "handle " << h.name << " tb " << h.tb << " framing "
              << h.framing << " margin " << h.margin << " "
              << (h.pass ? "pass" : "FAIL") << "\n";
  std::cout << "stein " << (rep.all_pass ? "pass" : "fail") << "\n";
  return rep.all_pass ? 0 : 1;
}

// --------------------------------------------------------------------------
// verify-paper: the shippable regression over the cork/plug family, the
// enlargement form equivalences, phi matrices and the chain/ball blocks.

struct Verifier {
  int failures = 0;
  void check(bool ok, const std::string& name, const std::string& detail) {
    std::cout << (ok ? "pass " : "FAIL ") << name;
    if (!detail.empty()) std::cout << " " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

std::vector<std::string> chain_ids(const BlockModel& c) {
  std::vector<std::string> ids;
  for (const Component& comp : c.hd.components()) ids.push_back(comp.id);
  return ids;
}

SymMat expected_plug_form_before(const Int& m, const Int& n) {
  SymMat q(2);
  q.set(0, 0, -2 * n - m * n * n);
  q.set(0, 1, 1);
  q.set(1, 1, -1);
  return q;
}

SymMat expected_plug_form_after(const Int& m, const Int& n) {
  SymMat q(2);
  q.set(0, 0, -2 * n - m * n * n);
  q.set(0, 1, -1 - m * n);
  q.set(1, 1, -1 - m);
  return q;
}

HandleDecomposition plug_ambient(const Int& m, const Int& n, bool corrupt) {
  BlockModel plug = plug_w(m, n);
  if (corrupt) {
    int a = *plug.hd.index_of(plug.designated.at("meridian"));
    plug.hd.set_framing(a, plug.hd.comp(a).framing + 1);
  }
  ExternalComponent e;
  e.id = "e";
  e.framing = -1;
  e.links = {{plug.designated.at("partner"), 1}};
  return attach_external(plug.hd, {e});
}

int cmd_verify_paper(const Int& m_max, const Int& n_max, int budget_words,
                     bool corrupt) {
  Verifier v;
  CongruenceBudget budget;
  budget.word_length = budget_words;

  for (Int m = 1; m <= m_max; ++m)
    for (Int n = 2; n <= n_max; ++n) {
      std::string at = "m=" + detail::to_str(m) + " n=" + detail::to_str(n);
      HandleDecomposition x = plug_ambient(m, n, corrupt);
      HandleDecomposition y = plug_twist(x, "d", "b");
      HomologySummary sx = homology(x), sy = homology(y);
      v.check(sx.form == expected_plug_form_before(m, n), "plug-form-before",
              at);
      v.check(sy.form == expected_plug_form_after(m, n), "plug-form-after",
              at);
      v.check(sx.h1.trivial() && sy.h1.trivial(), "plug-h1-trivial", at);
      CongruenceVerdict cv = congruent(sx.form, sy.form, budget);
      v.check(cv.distinct() && cv.invariant == "represents(-1)",
              "plug-forms-distinct", at);
      RepResult r1 = represents(sx.form, -1);
      RepResult r2 = represents(sy.form, -1);
      v.check(r1.vec.has_value() && r2.certified && !r2.vec.has_value(),
              "plug-represents-minus-one", at);

      // enlargement forms, both isomorphic to diag(1,-1,-1)
      SymMat w1(3), w2(3);
      w1.set(0, 0, -1);
      w1.set(1, 1, -m);
      w1.set(1, 2, 1);
      Int a = -2 * n - n * n * m;
      w2.set(0, 0, a);
      w2.set(0, 1, 1);
      w2.set(0, 2, 1);
      w2.set(2, 2, -1);
      SymMat target = diag_form({1, -1, -1});
      for (auto* q : {&w1, &w2}) {
        CongruenceVerdict ev = congruent(*q, target, budget);
        v.check(ev.equivalent() &&
                    verify_congruence_witness(*q, target, ev.witness),
                "enlargement-diag", at);
      }
    }

  // stabilization parity dichotomy
  for (Int m = 1; m <= std::max(m_max, Int(10)); ++m) {
    SymMat q(2);
    q.set(0, 1, 1);
    q.set(1, 1, -m);
    SymMat hyp(2);
    hyp.set(0, 1, 1);
    SymMat odd = diag_form({1, -1});
    CongruenceVerdict ev = congruent(q, m % 2 == 0 ? hyp : odd, budget);
    CongruenceVerdict xv = congruent(q, m % 2 == 0 ? odd : hyp, budget);
    v.check(ev.equivalent() && xv.distinct(), "stabilization-parity",
            "m=" + detail::to_str(m));
  }

  // phi matrices
  bool phi_ok = true;
  for (Int p = 0; p <= 50; ++p) {
    Mat<Int> f = phi_matrix(p);
    if (det_bareiss(f) != 1) phi_ok = false;
    if (p <= 10) {
      Mat<Int> want(3, 3);
      want(0, 0) = 1;
      want(1, 2) = 1;
      want(2, 1) = -1;
      want(2, 2) = p;
      if (f != want) phi_ok = false;
    }
  }
  v.check(phi_ok, "phi-matrix", "p=0..50");

  // chains and rational balls
  for (Int p = 2; p <= 12; ++p) {
    std::string at = "p=" + detail::to_str(p);
    BlockModel c = cp_chain(p);
    HomologySummary sc = homology(c.hd);
    Int d = form_determinant(c.hd);
    bool neg_def = signature(sc.form) == -(to_int(p) - 1);
    v.check(neg_def && t_abs(d) == p * p && sc.euler == p, "cp-chain", at);
    BlockModel b = bp_ball(p);
    HomologySummary sb = homology(b.hd);
    bool bp_ok = sb.h1.free_rank == 0 && sb.h1.torsion.size() == 1 &&
                 sb.h1.torsion[0] == p && sb.h2_rank == 0 && sb.euler == 1;
    v.check(bp_ok, "bp-ball", at);
    HandleDecomposition rb = rational_blowdown(c.hd, chain_ids(c));
    HomologySummary sr = homology(rb);
    bool deltas = sr.euler - sc.euler == -(p - 1) &&
                  sc.h2_rank - sr.h2_rank == to_int(p) - 1 &&
                  sr.h2_rank == 0;
    v.check(deltas && sr == sb, "rbd-deltas", at);
  }

  // move-script replay of the blow-down procedure, p = 2 and 3
  {
    BlockModel c2 = cp_chain(2);
    MoveScript s2 = parse_script(
        "blowup u +\nslide c1 over u +\nslide c1 over u +\ndotswap c1\n");
    ApplyResult r2 = apply_script(c2.hd, s2);
    HandleDecomposition direct2 = rational_blowdown(c2.hd, {"c1"});
    v.check(r2.ok && homology(r2.hd) == homology(direct2), "rbd-replay",
            "p=2");
    BlockModel c3 = cp_chain(3);
    MoveScript s3 = parse_script(
        "blowup u +\nslide c1 over u +\nslide c1 over u +\nblowdown c1\n"
        "slide u over c2 -\ndotswap u\n");
    ApplyResult r3 = apply_script(c3.hd, s3);
    HandleDecomposition direct3 = rational_blowdown(c3.hd, {"c1", "c2"});
    v.check(r3.ok && homology(r3.hd) == homology(direct3), "rbd-replay",
            "p=3");
  }

  std::cout << (v.failures == 0 ? "verify-paper pass" : "verify-paper FAIL")
            << "\n";
  return v.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic Kirby calculus on framed-link linking data"};
  app.require_subcommand(1);

  std::string file, file_b, out, script_file, matrix_a, matrix_b, chain_csv,
      block_csv, target_str;
  std::vector<std::string> curve_specs, range_specs;
  std::string bound_str = "8";
  int budget_words = 12;
  long long p_arg = 0, n_arg = 1, m_arg = 1;

  auto* inv = app.add_subcommand("invariants", "print homology invariants");
  inv->add_option("file", file, "diagram file or -")->required();

  auto* ap = app.add_subcommand("apply", "apply a move script");
  ap->add_option("file", file)->required();
  ap->add_option("script", script_file)->required();
  ap->add_option("-o,--output", out, "output file (default stdout)");

  auto* hc = app.add_subcommand("homeo-check",
                                "compare homeomorphism necessary conditions");
  hc->add_option("fileA", file)->required();
  hc->add_option("fileB", file_b)->required();
  hc->add_option("--budget", budget_words, "congruence word-length budget");

  auto* form = app.add_subcommand("form", "symmetric form utilities");
  form->require_subcommand(1);
  auto* fsig = form->add_subcommand("sig", "signature of a form");
  fsig->add_option("matrix", matrix_a)->required();
  auto* fpar = form->add_subcommand("parity", "parity of a form");
  fpar->add_option("matrix", matrix_a)->required();
  auto* feq = form->add_subcommand("equiv", "decide integral congruence");
  feq->add_option("matrixA", matrix_a)->required();
  feq->add_option("matrixB", matrix_b)->required();
  feq->add_option("--budget", budget_words);
  auto* frep = form->add_subcommand("represents", "represent a value");
  frep->add_option("matrix", matrix_a)->required();
  frep->add_option("target", target_str)->required();
  frep->add_option("--bound", bound_str, "search radius (indefinite forms)");

  auto* con = app.add_subcommand("construct", "emit a canonical block");
  con->require_subcommand(1);
  con->fallthrough();
  auto* c_cork = con->add_subcommand("cork", "cork W_n");
  c_cork->add_option("n", n_arg)->required();
  auto* c_pos = con->add_subcommand("positron", "positron");
  c_pos->add_option("n", n_arg)->required();
  auto* c_plug = con->add_subcommand("plug", "plug W_{m,n}");
  c_plug->add_option("m", m_arg)->required();
  c_plug->add_option("n", n_arg)->required();
  auto* c_cp = con->add_subcommand("cp", "plumbing chain C_p");
  c_cp->add_option("p", p_arg)->required();
  auto* c_bp = con->add_subcommand("bp", "rational ball B_p");
  c_bp->add_option("p", p_arg)->required();
  auto* c_t2 = con->add_subcommand("t2", "torus block T^2 x B^2");
  auto* c_fish = con->add_subcommand("fishtail", "fishtail neighborhood");
  con->add_option("-o,--output", out);

  auto* rbd = app.add_subcommand("rbd", "rational blow-down of a chain");
  rbd->add_option("file", file)->required();
  rbd->add_option("chain", chain_csv, "comma-separated chain ids")->required();
  rbd->add_option("-o,--output", out);

  auto* phi = app.add_subcommand("phi", "torus boundary automorphism matrix");
  phi->add_option("p", p_arg)->required();

  auto* logt = app.add_subcommand("logt", "logarithmic transform bookkeeping");
  logt->add_option("file", file)->required();
  logt->add_option("--block", block_csv, "d1,d2,t ids")->required();
  logt->add_option("--p", p_arg, "multiplicity")->required();
  logt->add_option("--curve", curve_specs, "id:a,b,g metadata (repeatable)");
  logt->add_option("-o,--output", out);

  auto* tb = app.add_subcommand("tb", "classical invariants of a front");
  tb->add_option("file", file)->required();

  auto* stein = app.add_subcommand("stein", "Eliashberg framing criterion");
  stein->add_option("file", file)->required();

  auto* vp = app.add_subcommand("verify-paper",
                                "run the built-in verification suite");
  vp->add_option("--range", range_specs, "m:M n:N upper bounds");
  vp->add_option("--budget", budget_words);
  bool corrupt = false;
  vp->add_flag("--corrupt-fixture", corrupt)->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return cmd_invariants(file);
    if (ap->parsed()) return cmd_apply(file, script_file, out);
    if (hc->parsed()) return cmd_homeo_check(file, file_b, budget_words);
    if (form->parsed()) {
      if (fsig->parsed()) {
        std::cout << signature(parse_sym_matrix(matrix_a)) << "\n";
        return 0;
      }
      if (fpar->parsed()) {
        std::cout << (parity(parse_sym_matrix(matrix_a)) == Parity::even
                          ? "even"
                          : "odd")
                  << "\n";
        return 0;
      }
      if (feq->parsed()) {
        CongruenceBudget budget;
        budget.word_length = budget_words;
        CongruenceVerdict v = congruent(parse_sym_matrix(matrix_a),
                                        parse_sym_matrix(matrix_b), budget);
        if (v.equivalent()) {
          std::cout << "equivalent witness " << format_plain_matrix(v.witness)
                    << "\n";
          return 0;
        }
        if (v.distinct()) {
          std::cout << "distinct " << v.invariant << " (" << v.detail << ")\n";
          return 1;
        }
        std::cout << "unknown (budget exhausted)\n";
        return 1;
      }
      if (frep->parsed()) {
        SymMat q = parse_sym_matrix(matrix_a);
        Int target = kirby::detail::parse_int_token(target_str, 0);
        Int bound = kirby::detail::parse_int_token(bound_str, 0);
        RepResult r = represents(q, target, bound);
        if (r.vec) {
          std::cout << "vector";
          for (const Int& e : *r.vec) std::cout << " " << e;
          std::cout << "\n";
          return 0;
        }
        std::cout << (r.certified ? "none (certified)" : "none within bound")
                  << "\n";
        return 1;
      }
    }
    if (con->parsed()) {
      if (c_cork->parsed()) return cmd_construct("cork", {Int(n_arg)}, out);
      if (c_pos->parsed()) return cmd_construct("positron", {Int(n_arg)}, out);
      if (c_plug->parsed())
        return cmd_construct("plug", {Int(m_arg), Int(n_arg)}, out);
      if (c_cp->parsed()) return cmd_construct("cp", {Int(p_arg)}, out);
      if (c_bp->parsed()) return cmd_construct("bp", {Int(p_arg)}, out);
      if (c_t2->parsed()) return cmd_construct("t2", {}, out);
      if (c_fish->parsed()) return cmd_construct("fishtail", {}, out);
    }
    if (rbd->parsed()) return cmd_rbd(file, chain_csv, out);
    if (phi->parsed()) return cmd_phi(Int(p_arg));
    if (logt->parsed())
      return cmd_logt(file, block_csv, Int(p_arg), curve_specs, out);
    if (tb->parsed()) return cmd_tb(file);
    if (stein->parsed()) return cmd_stein(file);
    if (vp->parsed()) {
      Int m_max = 5, n_max = 5;
      for (const std::string& spec : range_specs) {
        if (spec.rfind("m:", 0) == 0)
          m_max = kirby::detail::parse_int_token(spec.substr(2), 0);
        else if (spec.rfind("n:", 0) == 0)
          n_max = kirby::detail::parse_int_token(spec.substr(2), 0);
        else
          throw error("bad --range spec '" + spec + "'");
      }
      return cmd_verify_paper(m_max, n_max, budget_words, corrupt);
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
