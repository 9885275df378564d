#pragma once

// The scriptable move engine: parsing of the one-move-per-line format and
// left-to-right execution with a per-move trace. Execution aborts on the
// first precondition failure; the trace covers every attempted move.

#include "kirby/homology.hpp"
#include "kirby/moves.hpp"
#include "kirby/surgery.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace kirby {

struct Move {
  enum class Op {
    slide,
    slide1,
    blowup,
    blowdown,
    cancel,
    dotswap,
    corktwist,
    plugtwist,
    rbd
  };
  Op op;
  std::vector<std::string> ids;
  int sign = 1;
  std::map<std::string, Int> lk_vector;  // blowup only
  std::string text;
};

struct MoveScript {
  std::vector<Move> moves;
};

namespace detail {

inline int parse_sign_token(const std::string& t, int line) {
  if (t == "+") return 1;
  if (t == "-") return -1;
  throw parse_error("expected + or -, got '" + t + "'", line);
}

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

}  // namespace detail

inline MoveScript parse_script(const std::string& text) {
  MoveScript script;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = detail::tokenize_line(raw);
    if (toks.empty()) continue;
    Move m;
    m.text = raw.substr(raw.find_first_not_of(" \t"));
    if (size_t h = m.text.find('#'); h != std::string::npos)
      m.text = m.text.substr(0, m.text.find_last_not_of(" \t", h ? h - 1 : 0) + 1);
    const std::string& kw = toks[0];
    if (kw == "slide" || kw == "slide1") {
      if (toks.size() != 5 || toks[2] != "over")
        throw parse_error("usage: " + kw + " <i> over <j> <+|->", line);
      m.op = kw == "slide" ? Move::Op::slide : Move::Op::slide1;
      m.ids = {toks[1], toks[3]};
      m.sign = detail::parse_sign_token(toks[4], line);
    } else if (kw == "blowup") {
      if (toks.size() < 3)
        throw parse_error("usage: blowup <id> <+|-> [lk <id>:<int> ...]",
                          line);
      m.op = Move::Op::blowup;
      m.ids = {toks[1]};
      m.sign = detail::parse_sign_token(toks[2], line);
      for (size_t i = 3; i < toks.size(); i += 2) {
        if (toks[i] != "lk" || i + 1 >= toks.size())
          throw parse_error("usage: blowup <id> <+|-> [lk <id>:<int> ...]",
                            line);
        const std::string& pair = toks[i + 1];
        size_t colon = pair.rfind(':');
        if (colon == std::string::npos || colon == 0)
          throw parse_error("expected <id>:<int>, got '" + pair + "'", line);
        std::string id = pair.substr(0, colon);
        if (m.lk_vector.count(id))
          throw parse_error("duplicate lk entry for '" + id + "'", line);
        m.lk_vector[id] = detail::parse_int_token(pair.substr(colon + 1), line);
      }
    } else if (kw == "blowdown" || kw == "dotswap") {
      if (toks.size() != 2) throw parse_error("usage: " + kw + " <id>", line);
      m.op = kw == "blowdown" ? Move::Op::blowdown : Move::Op::dotswap;
      m.ids = {toks[1]};
    } else if (kw == "cancel" || kw == "corktwist" || kw == "plugtwist") {
      if (toks.size() != 3)
        throw parse_error("usage: " + kw + " <d> <k>", line);
      m.op = kw == "cancel" ? Move::Op::cancel
             : kw == "corktwist" ? Move::Op::corktwist
                                 : Move::Op::plugtwist;
      m.ids = {toks[1], toks[2]};
    } else if (kw == "rbd") {
      if (toks.size() != 2)
        throw parse_error("usage: rbd <id1,...,idn>", line);
      m.op = Move::Op::rbd;
      m.ids = detail::split_csv(toks[1]);
      if (m.ids.empty()) throw parse_error("rbd: empty chain", line);
    } else {
      throw parse_error("unknown move '" + kw + "'", line);
    }
    script.moves.push_back(std::move(m));
  }
  return script;
}

inline HandleDecomposition apply_move(HandleDecomposition hd, const Move& m) {
  switch (m.op) {
    case Move::Op::slide:
      return slide_2_over_2(std::move(hd), m.ids[0], m.ids[1], m.sign);
    case Move::Op::slide1:
      return slide_2_over_1(std::move(hd), m.ids[0], m.ids[1], m.sign);
    case Move::Op::blowup:
      return blow_up(std::move(hd), m.ids[0], m.sign, m.lk_vector);
    case Move::Op::blowdown:
      return blow_down(std::move(hd), m.ids[0]);
    case Move::Op::cancel:
      return cancel_pair(std::move(hd), m.ids[0], m.ids[1]);
    case Move::Op::dotswap:
      return dot_zero_swap(std::move(hd), m.ids[0]);
    case Move::Op::corktwist:
      return cork_twist(std::move(hd), m.ids[0], m.ids[1]);
    case Move::Op::plugtwist:
      return plug_twist(std::move(hd), m.ids[0], m.ids[1]);
    case Move::Op::rbd:
      return rational_blowdown(std::move(hd), m.ids);
  }
  throw error("apply_move: unreachable");
}

struct TraceEntry {
  int move_index = 0;
  std::string move_text;
  int components = 0;  // after the attempt
  Int euler = 0;
  bool ok = true;
  std::string violation;  // nonempty iff !ok
};

struct Trace {
  std::vector<TraceEntry> entries;
};

struct ApplyResult {
  HandleDecomposition hd;  // state after the last successful move
  Trace trace;
  bool ok = true;
  int failed_index = -1;
  std::string error_message;
};

inline ApplyResult apply_script(HandleDecomposition hd,
                                const MoveScript& script) {
  ApplyResult res;
  for (size_t i = 0; i < script.moves.size(); ++i) {
    const Move& m = script.moves[i];
    TraceEntry e;
    e.move_index = int(i);
    e.move_text = m.text;
    try {
      hd = apply_move(hd, m);  // argument copied; hd intact if the move fails
      e.components = hd.size();
      e.euler = euler_characteristic(hd);
      res.trace.entries.push_back(std::move(e));
    } catch (const error& err) {
      e.components = hd.size();
      e.euler = euler_characteristic(hd);
      e.ok = false;
      e.violation = err.what();
      res.trace.entries.push_back(std::move(e));
      res.ok = false;
      res.failed_index = int(i);
      res.error_message = err.what();
      break;
    }
  }
  res.hd = std::move(hd);
  return res;
}

}  // namespace kirby
