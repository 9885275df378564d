#pragma once

// Slice-event encoding of Legendrian front projections and the classical
// invariants tb and rotation number. Crossing resolution in a front is
// forced (the strand of lesser slope is in front), so events carry no
// over/under data; crossing signs come from orientations alone.

#include "kirby/diagram.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace kirby {

enum class EventType { lcusp, rcusp, cross };

struct FrontEvent {
  EventType type;
  int pos = 0;  // strand position, bottom = 0
};

struct LegendrianFront {
  std::vector<FrontEvent> events;

  bool operator==(const LegendrianFront& o) const {
    if (events.size() != o.events.size()) return false;
    for (size_t i = 0; i < events.size(); ++i)
      if (events[i].type != o.events[i].type ||
          events[i].pos != o.events[i].pos)
        return false;
    return true;
  }
};

struct ClassicalInvariants {
  long long tb = 0;
  long long rot = 0;
  long long writhe = 0;
  long long cusps = 0;
};

struct FrontAnalysis {
  int components = 0;
  std::vector<ClassicalInvariants> per_component;
};

// Validates the front and computes per-component invariants. Components are
// traced through the cusp joins; each cusp reverses the horizontal
// direction, and a crossing between strands of one component contributes
// dir(lower)*dir(upper) to its writhe.
inline FrontAnalysis analyze_front(const LegendrianFront& front) {
  std::vector<int> left_mate, right_mate;
  std::vector<char> left_lower, right_lower;
  std::vector<std::pair<int, int>> crossings;  // (ascending, descending)
  std::vector<int> cur;
  auto new_segment = [&]() {
    left_mate.push_back(-1);
    right_mate.push_back(-1);
    left_lower.push_back(0);
    right_lower.push_back(0);
    return int(left_mate.size()) - 1;
  };
  for (size_t e = 0; e < front.events.size(); ++e) {
    const FrontEvent& ev = front.events[e];
    const int count = int(cur.size());
    switch (ev.type) {
      case EventType::lcusp: {
        if (ev.pos < 0 || ev.pos > count)
          throw error("front event " + std::to_string(e + 1) +
                      ": lcusp position out of range");
        int s1 = new_segment(), s2 = new_segment();
        left_mate[s1] = s2;
        left_mate[s2] = s1;
        left_lower[s1] = 1;
        cur.insert(cur.begin() + ev.pos, s1);
        cur.insert(cur.begin() + ev.pos + 1, s2);
        break;
      }
      case EventType::rcusp: {
        if (ev.pos < 0 || ev.pos + 1 >= count)
          throw error("front event " + std::to_string(e + 1) +
                      ": strand underflow at rcusp");
        int a = cur[ev.pos], b = cur[ev.pos + 1];
        right_mate[a] = b;
        right_mate[b] = a;
        right_lower[a] = 1;
        cur.erase(cur.begin() + ev.pos, cur.begin() + ev.pos + 2);
        break;
      }
      case EventType::cross: {
        if (ev.pos < 0 || ev.pos + 1 >= count)
          throw error("front event " + std::to_string(e + 1) +
                      ": strand underflow at crossing");
        crossings.emplace_back(cur[ev.pos], cur[ev.pos + 1]);
        std::swap(cur[ev.pos], cur[ev.pos + 1]);
        break;
      }
    }
  }
  if (!cur.empty()) throw error("front has open components");

  const int nseg = int(left_mate.size());
  std::vector<int> comp(nseg, -1), dir(nseg, 0);
  std::vector<long long> up, down, writhe;
  for (int s0 = 0; s0 < nseg; ++s0) {
    if (comp[s0] >= 0) continue;
    int c = int(up.size());
    up.push_back(0);
    down.push_back(0);
    writhe.push_back(0);
    int s = s0, d = 1;
    do {
      comp[s] = c;
      dir[s] = d;
      if (d == 1) {
        (right_lower[s] ? up[c] : down[c]) += 1;
        s = right_mate[s];
        d = -1;
      } else {
        (left_lower[s] ? up[c] : down[c]) += 1;
        s = left_mate[s];
        d = 1;
      }
    } while (!(s == s0 && d == 1));
  }
  for (const auto& [a, b] : crossings)
    if (comp[a] == comp[b]) writhe[comp[a]] += dir[a] * dir[b];

  FrontAnalysis out;
  out.components = int(up.size());
  for (int c = 0; c < out.components; ++c) {
    ClassicalInvariants inv;
    inv.cusps = up[c] + down[c];
    inv.writhe = writhe[c];
    inv.tb = inv.writhe - inv.cusps / 2;
    inv.rot = (down[c] - up[c]) / 2;
    out.per_component.push_back(inv);
  }
  return out;
}

inline ClassicalInvariants classical_invariants(const LegendrianFront& front) {
  FrontAnalysis a = analyze_front(front);
  if (a.components != 1)
    throw error("front has " + std::to_string(a.components) +
                " components; per-component invariants required");
  return a.per_component[0];
}

inline LegendrianFront parse_front(const std::string& text) {
  LegendrianFront f;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = detail::tokenize_line(raw);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw parse_error("usage: lcusp|rcusp|cross <pos>", line);
    FrontEvent ev;
    if (toks[0] == "lcusp")
      ev.type = EventType::lcusp;
    else if (toks[0] == "rcusp")
      ev.type = EventType::rcusp;
    else if (toks[0] == "cross")
      ev.type = EventType::cross;
    else
      throw parse_error("unknown event '" + toks[0] + "'", line);
    Int pos = detail::parse_int_token(toks[1], line);
    if (pos < 0) throw parse_error("position must be nonnegative", line);
    ev.pos = to_int(pos);
    f.events.push_back(ev);
  }
  try {
    analyze_front(f);
  } catch (const error& e) {
    throw parse_error(e.what(), line);
  }
  return f;
}

inline std::string serialize_front(const LegendrianFront& f) {
  std::ostringstream os;
  for (const FrontEvent& ev : f.events) {
    switch (ev.type) {
      case EventType::lcusp:
        os << "lcusp ";
        break;
      case EventType::rcusp:
        os << "rcusp ";
        break;
      case EventType::cross:
        os << "cross ";
        break;
    }
    os << ev.pos << "\n";
  }
  return os.str();
}

// Eliashberg criterion for a Stein 2-handle. The criterion circulates both
// as framing < tb and as framing <= tb - 1; over the integers these agree,
// and this module fixes the latter form.
struct SteinAssignment {
  std::string name;
  LegendrianFront front;
  Int framing = 0;
};

struct SteinHandleResult {
  std::string name;
  long long tb = 0;
  Int framing = 0;
  Int margin = 0;  // (tb - 1) - framing, >= 0 iff pass
  bool pass = false;
};

struct SteinReport {
  std::vector<SteinHandleResult> handles;
  bool all_pass = true;
};

inline SteinReport stein_check(const std::vector<SteinAssignment>& handles) {
  SteinReport rep;
  for (const SteinAssignment& h : handles) {
    SteinHandleResult r;
    r.name = h.name;
    r.tb = classical_invariants(h.front).tb;
    r.framing = h.framing;
    r.margin = Int(r.tb) - 1 - h.framing;
    r.pass = r.margin >= 0;
    if (!r.pass) rep.all_pass = false;
    rep.handles.push_back(std::move(r));
  }
  return rep;
}

}  // namespace kirby
