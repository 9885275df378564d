#pragma once

// Handle decompositions as framed-link linking data: dotted circles
// (1-handles) and framed knots (2-handles) with a symmetric integer linking
// matrix, plus 0/3/4-handle counts. Parsing, serialization and validation of
// the line-oriented diagram format.

#include "kirby/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace kirby {

enum class Kind { dotted, framed };

struct Component {
  std::string id;
  Kind kind = Kind::framed;
  Int framing = 0;  // meaningful only when framed
};

struct parse_error : error {
  int line;
  parse_error(const std::string& msg, int line_no)
      : error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

class HandleDecomposition {
 public:
  HandleDecomposition() = default;

  int size() const { return int(comps_.size()); }
  const Component& comp(int i) const { return comps_[i]; }
  const std::vector<Component>& components() const { return comps_; }

  std::optional<int> index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool has(const std::string& id) const { return index_.count(id) > 0; }

  int require(const std::string& id) const {
    auto i = index_of(id);
    if (!i) throw error("no component named '" + id + "'");
    return *i;
  }

  void add_dotted(const std::string& id) { add(id, Kind::dotted, 0); }
  void add_framed(const std::string& id, const Int& framing) {
    add(id, Kind::framed, framing);
  }

  void remove(int i) {
    const int n = size();
    std::vector<Int> nk(size_t(n - 1) * (n - 1));
    for (int r = 0, rr = 0; r < n; ++r) {
      if (r == i) continue;
      for (int c = 0, cc = 0; c < n; ++c) {
        if (c == i) continue;
        nk[size_t(rr) * (n - 1) + cc] = lk_[size_t(r) * n + c];
        ++cc;
      }
      ++rr;
    }
    comps_.erase(comps_.begin() + i);
    lk_ = std::move(nk);
    reindex();
  }

  const Int& lk(int i, int j) const { return lk_[size_t(i) * size() + j]; }
  const Int& lk(const std::string& a, const std::string& b) const {
    return lk(require(a), require(b));
  }
  // Raw symmetric write. Writing a framed diagonal here without
  // set_framing desynchronizes framing and diagonal; validate reports it.
  void set_lk(int i, int j, const Int& v) {
    lk_[size_t(i) * size() + j] = v;
    lk_[size_t(j) * size() + i] = v;
  }

  void set_framing(int i, const Int& f) {
    if (comps_[i].kind != Kind::framed)
      throw error("set_framing: component '" + comps_[i].id + "' is dotted");
    comps_[i].framing = f;
    set_lk(i, i, f);
  }

  // Kind toggles used by dot<->0 exchanges. Preconditions live with the
  // move operations; these keep framing and diagonal in sync.
  void make_dotted(int i) {
    comps_[i].kind = Kind::dotted;
    comps_[i].framing = 0;
  }
  void make_framed(int i, const Int& f) {
    comps_[i].kind = Kind::framed;
    comps_[i].framing = f;
    set_lk(i, i, f);
  }

  const Int& n0() const { return n0_; }
  const Int& n3() const { return n3_; }
  const Int& n4() const { return n4_; }
  void set_handles(const Int& n0, const Int& n3, const Int& n4) {
    n0_ = n0;
    n3_ = n3;
    n4_ = n4;
  }

  const std::optional<std::string>& name() const { return name_; }
  void set_name(std::optional<std::string> n) { name_ = std::move(n); }

  std::vector<int> dotted_indices() const {
    std::vector<int> v;
    for (int i = 0; i < size(); ++i)
      if (comps_[i].kind == Kind::dotted) v.push_back(i);
    return v;
  }
  std::vector<int> framed_indices() const {
    std::vector<int> v;
    for (int i = 0; i < size(); ++i)
      if (comps_[i].kind == Kind::framed) v.push_back(i);
    return v;
  }

  // Structural equality: same components by id, same linking data, same
  // handle counts. Component order and the manifold name do not count.
  bool operator==(const HandleDecomposition& o) const {
    if (n0_ != o.n0_ || n3_ != o.n3_ || n4_ != o.n4_) return false;
    if (size() != o.size()) return false;
    for (const Component& c : comps_) {
      auto j = o.index_of(c.id);
      if (!j) return false;
      const Component& d = o.comp(*j);
      if (c.kind != d.kind) return false;
      if (c.kind == Kind::framed && c.framing != d.framing) return false;
    }
    for (int i = 0; i < size(); ++i)
      for (int j = i; j < size(); ++j) {
        int oi = *o.index_of(comps_[i].id), oj = *o.index_of(comps_[j].id);
        if (lk(i, j) != o.lk(oi, oj)) return false;
      }
    return true;
  }
  bool operator!=(const HandleDecomposition& o) const { return !(*this == o); }

 private:
  void add(const std::string& id, Kind k, const Int& f) {
    if (index_.count(id)) throw error("duplicate component id '" + id + "'");
    const int n = size();
    std::vector<Int> nk(size_t(n + 1) * (n + 1));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) nk[size_t(r) * (n + 1) + c] = lk_[size_t(r) * n + c];
    comps_.push_back({id, k, k == Kind::framed ? f : Int(0)});
    lk_ = std::move(nk);
    index_[id] = n;
    if (k == Kind::framed) set_lk(n, n, f);
  }

  void reindex() {
    index_.clear();
    for (int i = 0; i < size(); ++i) index_[comps_[i].id] = i;
  }

  std::optional<std::string> name_;
  std::vector<Component> comps_;
  std::vector<Int> lk_;  // size() x size(), symmetric
  Int n0_ = 1, n3_ = 0, n4_ = 0;
  std::map<std::string, int> index_;
};

struct Violation {
  std::string invariant;
  std::vector<std::string> ids;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

inline ValidationReport validate(const HandleDecomposition& hd) {
  ValidationReport rep;
  auto flag = [&](const std::string& inv, std::vector<std::string> ids) {
    rep.ok = false;
    rep.violations.push_back({inv, std::move(ids)});
  };
  if (hd.n0() < 1) flag("zero-handle-count", {});
  if (hd.n3() < 0 || hd.n4() < 0) flag("negative-handle-count", {});
  std::set<std::string> seen;
  for (const Component& c : hd.components())
    if (!seen.insert(c.id).second) flag("duplicate-id", {c.id});
  for (int i = 0; i < hd.size(); ++i) {
    const Component& c = hd.comp(i);
    if (c.kind == Kind::dotted) {
      if (hd.lk(i, i) != 0) flag("dotted-self-linking", {c.id});
    } else if (hd.lk(i, i) != c.framing) {
      flag("diagonal-mismatch", {c.id});
    }
    for (int j = i + 1; j < hd.size(); ++j) {
      if (c.kind == Kind::dotted && hd.comp(j).kind == Kind::dotted &&
          hd.lk(i, j) != 0)
        flag("dotted-dotted-linking", {c.id, hd.comp(j).id});
    }
  }
  return rep;
}

namespace detail {

inline std::vector<std::string> tokenize_line(const std::string& raw) {
  std::string line = raw;
  size_t hash = line.find('#');
  if (hash != std::string::npos) line = line.substr(0, hash);
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline Int parse_int_token(const std::string& tok, int line) {
  size_t pos = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (pos == tok.size() ||
      tok.find_first_not_of("0123456789", pos) != std::string::npos)
    throw parse_error("expected integer, got '" + tok + "'", line);
  return Int(tok);
}

inline Int parse_count(const std::string& tok, const char* label, int line) {
  if (tok.size() < 3 || tok[0] != label[0] || tok[1] != ':')
    throw parse_error(std::string("expected ") + label + ":<count>", line);
  Int v = parse_int_token(tok.substr(2), line);
  if (v < 0) throw parse_error("handle counts must be nonnegative", line);
  return v;
}

}  // namespace detail

inline HandleDecomposition parse_diagram(const std::string& text) {
  HandleDecomposition hd;
  std::set<std::pair<std::string, std::string>> declared_pairs;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = detail::tokenize_line(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "manifold") {
      if (toks.size() != 2) throw parse_error("usage: manifold <name>", line);
      hd.set_name(toks[1]);
    } else if (kw == "handles") {
      if (toks.size() != 4)
        throw parse_error("usage: handles 0:<n0> 3:<n3> 4:<n4>", line);
      hd.set_handles(detail::parse_count(toks[1], "0", line),
                     detail::parse_count(toks[2], "3", line),
                     detail::parse_count(toks[3], "4", line));
    } else if (kw == "component") {
      if (toks.size() < 3)
        throw parse_error("usage: component <id> dotted|framed <int>", line);
      const std::string& id = toks[1];
      if (hd.has(id)) throw parse_error("duplicate component id '" + id + "'", line);
      if (toks[2] == "dotted") {
        if (toks.size() != 3)
          throw parse_error("dotted components carry no framing", line);
        hd.add_dotted(id);
      } else if (toks[2] == "framed") {
        if (toks.size() != 4)
          throw parse_error("usage: component <id> framed <int>", line);
        hd.add_framed(id, detail::parse_int_token(toks[3], line));
      } else {
        throw parse_error("component kind must be dotted or framed", line);
      }
    } else if (kw == "lk") {
      if (toks.size() != 4)
        throw parse_error("usage: lk <idA> <idB> <int>", line);
      const std::string &a = toks[1], &b = toks[2];
      if (a == b)
        throw parse_error(
            hd.has(a) && hd.comp(*hd.index_of(a)).kind == Kind::dotted
                ? "dotted self-linking forbidden"
                : "self-linking is declared by the component framing",
            line);
      if (!hd.has(a)) throw parse_error("unknown component '" + a + "'", line);
      if (!hd.has(b)) throw parse_error("unknown component '" + b + "'", line);
      auto key = std::minmax(a, b);
      if (!declared_pairs.insert({key.first, key.second}).second)
        throw parse_error("duplicate lk declaration for pair " + a + "," + b,
                          line);
      hd.set_lk(*hd.index_of(a), *hd.index_of(b),
                detail::parse_int_token(toks[3], line));
    } else {
      throw parse_error("unknown directive '" + kw + "'", line);
    }
  }
  return hd;
}

// Deterministic text form: components sorted by id, nonzero lk entries
// sorted by id pair. Reparsing yields a structurally equal decomposition.
inline std::string serialize(const HandleDecomposition& hd) {
  ValidationReport rep = validate(hd);
  if (!rep.ok)
    throw error("serialize: decomposition violates '" +
                rep.violations.front().invariant + "'");
  std::ostringstream os;
  if (hd.name()) os << "manifold " << *hd.name() << "\n";
  os << "handles 0:" << hd.n0() << " 3:" << hd.n3() << " 4:" << hd.n4()
     << "\n";
  std::vector<int> order(hd.size());
  for (int i = 0; i < hd.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return hd.comp(a).id < hd.comp(b).id;
  });
  for (int i : order) {
    const Component& c = hd.comp(i);
    if (c.kind == Kind::dotted)
      os << "component " << c.id << " dotted\n";
    else
      os << "component " << c.id << " framed " << c.framing << "\n";
  }
  for (size_t a = 0; a < order.size(); ++a)
    for (size_t b = a + 1; b < order.size(); ++b) {
      const Int& v = hd.lk(order[a], order[b]);
      if (v != 0)
        os << "lk " << hd.comp(order[a]).id << " " << hd.comp(order[b]).id
           << " " << v << "\n";
    }
  return os.str();
}

}  // namespace kirby
