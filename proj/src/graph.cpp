#include "ftspan/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace ftspan {

WeightedMultigraph::WeightedMultigraph(int n) : n_(n), incident_(n) {
  if (n < 0) throw InputError("negative vertex count");
}

int WeightedMultigraph::add_edge(int u, int v, Rat w) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loops are not allowed");
  if (!w.is_finite() || w <= Rat(0)) throw InputError("edge weight must be a positive rational");
  int id = static_cast<int>(edges_.size());
  edges_.push_back(Edge{id, u, v, w});
  incident_[u].push_back(id);
  incident_[v].push_back(id);
  return id;
}

Rat WeightedMultigraph::total_weight() const {
  Rat s(0);
  for (const Edge& e : edges_) s += e.w;
  return s;
}

WeightedMultigraph WeightedMultigraph::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int n = 0, m = 0;
  struct Raw {
    int u, v, id;
    Rat w;
  };
  std::vector<Raw> raw;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& why) {
      return InputError("line " + std::to_string(line_no) + ": " + why);
    };
    auto to_int = [&](const std::string& s) {
      int v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size()) throw fail("expected integer, got '" + s + "'");
      return v;
    };
    if (!have_header) {
      if (tok.size() != 2) throw fail("expected header 'n m'");
      n = to_int(tok[0]);
      m = to_int(tok[1]);
      if (n < 0 || m < 0) throw fail("negative counts in header");
      have_header = true;
      continue;
    }
    if (tok.size() != 3 && tok.size() != 4) throw fail("expected 'u v w [id]'");
    Raw r;
    r.u = to_int(tok[0]);
    r.v = to_int(tok[1]);
    try {
      r.w = Rat::parse(tok[2]);
    } catch (const RationalError& e) {
      throw fail(e.what());
    }
    r.id = tok.size() == 4 ? to_int(tok[3]) : static_cast<int>(raw.size());
    raw.push_back(r);
  }
  if (!have_header) throw InputError("missing 'n m' header");
  if (static_cast<int>(raw.size()) != m) {
    throw InputError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(raw.size()));
  }
  std::vector<int> order(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return raw[a].id < raw[b].id; });
  WeightedMultigraph g(n);
  for (size_t i = 0; i < order.size(); ++i) {
    const Raw& r = raw[order[i]];
    if (r.id != static_cast<int>(i)) {
      throw InputError("edge ids must be unique and dense 0.." + std::to_string(m - 1));
    }
    try {
      g.add_edge(r.u, r.v, r.w);
    } catch (const InputError& e) {
      throw InputError(std::string(e.what()) + " (edge id " + std::to_string(r.id) + ")");
    }
  }
  return g;
}

std::string WeightedMultigraph::serialize() const {
  std::ostringstream out;
  out << n_ << ' ' << edges_.size() << '\n';
  for (const Edge& e : edges_) {
    out << e.u << ' ' << e.v << ' ' << e.w.str() << ' ' << e.id << '\n';
  }
  return out.str();
}

EdgeSet::EdgeSet(int universe)
    : bits_(static_cast<size_t>(universe + 63) / 64, 0), universe_(universe) {}

EdgeSet EdgeSet::full(int universe) {
  EdgeSet s(universe);
  for (int i = 0; i < universe; ++i) s.insert(i);
  return s;
}

EdgeSet EdgeSet::of(int universe, const std::vector<int>& ids) {
  EdgeSet s(universe);
  for (int i : ids) s.insert(i);
  return s;
}

void EdgeSet::insert(int id) {
  uint64_t& word = bits_[static_cast<size_t>(id) >> 6];
  uint64_t mask = uint64_t(1) << (id & 63);
  if (!(word & mask)) {
    word |= mask;
    ++count_;
  }
}

void EdgeSet::erase(int id) {
  uint64_t& word = bits_[static_cast<size_t>(id) >> 6];
  uint64_t mask = uint64_t(1) << (id & 63);
  if (word & mask) {
    word &= ~mask;
    --count_;
  }
}

std::vector<int> EdgeSet::ids() const {
  std::vector<int> out;
  out.reserve(count_);
  for (size_t w = 0; w < bits_.size(); ++w) {
    uint64_t word = bits_[w];
    while (word) {
      int b = std::countr_zero(word);
      out.push_back(static_cast<int>(w * 64 + b));
      word &= word - 1;
    }
  }
  return out;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
  for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  recount();
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& o) {
  for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
  recount();
  return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& o) {
  for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
  recount();
  return *this;
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& o) {
  for (size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
  recount();
  return *this;
}

bool EdgeSet::intersects(const EdgeSet& o) const {
  for (size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & o.bits_[i]) return true;
  }
  return false;
}

bool EdgeSet::is_subset_of(const EdgeSet& o) const {
  for (size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~o.bits_[i]) return false;
  }
  return true;
}

void EdgeSet::recount() {
  count_ = 0;
  for (uint64_t w : bits_) count_ += std::popcount(w);
}

Rat Subgraph::weight() const {
  Rat s(0);
  for (int id : edges.ids()) s += parent->edge(id).w;
  return s;
}

bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  while (ia != a.rend() && ib != b.rend()) {
    if (*ia != *ib) return *ia < *ib;
    ++ia;
    ++ib;
  }
  return ia == a.rend() && ib != b.rend();
}

}  // namespace ftspan
