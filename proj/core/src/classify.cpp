#include "lcurve/classify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "lcurve/errors.hpp"
#include "lcurve/serialization.hpp"
#include "lcurve/spin_chop.hpp"

namespace lcurve {

std::string level_name(Level level) { return level == Level::SO ? "SO" : "Spin"; }

UnionFind::UnionFind(int n) : parent_(n), rank_(n, 0), classes_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  --classes_;
  return true;
}

namespace {

void check_guard(int m, bool force) {
  if (m < 2) throw DomainError("classification needs m >= 2");
  if (m > 7 && !force) throw GuardExceeded("classification is limited to m <= 7 without --force");
}

// z = +-canonical_lift(Q); the sign is that of the leading blade term.
std::uint64_t spin_key(const ExactSpinElement& z, const SignedPermutation& q) {
  const auto& lead = z.multivector().terms().front().second;
  const bool negative = lead.a() < 0 || (lead.a() == 0 && lead.b() < 0);
  return q.key() * 2 + (negative ? 1 : 0);
}

}  // namespace

MoveGraph so_move_graph(int m, bool force) {
  check_guard(m, force);
  auto elements = enumerate_D(m, force);
  std::sort(elements.begin(), elements.end());
  std::unordered_map<std::uint64_t, int> index;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) index.emplace(elements[i].key(), i);
  MoveGraph graph;
  graph.level = Level::SO;
  graph.m = m;
  for (const auto& q : elements) {
    graph.elements.push_back(q.to_string());
    graph.s_values.push_back(s_value(q));
    graph.edges.push_back({index.at(tr(q).key()), index.at(ad(q).key()), index.at(chop_rep(q).key()),
                           index.at(delta(q).to_permutation().key())});
  }
  return graph;
}

MoveGraph spin_move_graph(int m, bool force) {
  check_guard(m, force);
  auto elements = enumerate_tilde_D(m, force);
  std::sort(elements.begin(), elements.end());
  std::vector<SignedPermutation> images;
  images.reserve(elements.size());
  std::unordered_map<std::uint64_t, int> index;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    images.push_back(*pi_signed(elements[i]));
    index.emplace(spin_key(elements[i], images.back()), i);
  }
  const auto lookup = [&](const ExactSpinElement& z) {
    const auto q = pi_signed(z);
    if (!q) throw Error("move left the double cover");
    return index.at(spin_key(z, *q));
  };
  const SpinChopper& chopper = default_chopper(m);
  MoveGraph graph;
  graph.level = Level::Spin;
  graph.m = m;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& z = elements[i];
    const auto c = chopper.chop(z);
    graph.elements.push_back(format_spin(z));
    graph.s_values.push_back(s_value(images[i]));
    graph.edges.push_back({lookup(tr_spin(z)), lookup(ad_spin(z)), lookup(c), lookup(c * chopper.a().inverse())});
  }
  return graph;
}

ClassificationReport classify(const MoveGraph& graph, const std::vector<NamedRepresentative>& named,
                              int expected_classes) {
  const int size = static_cast<int>(graph.elements.size());
  ClassificationReport report;
  report.level = graph.level;
  report.m = graph.m;
  report.group_order = size;
  report.expected_classes = expected_classes;

  UnionFind uf(size);
  for (int i = 0; i < size; ++i) {
    for (int label = 0; label < 4; ++label) {
      if (uf.unite(i, graph.edges[i][label])) ++report.merges[label];
    }
  }

  // Classes ordered by their smallest member, which is also the representative.
  std::map<int, int> class_of_root;
  std::vector<int> class_index(size);
  for (int i = 0; i < size; ++i) {
    const int root = uf.find(i);
    auto [it, inserted] = class_of_root.emplace(root, static_cast<int>(report.classes.size()));
    if (inserted) {
      ClassInfo info;
      info.representative = i;
      info.representative_text = graph.elements[i];
      report.classes.push_back(std::move(info));
    }
    class_index[i] = it->second;
    auto& info = report.classes[it->second];
    ++info.size;
    ++info.members_by_s[graph.s_values[i]];
  }

  std::map<int, std::string> owner;
  for (const auto& rep : named) {
    const int c = class_index.at(rep.element);
    report.classes[c].named.push_back(rep.name);
    auto [it, inserted] = owner.emplace(c, rep.name);
    if (!inserted) report.failures.push_back(rep.name + " and " + it->second + " share a class");
  }
  if (static_cast<int>(report.classes.size()) != expected_classes) {
    report.failures.push_back("found " + std::to_string(report.classes.size()) + " classes, expected " +
                              std::to_string(expected_classes));
  }
  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    if (report.classes[c].named.empty()) {
      report.failures.push_back("class " + std::to_string(c) + " contains no named representative");
    }
    if (report.classes[c].members_by_s.size() != 1) {
      report.failures.push_back("class " + std::to_string(c) + " mixes several s values");
    }
  }
  return report;
}

int expected_so_classes(int m) { return m / 2 + 1; }

int expected_spin_classes(int m) { return 2 + m / 2 + (m % 2 == 0 ? 1 : 0); }

ClassificationReport so_classes(int m, bool force) {
  const auto start = std::chrono::steady_clock::now();
  const MoveGraph graph = so_move_graph(m, force);
  std::vector<NamedRepresentative> named;
  for (int s = m; s >= -m; s -= 4) {
    const auto key = make_M(m, s).matrix.to_string();
    const auto it = std::find(graph.elements.begin(), graph.elements.end(), key);
    named.push_back({"M(" + std::to_string(m) + "," + std::to_string(s) + ")",
                     static_cast<int>(it - graph.elements.begin())});
  }
  auto report = classify(graph, named, expected_so_classes(m));
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<std::pair<std::string, ExactSpinElement>> spin_named_representatives(int m) {
  std::vector<std::pair<std::string, ExactSpinElement>> out;
  out.emplace_back("1", ExactSpinElement::one(m));
  out.emplace_back("-1", ExactSpinElement::minus_one(m));
  for (int s = m - 4; s >= -m; s -= 4) {
    out.emplace_back("w(" + std::to_string(m) + "," + std::to_string(s) + ")", w(m, s));
  }
  if (m % 2 == 0) out.emplace_back("-w(" + std::to_string(m) + "," + std::to_string(-m) + ")", neg(w(m, -m)));
  return out;
}

ClassificationReport spin_classes(int m, bool force) {
  const auto start = std::chrono::steady_clock::now();
  const MoveGraph graph = spin_move_graph(m, force);
  std::vector<NamedRepresentative> named;
  for (const auto& [name, z] : spin_named_representatives(m)) {
    const auto key = format_spin(z);
    const auto it = std::find(graph.elements.begin(), graph.elements.end(), key);
    if (it == graph.elements.end()) throw Error("named representative " + name + " is not enumerated");
    named.push_back({name, static_cast<int>(it - graph.elements.begin())});
  }
  auto report = classify(graph, named, expected_spin_classes(m));
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SignedPermutation transit_witness(const DiagonalSigns& d1, const DiagonalSigns& d2) {
  if (d1.size() != d2.size()) throw SizeMismatch("diagonals of different sizes");
  if (d1.trace() != d2.trace()) throw DomainError("transit witness needs s(D1) = s(D2)");
  const int m = d1.size();
  // pi sends the k-th row of D1 with a given sign to the k-th row of D2 with that sign.
  std::vector<int> plus2;
  std::vector<int> minus2;
  for (int i = 1; i <= m; ++i) (d2[i] > 0 ? plus2 : minus2).push_back(i);
  std::vector<int> word(m);
  std::size_t next_plus = 0;
  std::size_t next_minus = 0;
  for (int i = 1; i <= m; ++i) word[i - 1] = d1[i] > 0 ? plus2[next_plus++] : minus2[next_minus++];
  const SignedPermutation p(std::move(word));
  const SignedPermutation q = d1.to_permutation() * SignedPermutation::diagonal(delta_signs(p)) * p;
  if (delta(q) != d1 || delta(tr(q)) != d2) throw Error("transit witness failed to validate");
  return q;
}

JumpGraph::JumpGraph(int m) : m_(m) {
  for (const auto& d : enumerate_diagonals(m)) {
    const auto lift = canonical_lift(d.to_permutation());
    vertices_.push_back(lift);
    vertices_.push_back(neg(lift));
  }
  std::sort(vertices_.begin(), vertices_.end());
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) lookup_.emplace(vertices_[i], i);
  adjacent_.assign(vertices_.size(), {});
  const SpinChopper& chopper = default_chopper(m);
  for_each_tilde_D(m, [&](const ExactSpinElement& z) {
    const int x = index(chopper.delta(z));
    const int y = index(chopper.delta(tr_spin(z)));
    adjacent_[x].push_back(y);
    adjacent_[y].push_back(x);
  });
  for (auto& list : adjacent_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

int JumpGraph::index(const ExactSpinElement& z) const {
  const auto it = lookup_.find(z);
  if (it == lookup_.end()) throw DomainError("element does not lie over Diag_m");
  return it->second;
}

bool JumpGraph::jumps(const ExactSpinElement& x, const ExactSpinElement& y) const {
  const auto& list = adjacent_[index(x)];
  return std::binary_search(list.begin(), list.end(), index(y));
}

std::optional<std::vector<ExactSpinElement>> JumpGraph::shortest_chain(const ExactSpinElement& x,
                                                                       const ExactSpinElement& y) const {
  const int source = index(x);
  const int target = index(y);
  std::vector<int> previous(vertices_.size(), -1);
  previous[source] = source;
  std::deque<int> queue{source};
  while (!queue.empty() && previous[target] < 0) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : adjacent_[v]) {
      if (previous[u] < 0) {
        previous[u] = v;
        queue.push_back(u);
      }
    }
  }
  if (previous[target] < 0) return std::nullopt;
  std::vector<ExactSpinElement> chain;
  for (int v = target; v != source; v = previous[v]) chain.push_back(vertices_[v]);
  chain.push_back(vertices_[source]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<ExactSpinElement> spin_transit_chain(const JumpGraph& graph, const ExactSpinElement& z1,
                                                 const ExactSpinElement& z2) {
  const int m = graph.dimension();
  if (z1.dimension() != m || z2.dimension() != m) throw SizeMismatch("elements have the wrong size");
  const auto q1 = pi_signed(z1);
  const auto q2 = pi_signed(z2);
  if (!q1 || !q2 || !q1->is_diagonal() || !q2->is_diagonal()) throw DomainError("elements must lie over Diag_m");
  const int s1 = q1->to_int_matrix().trace();
  const int s2 = q2->to_int_matrix().trace();
  if (s1 != s2) throw DomainError("s values differ");
  if (std::abs(s1) == m) throw DomainError("no transit chain exists for s = +-m");
  const auto chain = graph.shortest_chain(z1, z2);
  if (!chain || chain->size() > 4) throw Error("no chain of at most three jumps");
  return std::vector<ExactSpinElement>(chain->begin() + 1, chain->end());
}

std::vector<ExactSpinElement> spin_transit_chain(const ExactSpinElement& z1, const ExactSpinElement& z2) {
  return spin_transit_chain(JumpGraph(z1.dimension()), z1, z2);
}

}  // namespace lcurve
