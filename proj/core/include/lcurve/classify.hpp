#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcurve/clifford_exact.hpp"
#include "lcurve/signed_perm.hpp"

namespace lcurve {

enum class Level { SO, Spin };
enum class MoveLabel { TR = 0, AD = 1, CHOP = 2, DELTA = 3 };
inline constexpr std::array<const char*, 4> kMoveNames{"TR", "AD", "CHOP", "DELTA"};

std::string level_name(Level level);

class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  // True when two different classes were merged.
  bool unite(int x, int y);
  int classes() const { return classes_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int classes_;
};

// Elements sorted by value; edges[i][label] is the index of the image of element i.
struct MoveGraph {
  Level level = Level::SO;
  int m = 0;
  std::vector<std::string> elements;
  std::vector<std::array<int, 4>> edges;
  std::vector<int> s_values;
};

MoveGraph so_move_graph(int m, bool force = false);
MoveGraph spin_move_graph(int m, bool force = false);

struct NamedRepresentative {
  std::string name;
  int element = -1;
};

struct ClassInfo {
  int representative = -1;
  std::string representative_text;
  int size = 0;
  std::map<int, int> members_by_s;
  std::vector<std::string> named;
};

struct ClassificationReport {
  Level level = Level::SO;
  int m = 0;
  long long group_order = 0;
  int expected_classes = 0;
  std::vector<ClassInfo> classes;
  // Merges caused by each move label during the union-find pass.
  std::array<long long, 4> merges{};
  std::vector<std::string> failures;
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty(); }
};

ClassificationReport classify(const MoveGraph& graph, const std::vector<NamedRepresentative>& named,
                              int expected_classes);

// floor(m/2) + 1, one class for each M^m_s with s = m mod 4.
int expected_so_classes(int m);
// Length of the list 1, -1, w(m, s) for s = m mod 4 with s < m, and -w(m, -m) for even m.
int expected_spin_classes(int m);

ClassificationReport so_classes(int m, bool force = false);
ClassificationReport spin_classes(int m, bool force = false);

// The spin-level named representatives with their display names.
std::vector<std::pair<std::string, ExactSpinElement>> spin_named_representatives(int m);

// Q = D1 Delta(P) P for a permutation matrix P carrying the signs of D1 onto
// those of D2, so that Delta(Q) = D1 and Delta(TR(Q)) = D2.
SignedPermutation transit_witness(const DiagonalSigns& d1, const DiagonalSigns& d2);

// Partners of x under the jump relation {(delta(z), delta(tr(z)))}, symmetrized.
class JumpGraph {
 public:
  explicit JumpGraph(int m);
  int dimension() const { return m_; }
  const std::vector<ExactSpinElement>& vertices() const { return vertices_; }
  bool jumps(const ExactSpinElement& x, const ExactSpinElement& y) const;
  // Shortest chain x = c_0, c_1, ..., c_k = y; nullopt when unreachable.
  std::optional<std::vector<ExactSpinElement>> shortest_chain(const ExactSpinElement& x,
                                                              const ExactSpinElement& y) const;

 private:
  int index(const ExactSpinElement& z) const;

  int m_;
  std::vector<ExactSpinElement> vertices_;
  std::map<ExactSpinElement, int> lookup_;
  std::vector<std::vector<int>> adjacent_;
};

// Chain of at most three jumps from z1 to z2 (both over Diag_m, same s, s != +-m).
std::vector<ExactSpinElement> spin_transit_chain(const ExactSpinElement& z1, const ExactSpinElement& z2);
std::vector<ExactSpinElement> spin_transit_chain(const JumpGraph& graph, const ExactSpinElement& z1,
                                                 const ExactSpinElement& z2);

}  // namespace lcurve
