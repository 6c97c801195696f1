#pragma once

// Superficial degree of divergence from graph counting data.
//
// A graph is described only by its edge and vertex counts. The degree is the
// upper bound obtained by giving every vertex its maximal number of
// derivatives in a theory whose propagators fall off like p^-n.

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace specact {

struct GraphSpec {
  int n = 8;          // derivative order of the kinetic term
  int I = 0;          // internal gauge lines
  int Itilde = 0;     // internal ghost lines
  int E = 0;          // external gauge legs
  int Etilde = 0;     // external ghost legs
  std::map<int, int> v;  // gauge vertex valence -> count
  int vtilde = 0;     // ghost-ghost-gauge vertices

  int gauge_vertex_count() const;
};

/// Throws MalformedInput naming the first violated condition.
void validate(const GraphSpec& g);

int loops(const GraphSpec& g);
/// Bound with maximal-derivative vertices (valence i -> n - i, ghost -> n - 3).
int omega(const GraphSpec& g);
int omega_closed(int L, int E, int Etilde, int n);

struct DivergenceReport {
  int omega_bound = 0;
  int omega_closed = 0;
  int L = 0;
  /// Loop graph with a non-negative bound. Trees carry no loop integral.
  bool divergent = false;
  /// No external legs: a field-independent constant. At n = 8 the two-loop
  /// vacuum graphs reach omega = 0, but they renormalize no coupling.
  bool vacuum = false;
};

DivergenceReport analyze(const GraphSpec& g);

struct DivergenceClassification {
  int n = 0;
  /// (L, E + Etilde) with L >= 1 and a non-negative bound, lexicographic.
  std::vector<std::pair<int, int>> sectors;
  /// Every sector with external legs sits at one loop. Vacuum sectors
  /// (E + Etilde = 0) are listed but do not count against this.
  bool superrenormalizable = false;
  /// True when the bound does not depend on L (n = 4); sectors are then
  /// listed only up to loop_cap.
  bool loop_independent = false;
  int loop_cap = 0;
};

DivergenceClassification classify_divergences(int n, int loop_cap = 3);

/// Every valid graph with at most max_vertices vertices and at most
/// max_internal internal lines of each kind. Ghost vertices are cubic.
std::vector<GraphSpec> enumerate_graphs(int n, int max_vertices, int max_internal);

}  // namespace specact
