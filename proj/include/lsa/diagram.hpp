#ifndef LSA_DIAGRAM_HPP
#define LSA_DIAGRAM_HPP

#include "lsa/weyl.hpp"

#include <string>
#include <vector>

namespace lsa
{

  /// Dynkin diagram of the simple roots with colors (black = Levi), parities,
  /// and the tau arcs. Links carry the inner products of the simple roots, so
  /// the "dotted" non-graph links of the orthogonal tail are visible too.
  struct DecoratedDiagram
  {
    Family family = Family::gl;
    Shape shape = Shape::A;
    GradingVector grading;
    std::size_t rank = 0;
    std::vector<int> parity;        // of each simple root
    std::vector<bool> black;
    TauMap tau;
    std::vector<std::vector<int>> link; // inner products between simple roots
    std::vector<bool> active;           // node subset for sub-diagrams
    std::string label;

    bool is_white(std::size_t i) const { return !black[i]; }
    std::size_t white_rank() const;
    std::vector<std::size_t> active_nodes() const;
    bool operator==(const DecoratedDiagram & o) const;
  };

  struct RuleViolation
  {
    std::string rule; // RVSR, ISO-ODD, 4NODES, D-TAIL
    std::vector<std::size_t> witnesses;
  };

  struct RuleVerdict
  {
    bool passes = true;
    std::vector<RuleViolation> violations;
  };

  DecoratedDiagram build_ddd(const TripleCandidate & t);

  /// Black component(s) of the diagram attached to {alpha, tau(alpha)}.
  std::vector<std::size_t> linked_black_component(const DecoratedDiagram & d,
                                                  std::size_t white_pos);

  /// Minimal decorated sub-diagram generated by the given white nodes:
  /// their tau-images plus the attached black components.
  DecoratedDiagram subdiagram(const DecoratedDiagram & d,
                              const std::vector<std::size_t> & whites);

  RuleVerdict selection_rules(const DecoratedDiagram & d);

  /// Best-effort classification into the catalog families.
  std::string classify_label(const DecoratedDiagram & d);

  /// All gradings valid for the family at the given diagram rank.
  std::vector<GradingVector> gradings_for(Family family, std::size_t rank);

  /// Every (grading, Levi, tau) candidate passing both the triple conditions
  /// and the selection rules, labeled. Diagrams identified by the global
  /// parity flip (which leaves the algebra unchanged away from odd osp) are
  /// emitted once, for the lexicographically smaller grading.
  std::vector<DecoratedDiagram> enumerate_satake(Family family, std::size_t max_rank);

  std::string to_dot(const DecoratedDiagram & d);
  std::string diagram_to_json(const DecoratedDiagram & d);
  DecoratedDiagram diagram_from_json(const std::string & text);

}

#endif
