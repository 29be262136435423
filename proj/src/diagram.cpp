#include "lsa/diagram.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lsa
{

  std::size_t DecoratedDiagram::white_rank() const
  {
    std::size_t count = 0;
    for (std::size_t i = 0; i < rank; i++)
      if (active[i] && !black[i]) count++;
    return count;
  }

  std::vector<std::size_t> DecoratedDiagram::active_nodes() const
  {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rank; i++)
      if (active[i]) out.push_back(i);
    return out;
  }

  bool DecoratedDiagram::operator==(const DecoratedDiagram & o) const
  {
    return family == o.family && shape == o.shape && grading == o.grading && black == o.black
        && tau == o.tau && active == o.active && label == o.label;
  }

  DecoratedDiagram build_ddd(const TripleCandidate & t)
  {
    const AlgebraData & alg = t.alg();
    DecoratedDiagram d;
    d.family = alg.family;
    d.shape = alg.shape;
    d.grading = alg.grading;
    d.rank = alg.rank();
    for (std::size_t i = 0; i < d.rank; i++) {
      d.parity.push_back(alg.simple(i).parity);
      d.black.push_back(t.levi.is_black(i));
    }
    d.tau = t.tau;
    d.link.assign(d.rank, std::vector<int>(d.rank, 0));
    for (std::size_t i = 0; i < d.rank; i++)
      for (std::size_t j = 0; j < d.rank; j++)
        if (i != j) d.link[i][j] = alg.inner(alg.simple(i).weight, alg.simple(j).weight);
    d.active.assign(d.rank, true);
    d.label = classify_label(d);
    return d;
  }

  std::vector<std::size_t> linked_black_component(const DecoratedDiagram & d,
                                                  std::size_t white_pos)
  {
    std::vector<std::size_t> comp;
    std::set<std::size_t> seen;
    std::vector<std::size_t> frontier{white_pos, d.tau[white_pos]};
    for (std::size_t k = 0; k < frontier.size(); k++)
      for (std::size_t j = 0; j < d.rank; j++) {
        if (!d.active[j] || !d.black[j] || seen.count(j)) continue;
        if (d.link[frontier[k]][j] != 0) {
          seen.insert(j);
          comp.push_back(j);
          frontier.push_back(j);
        }
      }
    std::sort(comp.begin(), comp.end());
    return comp;
  }

  DecoratedDiagram subdiagram(const DecoratedDiagram & d,
                              const std::vector<std::size_t> & whites)
  {
    DecoratedDiagram out = d;
    out.active.assign(d.rank, false);
    for (std::size_t w : whites) {
      if (d.black[w]) throw std::invalid_argument("subdiagram seeds must be white");
      out.active[w] = true;
      out.active[d.tau[w]] = true;
      for (std::size_t b : linked_black_component(d, w)) out.active[b] = true;
    }
    return out;
  }

  namespace
  {

    void add_violation(RuleVerdict & v, const std::string & rule,
                       std::vector<std::size_t> witnesses)
    {
      std::sort(witnesses.begin(), witnesses.end());
      for (const auto & existing : v.violations)
        if (existing.rule == rule && existing.witnesses == witnesses) return;
      v.passes = false;
      v.violations.push_back({rule, std::move(witnesses)});
    }

    bool linked(const DecoratedDiagram & d, std::size_t i, std::size_t j)
    {
      return d.link[i][j] != 0;
    }

    // the two forbidden decorations around the even-orthogonal fork;
    // circles even, squares odd, filled nodes black. The fork is the actual
    // tail of the diagram: a topologically identical picture with recolored
    // tail nodes is explicitly allowed.
    void d_tail_rules(const DecoratedDiagram & d, RuleVerdict & v)
    {
      if (d.rank < 4) return;
      std::size_t t1 = d.rank - 2, t2 = d.rank - 1, fork = d.rank - 3;
      if (!d.active[t1] || !d.active[t2] || !d.active[fork]) return;
      if (d.parity[t1] != 0 || d.parity[t2] != 0) return;
      auto nodes = d.active_nodes();

      // black - square - black - fork(circle, circle) with the circles swapped
      if (!d.black[t1] && !d.black[t2] && d.tau[t1] == t2 && d.black[fork]
          && d.parity[fork] == 0) {
        for (std::size_t s : nodes) {
          if (s == fork || d.black[s] || d.parity[s] != 1 || !linked(d, s, fork)) continue;
          for (std::size_t b1 : nodes) {
            if (b1 == fork || b1 == s || !d.black[b1] || d.parity[b1] != 0) continue;
            if (linked(d, b1, s)) add_violation(v, "D-TAIL", {s, t1, t2});
          }
        }
      }

      // black - square - fork(circle, filled circle): mixed tail behind an
      // odd fork node with black support
      if (d.black[t1] != d.black[t2] && !d.black[fork] && d.parity[fork] == 1) {
        std::size_t white_tail = d.black[t1] ? t2 : t1;
        for (std::size_t b1 : nodes) {
          if (b1 == t1 || b1 == t2 || b1 == fork) continue;
          if (!d.black[b1] || d.parity[b1] != 0) continue;
          if (linked(d, b1, fork)) add_violation(v, "D-TAIL", {fork, white_tail});
        }
      }
    }

  }

  RuleVerdict selection_rules(const DecoratedDiagram & d)
  {
    RuleVerdict v;
    auto nodes = d.active_nodes();

    for (std::size_t beta : nodes) {
      if (d.black[beta] || d.tau[beta] != beta) continue;
      auto comp = linked_black_component(d, beta);

      // two-node sub-diagram: one black neighbour; allowed only for an odd
      // white next to an even black. The pattern is a single-link pair, so the
      // doubly linked stem-tail pair of the B and C shapes is out of scope.
      if (comp.size() == 1) {
        std::size_t alpha = comp[0];
        bool tail_link = (d.shape == Shape::B || d.shape == Shape::C)
                         && std::max(alpha, beta) == d.rank - 1
                         && std::min(alpha, beta) == d.rank - 2;
        if (!tail_link && !(d.parity[beta] == 1 && d.parity[alpha] == 0))
          add_violation(v, "RVSR", {alpha, beta});
      }

      // isotropic odd white with no black support cannot see any other root;
      // the odd tail root of shape B has nonzero norm and is exempt
      bool isotropic = d.parity[beta] == 1
                       && !(d.shape == Shape::B && beta == d.rank - 1);
      if (comp.empty() && isotropic) {
        for (std::size_t alpha : nodes)
          if (alpha != beta && linked(d, alpha, beta))
            add_violation(v, "ISO-ODD", {alpha, beta});
      }

      // black - square - black flanked pattern with a tau-fixed witness
      if (comp.size() == 2 && d.parity[beta] == 1 && !linked(d, comp[0], comp[1])
          && linked(d, comp[0], beta) && linked(d, comp[1], beta)) {
        for (int flip = 0; flip < 2; flip++) {
          std::size_t alpha = comp[flip];
          std::size_t gamma = comp[1 - flip];
          for (std::size_t sigma : nodes) {
            if (d.black[sigma] || sigma == beta || d.tau[sigma] != sigma) continue;
            if (sigma == alpha || sigma == gamma) continue;
            if (!linked(d, gamma, sigma)) continue;
            auto dsigma = linked_black_component(d, sigma);
            bool alpha_in = std::find(dsigma.begin(), dsigma.end(), alpha) != dsigma.end();
            if (!alpha_in) add_violation(v, "4NODES", {beta, sigma});
          }
        }
      }
    }

    if (d.shape == Shape::D) d_tail_rules(d, v);
    return v;
  }

  std::string classify_label(const DecoratedDiagram & d)
  {
    if (d.family == Family::gl) {
      if (d.rank == 1 && !d.black[0] && d.parity[0] == 1) return "outstanding";
      if (d.rank == 3 && d.black[0] && !d.black[1] && d.black[2] && d.parity[1] == 1
          && d.tau[1] == 1)
        return "outstanding";
      for (std::size_t i = 0; i < d.rank; i++)
        if (d.tau[i] != i) return "GL-I";
      return "shaft";
    }
    std::vector<std::size_t> tail;
    if (d.shape == Shape::D) tail = {d.rank - 2, d.rank - 1};
    else tail = {d.rank - 1};
    bool all_black = true, all_white = true;
    for (std::size_t t : tail) (d.black[t] ? all_white : all_black) = false;
    if (all_black) return "black-tail";
    if (all_white) return "white-tail";
    return "mixed-tail";
  }

  std::vector<GradingVector> gradings_for(Family family, std::size_t rank)
  {
    std::vector<GradingVector> out;
    if (family == Family::gl) {
      std::size_t N = rank + 1;
      for (std::size_t mask = 0; mask < (1u << N); mask++) {
        GradingVector g(N);
        for (std::size_t i = 0; i < N; i++) g[i] = (mask >> i) & 1;
        out.push_back(g);
      }
      return out;
    }
    std::size_t n = rank;
    std::size_t N = family == Family::osp_odd ? 2 * n + 1 : 2 * n;
    for (std::size_t mask = 0; mask < (1u << n); mask++) {
      GradingVector g(N);
      for (std::size_t i = 0; i < n; i++) {
        g[i] = (mask >> i) & 1;
        g[N - 1 - i] = g[i];
      }
      if (valid_grading(family, g)) out.push_back(g);
    }
    return out;
  }

  std::vector<DecoratedDiagram> enumerate_satake(Family family, std::size_t max_rank)
  {
    std::vector<DecoratedDiagram> out;
    std::size_t min_rank = family == Family::osp_even ? 2 : 1;
    for (std::size_t rank = min_rank; rank <= max_rank; rank++) {
      for (const auto & grading : gradings_for(family, rank)) {
        if (family == Family::gl) {
          // the flipped grading gives the same algebra and mirrored diagrams
          GradingVector flipped = grading;
          for (int & b : flipped) b = 1 - b;
          if (flipped < grading) continue;
        }
        auto alg = std::make_shared<AlgebraData>(build_algebra(family, grading));
        for (std::size_t mask = 0; mask < (1u << rank); mask++) {
          // all nodes black generates l = g, trivially
          if (mask + 1 == (1u << rank)) continue;
          LeviChoice levi;
          for (std::size_t i = 0; i < rank; i++) levi.black.push_back(mask & (1u << i));
          for (const auto & cand : enumerate_taus(alg, levi)) {
            DecoratedDiagram d = build_ddd(cand);
            if (selection_rules(d).passes) out.push_back(d);
          }
        }
      }
    }
    return out;
  }

  std::string to_dot(const DecoratedDiagram & d)
  {
    std::string s = "graph ddd {\n";
    for (std::size_t i : d.active_nodes()) {
      s += "  n" + std::to_string(i) + " [shape=" + (d.parity[i] ? "square" : "circle")
         + (d.black[i] ? ", style=filled, fillcolor=black" : "") + "];\n";
    }
    for (std::size_t i : d.active_nodes())
      for (std::size_t j : d.active_nodes())
        if (i < j && d.link[i][j] != 0)
          s += "  n" + std::to_string(i) + " -- n" + std::to_string(j) + ";\n";
    for (std::size_t i : d.active_nodes())
      if (d.tau[i] > i && d.active[d.tau[i]])
        s += "  n" + std::to_string(i) + " -- n" + std::to_string(d.tau[i])
           + " [style=dashed, constraint=false];\n";
    s += "}\n";
    return s;
  }

  std::string diagram_to_json(const DecoratedDiagram & d)
  {
    nlohmann::json j;
    j["family"] = family_name(d.family);
    j["shape"] = shape_name(d.shape);
    j["rank"] = d.rank;
    j["grading"] = d.grading;
    j["black"] = nlohmann::json::array();
    for (std::size_t i = 0; i < d.rank; i++)
      if (d.black[i]) j["black"].push_back(i);
    j["tau"] = nlohmann::json::array();
    for (std::size_t i = 0; i < d.rank; i++)
      if (d.tau[i] > i) j["tau"].push_back({i, d.tau[i]});
    j["label"] = d.label;
    return j.dump(2);
  }

  DecoratedDiagram diagram_from_json(const std::string & text)
  {
    auto j = nlohmann::json::parse(text);
    auto family = family_from_name(j.at("family").get<std::string>());
    if (!family) throw std::invalid_argument("unknown family");
    GradingVector grading = j.at("grading").get<GradingVector>();
    auto alg = std::make_shared<AlgebraData>(build_algebra(*family, grading));
    TripleCandidate t;
    t.algebra = alg;
    t.levi.black.assign(alg->rank(), false);
    for (auto b : j.at("black")) t.levi.black[b.get<std::size_t>()] = true;
    t.tau.resize(alg->rank());
    for (std::size_t i = 0; i < alg->rank(); i++) t.tau[i] = i;
    for (auto pair : j.at("tau")) {
      std::size_t a = pair[0].get<std::size_t>(), b = pair[1].get<std::size_t>();
      t.tau[a] = b;
      t.tau[b] = a;
    }
    DecoratedDiagram d = build_ddd(t);
    if (j.contains("label")) d.label = j.at("label").get<std::string>();
    return d;
  }

}
