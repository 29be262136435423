#include "lsa/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lsa
{

  LatticeMap LatticeMap::identity(std::size_t dim)
  {
    LatticeMap m;
    for (std::size_t i = 0; i < dim; i++) {
      Weight w(dim);
      w.coords[i] = 1;
      m.image.push_back(w);
    }
    return m;
  }

  Weight LatticeMap::apply(const Weight & w) const
  {
    Weight out(image.size());
    for (std::size_t i = 0; i < image.size(); i++) {
      if (w.coords[i] == 0) continue;
      for (std::size_t j = 0; j < image.size(); j++)
        out.coords[j] += w.coords[i] * image[i].coords[j];
    }
    return out;
  }

  LatticeMap LatticeMap::compose(const LatticeMap & inner) const
  {
    LatticeMap out;
    for (const auto & w : inner.image) out.image.push_back(apply(w));
    return out;
  }

  std::vector<std::size_t> LeviChoice::black_positions() const
  {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < black.size(); i++)
      if (black[i]) out.push_back(i);
    return out;
  }

  std::vector<std::size_t> TripleCandidate::white_positions() const
  {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < levi.black.size(); i++)
      if (!levi.black[i]) out.push_back(i);
    return out;
  }

  std::vector<std::vector<std::size_t>> levi_components(const AlgebraData & alg,
                                                        const LeviChoice & levi)
  {
    auto blacks = levi.black_positions();
    std::vector<std::vector<std::size_t>> comps;
    std::set<std::size_t> seen;
    for (std::size_t start : blacks) {
      if (seen.count(start)) continue;
      std::vector<std::size_t> comp{start};
      seen.insert(start);
      for (std::size_t k = 0; k < comp.size(); k++)
        for (std::size_t other : blacks) {
          if (seen.count(other)) continue;
          if (alg.inner(alg.simple(comp[k]).weight, alg.simple(other).weight) != 0) {
            comp.push_back(other);
            seen.insert(other);
          }
        }
      std::sort(comp.begin(), comp.end());
      comps.push_back(comp);
    }
    return comps;
  }

  LatticeMap weyl_operator(const AlgebraData & alg)
  {
    std::size_t d = alg.lattice_dim;
    LatticeMap m = LatticeMap::identity(d);
    if (alg.family == Family::gl) {
      for (std::size_t i = 0; i < d; i++) {
        Weight w(d);
        w.coords[d - 1 - i] = 1;
        m.image[i] = w;
      }
    } else {
      for (std::size_t i = 0; i < d; i++) m.image[i] = -m.image[i];
    }
    return m;
  }

  namespace
  {

    std::vector<std::size_t> tail_positions(const AlgebraData & alg)
    {
      std::size_t r = alg.rank();
      switch (alg.shape) {
      case Shape::A: return {};
      case Shape::B:
      case Shape::C: return {r - 1};
      case Shape::D: return {r - 2, r - 1};
      }
      return {};
    }

    // A root as a pair of natural-module indices: weight = L(a) - L(b) with
    // L(i) = zeta_i for i < n and L(i') = -zeta_i.
    std::pair<std::size_t, std::size_t> natural_pair(const AlgebraData & alg, const Weight & w)
    {
      std::size_t n = alg.lattice_dim;
      if (alg.family == Family::gl) {
        std::size_t a = n, b = n;
        for (std::size_t i = 0; i < n; i++) {
          if (w.coords[i] == 1) a = i;
          if (w.coords[i] == -1) b = i;
        }
        if (a == n || b == n) throw std::logic_error("not a gl root");
        return {a, b};
      }
      std::size_t N = alg.N;
      std::vector<std::size_t> plus, minus;
      for (std::size_t i = 0; i < n; i++) {
        if (w.coords[i] == 1) plus.push_back(i);
        if (w.coords[i] == -1) minus.push_back(i);
        if (w.coords[i] == 2) return {i, N - 1 - i};
      }
      if (plus.size() == 1 && minus.size() == 1) return {plus[0], minus[0]};
      if (plus.size() == 2 && minus.empty()) return {plus[0], N - 1 - plus[1]};
      if (plus.size() == 1 && minus.empty()) return {plus[0], N / 2}; // middle column
      throw std::logic_error("unsupported root for natural_pair");
    }

    // base coordinate and sign of L(natural index)
    std::pair<std::size_t, int> base_sign(const AlgebraData & alg, std::size_t nat)
    {
      if (alg.family == Family::gl) return {nat, 1};
      std::size_t n = alg.lattice_dim;
      if (nat < n) return {nat, 1};
      if (nat >= alg.N - n) return {alg.N - 1 - nat, -1};
      throw std::logic_error("middle column has no lattice coordinate");
    }

  }

  LatticeMap weyl_operator_levi(const AlgebraData & alg, const LeviChoice & levi)
  {
    // components are mutually orthogonal but can share lattice coordinates
    // (two rank-1 pieces of so(4) both live on zeta_1, zeta_2), so the
    // per-component operators are composed rather than merged
    LatticeMap result = LatticeMap::identity(alg.lattice_dim);
    auto tails = tail_positions(alg);
    for (const auto & comp : levi_components(alg, levi)) {
      LatticeMap w = LatticeMap::identity(alg.lattice_dim);
      std::size_t tail_count = 0;
      for (std::size_t t : tails)
        if (std::find(comp.begin(), comp.end(), t) != comp.end()) tail_count++;
      bool full_tail = tail_count > 0 && (alg.shape != Shape::D || tail_count == 2);
      if (full_tail) {
        for (std::size_t pos : comp) {
          const Weight & rw = alg.simple(pos).weight;
          for (std::size_t c = 0; c < alg.lattice_dim; c++)
            if (rw.coords[c] != 0) {
              Weight neg(alg.lattice_dim);
              neg.coords[c] = -1;
              w.image[c] = neg;
            }
        }
        result = w.compose(result);
        continue;
      }
      // general linear component: reverse the chain of natural weights
      std::map<std::size_t, std::size_t> next; // a -> b per root
      std::map<std::size_t, std::size_t> indeg;
      std::set<std::size_t> nodes;
      for (std::size_t pos : comp) {
        auto [a, b] = natural_pair(alg, alg.simple(pos).weight);
        if (next.count(a)) throw std::logic_error("levi component is not a chain");
        next[a] = b;
        indeg[b]++;
        nodes.insert(a);
        nodes.insert(b);
      }
      std::size_t start = *nodes.begin();
      bool found = false;
      for (std::size_t v : nodes)
        if (next.count(v) && indeg[v] == 0) {
          start = v;
          found = true;
          break;
        }
      if (!found) throw std::logic_error("levi component is not a chain");
      std::vector<std::size_t> u{start};
      while (next.count(u.back())) u.push_back(next[u.back()]);
      if (u.size() != comp.size() + 1) throw std::logic_error("levi component is not a chain");
      std::size_t r = u.size() - 1;
      for (std::size_t j = 0; j <= r; j++) {
        auto [c1, s1] = base_sign(alg, u[j]);
        auto [c2, s2] = base_sign(alg, u[r - j]);
        Weight img(alg.lattice_dim);
        img.coords[c2] = s1 * s2;
        w.image[c1] = img;
      }
      result = w.compose(result);
    }
    return result;
  }

  bool is_regular(const AlgebraData & alg, const LeviChoice & levi)
  {
    LatticeMap w = weyl_operator_levi(alg, levi);
    for (const auto & r : alg.positive_roots)
      if (!alg.is_root(w.apply(r.weight))) return false;
    return true;
  }

  Weight tilde_root(const AlgebraData & alg, const LeviChoice & levi,
                    const TauMap & tau, std::size_t white_pos)
  {
    LatticeMap w = weyl_operator_levi(alg, levi);
    return w.apply(alg.simple(tau[white_pos]).weight);
  }

  namespace
  {

    struct EchelonSpan
    {
      std::vector<RatVector> rows; // reduced, pivot-normalized

      // returns true if v was independent and got inserted
      bool insert(RatVector v)
      {
        for (const auto & r : rows) {
          std::size_t p = 0;
          while (p < r.size() && r[p] == 0) p++;
          if (p < v.size() && v[p] != 0) {
            Rational f = v[p];
            for (std::size_t j = p; j < v.size(); j++) v[j] -= f * r[j];
          }
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) p++;
        if (p == v.size()) return false;
        Rational inv = Rational(1) / v[p];
        for (std::size_t j = p; j < v.size(); j++) v[j] *= inv;
        rows.push_back(v);
        return true;
      }
    };

    bool coeffs_in_nonneg_black_span(const AlgebraData & alg, const LeviChoice & levi,
                                     const Weight & w)
    {
      // is w a nonnegative rational combination of black simple roots?
      RatMatrix sys;
      auto blacks = levi.black_positions();
      for (std::size_t c = 0; c < alg.lattice_dim; c++) {
        RatVector row;
        for (std::size_t b : blacks) row.push_back(Rational(alg.simple(b).weight.coords[c]));
        row.push_back(Rational(w.coords[c]));
        sys.append_row(row);
      }
      auto r = rref(sys);
      // inconsistent?
      for (std::size_t i = 0; i < sys.rows(); i++) {
        bool all_zero = true;
        for (std::size_t j = 0; j + 1 < sys.cols(); j++)
          if (r.reduced.at(i, j) != 0) all_zero = false;
        if (all_zero && r.reduced.at(i, sys.cols() - 1) != 0) return false;
      }
      // solution (unique: black simple roots are independent)
      for (std::size_t i = 0; i < r.pivot_columns.size(); i++) {
        if (r.pivot_columns[i] + 1 == sys.cols()) return false;
        if (r.reduced.at(i, sys.cols() - 1) < 0) return false;
      }
      return true;
    }

  }

  AdModule ad_module(const AlgebraData & alg, const LeviChoice & levi,
                     std::size_t root_pos, int direction)
  {
    struct Elem
    {
      SuperMatrix m;
      Weight w;
    };
    std::vector<Elem> elems;
    std::map<Weight, EchelonSpan> spans;
    const auto & seed_root = alg.simple(root_pos);
    Elem seed{direction > 0 ? seed_root.e : seed_root.f,
              direction > 0 ? seed_root.weight : -seed_root.weight};
    spans[seed.w].insert(seed.m.flatten());
    elems.push_back(seed);

    auto blacks = levi.black_positions();
    for (std::size_t k = 0; k < elems.size(); k++) {
      for (std::size_t b : blacks) {
        const auto & br = alg.simple(b);
        for (int dir = 0; dir < 2; dir++) {
          const SuperMatrix & g = dir == 0 ? br.e : br.f;
          Weight shift = dir == 0 ? br.weight : -br.weight;
          SuperMatrix res = super_bracket(g, elems[k].m);
          if (res.is_zero()) continue;
          Weight w = elems[k].w + shift;
          if (spans[w].insert(res.flatten())) elems.push_back({res, w});
        }
      }
    }

    AdModule mod;
    std::set<Weight> wset;
    for (const auto & [w, sp] : spans) {
      if (sp.rows.empty()) continue;
      mod.dimension += sp.rows.size();
      for (std::size_t i = 0; i < sp.rows.size(); i++) mod.weights.push_back(w);
      wset.insert(w);
    }

    auto extreme = [&](int sign) {
      std::vector<Weight> candidates;
      for (const auto & w : wset) {
        bool top = true;
        for (std::size_t b : blacks) {
          Weight shifted = sign > 0 ? w + alg.simple(b).weight : w - alg.simple(b).weight;
          if (wset.count(shifted)) top = false;
        }
        if (top) candidates.push_back(w);
      }
      if (candidates.size() == 1) return candidates[0];
      // dominance tie-break
      for (const auto & c : candidates) {
        bool dominates = true;
        for (const auto & o : wset)
          if (!coeffs_in_nonneg_black_span(alg, levi, sign > 0 ? c - o : o - c)) dominates = false;
        if (dominates) return c;
      }
      throw std::logic_error("ad_module: no unique extreme weight");
    };
    mod.highest = extreme(+1);
    mod.lowest = extreme(-1);

    for (const auto & e : elems)
      if (e.w == mod.highest) {
        mod.highest_parity = e.m.parity();
        break;
      }
    return mod;
  }

  Weight module_highest_weight_oracle(const AlgebraData & alg, const LeviChoice & levi,
                                      std::size_t root_pos)
  {
    return ad_module(alg, levi, root_pos, +1).highest;
  }

  Theta make_theta(const AlgebraData & alg, const LeviChoice & levi, const TauMap & tau)
  {
    Theta th;
    th.alg = &alg;
    LatticeMap w = weyl_operator_levi(alg, levi);
    for (std::size_t i = 0; i < alg.rank(); i++) {
      if (levi.is_black(i)) th.simple_images.push_back(alg.simple(i).weight);
      else th.simple_images.push_back(-w.apply(alg.simple(tau[i]).weight));
    }
    return th;
  }

  Weight Theta::apply(const Weight & w) const
  {
    // expand w in the simple-root basis, then map
    std::size_t r = alg->rank();
    RatMatrix sys;
    for (std::size_t c = 0; c < alg->lattice_dim; c++) {
      RatVector row;
      for (std::size_t i = 0; i < r; i++) row.push_back(Rational(alg->simple(i).weight.coords[c]));
      row.push_back(Rational(w.coords[c]));
      sys.append_row(row);
    }
    auto red = rref(sys);
    std::vector<Rational> coeff(r, Rational(0));
    for (std::size_t i = 0; i < red.pivot_columns.size(); i++) {
      std::size_t p = red.pivot_columns[i];
      if (p == r) throw std::logic_error("weight not in root lattice");
      coeff[p] = red.reduced.at(i, r);
    }
    Weight out(alg->lattice_dim);
    for (std::size_t i = 0; i < r; i++) {
      if (coeff[i] == 0) continue;
      if (denom(coeff[i]) != 1) throw std::logic_error("weight not in root lattice");
      long ci = static_cast<long>(numer(coeff[i]));
      for (std::size_t c = 0; c < alg->lattice_dim; c++)
        out.coords[c] += ci * simple_images[i].coords[c];
    }
    return out;
  }

  bool check_supersymmetric(const AlgebraData & alg, const LeviChoice & levi,
                            const TauMap & tau)
  {
    std::size_t r = alg.rank();
    if (tau.size() != r) throw std::invalid_argument("tau size mismatch");
    std::vector<std::size_t> whites;
    for (std::size_t i = 0; i < r; i++) {
      if (levi.is_black(i)) {
        if (tau[i] != i) throw std::invalid_argument("tau must fix black nodes");
      } else {
        whites.push_back(i);
        if (levi.is_black(tau[i]) || tau[tau[i]] != i)
          throw std::invalid_argument("tau must be an involution of white nodes");
      }
    }

    bool regular = is_regular(alg, levi);

    // tilde of each white root, by lattice formula or by the module oracle
    std::vector<Weight> tilde(r);
    std::vector<int> tilde_parity(r, 0);
    if (regular) {
      LatticeMap w = weyl_operator_levi(alg, levi);
      for (std::size_t i : whites) {
        tilde[i] = w.apply(alg.simple(tau[i]).weight);
        bool neg = false;
        auto idx = alg.find_root(tilde[i], &neg);
        if (!idx || neg) return false;
        tilde_parity[i] = alg.positive_roots[*idx].parity;
      }
    } else {
      for (std::size_t i : whites) {
        AdModule plus = ad_module(alg, levi, tau[i], +1);
        tilde[i] = plus.highest;
        tilde_parity[i] = plus.highest_parity;
        // V^+_alpha isomorphic to V^-_{tau(alpha)} as l-modules: equal
        // characters on the Cartan of l
        AdModule self_plus = ad_module(alg, levi, i, +1);
        AdModule minus = ad_module(alg, levi, tau[i], -1);
        if (self_plus.dimension != minus.dimension) return false;
        auto restrict = [&](const AdModule & m) {
          std::multiset<std::vector<int>> out;
          for (const auto & w : m.weights) {
            std::vector<int> proj;
            for (std::size_t b = 0; b < alg.rank(); b++)
              if (levi.is_black(b)) proj.push_back(alg.inner(w, alg.simple(b).weight));
            out.insert(proj);
          }
          return out;
        };
        if (restrict(self_plus) != restrict(minus)) return false;
      }
    }

    for (std::size_t i : whites)
      if (tilde_parity[i] != alg.simple(i).parity) return false;

    for (std::size_t i : whites) {
      Weight s = alg.simple(i).weight + tilde[i];
      for (std::size_t b = 0; b < r; b++)
        if (levi.is_black(b) && alg.inner(s, alg.simple(b).weight) != 0) return false;
      for (std::size_t j : whites)
        if (alg.inner(s, alg.simple(j).weight - tilde[j]) != 0) return false;
    }

    if (regular) {
      // cross-check: theta is an involutive isometry
      Theta th = make_theta(alg, levi, tau);
      for (std::size_t i = 0; i < r; i++) {
        if (!(th.apply(th.simple_images[i]) == alg.simple(i).weight)) return false;
        for (std::size_t j = 0; j < r; j++)
          if (alg.inner(th.simple_images[i], th.simple_images[j])
              != alg.inner(alg.simple(i).weight, alg.simple(j).weight))
            return false;
      }
    }
    return true;
  }

  namespace
  {
    void involutions(const std::vector<std::size_t> & whites,
                     TauMap & current, std::vector<TauMap> & out)
    {
      std::size_t first = whites.size();
      for (std::size_t k = 0; k < whites.size(); k++)
        if (current[whites[k]] == static_cast<std::size_t>(-1)) {
          first = k;
          break;
        }
      if (first == whites.size()) {
        out.push_back(current);
        return;
      }
      std::size_t a = whites[first];
      current[a] = a;
      involutions(whites, current, out);
      for (std::size_t k = first + 1; k < whites.size(); k++) {
        std::size_t b = whites[k];
        if (current[b] != static_cast<std::size_t>(-1)) continue;
        current[a] = b;
        current[b] = a;
        involutions(whites, current, out);
        current[b] = static_cast<std::size_t>(-1);
      }
      current[a] = static_cast<std::size_t>(-1);
    }
  }

  std::vector<TripleCandidate> enumerate_taus(std::shared_ptr<const AlgebraData> alg,
                                              const LeviChoice & levi)
  {
    std::size_t r = alg->rank();
    std::vector<std::size_t> whites;
    TauMap base(r, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < r; i++) {
      if (levi.is_black(i)) base[i] = i;
      else whites.push_back(i);
    }
    std::vector<TauMap> taus;
    involutions(whites, base, taus);
    std::vector<TripleCandidate> out;
    for (const auto & t : taus)
      if (check_supersymmetric(*alg, levi, t)) out.push_back({alg, levi, t});
    return out;
  }

}
