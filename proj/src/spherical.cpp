#include "lsa/spherical.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace lsa
{

  namespace
  {

    struct Echelon
    {
      std::vector<RatVector> rows;
      std::vector<std::size_t> pivots;

      // forward-reduce v against the stored rows; keep it if independent
      bool insert(RatVector v)
      {
        for (std::size_t r = 0; r < rows.size(); r++) {
          const Rational coeff = v[pivots[r]]; // copy: the loop below clobbers this slot
          if (coeff == 0) continue;
          for (std::size_t j = 0; j < v.size(); j++) v[j] -= coeff * rows[r][j];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) p++;
        if (p == v.size()) return false;
        Rational lead = v[p];
        for (auto & x : v) x /= lead;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
      }
    };

    SuperMatrix unflatten(const RatVector & v, std::size_t n, const GradingVector & g)
    {
      SuperMatrix m(n, g);
      for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++) m.mat.at(i, j) = v[i * n + j];
      return m;
    }

    std::size_t plus_coord(const Weight & w)
    {
      for (std::size_t i = 0; i < w.coords.size(); i++)
        if (w.coords[i] > 0) return i;
      throw std::logic_error("weight has no positive coordinate");
    }

    std::size_t minus_coord(const Weight & w)
    {
      for (std::size_t i = 0; i < w.coords.size(); i++)
        if (w.coords[i] < 0) return i;
      throw std::logic_error("weight has no negative coordinate");
    }

    bool identity_tau(const TauMap & tau)
    {
      for (std::size_t i = 0; i < tau.size(); i++)
        if (tau[i] != i) return false;
      return true;
    }

    // f-vector of weight -(alpha + adjacent blacks) by folding the black
    // neighbours into f_alpha, nearest first, left side before right
    SuperMatrix nested_f(const AlgebraData & alg, const LeviChoice & levi,
                         std::size_t pos, const Weight & tilde)
    {
      SuperMatrix f = alg.simple(pos).f;
      Weight reached = alg.simple(pos).weight;
      auto fold_from = [&](std::size_t start, int step) {
        for (std::size_t q = start; q < alg.rank() && levi.is_black(q);
             q = static_cast<std::size_t>(static_cast<long>(q) + step)) {
          f = super_bracket(alg.simple(q).f, f);
          reached = reached + alg.simple(q).weight;
          if (step < 0 && q == 0) break;
        }
      };
      if (pos > 0) fold_from(pos - 1, -1);
      fold_from(pos + 1, +1);
      if (!(reached == tilde) || f.is_zero())
        throw std::logic_error("bracket normalization does not reach the mirrored root");
      return f;
    }

  }

  const Rational & MixtureVector::at(std::size_t white_pos) const
  {
    auto it = c.find(white_pos);
    if (it == c.end() || it->second == 0)
      throw std::invalid_argument("missing or zero mixture coefficient");
    return it->second;
  }

  std::vector<SuperMatrix> mixed_generators(const TripleCandidate & t,
                                            const MixtureVector & c)
  {
    const AlgebraData & alg = t.alg();
    const bool tau_id = identity_tau(t.tau);
    std::vector<SuperMatrix> gens;

    for (std::size_t b : t.levi.black_positions()) {
      const auto & root = alg.simple(b);
      gens.push_back(root.e);
      gens.push_back(root.f);
      gens.push_back(super_bracket(root.e, root.f));
    }

    for (std::size_t p : t.white_positions()) {
      const Rational & cp = c.at(p);
      if (c.tau_symmetric && c.at(t.tau[p]) != cp)
        throw std::invalid_argument("mixture coefficients must match along tau");

      const auto & root = alg.simple(p);
      Weight tilde = tilde_root(alg, t.levi, t.tau, p);

      bool self_fixed_odd = alg.family == Family::gl && !tau_id && t.tau[p] == p
                            && root.parity == 1;
      if (!self_fixed_odd && !(tilde == root.weight)) {
        SuperMatrix y = cartan_dual(alg, root.weight) - cartan_dual(alg, tilde);
        if (!y.is_zero()) gens.push_back(y);
      }

      if (alg.family != Family::gl) {
        bool negative = false;
        auto idx = alg.find_root(tilde, &negative);
        if (!idx || negative)
          throw std::logic_error("mirrored root is not a positive root");
        gens.push_back(root.e + alg.positive_roots[*idx].f.scaled(cp));
        continue;
      }

      if (tilde == root.weight && (tau_id || !self_fixed_odd)) {
        gens.push_back(root.e + root.f.scaled(cp));
        continue;
      }

      if (tau_id || (t.tau[p] == p && root.parity == 0)) {
        // alternating-strip normalization: fold the black neighbours into f
        Rational sign = root.parity == 1 ? Rational(-1) : Rational(1);
        gens.push_back(root.e + nested_f(alg, t.levi, p, tilde).scaled(sign * cp));
        continue;
      }

      std::size_t a = plus_coord(root.weight);
      std::size_t b = minus_coord(tilde);
      if (self_fixed_odd) {
        // generator of weight alpha + mirror(alpha), coefficient squared
        Rational sign = (alg.grading[a] + alg.grading[b]) % 2 == 1 ? -1 : 1;
        gens.push_back(unit_matrix(alg.N, alg.grading, a, b, sign)
                       + unit_matrix(alg.N, alg.grading, b, a, cp * cp));
      } else {
        gens.push_back(unit_matrix(alg.N, alg.grading, a, a + 1)
                       + unit_matrix(alg.N, alg.grading, b, plus_coord(tilde), cp));
      }
    }
    return gens;
  }

  SubalgebraBasis lie_closure(const std::vector<SuperMatrix> & gens)
  {
    SubalgebraBasis out;
    out.generators = gens;
    if (gens.empty()) return out;
    const std::size_t n = gens.front().size();
    const GradingVector & g = gens.front().grading;

    Echelon ech;
    std::vector<SuperMatrix> elems;
    auto add = [&](const SuperMatrix & m) {
      for (int p : {0, 1}) {
        SuperMatrix comp = m.parity_component(p);
        if (!comp.is_zero() && ech.insert(comp.flatten())) elems.push_back(comp);
      }
    };
    for (const auto & m : gens) add(m);

    for (std::size_t i = 0; i < elems.size(); i++)
      for (std::size_t j = 0; j <= i; j++) add(super_bracket(elems[i], elems[j]));

    RatMatrix stacked(0, n * n);
    for (const auto & m : elems) stacked.append_row(m.flatten());
    auto r = rref(stacked);
    for (std::size_t i = 0; i < r.rank; i++) out.basis.push_back(unflatten(r.reduced.row(i), n, g));
    out.dimension = r.rank;
    return out;
  }

  bool is_spherical(const SubalgebraBasis & k, const AlgebraData & alg)
  {
    RatMatrix big(0, alg.N * alg.N);
    for (const auto & m : alg.basis()) big.append_row(m.flatten());
    for (const auto & m : k.basis) big.append_row(m.flatten());
    if (rank_of(big) != alg.dimension)
      throw std::invalid_argument("subalgebra does not sit inside the algebra");

    RatMatrix borel(0, alg.N * alg.N);
    for (const auto & m : k.basis) borel.append_row(m.flatten());
    for (const auto & m : alg.cartan_basis) borel.append_row(m.flatten());
    for (const auto & r : alg.positive_roots) borel.append_row(r.e.flatten());
    return rank_of(borel) == alg.dimension;
  }

  std::size_t root_generated_dimension(const AlgebraData & alg)
  {
    std::vector<SuperMatrix> gens;
    for (std::size_t i = 0; i < alg.rank(); i++) {
      gens.push_back(alg.simple(i).e);
      gens.push_back(alg.simple(i).f);
    }
    return lie_closure(gens).dimension;
  }

  bool is_trivial(const SubalgebraBasis & k, const TripleCandidate & t)
  {
    const AlgebraData & alg = t.alg();
    bool by_dimension = k.dimension >= root_generated_dimension(alg);

    std::vector<RatVector> flat;
    for (const auto & m : k.basis) flat.push_back(m.flatten());
    bool by_roots = false;
    for (std::size_t p : t.white_positions()) {
      if (span_membership(flat, alg.simple(p).e.flatten())
          && span_membership(flat, alg.simple(p).f.flatten())) {
        by_roots = true;
        break;
      }
    }

    if (by_dimension != by_roots)
      throw std::logic_error("triviality criteria disagree");
    return by_dimension;
  }

  NontrivialReport verify_nontrivial(const TripleCandidate & t, std::size_t samples,
                                     unsigned seed)
  {
    const AlgebraData & alg = t.alg();
    static const std::vector<Rational> pool = {
      Rational(1), Rational(-1), Rational(2), Rational(-2),
      Rational(1) / 2, Rational(-1) / 2, Rational(3), Rational(-3)};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

    NontrivialReport report;
    std::set<std::vector<Rational>> seen;
    for (std::size_t s = 0; s < samples; s++) {
      MixtureVector mv;
      std::vector<Rational> key(alg.rank(), Rational(0));
      for (int attempt = 0; attempt < 64; attempt++) {
        mv.c.clear();
        for (std::size_t p : t.white_positions()) {
          if (t.tau[p] < p) {
            mv.c[p] = mv.c[t.tau[p]];
            continue;
          }
          mv.c[p] = pool[pick(rng)];
        }
        for (std::size_t i = 0; i < alg.rank(); i++)
          key[i] = t.levi.is_black(i) ? Rational(0) : mv.c[i];
        if (seen.insert(key).second) break;
      }

      auto k = lie_closure(mixed_generators(t, mv));
      NontrivialSample sample;
      sample.c = key;
      sample.dim_g = alg.dimension;
      sample.dim_k = k.dimension;
      sample.spherical = is_spherical(k, alg);
      sample.proper = !is_trivial(k, t);
      report.all_proper = report.all_proper && sample.proper;
      report.all_spherical = report.all_spherical && sample.spherical;
      report.samples.push_back(std::move(sample));
    }
    return report;
  }

}
