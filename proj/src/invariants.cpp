#include "lsa/invariants.hpp"

#include "lsa/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsa
{

  namespace
  {

    SuperMatrix mul(const SuperMatrix & a, const SuperMatrix & b)
    {
      SuperMatrix out(a.size(), a.grading);
      out.mat = a.mat * b.mat;
      return out;
    }

    SuperMatrix unflatten(const RatVector & v, std::size_t n, const GradingVector & g)
    {
      SuperMatrix m(n, g);
      for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++) m.mat.at(i, j) = v[i * n + j];
      return m;
    }

    // swap of the two middle coordinates, identity elsewhere
    SuperMatrix middle_flip(std::size_t n, const GradingVector & g)
    {
      if (n % 2 != 0)
        throw std::invalid_argument("middle flip needs an even number of coordinates");
      SuperMatrix d(n, g);
      for (std::size_t i = 0; i < n; i++) d.mat.at(i, i) = 1;
      d.mat.at(n / 2 - 1, n / 2 - 1) = 0;
      d.mat.at(n / 2, n / 2) = 0;
      d.mat.at(n / 2 - 1, n / 2) = 1;
      d.mat.at(n / 2, n / 2 - 1) = 1;
      return d;
    }

    int sgn_pow(int k) { return k % 2 == 0 ? 1 : -1; }

    bool identity_tau(const TauMap & tau)
    {
      for (std::size_t i = 0; i < tau.size(); i++)
        if (tau[i] != i) return false;
      return true;
    }

    const std::vector<SuperMatrix> & members(const SubalgebraBasis & k)
    {
      if (!k.basis.empty()) return k.basis;
      return k.generators;
    }

  }

  SuperMatrix apply_action(ActionKind action, const SuperMatrix & x, const SuperMatrix & A,
                           TransposeVariant variant)
  {
    if (x.size() != A.size()) throw std::invalid_argument("size mismatch in the action");

    if (action == ActionKind::adjoint) return super_bracket(x, A);

    if (action == ActionKind::d_twisted) {
      SuperMatrix d = middle_flip(x.size(), x.grading);
      return mul(x, A) - mul(mul(A, d), mul(x, d));
    }

    SuperMatrix out(x.size(), x.grading);
    for (int xp : {0, 1}) {
      SuperMatrix xc = x.parity_component(xp);
      if (xc.is_zero()) continue;
      SuperMatrix xt = super_transpose(xc, variant);
      for (int ap : {0, 1}) {
        SuperMatrix ac = A.parity_component(ap);
        if (ac.is_zero()) continue;
        SuperMatrix term = mul(xc, ac);
        SuperMatrix twist = mul(ac, xt);
        out = out + (xp * ap % 2 == 1 ? term - twist : term + twist);
      }
    }
    return out;
  }

  InvariantSpace solve_invariants(const SubalgebraBasis & k, ActionKind action, int parity,
                                  TransposeVariant variant)
  {
    const auto & gens = members(k);
    if (gens.empty()) throw std::invalid_argument("empty subalgebra");
    const std::size_t n = gens.front().size();
    const GradingVector & g = gens.front().grading;

    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t i = 0; i < n; i++)
      for (std::size_t j = 0; j < n; j++)
        if (parity < 0 || (g[i] + g[j]) % 2 == parity) unknowns.emplace_back(i, j);

    RatMatrix sys(0, unknowns.size());
    for (const auto & x : gens) {
      std::vector<RatVector> rows(n * n, RatVector(unknowns.size(), Rational(0)));
      for (std::size_t u = 0; u < unknowns.size(); u++) {
        auto [i, j] = unknowns[u];
        SuperMatrix image = apply_action(action, x, unit_matrix(n, g, i, j), variant);
        RatVector flat = image.flatten();
        for (std::size_t r = 0; r < n * n; r++) rows[r][u] = flat[r];
      }
      for (auto & r : rows) sys.append_row(std::move(r));
    }

    // canonicalize the solution space through one more reduction
    RatMatrix sols(0, unknowns.size());
    for (const auto & v : nullspace(sys)) sols.append_row(v);
    auto reduced = rref(sols);

    InvariantSpace out;
    out.action = action;
    out.parity = parity;
    for (std::size_t r = 0; r < reduced.rank; r++) {
      RatVector full(n * n, Rational(0));
      RatVector v = reduced.reduced.row(r);
      for (std::size_t u = 0; u < unknowns.size(); u++)
        full[unknowns[u].first * n + unknowns[u].second] = v[u];
      out.basis.push_back(unflatten(full, n, g));
    }
    out.dimension = out.basis.size();
    return out;
  }

  bool is_invariant(const SubalgebraBasis & k, ActionKind action, const SuperMatrix & A,
                    TransposeVariant variant)
  {
    for (const auto & x : members(k))
      if (!apply_action(action, x, A, variant).is_zero()) return false;
    return true;
  }

  SuperMatrix gl_adjoint_invariant(const GlInvariantParams & p)
  {
    if (p.N == 0 || p.grading.size() != p.N || 2 * p.m > p.N)
      throw std::invalid_argument("bad shape for the arc invariant");
    if (p.lambda * p.mu == 0)
      throw std::invalid_argument("both eigenvalues must be nonzero");
    if (p.a.size() != p.m || p.a_mirror.size() != p.m)
      throw std::invalid_argument("need one coupling pair per arc");
    for (std::size_t i = 0; i < p.m; i++)
      if (p.a[i] * p.a_mirror[i] != -p.lambda * p.mu)
        throw std::invalid_argument("couplings must multiply to minus lambda mu");

    SuperMatrix A(p.N, p.grading);
    for (std::size_t i = 0; i < p.m; i++) A.mat.at(i, i) = p.mu + p.lambda;
    for (std::size_t i = p.m; i < p.N - p.m; i++) A.mat.at(i, i) = p.lambda;
    for (std::size_t i = 0; i < p.m; i++) {
      A.mat.at(i, p.N - 1 - i) = p.a[i];
      A.mat.at(p.N - 1 - i, i) = p.a_mirror[i];
    }
    return A;
  }

  namespace
  {

    void require_shaft(const TripleCandidate & t)
    {
      const AlgebraData & alg = t.alg();
      if (alg.family != Family::gl || !identity_tau(t.tau))
        throw std::invalid_argument("not a shaft diagram");
      for (std::size_t i = 0; i + 1 < alg.rank(); i++)
        if (t.levi.is_black(i) && t.levi.is_black(i + 1))
          throw std::invalid_argument("not a shaft diagram");
      for (std::size_t b : t.levi.black_positions())
        if (alg.simple(b).parity != 0)
          throw std::invalid_argument("not a shaft diagram");
      for (std::size_t p = 0; p < alg.rank(); p++) {
        if (t.levi.is_black(p) || alg.simple(p).parity == 0) continue;
        bool left = p > 0 && t.levi.is_black(p - 1);
        bool right = p + 1 < alg.rank() && t.levi.is_black(p + 1);
        if (left == right) throw std::invalid_argument("not a shaft diagram");
      }
      if (!selection_rules(build_ddd(t)).passes)
        throw std::invalid_argument("not a shaft diagram");
    }

  }

  std::vector<SuperMatrix> shaft_generators(const TripleCandidate & t, const MixtureVector & c)
  {
    require_shaft(t);
    const AlgebraData & alg = t.alg();
    std::vector<SuperMatrix> gens;
    for (std::size_t b : t.levi.black_positions()) {
      const auto & root = alg.simple(b);
      gens.push_back(root.e);
      gens.push_back(root.f);
      gens.push_back(super_bracket(root.e, root.f));
    }
    for (std::size_t p : t.white_positions()) {
      const auto & root = alg.simple(p);
      SuperMatrix f = root.f;
      if (p > 0 && t.levi.is_black(p - 1)) f = super_bracket(alg.simple(p - 1).f, f);
      if (p + 1 < alg.rank() && t.levi.is_black(p + 1))
        f = super_bracket(alg.simple(p + 1).f, f);
      Rational sign = root.parity == 1 ? 1 : -1;
      gens.push_back(root.e + f.scaled(sign * c.at(p)));
    }
    return gens;
  }

  SuperMatrix shaft_invariant(const TripleCandidate & t, const MixtureVector & c)
  {
    require_shaft(t);
    const AlgebraData & alg = t.alg();
    const std::size_t n = alg.N;

    // coordinate i collects 1/c over the white positions at or above it; an
    // even white supported on two odd coordinates contributes -c instead
    std::vector<Rational> factor(n, Rational(1));
    for (std::size_t i = n; i-- > 0;) {
      factor[i] = i + 1 < n ? factor[i + 1] : Rational(1);
      if (i < alg.rank() && !t.levi.is_black(i)) {
        Rational ct = c.at(i);
        if (alg.grading[i] == 1 && alg.grading[i + 1] == 1) ct = -ct;
        factor[i] /= ct;
      }
    }

    SuperMatrix A(n, alg.grading);
    for (std::size_t i = 0; i < n; i++) {
      if (i < alg.rank() && t.levi.is_black(i)) {
        A.mat.at(i, i + 1) = factor[i];
        A.mat.at(i + 1, i) = -factor[i];
        i++; // the pair consumes both coordinates
      } else {
        A.mat.at(i, i) = factor[i];
      }
    }
    return A;
  }

  RatMatrix pairing_C(const AlgebraData & alg)
  {
    RatMatrix C(alg.N, alg.N);
    for (std::size_t i = 0; i < alg.N; i++) C.at(i, alg.N - 1 - i) = 1;
    return C;
  }

  RatMatrix pairing_S(const AlgebraData & alg, int epsilon)
  {
    RatMatrix S(alg.N, alg.N);
    for (std::size_t i = 0; i < alg.N; i++)
      S.at(alg.N - 1 - i, i) = epsilon * sgn_pow(alg.grading[i]);
    return S;
  }

  namespace
  {

    GradingVector reversed_grading(const AlgebraData & alg)
    {
      GradingVector g = alg.grading;
      std::reverse(g.begin(), g.end());
      return g;
    }

    // S x^t S^{-1} on the reversed copy, without the overall minus sign
    SuperMatrix conjugated_transpose(const AlgebraData & alg, const SuperMatrix & x, int epsilon)
    {
      RatMatrix S = pairing_S(alg, epsilon);
      RatMatrix Sinv(alg.N, alg.N);
      for (std::size_t i = 0; i < alg.N; i++)
        Sinv.at(i, alg.N - 1 - i) = epsilon * sgn_pow(alg.grading[i]);
      SuperMatrix out(alg.N, reversed_grading(alg));
      out.mat = S * super_transpose(x, TransposeVariant::alt).mat * Sinv;
      return out;
    }

  }

  SuperMatrix reversed_rep(const AlgebraData & alg, const SuperMatrix & x, int epsilon)
  {
    return conjugated_transpose(alg, x, epsilon).scaled(-1);
  }

  SuperMatrix doubled_rep(const AlgebraData & alg, const SuperMatrix & x, int epsilon)
  {
    GradingVector G = alg.grading;
    for (int b : reversed_grading(alg)) G.push_back(b);
    SuperMatrix out(2 * alg.N, G);
    SuperMatrix w = reversed_rep(alg, x, epsilon);
    for (std::size_t i = 0; i < alg.N; i++)
      for (std::size_t j = 0; j < alg.N; j++) {
        out.mat.at(i, j) = x.mat.at(i, j);
        out.mat.at(alg.N + i, alg.N + j) = w.mat.at(i, j);
      }
    return out;
  }

  SuperMatrix extend_invariant(const AlgebraData & alg, const SubalgebraBasis & k,
                               const SuperMatrix & A, const Rational & mu, const Rational & nu,
                               int epsilon)
  {
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be a sign");
    if (!is_invariant(k, ActionKind::form_twisted, A))
      throw std::invalid_argument("matrix is not a twisted invariant of the subalgebra");

    SubalgebraBasis mirrored;
    for (const auto & x : members(k)) mirrored.basis.push_back(conjugated_transpose(alg, x, epsilon));
    mirrored.dimension = mirrored.basis.size();
    auto space = solve_invariants(mirrored, ActionKind::form_twisted, 0);
    if (space.dimension == 0)
      throw std::logic_error("no twisted invariant on the reversed copy");
    const SuperMatrix & mirror_inv = space.basis.front();

    const std::size_t N = alg.N;
    RatMatrix Sinv(N, N), Cinv(N, N);
    for (std::size_t i = 0; i < N; i++) {
      Sinv.at(i, N - 1 - i) = epsilon * sgn_pow(alg.grading[i]);
      Cinv.at(N - 1 - i, i) = 1;
    }
    RatMatrix upper = A.mat * Sinv;
    RatMatrix lower = mirror_inv.mat * Cinv;

    GradingVector G = alg.grading;
    for (int b : reversed_grading(alg)) G.push_back(b);
    SuperMatrix out(2 * N, G);
    for (std::size_t i = 0; i < N; i++) {
      out.mat.at(i, i) = mu;
      out.mat.at(N + i, N + i) = nu;
      for (std::size_t j = 0; j < N; j++) {
        out.mat.at(i, N + j) = upper.at(i, j);
        out.mat.at(N + i, j) = lower.at(i, j);
      }
    }
    return out;
  }

  namespace
  {

    // 1 for the two-node diagram with a white head, 2 with a black head
    std::size_t tail_branch(const TripleCandidate & t)
    {
      const AlgebraData & alg = t.alg();
      if (alg.family != Family::osp_odd)
        throw std::invalid_argument("black-tail form needs the odd orthosymplectic family");
      std::size_t r = alg.rank();
      if (alg.simple(r - 1).parity != 1 || !t.levi.is_black(r - 1))
        throw std::invalid_argument("tail root must be black and non-isotropic");
      if (r == 2 && !t.levi.is_black(0)) return 1;
      if (r == 3 && t.levi.is_black(0) && !t.levi.is_black(1)) return 2;
      throw std::invalid_argument("not a reduced black-tail diagram");
    }

  }

  std::vector<SuperMatrix> black_tail_generators(const TripleCandidate & t, const Rational & c)
  {
    std::size_t branch = tail_branch(t);
    const AlgebraData & alg = t.alg();
    const std::size_t N = alg.N;
    const GradingVector & g = alg.grading;
    if (c == 0) throw std::invalid_argument("mixture coefficient must be nonzero");

    std::vector<SuperMatrix> gens;
    for (std::size_t b : t.levi.black_positions()) {
      const auto & root = alg.simple(b);
      gens.push_back(root.e);
      gens.push_back(root.f);
      gens.push_back(super_bracket(root.e, root.f));
    }

    // coordinates of the white root and its right neighbour
    std::size_t w = branch == 1 ? 0 : 1;
    int b1 = g[w], b2 = g[w + 1];
    int s1 = sgn_pow(b1 * (b1 + b2));
    int s2 = sgn_pow(b2 * (b1 + b2));
    int eps2 = alg.signatures[w + 1];

    SuperMatrix x = unit_matrix(N, g, w, w + 1, -s2)
                    + unit_matrix(N, g, N - 2 - w, N - 1 - w);
    if (branch == 1)
      x = x + unit_matrix(N, g, N - 2, 0, Rational(-eps2 * s1) * c)
          + unit_matrix(N, g, N - 1, 1, c);
    else
      x = x + unit_matrix(N, g, N - 3, 0, Rational(-eps2 * s1) * c)
          + unit_matrix(N, g, N - 1, 2, c);
    gens.push_back(x);
    return gens;
  }

  BlackTailParams black_tail_params(const TripleCandidate & t, const Rational & c,
                                    const Rational & lambda)
  {
    std::size_t branch = tail_branch(t);
    const AlgebraData & alg = t.alg();
    if (c == 0 || lambda == 0) throw std::invalid_argument("parameters must be nonzero");

    std::size_t w = branch == 1 ? 0 : 1;
    int b1 = alg.grading[w], b2 = alg.grading[w + 1];
    int s1 = sgn_pow(b1 * (b1 + b2));
    int s2 = sgn_pow(b2 * (b1 + b2));
    int eps1 = alg.signatures[w];
    int eps2 = alg.signatures[w + 1];

    BlackTailParams p;
    p.lambda = lambda;
    p.m = branch == 1 ? 1 : 2;
    if (branch == 1) {
      p.mu = Rational(-eps1) * lambda;
      p.a = Rational(-eps2 * s1) * lambda / c;
      p.a_mirror = Rational(-s2) * lambda * c;
    } else {
      p.mu = Rational(eps1) * lambda;
      p.a = Rational(-eps2 * s1) * lambda / c;
      p.a_mirror = Rational(s2) * lambda * c;
    }
    if (p.a * p.a_mirror != -p.mu * p.lambda)
      throw std::logic_error("black-tail couplings break the determinant relation");
    return p;
  }

  SuperMatrix black_tail_invariant(const TripleCandidate & t, const Rational & c,
                                   const Rational & lambda)
  {
    BlackTailParams p = black_tail_params(t, c, lambda);
    const AlgebraData & alg = t.alg();
    const std::size_t N = alg.N;

    SuperMatrix A(N, alg.grading);
    for (std::size_t i = 0; i < p.m; i++) A.mat.at(i, i) = p.mu + p.lambda;
    for (std::size_t i = p.m; i < N - p.m; i++) A.mat.at(i, i) = p.lambda;
    if (p.m == 1) {
      A.mat.at(0, N - 1) = p.a;
      A.mat.at(N - 1, 0) = p.a_mirror;
    } else {
      A.mat.at(0, N - 2) = p.a;
      A.mat.at(1, N - 1) = -p.a;
      A.mat.at(N - 2, 0) = p.a_mirror;
      A.mat.at(N - 1, 1) = -p.a_mirror;
    }
    return A;
  }

}
