#include <doctest.h>

#include "lsa/diagram.hpp"
#include "lsa/invariants.hpp"

#include <memory>

using namespace lsa;

namespace
{

  TripleCandidate make_candidate(Family family, const GradingVector & grading,
                                 const std::vector<std::size_t> & blacks,
                                 const std::vector<std::pair<std::size_t, std::size_t>> & swaps = {})
  {
    TripleCandidate t;
    t.algebra = std::make_shared<AlgebraData>(build_algebra(family, grading));
    t.levi.black.assign(t.alg().rank(), false);
    for (auto b : blacks) t.levi.black[b] = true;
    t.tau.resize(t.alg().rank());
    for (std::size_t i = 0; i < t.tau.size(); i++) t.tau[i] = i;
    for (auto [a, b] : swaps) {
      t.tau[a] = b;
      t.tau[b] = a;
    }
    return t;
  }

  MixtureVector constant_mixture(const TripleCandidate & t, const Rational & value)
  {
    MixtureVector mv;
    for (auto p : t.white_positions()) mv.c[p] = value;
    return mv;
  }

  SubalgebraBasis whole_algebra(const AlgebraData & alg)
  {
    SubalgebraBasis k;
    k.basis = alg.basis();
    k.dimension = alg.dimension;
    return k;
  }

  bool in_span(const InvariantSpace & space, const SuperMatrix & m)
  {
    std::vector<RatVector> flat;
    for (const auto & b : space.basis) flat.push_back(b.flatten());
    return span_membership(flat, m.flatten());
  }

}

TEST_CASE("invariants of the full algebra")
{
  // adjoint invariants of an irreducible matrix algebra are the scalars
  for (GradingVector g : {GradingVector{0, 1}, GradingVector{0, 0, 1}}) {
    auto alg = build_algebra(Family::gl, g);
    auto k = whole_algebra(alg);
    auto adj = solve_invariants(k, ActionKind::adjoint, 0);
    CHECK(adj.dimension == 1);
    SuperMatrix id(alg.N, g);
    for (std::size_t i = 0; i < alg.N; i++) id.mat.at(i, i) = 1;
    CHECK(in_span(adj, id));
    CHECK(is_invariant(k, ActionKind::adjoint, id));

    // while the twisted action fixes nothing at all
    CHECK(solve_invariants(k, ActionKind::form_twisted, 0).dimension == 0);
    CHECK(solve_invariants(k, ActionKind::form_twisted, -1).dimension == 0);
  }

  // the flip itself is the only d-twisted invariant of the whole algebra
  auto so4 = build_algebra(Family::osp_even, {0, 0, 0, 0});
  auto k4 = whole_algebra(so4);
  auto dt = solve_invariants(k4, ActionKind::d_twisted, 0);
  REQUIRE(dt.dimension == 1);
  SuperMatrix d(4, so4.grading);
  d.mat.at(0, 0) = 1;
  d.mat.at(3, 3) = 1;
  d.mat.at(1, 2) = 1;
  d.mat.at(2, 1) = 1;
  CHECK(in_span(dt, d));

  // the middle flip needs an even number of coordinates
  auto so5 = build_algebra(Family::osp_odd, {0, 0, 0, 0, 0});
  SuperMatrix a(5, so5.grading);
  CHECK_THROWS_AS(apply_action(ActionKind::d_twisted, so5.simple(0).e, a),
                  std::invalid_argument);
}

TEST_CASE("rank one invariants")
{
  // odd root: the mirror-signed generator is an adjoint invariant
  GradingVector g11{0, 1};
  Rational c = 2;
  auto x = unit_matrix(2, g11, 0, 1) + unit_matrix(2, g11, 1, 0, c);
  auto k = lie_closure({x});
  auto M = unit_matrix(2, g11, 0, 1) - unit_matrix(2, g11, 1, 0, c);
  CHECK(is_invariant(k, ActionKind::adjoint, M));
  CHECK(in_span(solve_invariants(k, ActionKind::adjoint, 1), M));

  // even root: the twisted invariant is diagonal, not the mirrored generator
  auto t = make_candidate(Family::gl, {0, 0}, {});
  auto mv = constant_mixture(t, c);
  auto ke = lie_closure(shaft_generators(t, mv));
  auto A = shaft_invariant(t, mv);
  CHECK(A.mat.at(0, 0) == Rational(1) / c);
  CHECK(A.mat.at(1, 1) == 1);
  CHECK(is_invariant(ke, ActionKind::form_twisted, A));
  auto Meven = unit_matrix(2, GradingVector{0, 0}, 0, 1)
               + unit_matrix(2, GradingVector{0, 0}, 1, 0, c);
  CHECK(!is_invariant(ke, ActionKind::form_twisted, Meven));
}

TEST_CASE("shaft invariants solve the twisted equation")
{
  struct Case
  {
    GradingVector grading;
    std::vector<std::size_t> blacks;
    std::vector<Rational> cs;
  };
  std::vector<Case> cases = {
    {{0, 0, 0}, {}, {2, 3}},
    {{0, 0, 1}, {0}, {2}},
    {{0, 1, 1}, {1}, {2}},
    {{0, 0, 1, 1}, {0}, {2, 3}},
    {{1, 1, 0, 0}, {2}, {5, 7}},
    {{0, 0, 0, 0}, {0, 2}, {3}},
    {{0, 0, 1, 1, 0, 0}, {0, 4}, {2, 3, 5}},
  };
  for (const auto & cs : cases) {
    auto t = make_candidate(Family::gl, cs.grading, cs.blacks);
    MixtureVector mv;
    std::size_t i = 0;
    for (auto p : t.white_positions()) mv.c[p] = cs.cs[i++ % cs.cs.size()];
    auto k = lie_closure(shaft_generators(t, mv));
    auto A = shaft_invariant(t, mv);
    CHECK(is_invariant(k, ActionKind::form_twisted, A));
    auto space = solve_invariants(k, ActionKind::form_twisted, 0);
    CHECK(space.dimension >= 1);
    CHECK(in_span(space, A));
  }

  // the block pattern: skew blocks exactly on the black coordinate pairs
  auto t = make_candidate(Family::gl, {0, 0, 1, 1}, {0});
  MixtureVector mv;
  mv.c[1] = 2;
  mv.c[2] = 3;
  auto A = shaft_invariant(t, mv);
  Rational top = Rational(1) / -6; // 1/(c1 * -c2), the odd-odd white flips sign
  CHECK(A.mat.at(0, 1) == top);
  CHECK(A.mat.at(1, 0) == -top);
  CHECK(A.mat.at(2, 2) == Rational(1) / -3);
  CHECK(A.mat.at(3, 3) == 1);
}

TEST_CASE("shaft validation")
{
  // a lone odd white has no twisted invariant and is rejected
  auto lone = make_candidate(Family::gl, {0, 1}, {});
  CHECK_THROWS_AS(shaft_invariant(lone, constant_mixture(lone, 2)), std::invalid_argument);

  // odd black roots break the block pattern
  auto oddblack = make_candidate(Family::gl, {1, 0, 0, 0}, {0, 2});
  CHECK_THROWS_AS(shaft_invariant(oddblack, constant_mixture(oddblack, 2)),
                  std::invalid_argument);

  // arcs are not shafts
  auto arc = make_candidate(Family::gl, {0, 0, 0, 0}, {}, {{0, 2}});
  CHECK_THROWS_AS(shaft_invariant(arc, constant_mixture(arc, 2)), std::invalid_argument);

  // neither are orthosymplectic diagrams
  auto osp = make_candidate(Family::osp_odd, {0, 0, 0}, {1});
  CHECK_THROWS_AS(shaft_invariant(osp, constant_mixture(osp, 2)), std::invalid_argument);
}

TEST_CASE("outstanding diagram has no twisted invariant")
{
  // the four-node odd middle: twisted invariants vanish for both transposes
  auto t = make_candidate(Family::gl, {0, 0, 1, 1}, {0, 2});
  auto k = lie_closure(mixed_generators(t, constant_mixture(t, 3)));
  for (auto v : {TransposeVariant::form, TransposeVariant::alt})
    CHECK(solve_invariants(k, ActionKind::form_twisted, -1, v).dimension == 0);
  // yet the subalgebra is proper, certified by the sampling route
  CHECK(verify_nontrivial(t, 2, 5).all_proper);
}

TEST_CASE("arc invariants in the general linear case")
{
  // one arc over an odd black node, tau swaps roots of different parity
  auto t = make_candidate(Family::gl, {0, 0, 1, 0}, {1}, {{0, 2}});
  CHECK(check_supersymmetric(t.alg(), t.levi, t.tau));
  Rational c = 2;
  auto k = lie_closure(mixed_generators(t, constant_mixture(t, c)));

  GlInvariantParams p;
  p.N = 4;
  p.m = 1;
  p.grading = t.alg().grading;
  p.lambda = c;
  p.mu = -c;
  p.a = {1};
  p.a_mirror = {c * c};
  auto A = gl_adjoint_invariant(p);
  CHECK(is_invariant(k, ActionKind::adjoint, A));

  auto inv_k = solve_invariants(k, ActionKind::adjoint, 0);
  auto inv_g = solve_invariants(whole_algebra(t.alg()), ActionKind::adjoint, 0);
  CHECK(inv_k.dimension >= 2);
  CHECK(inv_g.dimension == 1);
  CHECK(in_span(inv_k, A));

  // full reversal on gl(5): two nested arcs, chained couplings
  auto t5 = make_candidate(Family::gl, {0, 0, 0, 0, 0}, {}, {{0, 3}, {1, 2}});
  Rational c1 = 2, c2 = 3;
  MixtureVector mv;
  mv.c[0] = c1;
  mv.c[3] = c1;
  mv.c[1] = c2;
  mv.c[2] = c2;
  auto k5 = lie_closure(mixed_generators(t5, mv));
  GlInvariantParams q;
  q.N = 5;
  q.m = 2;
  q.grading = t5.alg().grading;
  q.lambda = c1 * c2;
  q.mu = -c1 * c2;
  q.a = {1, c1};
  q.a_mirror = {c1 * c1 * c2 * c2, c1 * c2 * c2};
  auto A5 = gl_adjoint_invariant(q);
  CHECK(is_invariant(k5, ActionKind::adjoint, A5));

  // parameter validation
  GlInvariantParams bad = p;
  bad.mu = 0;
  CHECK_THROWS_AS(gl_adjoint_invariant(bad), std::invalid_argument);
  bad = p;
  bad.a_mirror = {1};
  CHECK_THROWS_AS(gl_adjoint_invariant(bad), std::invalid_argument);
}

TEST_CASE("doubling the space extends twisted to adjoint invariants")
{
  struct Case
  {
    GradingVector grading;
    std::vector<std::size_t> blacks;
  };
  for (const auto & cs : {Case{{0, 0}, {}}, Case{{0, 0, 1}, {0}}, Case{{0, 0, 1, 1}, {0}}}) {
    auto t = make_candidate(Family::gl, cs.grading, cs.blacks);
    auto mv = constant_mixture(t, 2);
    auto k = lie_closure(shaft_generators(t, mv));
    auto A = shaft_invariant(t, mv);
    for (int eps : {1, -1}) {
      auto E = extend_invariant(t.alg(), k, A, Rational(5), Rational(7), eps);
      REQUIRE(E.size() == 2 * t.alg().N);
      for (const auto & x : k.basis)
        CHECK(super_bracket(doubled_rep(t.alg(), x, eps), E).is_zero());
    }
  }

  // a non-invariant input is rejected
  auto t = make_candidate(Family::gl, {0, 0}, {});
  auto mv = constant_mixture(t, 2);
  auto k = lie_closure(shaft_generators(t, mv));
  SuperMatrix junk = unit_matrix(2, t.alg().grading, 0, 1);
  CHECK_THROWS_AS(extend_invariant(t.alg(), k, junk, 1, 1), std::invalid_argument);
}

TEST_CASE("black tail invariants")
{
  struct Case
  {
    GradingVector grading;
    std::vector<std::size_t> blacks;
  };
  std::vector<Case> cases = {
    {{0, 1, 0, 1, 0}, {1}},            // white head, even
    {{1, 1, 0, 1, 1}, {1}},            // white head, odd
    {{0, 0, 1, 0, 1, 0, 0}, {0, 2}},   // black head
  };
  for (const auto & cs : cases) {
    auto t = make_candidate(Family::osp_odd, cs.grading, cs.blacks);
    Rational c = 3, lambda = 1;
    auto gens = black_tail_generators(t, c);
    auto k = lie_closure(gens);
    auto A = black_tail_invariant(t, c, lambda);
    CHECK(is_invariant(k, ActionKind::adjoint, A));
    auto params = black_tail_params(t, c, lambda);
    CHECK(params.a * params.a_mirror == -params.mu * params.lambda);
    auto space = solve_invariants(k, ActionKind::adjoint, 0);
    CHECK(space.dimension >= 1);
    CHECK(in_span(space, A));
  }

  // only the two reduced diagrams are accepted
  auto bad = make_candidate(Family::osp_odd, {0, 1, 0, 1, 0}, {0});
  CHECK_THROWS_AS(black_tail_generators(bad, 2), std::invalid_argument);
  auto gl = make_candidate(Family::gl, {0, 1}, {});
  CHECK_THROWS_AS(black_tail_generators(gl, 2), std::invalid_argument);
}

TEST_CASE("d-twisted invariants certify shape D with a flipped fork")
{
  auto t = make_candidate(Family::osp_even, {0, 0, 0, 0}, {}, {{0, 1}});
  CHECK(selection_rules(build_ddd(t)).passes);
  auto k = lie_closure(mixed_generators(t, constant_mixture(t, 2)));
  auto inv_k = solve_invariants(k, ActionKind::d_twisted, 0);
  auto inv_g = solve_invariants(whole_algebra(t.alg()), ActionKind::d_twisted, 0);
  CHECK(inv_g.dimension == 1);
  CHECK(inv_k.dimension > inv_g.dimension);
}
