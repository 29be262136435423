#ifndef LSA_INVARIANTS_HPP
#define LSA_INVARIANTS_HPP

#include "lsa/spherical.hpp"

namespace lsa
{

  enum class ActionKind
  {
    adjoint,      // x . A = [x, A]
    form_twisted, // x . A = xA + (-1)^{|x||A|} A x^t
    d_twisted     // x . A = xA - A d x d, d the middle flip (even N)
  };

  struct InvariantSpace
  {
    ActionKind action = ActionKind::adjoint;
    int parity = -1; // 0, 1, or -1 for the full space
    std::vector<SuperMatrix> basis;
    std::size_t dimension = 0;
  };

  /// Image of A under the action of a single element x.
  SuperMatrix apply_action(ActionKind action, const SuperMatrix & x, const SuperMatrix & A,
                           TransposeVariant variant = TransposeVariant::alt);

  /// Nullspace of the stacked system over the entries of A, restricted to one
  /// parity block when parity is 0 or 1.
  InvariantSpace solve_invariants(const SubalgebraBasis & k, ActionKind action, int parity,
                                  TransposeVariant variant = TransposeVariant::alt);

  bool is_invariant(const SubalgebraBasis & k, ActionKind action, const SuperMatrix & A,
                    TransposeVariant variant = TransposeVariant::alt);

  /// Two-eigenvalue invariant of the arc subalgebras in gl: (mu+lambda) on the
  /// first m coordinates, lambda on the middle, anti-diagonal a, a' couplings.
  struct GlInvariantParams
  {
    std::size_t N = 0;
    std::size_t m = 0;
    GradingVector grading;
    Rational lambda;
    Rational mu;
    std::vector<Rational> a;        // size m, upper couplings e_{i,i'}
    std::vector<Rational> a_mirror; // size m, lower couplings e_{i',i}
  };

  SuperMatrix gl_adjoint_invariant(const GlInvariantParams & p);

  /// Mixed generators in the normalization under which the block invariant
  /// below is exact: black e, f, h; white x = e + s c f~ with s = -1 for even
  /// and +1 for odd whites, f~ folding the adjacent black roots into f.
  std::vector<SuperMatrix> shaft_generators(const TripleCandidate & t, const MixtureVector & c);

  /// Block-diagonal invariant of a shaft subalgebra under the twisted action:
  /// skew 2x2 blocks on the black sl(2) coordinate pairs, scalars elsewhere,
  /// coefficients accumulating 1/c over the whites below each block.
  SuperMatrix shaft_invariant(const TripleCandidate & t, const MixtureVector & c);

  /// The pairing maps between V and its weight-negated copy W (basis reversed):
  /// C : W -> V sends slot N-1-i to v_i; S : V -> v_i -> eps (-1)^{bar i} slot N-1-i.
  RatMatrix pairing_C(const AlgebraData & alg);
  RatMatrix pairing_S(const AlgebraData & alg, int epsilon);

  /// Representation on the reversed copy W: x -> -S x^t S^{-1}.
  SuperMatrix reversed_rep(const AlgebraData & alg, const SuperMatrix & x, int epsilon);

  /// Doubled-space image rho(x) + reversed_rep(x) as one 2N matrix.
  SuperMatrix doubled_rep(const AlgebraData & alg, const SuperMatrix & x, int epsilon);

  /// Embed a twisted invariant A into the adjoint invariants of End(V + W):
  /// [[mu, A S^{-1}], [A~ C^{-1}, nu]] with A~ solved on the reversed copy.
  SuperMatrix extend_invariant(const AlgebraData & alg, const SubalgebraBasis & k,
                               const SuperMatrix & A, const Rational & mu, const Rational & nu,
                               int epsilon = 1);

  /// Generators for the reduced black-tail diagrams of white rank one:
  /// tail sl(2) (plus the left black for the three-node form) and the mixed
  /// generator in the tail-adapted normalization.
  std::vector<SuperMatrix> black_tail_generators(const TripleCandidate & t, const Rational & c);

  /// Parameters of the rank-one black-tail invariant derived from lambda and c.
  struct BlackTailParams
  {
    Rational lambda;
    Rational mu;
    Rational a;
    Rational a_mirror;
    std::size_t m = 0; // 1 if the leftmost node is white, 2 if black
  };

  BlackTailParams black_tail_params(const TripleCandidate & t, const Rational & c,
                                    const Rational & lambda);

  SuperMatrix black_tail_invariant(const TripleCandidate & t, const Rational & c,
                                   const Rational & lambda);

}

#endif
