#ifndef LSA_SPHERICAL_HPP
#define LSA_SPHERICAL_HPP

#include "lsa/weyl.hpp"

#include <map>
#include <vector>

namespace lsa
{

  /// Nonzero coefficient per white simple-root position.
  struct MixtureVector
  {
    std::map<std::size_t, Rational> c;
    bool tau_symmetric = true; // require c_{tau(alpha)} = c_alpha

    const Rational & at(std::size_t white_pos) const;
  };

  struct SubalgebraBasis
  {
    std::vector<SuperMatrix> generators;
    std::vector<SuperMatrix> basis; // homogeneous, canonical echelon order
    std::size_t dimension = 0;
  };

  /// Generators of k: e, f, h for the black roots plus the mixed x_alpha
  /// (and y_alpha where nonzero) for the white ones.
  std::vector<SuperMatrix> mixed_generators(const TripleCandidate & t,
                                            const MixtureVector & c);

  /// Smallest bracket-closed subspace containing the generators.
  SubalgebraBasis lie_closure(const std::vector<SuperMatrix> & gens);

  /// g = k + b for the standard Borel (Cartan plus positive root vectors)?
  bool is_spherical(const SubalgebraBasis & k, const AlgebraData & alg);

  /// Dimension of the subalgebra generated by all simple root vectors of g
  /// (drops the one-dimensional center of gl).
  std::size_t root_generated_dimension(const AlgebraData & alg);

  /// k swallows every root space. Cross-checked against the criterion that
  /// some white simple root has both its root vectors inside k.
  bool is_trivial(const SubalgebraBasis & k, const TripleCandidate & t);

  struct NontrivialSample
  {
    std::vector<Rational> c; // per diagram position, zero on black
    std::size_t dim_g = 0;
    std::size_t dim_k = 0;
    bool spherical = false;
    bool proper = false;
  };

  struct NontrivialReport
  {
    std::vector<NontrivialSample> samples;
    bool all_proper = true;
    bool all_spherical = true;
  };

  NontrivialReport verify_nontrivial(const TripleCandidate & t, std::size_t samples,
                                     unsigned seed);

}

#endif
