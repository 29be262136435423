#ifndef LSA_WEYL_HPP
#define LSA_WEYL_HPP

#include "lsa/algebra.hpp"

#include <memory>
#include <vector>

namespace lsa
{

  /// Z-linear map on weight coordinates, stored by images of the basis.
  struct LatticeMap
  {
    std::vector<Weight> image; // image[i] = map(zeta_i)

    static LatticeMap identity(std::size_t dim);
    Weight apply(const Weight & w) const;
    LatticeMap compose(const LatticeMap & inner) const; // this after inner
    bool operator==(const LatticeMap & o) const { return image == o.image; }
  };

  /// Subset of simple roots (the black nodes), by diagram position.
  struct LeviChoice
  {
    std::vector<bool> black; // indexed by simple-root position

    bool is_black(std::size_t i) const { return black[i]; }
    std::vector<std::size_t> black_positions() const;
  };

  /// Connected components of the black sub-diagram (adjacency = nonzero
  /// inner product of simple roots).
  std::vector<std::vector<std::size_t>> levi_components(const AlgebraData & alg,
                                                        const LeviChoice & levi);

  /// zeta_i -> zeta_{i'}: coordinate reversal for gl, -id for osp.
  LatticeMap weyl_operator(const AlgebraData & alg);

  /// Product of per-component operators, identity on the orthogonal complement.
  LatticeMap weyl_operator_levi(const AlgebraData & alg, const LeviChoice & levi);

  /// Does w_l preserve the root system?
  bool is_regular(const AlgebraData & alg, const LeviChoice & levi);

  /// Involutive permutation of the simple-root positions fixing black ones.
  using TauMap = std::vector<std::size_t>;

  struct TripleCandidate
  {
    std::shared_ptr<const AlgebraData> algebra;
    LeviChoice levi;
    TauMap tau;

    const AlgebraData & alg() const { return *algebra; }
    std::vector<std::size_t> white_positions() const;
  };

  /// w_l(tau(alpha)) for a white simple root, by diagram position.
  Weight tilde_root(const AlgebraData & alg, const LeviChoice & levi,
                    const TauMap & tau, std::size_t white_pos);

  /// The l-module generated by a root vector under repeated ad-action of
  /// the black e's and f's.
  struct AdModule
  {
    std::size_t dimension = 0;
    std::vector<Weight> weights; // sorted, with multiplicity
    Weight highest;
    Weight lowest;
    int highest_parity = 0;
  };

  /// direction +1: module of e_alpha inside m_+; -1: module of f_alpha.
  AdModule ad_module(const AlgebraData & alg, const LeviChoice & levi,
                     std::size_t root_pos, int direction);

  /// Highest weight of the module generated by e of the given simple root.
  Weight module_highest_weight_oracle(const AlgebraData & alg, const LeviChoice & levi,
                                      std::size_t root_pos);

  bool check_supersymmetric(const AlgebraData & alg, const LeviChoice & levi,
                            const TauMap & tau);

  /// theta = -w_l o tau extended linearly; expressed on arbitrary weights via
  /// the simple-root basis. Only valid for regular levi.
  struct Theta
  {
    const AlgebraData * alg;
    std::vector<Weight> simple_images; // theta(alpha_i) per diagram position
    Weight apply(const Weight & w) const; // w must lie in the root lattice
  };

  Theta make_theta(const AlgebraData & alg, const LeviChoice & levi, const TauMap & tau);

  std::vector<TripleCandidate> enumerate_taus(std::shared_ptr<const AlgebraData> alg,
                                              const LeviChoice & levi);

}

#endif
