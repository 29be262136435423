#ifndef LSA_ALGEBRA_HPP
#define LSA_ALGEBRA_HPP

#include "lsa/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lsa
{

  enum class Family { gl, osp_odd, osp_even, spo };
  enum class Shape { A, B, C, D };

  std::string family_name(Family f);
  std::optional<Family> family_from_name(const std::string & name);
  std::string shape_name(Shape s);

  /// Z2-grading of the natural module: parities[i] = deg(v_i).
  using GradingVector = std::vector<int>;

  /// Integer vector over the basic weights: {zeta_1..zeta_N} for gl,
  /// {zeta_1..zeta_n} for the orthosymplectic families (zeta_{i'} = -zeta_i).
  struct Weight
  {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::size_t dim) : coords(dim, 0) {}

    bool operator==(const Weight & o) const { return coords == o.coords; }
    bool operator<(const Weight & o) const { return coords < o.coords; }
    Weight operator+(const Weight & o) const;
    Weight operator-(const Weight & o) const;
    Weight operator-() const;
    bool is_zero() const;
  };

  /// Inner product with the diagonal form diag(signature).
  int inner(const Weight & a, const Weight & b, const std::vector<int> & signature);

  /// N x N rational matrix tagged with the grading of V; entry (i,j) has
  /// parity bar(i)+bar(j).
  struct SuperMatrix
  {
    RatMatrix mat;
    GradingVector grading;

    SuperMatrix() = default;
    SuperMatrix(std::size_t n, const GradingVector & g) : mat(n, n), grading(g) {}

    std::size_t size() const { return mat.rows(); }
    bool is_zero() const { return mat.is_zero(); }

    /// 0, 1, or -1 if entries of both parities are present. Zero matrix is 0.
    int parity() const;
    /// Projection onto the entries of the given parity.
    SuperMatrix parity_component(int p) const;

    SuperMatrix operator+(const SuperMatrix & o) const;
    SuperMatrix operator-(const SuperMatrix & o) const;
    SuperMatrix scaled(const Rational & s) const;
    bool operator==(const SuperMatrix & o) const { return mat == o.mat; }

    RatVector flatten() const;
  };

  SuperMatrix unit_matrix(std::size_t n, const GradingVector & g,
                          std::size_t i, std::size_t j, const Rational & coeff = 1);

  /// [x,y] = xy - (-1)^{|x||y|} yx on homogeneous parts, extended bilinearly.
  SuperMatrix super_bracket(const SuperMatrix & x, const SuperMatrix & y);

  enum class TransposeVariant
  {
    form, // A^t_{ij} = (-1)^{bar i (bar i + bar j)} A_{ji}; keeps the osp form invariant
    alt   // A^t_{ij} = (-1)^{(bar i + bar j) bar j} A_{ji}
  };

  SuperMatrix super_transpose(const SuperMatrix & a,
                              TransposeVariant variant = TransposeVariant::form);

  /// A positive root with its matrix realization.
  struct PositiveRoot
  {
    Weight weight;
    int parity = 0;
    SuperMatrix e;
    SuperMatrix f;
  };

  struct AlgebraData
  {
    Family family = Family::gl;
    Shape shape = Shape::A;
    GradingVector grading;
    std::size_t N = 0;           // dimension of the natural module
    std::size_t lattice_dim = 0; // N for gl, n for osp
    std::vector<int> weight_signature; // (zeta_i, zeta_i) per coordinate

    std::vector<PositiveRoot> positive_roots;
    std::vector<std::size_t> simple_idx; // indices into positive_roots, diagram order
    std::vector<SuperMatrix> cartan_basis;
    std::optional<SuperMatrix> form_C;
    std::vector<int> signatures; // epsilon_k for osp families, empty for gl
    std::size_t dimension = 0;

    std::size_t rank() const { return simple_idx.size(); }
    const PositiveRoot & simple(std::size_t i) const { return positive_roots[simple_idx[i]]; }
    int inner(const Weight & a, const Weight & b) const
    {
      return lsa::inner(a, b, weight_signature);
    }
    /// Index into positive_roots for a weight, or nullopt (sign-insensitive:
    /// matches either w or -w, flag reports which).
    std::optional<std::size_t> find_root(const Weight & w, bool * negative = nullptr) const;
    bool is_root(const Weight & w) const;

    /// Homogeneous spanning set: all e, f and the Cartan basis.
    std::vector<SuperMatrix> basis() const;
  };

  bool valid_grading(Family family, const GradingVector & grading);
  AlgebraData build_algebra(Family family, const GradingVector & grading);

  /// Diagonal h_w with mu(h_w) = (mu, w) for all weights mu.
  SuperMatrix cartan_dual(const AlgebraData & alg, const Weight & w);

  /// Evaluate a weight on a diagonal matrix: sum over coords.
  Rational evaluate_weight(const AlgebraData & alg, const Weight & w, const SuperMatrix & h);

  std::string algebra_to_json(const AlgebraData & alg);

}

#endif
