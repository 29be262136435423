#ifndef LSA_MATRIX_HPP
#define LSA_MATRIX_HPP

#include "lsa/rational.hpp"

#include <cstddef>
#include <vector>

namespace lsa
{

  using RatVector = std::vector<Rational>;

  /// Dense exact-rational matrix, row major. Everything here is tiny
  /// (at most a couple hundred columns), so no sparsity games.
  class RatMatrix
  {
  public:
    RatMatrix() : m_rows(0), m_cols(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
      : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }

    Rational & at(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    const Rational & at(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

    bool is_zero() const;
    bool operator==(const RatMatrix & other) const
    {
      return m_rows == other.m_rows && m_cols == other.m_cols && m_data == other.m_data;
    }

    RatMatrix operator+(const RatMatrix & other) const;
    RatMatrix operator-(const RatMatrix & other) const;
    RatMatrix operator*(const RatMatrix & other) const;
    RatMatrix scaled(const Rational & s) const;
    RatMatrix transpose() const;

    void append_row(const RatVector & row);
    RatVector row(std::size_t i) const;

  private:
    std::size_t m_rows;
    std::size_t m_cols;
    std::vector<Rational> m_data;
  };

  struct RrefResult
  {
    RatMatrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_columns;
  };

  /// Unique reduced row-echelon form (Gauss-Jordan over Q).
  RrefResult rref(const RatMatrix & m);

  /// Basis of the right nullspace {v : m v = 0}, one vector per free column.
  std::vector<RatVector> nullspace(const RatMatrix & m);

  /// True iff v lies in the rational span of the basis vectors.
  bool span_membership(const std::vector<RatVector> & basis, const RatVector & v);

  std::size_t rank_of(const RatMatrix & m);

}

#endif
