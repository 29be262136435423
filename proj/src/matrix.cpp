#include "lsa/matrix.hpp"

#include <stdexcept>

namespace lsa
{

  RatMatrix RatMatrix::identity(std::size_t n)
  {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
  }

  bool RatMatrix::is_zero() const
  {
    for (const auto & x : m_data)
      if (x != 0) return false;
    return true;
  }

  RatMatrix RatMatrix::operator+(const RatMatrix & other) const
  {
    if (m_rows != other.m_rows || m_cols != other.m_cols)
      throw std::invalid_argument("matrix size mismatch in +");
    RatMatrix out(m_rows, m_cols);
    for (std::size_t i = 0; i < m_data.size(); i++) out.m_data[i] = m_data[i] + other.m_data[i];
    return out;
  }

  RatMatrix RatMatrix::operator-(const RatMatrix & other) const
  {
    if (m_rows != other.m_rows || m_cols != other.m_cols)
      throw std::invalid_argument("matrix size mismatch in -");
    RatMatrix out(m_rows, m_cols);
    for (std::size_t i = 0; i < m_data.size(); i++) out.m_data[i] = m_data[i] - other.m_data[i];
    return out;
  }

  RatMatrix RatMatrix::operator*(const RatMatrix & other) const
  {
    if (m_cols != other.m_rows)
      throw std::invalid_argument("matrix size mismatch in *");
    RatMatrix out(m_rows, other.m_cols);
    for (std::size_t i = 0; i < m_rows; i++)
      for (std::size_t k = 0; k < m_cols; k++) {
        const Rational & a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < other.m_cols; j++) {
          const Rational & b = other.at(k, j);
          if (b != 0) out.at(i, j) += a * b;
        }
      }
    return out;
  }

  RatMatrix RatMatrix::scaled(const Rational & s) const
  {
    RatMatrix out(m_rows, m_cols);
    for (std::size_t i = 0; i < m_data.size(); i++) out.m_data[i] = m_data[i] * s;
    return out;
  }

  RatMatrix RatMatrix::transpose() const
  {
    RatMatrix out(m_cols, m_rows);
    for (std::size_t i = 0; i < m_rows; i++)
      for (std::size_t j = 0; j < m_cols; j++) out.at(j, i) = at(i, j);
    return out;
  }

  void RatMatrix::append_row(const RatVector & row)
  {
    if (m_rows == 0 && m_cols == 0) m_cols = row.size();
    if (row.size() != m_cols)
      throw std::invalid_argument("row length mismatch in append_row");
    m_data.insert(m_data.end(), row.begin(), row.end());
    m_rows++;
  }

  RatVector RatMatrix::row(std::size_t i) const
  {
    return RatVector(m_data.begin() + i * m_cols, m_data.begin() + (i + 1) * m_cols);
  }

  RrefResult rref(const RatMatrix & m)
  {
    RrefResult res{m, 0, {}};
    RatMatrix & a = res.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); c++) {
      std::size_t pivot = r;
      while (pivot < a.rows() && a.at(pivot, c) == 0) pivot++;
      if (pivot == a.rows()) continue;
      if (pivot != r)
        for (std::size_t j = 0; j < a.cols(); j++) std::swap(a.at(pivot, j), a.at(r, j));
      Rational inv = Rational(1) / a.at(r, c);
      for (std::size_t j = c; j < a.cols(); j++) a.at(r, j) *= inv;
      for (std::size_t i = 0; i < a.rows(); i++) {
        if (i == r || a.at(i, c) == 0) continue;
        Rational f = a.at(i, c);
        for (std::size_t j = c; j < a.cols(); j++) a.at(i, j) -= f * a.at(r, j);
      }
      res.pivot_columns.push_back(c);
      r++;
    }
    res.rank = r;
    return res;
  }

  std::size_t rank_of(const RatMatrix & m)
  {
    return rref(m).rank;
  }

  std::vector<RatVector> nullspace(const RatMatrix & m)
  {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_columns) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t free_c = 0; free_c < m.cols(); free_c++) {
      if (is_pivot[free_c]) continue;
      RatVector v(m.cols());
      v[free_c] = 1;
      for (std::size_t i = 0; i < r.pivot_columns.size(); i++)
        v[r.pivot_columns[i]] = -r.reduced.at(i, free_c);
      basis.push_back(v);
    }
    return basis;
  }

  bool span_membership(const std::vector<RatVector> & basis, const RatVector & v)
  {
    RatMatrix stacked;
    for (const auto & b : basis) {
      if (b.size() != v.size())
        throw std::invalid_argument("dimension mismatch in span_membership");
      stacked.append_row(b);
    }
    std::size_t base_rank = basis.empty() ? 0 : rank_of(stacked);
    stacked.append_row(v);
    return rank_of(stacked) == base_rank;
  }

}
