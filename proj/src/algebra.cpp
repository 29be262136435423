#include "lsa/algebra.hpp"

#include <json.hpp>

#include <stdexcept>

namespace lsa
{

  namespace
  {
    int sgn_pow(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }
  }

  std::string family_name(Family f)
  {
    switch (f) {
    case Family::gl: return "gl";
    case Family::osp_odd: return "osp-odd";
    case Family::osp_even: return "osp-even";
    case Family::spo: return "spo";
    }
    return "?";
  }

  std::optional<Family> family_from_name(const std::string & name)
  {
    if (name == "gl") return Family::gl;
    if (name == "osp-odd") return Family::osp_odd;
    if (name == "osp-even") return Family::osp_even;
    if (name == "spo") return Family::spo;
    return std::nullopt;
  }

  std::string shape_name(Shape s)
  {
    switch (s) {
    case Shape::A: return "A";
    case Shape::B: return "B";
    case Shape::C: return "C";
    case Shape::D: return "D";
    }
    return "?";
  }

  Weight Weight::operator+(const Weight & o) const
  {
    Weight r(*this);
    for (std::size_t i = 0; i < coords.size(); i++) r.coords[i] += o.coords[i];
    return r;
  }

  Weight Weight::operator-(const Weight & o) const
  {
    Weight r(*this);
    for (std::size_t i = 0; i < coords.size(); i++) r.coords[i] -= o.coords[i];
    return r;
  }

  Weight Weight::operator-() const
  {
    Weight r(*this);
    for (auto & c : r.coords) c = -c;
    return r;
  }

  bool Weight::is_zero() const
  {
    for (int c : coords)
      if (c != 0) return false;
    return true;
  }

  int inner(const Weight & a, const Weight & b, const std::vector<int> & signature)
  {
    int s = 0;
    for (std::size_t i = 0; i < a.coords.size(); i++)
      s += a.coords[i] * b.coords[i] * signature[i];
    return s;
  }

  int SuperMatrix::parity() const
  {
    int p = -2; // unset
    std::size_t n = size();
    for (std::size_t i = 0; i < n; i++)
      for (std::size_t j = 0; j < n; j++) {
        if (mat.at(i, j) == 0) continue;
        int q = (grading[i] + grading[j]) % 2;
        if (p == -2) p = q;
        else if (p != q) return -1;
      }
    return p == -2 ? 0 : p;
  }

  SuperMatrix SuperMatrix::parity_component(int p) const
  {
    SuperMatrix out(size(), grading);
    for (std::size_t i = 0; i < size(); i++)
      for (std::size_t j = 0; j < size(); j++)
        if ((grading[i] + grading[j]) % 2 == p) out.mat.at(i, j) = mat.at(i, j);
    return out;
  }

  SuperMatrix SuperMatrix::operator+(const SuperMatrix & o) const
  {
    SuperMatrix r(*this);
    r.mat = mat + o.mat;
    return r;
  }

  SuperMatrix SuperMatrix::operator-(const SuperMatrix & o) const
  {
    SuperMatrix r(*this);
    r.mat = mat - o.mat;
    return r;
  }

  SuperMatrix SuperMatrix::scaled(const Rational & s) const
  {
    SuperMatrix r(*this);
    r.mat = mat.scaled(s);
    return r;
  }

  RatVector SuperMatrix::flatten() const
  {
    RatVector v;
    v.reserve(size() * size());
    for (std::size_t i = 0; i < size(); i++)
      for (std::size_t j = 0; j < size(); j++) v.push_back(mat.at(i, j));
    return v;
  }

  SuperMatrix unit_matrix(std::size_t n, const GradingVector & g,
                          std::size_t i, std::size_t j, const Rational & coeff)
  {
    SuperMatrix m(n, g);
    m.mat.at(i, j) = coeff;
    return m;
  }

  SuperMatrix super_bracket(const SuperMatrix & x, const SuperMatrix & y)
  {
    SuperMatrix out(x.size(), x.grading);
    for (int px = 0; px <= 1; px++)
      for (int py = 0; py <= 1; py++) {
        SuperMatrix a = x.parity_component(px);
        SuperMatrix b = y.parity_component(py);
        if (a.is_zero() || b.is_zero()) continue;
        RatMatrix ab = a.mat * b.mat;
        RatMatrix ba = b.mat * a.mat;
        out.mat = out.mat + (px * py % 2 == 1 ? ab + ba : ab - ba);
      }
    return out;
  }

  SuperMatrix super_transpose(const SuperMatrix & a, TransposeVariant variant)
  {
    std::size_t n = a.size();
    SuperMatrix out(n, a.grading);
    for (std::size_t i = 0; i < n; i++)
      for (std::size_t j = 0; j < n; j++) {
        int bi = a.grading[i], bj = a.grading[j];
        int e = (variant == TransposeVariant::form) ? bi * (bi + bj) : (bi + bj) * bj;
        out.mat.at(i, j) = a.mat.at(j, i) * sgn_pow(e);
      }
    return out;
  }

  std::optional<std::size_t> AlgebraData::find_root(const Weight & w, bool * negative) const
  {
    for (std::size_t i = 0; i < positive_roots.size(); i++) {
      if (positive_roots[i].weight == w) {
        if (negative) *negative = false;
        return i;
      }
      if (positive_roots[i].weight == -w) {
        if (negative) *negative = true;
        return i;
      }
    }
    return std::nullopt;
  }

  bool AlgebraData::is_root(const Weight & w) const
  {
    return find_root(w).has_value();
  }

  std::vector<SuperMatrix> AlgebraData::basis() const
  {
    std::vector<SuperMatrix> b;
    for (const auto & r : positive_roots) {
      b.push_back(r.e);
      b.push_back(r.f);
    }
    for (const auto & h : cartan_basis) b.push_back(h);
    return b;
  }

  bool valid_grading(Family family, const GradingVector & grading)
  {
    std::size_t N = grading.size();
    for (int p : grading)
      if (p != 0 && p != 1) return false;
    switch (family) {
    case Family::gl:
      return N >= 2;
    case Family::osp_odd: {
      if (N < 3 || N % 2 == 0) return false;
      if (grading[(N - 1) / 2] != 0) return false;
      break;
    }
    case Family::osp_even:
      // supersymmetry of the form gives eps_n = (-1)^{bar n}; shape D needs eps_n = +1
      if (N < 4 || N % 2 == 1 || grading[N / 2 - 1] != 0) return false;
      break;
    case Family::spo:
      // shape C needs the tail root 2 zeta_n, i.e. eps_n = -1
      if (N < 2 || N % 2 == 1 || grading[N / 2 - 1] != 1) return false;
      break;
    }
    for (std::size_t i = 0; i < N; i++)
      if (grading[i] != grading[N - 1 - i]) return false;
    return true;
  }

  namespace
  {

    Weight basic(std::size_t dim, std::size_t i, int c = 1)
    {
      Weight w(dim);
      w.coords[i] = c;
      return w;
    }

    AlgebraData build_gl(const GradingVector & g)
    {
      AlgebraData A;
      A.family = Family::gl;
      A.shape = Shape::A;
      A.grading = g;
      A.N = g.size();
      A.lattice_dim = A.N;
      for (int p : g) A.weight_signature.push_back(sgn_pow(p));

      for (std::size_t i = 0; i < A.N; i++)
        for (std::size_t j = i + 1; j < A.N; j++) {
          PositiveRoot r;
          r.weight = basic(A.N, i) - basic(A.N, j);
          r.parity = (g[i] + g[j]) % 2;
          r.e = unit_matrix(A.N, g, i, j, sgn_pow(g[i]));
          r.f = unit_matrix(A.N, g, j, i);
          if (j == i + 1) A.simple_idx.push_back(A.positive_roots.size());
          A.positive_roots.push_back(std::move(r));
        }
      // simple_idx entries were pushed in i order, which is diagram order
      for (std::size_t i = 0; i < A.N; i++)
        A.cartan_basis.push_back(unit_matrix(A.N, g, i, i));
      A.dimension = A.N * A.N;
      return A;
    }

    AlgebraData build_osp(Family family, const GradingVector & g)
    {
      AlgebraData A;
      A.family = family;
      A.shape = family == Family::osp_odd ? Shape::B
              : family == Family::osp_even ? Shape::D
                                           : Shape::C;
      A.grading = g;
      A.N = g.size();
      std::size_t n = A.N / 2;
      A.lattice_dim = n;
      bool odd_n = (A.N % 2 == 1);
      std::size_t mid = odd_n ? n : 0; // 0-based index of the middle vector
      auto prime = [&](std::size_t i) { return A.N - 1 - i; };

      for (std::size_t k = 0; k < n; k++) A.weight_signature.push_back(sgn_pow(g[k]));

      // supersymmetry of C: C_{i'i} = (-1)^{bar i bar i'} C_{ii'} forces this sign
      for (std::size_t k = 0; k < n; k++) A.signatures.push_back(sgn_pow(g[k]));

      // zeta_k - zeta_m and zeta_k + zeta_m, k < m
      for (std::size_t k = 0; k < n; k++)
        for (std::size_t m = k + 1; m < n; m++) {
          int bk = g[k], bm = g[m];
          {
            PositiveRoot r;
            r.weight = basic(n, k) - basic(n, m);
            r.parity = (bk + bm) % 2;
            r.e = unit_matrix(A.N, g, k, m, -sgn_pow(bm * (bk + bm)))
                + unit_matrix(A.N, g, prime(m), prime(k));
            r.f = unit_matrix(A.N, g, m, k, -sgn_pow(bk * (bk + bm)))
                + unit_matrix(A.N, g, prime(k), prime(m));
            A.positive_roots.push_back(std::move(r));
          }
          {
            PositiveRoot r;
            r.weight = basic(n, k) + basic(n, m);
            r.parity = (bk + bm) % 2;
            r.e = unit_matrix(A.N, g, k, prime(m), -A.signatures[k] * sgn_pow(bk * (bk + bm)))
                + unit_matrix(A.N, g, m, prime(k));
            r.f = unit_matrix(A.N, g, prime(m), k, -A.signatures[m] * sgn_pow(bk * (bk + bm)))
                + unit_matrix(A.N, g, prime(k), m);
            A.positive_roots.push_back(std::move(r));
          }
        }
      // 2 zeta_k where epsilon_k = -1
      for (std::size_t k = 0; k < n; k++) {
        if (A.signatures[k] != -1) continue;
        PositiveRoot r;
        r.weight = basic(n, k, 2);
        r.parity = 0;
        r.e = unit_matrix(A.N, g, k, prime(k));
        r.f = unit_matrix(A.N, g, prime(k), k);
        A.positive_roots.push_back(std::move(r));
      }
      // zeta_k for odd N
      if (odd_n)
        for (std::size_t k = 0; k < n; k++) {
          PositiveRoot r;
          r.weight = basic(n, k);
          r.parity = g[k] % 2;
          r.e = unit_matrix(A.N, g, k, mid, -1) + unit_matrix(A.N, g, mid, prime(k));
          r.f = unit_matrix(A.N, g, mid, k, -sgn_pow(g[k])) + unit_matrix(A.N, g, prime(k), mid);
          A.positive_roots.push_back(std::move(r));
        }

      auto idx_of = [&](const Weight & w) {
        auto i = A.find_root(w);
        if (!i) throw std::logic_error("simple root missing from root list");
        return *i;
      };
      if (family == Family::osp_even) {
        for (std::size_t i = 0; i + 2 < n; i++)
          A.simple_idx.push_back(idx_of(basic(n, i) - basic(n, i + 1)));
        A.simple_idx.push_back(idx_of(basic(n, n - 2) - basic(n, n - 1)));
        A.simple_idx.push_back(idx_of(basic(n, n - 2) + basic(n, n - 1)));
      } else {
        for (std::size_t i = 0; i + 1 < n; i++)
          A.simple_idx.push_back(idx_of(basic(n, i) - basic(n, i + 1)));
        if (family == Family::osp_odd) A.simple_idx.push_back(idx_of(basic(n, n - 1)));
        else A.simple_idx.push_back(idx_of(basic(n, n - 1, 2)));
      }

      for (std::size_t k = 0; k < n; k++)
        A.cartan_basis.push_back(unit_matrix(A.N, g, k, k)
                                 - unit_matrix(A.N, g, prime(k), prime(k)));

      SuperMatrix C(A.N, g);
      for (std::size_t k = 0; k < n; k++) {
        C.mat.at(k, prime(k)) = 1;
        C.mat.at(prime(k), k) = A.signatures[k];
      }
      if (odd_n) C.mat.at(mid, mid) = 1;
      A.form_C = C;

      A.dimension = 2 * A.positive_roots.size() + n;
      return A;
    }

  }

  AlgebraData build_algebra(Family family, const GradingVector & grading)
  {
    if (!valid_grading(family, grading))
      throw std::invalid_argument("invalid grading for family " + family_name(family));
    if (family == Family::gl) return build_gl(grading);
    return build_osp(family, grading);
  }

  SuperMatrix cartan_dual(const AlgebraData & alg, const Weight & w)
  {
    SuperMatrix h(alg.N, alg.grading);
    if (alg.family == Family::gl) {
      for (std::size_t i = 0; i < alg.N; i++)
        h.mat.at(i, i) = Rational(w.coords[i] * sgn_pow(alg.grading[i]));
    } else {
      for (std::size_t k = 0; k < alg.lattice_dim; k++) {
        Rational c = Rational(w.coords[k] * sgn_pow(alg.grading[k]));
        h.mat.at(k, k) += c;
        h.mat.at(alg.N - 1 - k, alg.N - 1 - k) -= c;
      }
    }
    return h;
  }

  Rational evaluate_weight(const AlgebraData & alg, const Weight & w, const SuperMatrix & h)
  {
    Rational v = 0;
    for (std::size_t i = 0; i < alg.lattice_dim; i++)
      v += Rational(w.coords[i]) * h.mat.at(i, i);
    return v;
  }

  std::string algebra_to_json(const AlgebraData & alg)
  {
    nlohmann::json j;
    j["family"] = family_name(alg.family);
    j["shape"] = shape_name(alg.shape);
    j["grading"] = alg.grading;
    j["dimension"] = alg.dimension;
    nlohmann::json roots = nlohmann::json::array();
    for (std::size_t i = 0; i < alg.rank(); i++) {
      const auto & r = alg.simple(i);
      roots.push_back({{"coords", r.weight.coords}, {"parity", r.parity}});
    }
    j["simple_roots"] = roots;
    return j.dump(2);
  }

}
