#include "fixedloci/lattice.hpp"

#include "fixedloci/errors.hpp"

#include <algorithm>

namespace fixedloci {

namespace {

// Row operation on rows p, q of both matrices:
//   row_p <- x*row_p + y*row_q,  row_q <- u*row_p + v*row_q  with xv - yu = +-1.
void combine_rows(IntMatrix& a, IntMatrix& u, std::size_t p, std::size_t q, const Integer& x,
                  const Integer& y, const Integer& s, const Integer& t) {
  for (IntMatrix* m : {&a, &u}) {
    for (std::size_t j = 0; j < m->cols(); ++j) {
      Integer rp = (*m)(p, j);
      Integer rq = (*m)(q, j);
      (*m)(p, j) = x * rp + y * rq;
      (*m)(q, j) = s * rp + t * rq;
    }
  }
}

void add_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += f * m(source, j);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// Extended gcd: returns g >= 0 with x*a + y*b = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

// Floor division for mpz (C++ division truncates toward zero).
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HermiteForm hnf(const IntMatrix& input) {
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    // Clear column c below row r by gcd steps.
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Integer x, y;
      Integer g = ext_gcd(a(r, c), a(i, c), x, y);
      Integer s = -a(i, c) / g;
      Integer t = a(r, c) / g;
      combine_rows(a, u, r, i, x, y, s, t);
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      negate_row(a, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer f = floor_div(a(i, c), a(r, c));
      if (f != 0) {
        add_multiple(a, i, r, -f);
        add_multiple(u, i, r, -f);
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return HermiteForm{std::move(a), std::move(u), r};
}

std::vector<Integer> smith_invariants(const IntMatrix& input) {
  IntMatrix a = input;
  // Alternate row and column Hermite reductions until the matrix is diagonal.
  for (int guard = 0; guard < 1000; ++guard) {
    a = hnf(a).form;
    a = hnf(a.transposed()).form.transposed();
    bool diagonal = true;
    for (std::size_t i = 0; i < a.rows() && diagonal; ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (i != j && a(i, j) != 0) {
          diagonal = false;
          break;
        }
    if (diagonal) break;
  }
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (a(i, i) != 0) d.push_back(abs(a(i, i)));
  // Enforce the divisibility chain.
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return abs(determinant(m)) == 1;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!is_unimodular(m)) throw ValidationError("matrix is not unimodular");
  auto inv = inverse(to_rational(m));
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = boost::multiprecision::numerator((*inv)(i, j));
  return out;
}

std::vector<IntVec> integer_kernel(const IntMatrix& a) {
  // Rows of U beyond the rank of a^T satisfy row * a^T = 0, and they form a
  // saturated basis because U is unimodular.
  HermiteForm h = hnf(a.transposed());
  std::vector<IntVec> basis;
  for (std::size_t i = h.rank; i < h.transform.rows(); ++i) basis.push_back(h.transform.row(i));
  if (basis.empty()) return basis;
  HermiteForm canon = hnf(IntMatrix::from_rows(basis));
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < canon.rank; ++i) out.push_back(canon.form.row(i));
  return out;
}

std::vector<IntVec> saturated_span(const std::vector<IntVec>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  // The saturation of span(V) is the kernel of the kernel.
  auto ker = integer_kernel(IntMatrix::from_rows(vectors, dim));
  if (ker.empty()) {
    std::vector<IntVec> id;
    for (std::size_t i = 0; i < dim; ++i) {
      IntVec e(dim, Integer(0));
      e[i] = 1;
      id.push_back(e);
    }
    return id;
  }
  return integer_kernel(IntMatrix::from_rows(ker, dim));
}

CokernelSection cokernel_with_section(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t r = a.cols();
  HermiteForm h = hnf(a);
  if (h.rank < r) throw NotInjective("lattice map has a nontrivial kernel");
  for (std::size_t i = 0; i < r; ++i)
    if (h.form(i, i) != 1)
      throw TorsionCokernel("cokernel has torsion (Smith invariant " +
                            h.form(i, i).str() + "); the torus does not act freely");
  IntMatrix pi = h.transform.row_block(r, m);
  IntMatrix u_inv = unimodular_inverse(h.transform);
  IntMatrix section = u_inv.col_block(r, m);
  return CokernelSection{std::move(pi), std::move(section)};
}

CokernelSection cokernel_for_section(const IntMatrix& a, const IntMatrix& section) {
  const std::size_t m = a.rows();
  const std::size_t r = a.cols();
  if (section.rows() != m || section.cols() != m - r)
    throw DimMismatch("section must be " + std::to_string(m) + " x " + std::to_string(m - r));
  IntMatrix joined(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) joined(i, j) = a(i, j);
    for (std::size_t j = 0; j < m - r; ++j) joined(i, r + j) = section(i, j);
  }
  if (!is_unimodular(joined))
    throw FreeActionViolated("[a | section] is not unimodular; section is not a splitting");
  IntMatrix inv = unimodular_inverse(joined);
  return CokernelSection{inv.row_block(r, m), section};
}

}  // namespace fixedloci
