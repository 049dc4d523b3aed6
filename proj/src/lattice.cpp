#include "pgw/lattice.hpp"


namespace pgw {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// Row operations applied to a matrix together with its left transform.
void swap_rows(IntMatrix& m, IntMatrix& t, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  m.row(i).swap(m.row(j));
  t.row(i).swap(t.row(j));
}

void swap_cols(IntMatrix& m, IntMatrix& t, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  m.col(i).swap(m.col(j));
  t.col(i).swap(t.col(j));
}

// row_i -= q * row_j
void sub_row(IntMatrix& m, Eigen::Index i, Eigen::Index j, const Integer& q) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (m(j, c) != 0) m(i, c) -= q * m(j, c);
  }
}

void sub_col(IntMatrix& m, Eigen::Index i, Eigen::Index j, const Integer& q) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (m(r, j) != 0) m(r, i) -= q * m(r, j);
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::Identity(rows, rows);
  IntMatrix v = IntMatrix::Identity(cols, cols);
  Eigen::Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i) {
        for (Eigen::Index j = t; j < cols; ++j) {
          if (d(i, j) != 0 && (pi < 0 || abs_value(d(i, j)) < abs_value(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) break;
      swap_rows(d, u, t, pi);
      swap_cols(d, v, t, pj);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        sub_row(d, i, t, q);
        sub_row(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        sub_col(d, j, t, q);
        sub_col(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold a row with an indivisible entry into the pivot row.
      bool divisible = true;
      for (Eigen::Index i = t + 1; i < rows && divisible; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            sub_row(d, t, i, Integer(-1));
            sub_row(u, t, i, Integer(-1));
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (d(t, t) == 0) break;
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      u.row(t) = -u.row(t);
    }
  }
  SmithForm out;
  out.rank = 0;
  for (Eigen::Index i = 0; i < std::min(rows, cols); ++i) {
    if (d(i, i) != 0) ++out.rank;
  }
  out.left = std::move(u);
  out.diagonal = std::move(d);
  out.right = std::move(v);
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& rows) {
  IntMatrix h = rows;
  const Eigen::Index m = h.rows();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < h.cols() && r < m; ++c) {
    // Euclid down the column until only row r is nonzero.
    for (Eigen::Index i = r + 1; i < m; ++i) {
      while (h(i, c) != 0) {
        const Integer q = h(r, c) / h(i, c);
        sub_row(h, r, i, q);
        h.row(r).swap(h.row(i));
      }
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.row(r) = -h.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      const Integer q = floor_div(h(i, c), h(r, c));
      if (q != 0) sub_row(h, i, r, q);
    }
    ++r;
  }
  return h.topRows(r);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  // a v = 0  <=>  D (right^-1 v) = 0, so the trailing columns of `right`
  // form a basis; `right` is unimodular, hence the basis is saturated.
  const Eigen::Index k = a.cols() - s.rank;
  IntMatrix basis = s.right.rightCols(k).transpose();
  return hermite_normal_form(basis);
}

IntGroup int_closure(const std::vector<IntMatrix>& generators, Eigen::Index dimension, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.rows() != dimension || g.cols() != dimension) fail(ErrorKind::ShapeError, "generator dimension mismatch");
    const Integer det = determinant_of(g);
    if (det != 1 && det != -1) fail(ErrorKind::NotUnimodular, "determinant " + det.str() + " is not +-1");
  }
  return matrix_closure(generators, dimension, cap);
}

Sublattice invariant_sublattice(const std::vector<IntMatrix>& generators, Eigen::Index dimension,
                                long long order_cap) {
  IntMatrix stacked(static_cast<Eigen::Index>(generators.size()) * dimension, dimension);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const IntMatrix& g = generators[i];
    if (g.rows() != dimension || g.cols() != dimension) fail(ErrorKind::ShapeError, "generator dimension mismatch");
    (void)element_order(g, order_cap);
    stacked.middleRows(static_cast<Eigen::Index>(i) * dimension, dimension) =
        g - IntMatrix::Identity(dimension, dimension);
  }
  Sublattice out;
  out.basis = generators.empty() ? IntMatrix(IntMatrix::Identity(dimension, dimension)) : integer_kernel(stacked);
  out.rank = out.basis.rows();
  return out;
}

}  // namespace pgw
