#include "treespec/oracle.hpp"

#include <string>
#include <vector>

#include "treespec/errors.hpp"

namespace treespec {

DenseIntMatrix build_matrix(const RootedTree& t, MatrixKind which, std::span<const long> beta) {
  const auto n = static_cast<Eigen::Index>(t.size());
  const bool shifted = which == MatrixKind::shifted_plus || which == MatrixKind::shifted_minus;
  if (shifted && beta.size() != t.size())
    throw LengthMismatch("beta sequence has " + std::to_string(beta.size()) +
                         " entries for a tree with " + std::to_string(t.size()) + " vertices");

  DenseIntMatrix m = DenseIntMatrix::Constant(n, n, BigInt(0));
  const BigInt off = (which == MatrixKind::adjacency || which == MatrixKind::shifted_plus) ? 1 : -1;
  for (const auto& [p, c] : t.edges()) {
    const auto i = static_cast<Eigen::Index>(p);
    const auto j = static_cast<Eigen::Index>(c);
    m(i, j) = off;
    m(j, i) = off;
  }
  for (Eigen::Index v = 0; v < n; ++v) {
    if (which == MatrixKind::laplacian) {
      m(v, v) = static_cast<long>(t.degree(static_cast<Vertex>(v)));
    } else if (shifted) {
      m(v, v) = beta[static_cast<std::size_t>(v)];
    }
  }
  return m;
}

namespace {

// y = A x, skipping the zero entries that dominate tree matrices.
void sparse_mul(const DenseIntMatrix& m, Eigen::Index k, const std::vector<BigInt>& x,
                std::vector<BigInt>& y) {
  for (Eigen::Index i = 0; i < k; ++i) {
    BigInt acc = 0;
    for (Eigen::Index j = 0; j < k; ++j)
      if (!m(i, j).is_zero() && !x[static_cast<std::size_t>(j)].is_zero())
        acc += m(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = std::move(acc);
  }
}

}  // namespace

IntPoly charpoly_dense(const DenseIntMatrix& m) {
  const Eigen::Index n = m.rows();
  // Coefficients of det(xI - M_k) for the leading k x k block, highest
  // power first. Each step multiplies by a lower triangular Toeplitz matrix
  // whose first column is (1, -a_kk, -R C, -R A C, ..., -R A^(k-1) C).
  std::vector<BigInt> poly{BigInt(1)};
  for (Eigen::Index k = 0; k < n; ++k) {
    std::vector<BigInt> col(static_cast<std::size_t>(k) + 2);
    col[0] = 1;
    col[1] = -m(k, k);
    std::vector<BigInt> x(static_cast<std::size_t>(k)), y(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) x[static_cast<std::size_t>(i)] = m(i, k);
    for (Eigen::Index p = 0; p < k; ++p) {
      BigInt dot = 0;
      for (Eigen::Index i = 0; i < k; ++i)
        if (!m(k, i).is_zero()) dot += m(k, i) * x[static_cast<std::size_t>(i)];
      col[static_cast<std::size_t>(p) + 2] = -dot;
      if (p + 1 < k) {
        sparse_mul(m, k, x, y);
        std::swap(x, y);
      }
    }
    std::vector<BigInt> next(poly.size() + 1);
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j)
        if (i - j < col.size() && !col[i - j].is_zero()) next[i] += col[i - j] * poly[j];
    poly = std::move(next);
  }
  return IntPoly(std::vector<BigInt>(poly.rbegin(), poly.rend()));
}

IntPoly charpoly_faddeev_leverrier(const DenseIntMatrix& m) {
  const Eigen::Index n = m.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  DenseIntMatrix mk = DenseIntMatrix::Constant(n, n, BigInt(0));
  for (Eigen::Index k = 1; k <= n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) mk(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    DenseIntMatrix amk = m * mk;
    BigInt trace = 0;
    for (Eigen::Index i = 0; i < n; ++i) trace += amk(i, i);
    BigInt q, r;
    boost::multiprecision::divide_qr(BigInt(-trace), BigInt(k), q, r);
    if (!r.is_zero()) throw NotDivisible();
    c[static_cast<std::size_t>(n - k)] = q;
    mk = std::move(amk);
  }
  return IntPoly(std::move(c));
}

}  // namespace treespec
