#include "nucleus/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lin {

DenseMatrix DenseMatrix::eye(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

bool DenseMatrix::finite() const {
  for (double x : a)
    if (!std::isfinite(x)) return false;
  return true;
}

DenseMatrix adjoint(const DenseMatrix& m) {
  DenseMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

DenseMatrix matmul(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.cols != y.rows) throw std::runtime_error("matmul: dimension mismatch");
  DenseMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      double v = x.at(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::runtime_error("matrix subtraction: dimension mismatch");
  DenseMatrix r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

double frobenius(const DenseMatrix& m) {
  double s = 0;
  for (double x : m.a) s += x * x;
  return std::sqrt(s);
}

double max_abs(const DenseMatrix& m) {
  double s = 0;
  for (double x : m.a) s = std::max(s, std::fabs(x));
  return s;
}

double inner(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

std::vector<double> apply(const DenseMatrix& m, const std::vector<double>& v) {
  std::vector<double> out(m.rows, 0.0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

EigenResult sym_eigen(const DenseMatrix& g, double tol, int max_sweeps) {
  if (g.rows != g.cols) throw std::runtime_error("sym_eigen: matrix not square");
  int n = g.rows;
  double asym = max_abs(g - adjoint(g));
  double scale = std::max(1.0, max_abs(g));
  if (asym > tol * scale && asym > tol) throw std::runtime_error("sym_eigen: input asymmetric beyond tolerance");

  DenseMatrix a = g;
  // symmetrize exactly so rotations stay consistent
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.5 * (a.at(i, j) + a.at(j, i));
      a.at(i, j) = a.at(j, i) = v;
    }
  DenseMatrix v = DenseMatrix::eye(n);
  EigenResult res;
  auto off = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a.at(i, j) * a.at(i, j);
    return std::sqrt(2 * s);
  };
  const double eps = 1e-15 * std::max(1.0, frobenius(a));
  int sweep = 0;
  while (off() > eps) {
    if (++sweep > max_sweeps) throw std::runtime_error("sym_eigen: no convergence within the sweep cap");
    double thresh = (sweep <= 3) ? off() / (5.0 * n * n) : 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = a.at(p, q);
        if (std::fabs(apq) <= thresh || apq == 0.0) continue;
        double app = a.at(p, p), aqq = a.at(q, q);
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v.at(k, p), vkq = v.at(k, q);
          v.at(k, p) = c * vkp - s * vkq;
          v.at(k, q) = s * vkp + c * vkq;
        }
      }
  }
  res.sweeps = sweep;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a.at(i, i);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return diag[i] > diag[j]; });
  res.values.resize(n);
  res.vectors = DenseMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    res.values[k] = diag[order[k]];
    for (int i = 0; i < n; ++i) res.vectors.at(i, k) = v.at(i, order[k]);
  }
  return res;
}

SpectralNucleus svd_nucleus(const DenseMatrix& m, double tol) {
  if (tol <= 0) throw std::runtime_error("svd_nucleus: tol must be positive");
  if (!m.finite()) throw std::runtime_error("svd_nucleus: non-finite entries");
  SpectralNucleus n;
  n.tol = tol;
  bool small_side_cols = m.cols <= m.rows;
  DenseMatrix mt = adjoint(m);
  DenseMatrix gram = small_side_cols ? matmul(mt, m) : matmul(m, mt);
  EigenResult eig = sym_eigen(gram, std::max(tol, 1e-12));
  double lam_max = eig.values.empty() ? 0.0 : std::max(0.0, eig.values.front());
  double thresh = (lam_max > 0) ? tol * tol * lam_max : tol * tol;
  int r = 0;
  while (r < static_cast<int>(eig.values.size()) && eig.values[r] > thresh) ++r;
  n.rank = r;
  n.sigma.resize(r);
  for (int k = 0; k < r; ++k) n.sigma[k] = std::sqrt(eig.values[k]);
  if (small_side_cols) {
    n.U = DenseMatrix(m.cols, r);
    for (int i = 0; i < m.cols; ++i)
      for (int k = 0; k < r; ++k) n.U.at(i, k) = eig.vectors.at(i, k);
    // V = Φ·U·diag(1/σ)
    n.V = DenseMatrix(m.rows, r);
    DenseMatrix mu = matmul(m, n.U);
    for (int i = 0; i < m.rows; ++i)
      for (int k = 0; k < r; ++k) n.V.at(i, k) = mu.at(i, k) / n.sigma[k];
  } else {
    n.V = DenseMatrix(m.rows, r);
    for (int i = 0; i < m.rows; ++i)
      for (int k = 0; k < r; ++k) n.V.at(i, k) = eig.vectors.at(i, k);
    // U = Φ‡·V·diag(1/σ)
    n.U = DenseMatrix(m.cols, r);
    DenseMatrix mv = matmul(mt, n.V);
    for (int i = 0; i < m.cols; ++i)
      for (int k = 0; k < r; ++k) n.U.at(i, k) = mv.at(i, k) / n.sigma[k];
  }
  // sign convention: first entry of each U-column with |entry| above a tiny
  // floor is made positive; V flips along.
  for (int k = 0; k < r; ++k) {
    double lead = 0.0;
    for (int i = 0; i < n.U.rows; ++i)
      if (std::fabs(n.U.at(i, k)) > 1e-12) { lead = n.U.at(i, k); break; }
    if (lead < 0)
      for (int i = 0; i < std::max(n.U.rows, n.V.rows); ++i) {
        if (i < n.U.rows) n.U.at(i, k) = -n.U.at(i, k);
        if (i < n.V.rows) n.V.at(i, k) = -n.V.at(i, k);
      }
  }
  // residual
  DenseMatrix rec(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      double s = 0;
      for (int k = 0; k < r; ++k) s += n.V.at(i, k) * n.sigma[k] * n.U.at(j, k);
      rec.at(i, j) = s;
    }
  n.residual = frobenius(m - rec);
  return n;
}

RankFactorization rank_factorization(const DenseMatrix& m, double tol) {
  SpectralNucleus n = svd_nucleus(m, tol);
  RankFactorization f;
  f.rank = n.rank;
  f.left = n.V;
  f.right = DenseMatrix(n.rank, m.cols);
  for (int k = 0; k < n.rank; ++k)
    for (int j = 0; j < m.cols; ++j) f.right.at(k, j) = n.sigma[k] * n.U.at(j, k);
  if (n.rank == 0) {
    f.left = DenseMatrix(m.rows, 0);
    f.right = DenseMatrix(0, m.cols);
    f.residual = frobenius(m);
    return f;
  }
  f.residual = frobenius(m - matmul(f.left, f.right));
  return f;
}

IdempotenceReport nucleus_idempotence_check(const DenseMatrix& m, double tol) {
  IdempotenceReport rep;
  SpectralNucleus first = svd_nucleus(m, tol);
  rep.sigma_before = first.sigma;
  DenseMatrix diag(first.rank, first.rank);
  for (int k = 0; k < first.rank; ++k) diag.at(k, k) = first.sigma[k];
  SpectralNucleus second = svd_nucleus(diag, tol);
  rep.sigma_after = second.sigma;
  // compare as multisets (both come out sorted nonincreasing)
  size_t n = std::max(rep.sigma_before.size(), rep.sigma_after.size());
  for (size_t i = 0; i < n; ++i) {
    double b = i < rep.sigma_before.size() ? rep.sigma_before[i] : 0.0;
    double a = i < rep.sigma_after.size() ? rep.sigma_after[i] : 0.0;
    rep.max_deviation = std::max(rep.max_deviation, std::fabs(a - b));
  }
  return rep;
}

DenseMatrix parse_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::vector<double> row;
    std::string cur;
    std::istringstream ls(line);
    while (std::getline(ls, cur, ',')) {
      size_t pos = 0;
      double v = std::stod(cur, &pos);
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error("matrix csv: ragged rows");
    rows.push_back(row);
  }
  if (rows.empty()) throw std::runtime_error("matrix csv: empty");
  DenseMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  if (!m.finite()) throw std::runtime_error("matrix csv: non-finite entry");
  return m;
}

std::string nucleus_to_json(const SpectralNucleus& n) {
  nlohmann::ordered_json out;
  out["sigma"] = n.sigma;
  auto dump = [](const DenseMatrix& m) {
    std::vector<std::vector<double>> rows(m.rows, std::vector<double>(m.cols));
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) rows[i][j] = m.at(i, j);
    return rows;
  };
  out["U"] = dump(n.U);
  out["V"] = dump(n.V);
  out["rank"] = n.rank;
  out["residual"] = n.residual;
  return out.dump(2) + "\n";
}

}  // namespace lin
