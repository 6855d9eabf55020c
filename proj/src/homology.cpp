#include "rackhom/homology.hpp"

#include <algorithm>
#include <map>

namespace rackhom {

std::vector<IntegerMatrix> boundary_matrices(const OrderComplex& K) {
  const int dim = K.dimension();
  std::vector<std::vector<std::vector<int>>> faces_by_dim;
  std::vector<std::map<std::vector<int>, int>> face_index;
  for (int d = 0; d <= dim; ++d) {
    faces_by_dim.push_back(K.faces(d));
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < static_cast<int>(faces_by_dim[d].size()); ++i)
      idx[faces_by_dim[d][i]] = i;
    face_index.push_back(std::move(idx));
  }

  std::vector<IntegerMatrix> out;
  // augmentation: every vertex maps to the empty face with coefficient 1
  IntegerMatrix aug(1, dim >= 0 ? static_cast<int>(faces_by_dim[0].size()) : 0);
  for (int c = 0; c < aug.cols(); ++c) aug.set(0, c, 1);
  out.push_back(std::move(aug));

  for (int d = 1; d <= dim; ++d) {
    IntegerMatrix B(static_cast<int>(faces_by_dim[d - 1].size()),
                    static_cast<int>(faces_by_dim[d].size()));
    for (int c = 0; c < B.cols(); ++c) {
      const auto& face = faces_by_dim[d][c];
      std::vector<int> sub(face.size() - 1);
      for (int i = 0; i <= d; ++i) {
        int k = 0;
        for (int j = 0; j <= d; ++j)
          if (j != i) sub[k++] = face[j];
        B.set(face_index[d - 1].at(sub), c, i % 2 == 0 ? 1 : -1);
      }
    }
    out.push_back(std::move(B));
  }
  return out;
}

SnfResult smith_normal_form(const IntegerMatrix& M) {
  auto a = M.to_dense();
  const int rows = M.rows(), cols = M.cols();
  SnfResult res;
  int t = 0;
  while (true) {
    // pivot: nonzero entry of minimal absolute value in the remaining block
    int pr = -1, pc = -1;
    BigInt best = 0;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c) {
        if (a[r][c] == 0) continue;
        BigInt v = abs(a[r][c]);
        if (pr < 0 || v < best) { best = v; pr = r; pc = c; }
      }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (int r = 0; r < rows; ++r) std::swap(a[r][t], a[r][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        BigInt q = a[r][t] / a[t][t];
        for (int c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) {  // remainder smaller than pivot: swap up, redo
          std::swap(a[t], a[r]);
          clean = false;
        }
      }
      for (int c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        BigInt q = a[t][c] / a[t][t];
        for (int r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) {
          for (int r = t; r < rows; ++r) std::swap(a[r][t], a[r][c]);
          clean = false;
        }
      }
    }
    ++t;
  }
  res.rank = t;

  std::vector<BigInt> diag;
  for (int i = 0; i < t; ++i) diag.push_back(abs(a[i][i]));
  // enforce the divisibility chain d1 | d2 | ...
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (diag[j] % diag[i] != 0) {
        BigInt g = gcd(diag[i], diag[j]);
        diag[j] = diag[i] / g * diag[j];
        diag[i] = g;
      }
  std::sort(diag.begin(), diag.end());
  res.invariant_factors = std::move(diag);
  return res;
}

HomologyProfile reduced_homology(const OrderComplex& K) {
  const int dim = K.dimension();
  auto boundaries = boundary_matrices(K);

  std::vector<SnfResult> snf;
  for (const auto& B : boundaries) snf.push_back(smith_normal_form(B));

  HomologyProfile H;
  H.top_degree = dim;
  H.betti.assign(dim + 2, 0);
  H.torsion.assign(dim + 2, {});

  auto rank_of = [&](int d) {  // rank of boundary C_d -> C_{d-1}
    return (d >= 0 && d <= dim) ? snf[d].rank : 0;
  };
  std::vector<long long> f(dim + 1);
  for (int d = 0; d <= dim; ++d) f[d] = boundaries[d].cols();

  // degree -1: one generator (the empty face) minus the augmentation image
  H.betti[0] = 1 - rank_of(0);
  for (int d = 0; d <= dim; ++d)
    H.betti[d + 1] = f[d] - rank_of(d) - rank_of(d + 1);
  for (int d = -1; d < dim; ++d)
    for (const auto& v : snf[d + 1].invariant_factors)
      if (v > 1) H.torsion[d + 1].push_back(v);
  return H;
}

bool is_homology_sphere(const HomologyProfile& H, int d) {
  if (H.has_torsion()) return false;
  for (int e = -1; e <= H.top_degree; ++e)
    if (H.betti_at(e) != (e == d ? 1 : 0)) return false;
  // degrees outside the profile are zero, so d beyond top_degree fails
  if (d < -1 || d > H.top_degree) return H.betti_at(d) == 1;
  return true;
}

}  // namespace rackhom
