#include "singlink/linalg.hpp"

#include <cstddef>
#include <utility>

namespace singlink {

Int mat_det(IMat a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  for (auto& row : a)
    if (row.size() != n) throw construction_error("mat_det: not square");
  Int sign = 1, prev = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (a[i][i] == 0) {
      std::size_t j = i + 1;
      while (j < n && a[j][i] == 0) ++j;
      if (j == n) return 0;
      std::swap(a[i], a[j]);
      sign = -sign;
    }
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < n; ++k)
        a[j][k] = (a[j][k] * a[i][i] - a[j][i] * a[i][k]) / prev;
    prev = a[i][i];
  }
  return sign * a[n - 1][n - 1];
}

bool is_negative_definite(const IMat& m) {
  IMat a = m;
  std::size_t n = a.size();
  for (auto& row : a)
    if (row.size() != n) throw construction_error("is_negative_definite: not square");
  // after step i the entry a[i][i] is the order-(i+1) leading principal minor
  Int prev = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t k = i; k < n; ++k)
          a[j][k] = (a[j][k] * a[i - 1][i - 1] - a[j][i - 1] * a[i - 1][k]) / prev;
      prev = a[i - 1][i - 1];
    }
    bool want_neg = (i % 2 == 0);
    if (a[i][i] == 0) return false;
    if ((a[i][i] < 0) != want_neg) return false;
  }
  return true;
}

std::vector<Rat> solve_linear(RMat a, std::vector<Rat> b) {
  std::size_t n = a.size();
  if (b.size() != n) throw construction_error("solve_linear: size mismatch");
  for (auto& row : a)
    if (row.size() != n) throw construction_error("solve_linear: not square");
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = i;
    while (p < n && a[p][i] == 0) ++p;
    if (p == n) throw construction_error("solve_linear: singular matrix");
    std::swap(a[i], a[p]);
    std::swap(b[i], b[p]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[j][i] == 0) continue;
      Rat f = a[j][i] / a[i][i];
      for (std::size_t k = i; k < n; ++k) a[j][k] -= f * a[i][k];
      b[j] -= f * b[i];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace singlink
