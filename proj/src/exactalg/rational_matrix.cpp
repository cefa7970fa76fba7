#include "vfsig/exactalg/rational_matrix.hpp"

#include <utility>

namespace vfsig {

std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    const BigRational inv = 1 / m.at(r, col);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, col) == 0) continue;
      const BigRational factor = m.at(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (m.at(r, j) != 0) m.at(i, j) -= factor * m.at(r, j);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace vfsig
