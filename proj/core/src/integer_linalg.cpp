#include "posetpoly/integer_linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace posetpoly {

namespace {

__extension__ typedef __int128 Wide;

Int narrow(Wide x) {
  if (x > static_cast<Wide>(INT64_MAX) || x < static_cast<Wide>(INT64_MIN)) {
    throw std::overflow_error("integer overflow in exact linear algebra");
  }
  return static_cast<Int>(x);
}

}  // namespace

Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) {
    g = std::gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntVector& v) {
  const Int g = gcd_of(v);
  if (g > 1) {
    for (Int& x : v) x /= g;
  }
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  Wide s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<Wide>(a[i]) * b[i];
  return narrow(s);
}

int rank(IntMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Int p = rows[r][c];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const Int f = rows[i][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        rows[i][k] = narrow(static_cast<Wide>(rows[i][k]) * p - static_cast<Wide>(rows[r][k]) * f);
      }
      make_primitive(rows[i]);
    }
    ++r;
  }
  return r;
}

Int determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Wide num = static_cast<Wide>(m[i][j]) * m[k][k] - static_cast<Wide>(m[i][k]) * m[k][j];
        m[i][j] = narrow(num / prev);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix adj(n, IntVector(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor;
      minor.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        IntVector row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
      }
      const Int cof = ((i + j) % 2 == 0 ? 1 : -1) * determinant(std::move(minor));
      adj[j][i] = cof;
    }
  }
  return adj;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  IntMatrix out(rows, IntVector(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Wide s = 0;
      for (std::size_t k = 0; k < inner; ++k) s += static_cast<Wide>(a[i][k]) * b[k][j];
      out[i][j] = narrow(s);
    }
  }
  return out;
}

IntVector row_times(std::span<const Int> v, const IntMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  IntVector out(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    Wide s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) s += static_cast<Wide>(v[k]) * m[k][j];
    out[j] = narrow(s);
  }
  return out;
}

IntMatrix identity_matrix(int d) {
  IntMatrix id(d, IntVector(d, 0));
  for (int i = 0; i < d; ++i) id[i][i] = 1;
  return id;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

}  // namespace posetpoly
