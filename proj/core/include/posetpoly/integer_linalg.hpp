#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace posetpoly {

using Int = std::int64_t;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;

Int gcd_of(std::span<const Int> values);

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
void make_primitive(IntVector& v);

Int dot(std::span<const Int> a, std::span<const Int> b);

/// Rank over Q, computed with fraction-free elimination.
int rank(IntMatrix rows);

/// Exact determinant of a square matrix (Bareiss).
/// Throws std::overflow_error if an intermediate leaves the 64-bit range.
Int determinant(IntMatrix m);

/// adj(M), so that M * adj(M) = det(M) * I.
IntMatrix adjugate(const IntMatrix& m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Row vector times matrix: v * M.
IntVector row_times(std::span<const Int> v, const IntMatrix& m);

IntMatrix identity_matrix(int d);

/// floor(a / b) and ceil(a / b) for b != 0.
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

}  // namespace posetpoly
