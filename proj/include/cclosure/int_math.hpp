#pragma once

// Exact small-integer arithmetic and linear algebra over Z/Q used by the
// semilinear machinery. Overflow never wraps: it raises ResourceLimit.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cclosure {

using Int = std::int64_t;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;  // row-major

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);
Int dot(const IntVector& a, const IntVector& b);

Int gcd(Int a, Int b);  // always >= 0
Int lcm(Int a, Int b);  // lcm(0, x) == 0
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);
Int floor_mod(Int a, Int m);  // result in [0, m)

Int content(const IntVector& v);  // gcd of all entries
IntVector primitive(IntVector v);  // divided by its content; zero stays zero

Int determinant(const IntMatrix& square);
std::size_t rank(const IntMatrix& m);
// Indices of a maximal linearly independent subset of the rows, chosen
// greedily in order.
std::vector<std::size_t> independent_rows(const IntMatrix& m);
IntMatrix adjugate(const IntMatrix& square);
IntMatrix transpose(const IntMatrix& m);
// Primitive integer basis of the rational kernel {y : m y = 0}; `columns`
// gives the dimension when m has no rows.
std::vector<IntVector> integer_kernel(const IntMatrix& m, std::size_t columns);

}  // namespace cclosure
