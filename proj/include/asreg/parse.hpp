#pragma once

// Text grammars for scalars, matrices and noncommutative polynomials.

#include <optional>
#include <string>
#include <string_view>

#include "asreg/matrix.hpp"
#include "asreg/ncpoly.hpp"

namespace asreg {

/// With a field, "i" needs Q(i), "t" (or "q") needs Q(t), and the value must
/// lie in the field (FieldMismatch otherwise).  Without one, anything goes.
Scalar parse_scalar(std::string_view text, const std::optional<FieldSpec>& field = std::nullopt);

/// Terms like "2 * a b - 1/2 * b a + 3"; juxtaposition is multiplication.
/// Generator names shadow the scalar symbols i, t and q.
NcPoly parse_ncpoly(std::string_view text, const AlphabetPtr& alphabet,
                    const std::optional<FieldSpec>& field = std::nullopt);

/// Bracket shorthand "[[0,1],[q,0]]" (entries may be quoted) or a JSON
/// object {"field": "Qt", "rows": 2, "cols": 2, "entries": [[...]]}.
Matrix parse_matrix(std::string_view text, const std::optional<FieldSpec>& field = std::nullopt);

/// Bracket shorthand accepted by parse_matrix.
std::string matrix_str(const Matrix& m);

}  // namespace asreg
