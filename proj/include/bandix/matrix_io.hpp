#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "bandix/band_matrix.hpp"
#include "bandix/rational.hpp"

namespace bandix {

/// Contents of a matrix text file, kept exact.
///
/// Layout: a header `penta N` or `tri N`, then one line per stored diagonal
/// from the lowest offset to the highest, then optionally a line `rhs`
/// followed by the N right-hand-side values (on the same or the next line).
/// Blank lines and text after `#` are ignored. Entries are integers,
/// decimals, scientific literals or fractions `p/q`.
struct MatrixFile {
    std::variant<PentaMatrix<Rational>, TriMatrix<Rational>> matrix;
    std::optional<Vector<Rational>> rhs;

    [[nodiscard]] bool is_penta() const { return matrix.index() == 0; }
    [[nodiscard]] std::size_t n() const;
};

MatrixFile parse_matrix(std::istream& in);
MatrixFile parse_matrix_string(const std::string& text);
MatrixFile read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const PentaMatrix<Rational>& a,
                  const Vector<Rational>* rhs = nullptr);
void write_matrix(std::ostream& out, const TriMatrix<Rational>& t,
                  const Vector<Rational>* rhs = nullptr);

}  // namespace bandix
