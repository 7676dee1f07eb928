#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segdet/bracket.hpp"
#include "segdet/matrix.hpp"
#include "segdet/polynomial.hpp"
#include "segdet/vision.hpp"

namespace segdet {
namespace io {

// Matrix document: {"rows": R, "cols": C, "entries": ["p", "p/q", ...]},
// entries row-major, rationals in canonical lowest-terms form. Printing the
// parse of a canonical document reproduces it byte for byte.
ExactMatrix parse_matrix(const std::string& text);
std::string print_matrix(const ExactMatrix& m);

// One term of a polynomial document. "dual" holds A-side bracket index
// lists, "primal" B-side lists, "vars" explicit indeterminates as
// [side, row, col, exp] with side "a" or "b"; all three parts are optional
// and multiply together.
struct PolyTerm {
    Rational coeff;
    std::vector<std::vector<int>> dual;
    std::vector<std::vector<int>> primal;
    Monomial vars;

    friend bool operator<(const PolyTerm& x, const PolyTerm& y) {
        if (x.dual != y.dual) return x.dual < y.dual;
        if (x.primal != y.primal) return x.primal < y.primal;
        return x.vars < y.vars;
    }
};

struct PolyDocument {
    std::optional<int> reference_sign;  // sign vs. the bundled reference expansion
    std::vector<PolyTerm> terms;        // canonical (ascending) order
};

PolyDocument parse_polynomial(const std::string& text);
std::string print_polynomial(const PolyDocument& doc);

PolyDocument to_document(const SparsePolynomial& p);
PolyDocument to_document(const BracketPolynomial& p);
PolyDocument to_document(const DoubleBracketPolynomial& p);

// Interpret the document's bracket lists in a fixed algebra; n bounds the
// indices. Documents with "vars" entries cannot convert to pure bracket form.
BracketPolynomial to_bracket_polynomial(const PolyDocument& doc, int n);
DoubleBracketPolynomial to_double_bracket_polynomial(const PolyDocument& doc, int n);
SparsePolynomial to_sparse_polynomial(const PolyDocument& doc);

// Correspondence document: {"k": K, "pairs": [{"a": [...], "b": [...]}]}.
std::vector<Correspondence> parse_pairs(const std::string& text);
std::string print_pairs(const std::vector<Correspondence>& pairs);

// Human-readable one-line forms used by the CLI's text output.
std::string render_text(const SparsePolynomial& p);
std::string render_text(const BracketPolynomial& p);
std::string render_text(const DoubleBracketPolynomial& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace io
}  // namespace segdet
