#include "segdet/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "segdet/error.hpp"

namespace segdet {
namespace io {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), {{"byte", std::to_string(e.byte)}});
    }
}

Rational parse_rational_strict(const ordered_json& j, const std::string& where) {
    if (!j.is_string())
        throw ParseError(where + ": rationals must be strings", {{"field", where}});
    Rational r;
    std::string hint;
    if (!Rational::parse(j.get<std::string>(), r, hint))
        throw ParseError(where + ": bad rational '" + j.get<std::string>() + "' (" + hint + ")",
                         {{"field", where}, {"hint", hint}});
    return r;
}

std::vector<std::vector<int>> parse_index_lists(const ordered_json& j, const std::string& where) {
    std::vector<std::vector<int>> out;
    if (!j.is_array()) throw ParseError(where + ": expected an array of index lists");
    for (const auto& lst : j) {
        if (!lst.is_array()) throw ParseError(where + ": expected an index list");
        std::vector<int> indices;
        for (const auto& v : lst) {
            if (!v.is_number_integer()) throw ParseError(where + ": indices must be integers");
            indices.push_back(v.get<int>());
        }
        if (!std::is_sorted(indices.begin(), indices.end()) ||
            std::adjacent_find(indices.begin(), indices.end()) != indices.end())
            throw ParseError(where + ": bracket indices must be strictly increasing");
        out.push_back(std::move(indices));
    }
    return out;
}

ordered_json index_lists_json(const std::vector<std::vector<int>>& lists) {
    ordered_json arr = ordered_json::array();
    for (const auto& lst : lists) arr.push_back(lst);
    return arr;
}

}  // namespace

ExactMatrix parse_matrix(const std::string& text) {
    const ordered_json j = parse_json(text);
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix document needs fields rows, cols, entries");
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows * cols)
        throw ParseError("entry count does not match rows x cols",
                         {{"expected", std::to_string(rows * cols)},
                          {"got", std::to_string(entries.size())}});
    std::vector<Rational> data;
    data.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        data.push_back(parse_rational_strict(entries[i], "entries[" + std::to_string(i) + "]"));
    return ExactMatrix(rows, cols, std::move(data));
}

std::string print_matrix(const ExactMatrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json entries = ordered_json::array();
    for (const Rational& r : m.entries()) entries.push_back(r.str());
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

PolyDocument parse_polynomial(const std::string& text) {
    const ordered_json j = parse_json(text);
    if (!j.is_object() || !j.contains("terms"))
        throw ParseError("polynomial document needs a terms field");
    PolyDocument doc;
    if (j.contains("reference_sign")) {
        const int s = j.at("reference_sign").get<int>();
        if (s != 1 && s != -1) throw ParseError("reference_sign must be 1 or -1");
        doc.reference_sign = s;
    }
    const auto& terms = j.at("terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        const std::string where = "terms[" + std::to_string(i) + "]";
        if (!t.is_object() || !t.contains("coeff"))
            throw ParseError(where + ": term needs a coeff field");
        PolyTerm term;
        term.coeff = parse_rational_strict(t.at("coeff"), where + ".coeff");
        if (term.coeff.is_zero()) throw ParseError(where + ": zero coefficients are not stored");
        if (t.contains("dual")) term.dual = parse_index_lists(t.at("dual"), where + ".dual");
        if (t.contains("primal"))
            term.primal = parse_index_lists(t.at("primal"), where + ".primal");
        if (t.contains("vars")) {
            for (const auto& v : t.at("vars")) {
                if (!v.is_array() || v.size() != 4)
                    throw ParseError(where + ".vars: entries are [side, row, col, exp]");
                const std::string side = v[0].get<std::string>();
                if (side != "a" && side != "b")
                    throw ParseError(where + ".vars: side must be 'a' or 'b'");
                const int exp = v[3].get<int>();
                if (exp < 1) throw ParseError(where + ".vars: exponents must be positive");
                term.vars.emplace_back(
                    VarId{side == "a" ? Side::A : Side::B, v[1].get<int>(), v[2].get<int>()},
                    exp);
            }
            if (!std::is_sorted(term.vars.begin(), term.vars.end(),
                                [](const auto& x, const auto& y) { return x.first < y.first; }))
                throw ParseError(where + ".vars: variables must follow the canonical order");
        }
        if (!std::is_sorted(term.dual.begin(), term.dual.end()) ||
            !std::is_sorted(term.primal.begin(), term.primal.end()))
            throw ParseError(where + ": bracket factors must be in ascending order");
        doc.terms.push_back(std::move(term));
    }
    if (!std::is_sorted(doc.terms.begin(), doc.terms.end()))
        throw ParseError("terms must be in canonical ascending order");
    return doc;
}

std::string print_polynomial(const PolyDocument& doc) {
    ordered_json j;
    if (doc.reference_sign) j["reference_sign"] = *doc.reference_sign;
    ordered_json terms = ordered_json::array();
    for (const PolyTerm& t : doc.terms) {
        ordered_json jt;
        jt["coeff"] = t.coeff.str();
        if (!t.dual.empty()) jt["dual"] = index_lists_json(t.dual);
        if (!t.primal.empty()) jt["primal"] = index_lists_json(t.primal);
        if (!t.vars.empty()) {
            ordered_json vars = ordered_json::array();
            for (const auto& [v, e] : t.vars) {
                ordered_json entry = ordered_json::array();
                entry.push_back(std::string(1, side_char(v.side)));
                entry.push_back(v.row);
                entry.push_back(v.col);
                entry.push_back(e);
                vars.push_back(std::move(entry));
            }
            jt["vars"] = std::move(vars);
        }
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j.dump(2) + "\n";
}

PolyDocument to_document(const SparsePolynomial& p) {
    PolyDocument doc;
    for (const auto& [m, c] : p.terms()) {
        PolyTerm t;
        t.coeff = c;
        t.vars = m;
        doc.terms.push_back(std::move(t));
    }
    std::sort(doc.terms.begin(), doc.terms.end());
    return doc;
}

PolyDocument to_document(const BracketPolynomial& p) {
    PolyDocument doc;
    for (const auto& [m, c] : p.terms) {
        PolyTerm t;
        t.coeff = c;
        for (const Bracket& b : m.factors)
            (b.side == Side::A ? t.dual : t.primal).push_back(b.idx);
        doc.terms.push_back(std::move(t));
    }
    std::sort(doc.terms.begin(), doc.terms.end());
    return doc;
}

PolyDocument to_document(const DoubleBracketPolynomial& p) {
    PolyDocument doc;
    for (const auto& [key, c] : p.terms) {
        PolyTerm t;
        t.coeff = c;
        for (const Bracket& b : key.first.factors) t.dual.push_back(b.idx);
        for (const Bracket& b : key.second.factors) t.primal.push_back(b.idx);
        doc.terms.push_back(std::move(t));
    }
    std::sort(doc.terms.begin(), doc.terms.end());
    return doc;
}

BracketPolynomial to_bracket_polynomial(const PolyDocument& doc, int n) {
    BracketPolynomial out;
    for (const PolyTerm& t : doc.terms) {
        if (!t.vars.empty())
            throw ParseError("document mixes vars with brackets; expected brackets only");
        if (!t.dual.empty() && !t.primal.empty())
            throw ParseError("expected a single-side bracket polynomial");
        const Side side = t.primal.empty() ? Side::A : Side::B;
        SignedMonomial sm =
            monomial_from_indices(side, t.primal.empty() ? t.dual : t.primal, n);
        if (sm.sign == 0) continue;
        out.add_term(sm.monomial, t.coeff * Rational(sm.sign));
    }
    return out;
}

DoubleBracketPolynomial to_double_bracket_polynomial(const PolyDocument& doc, int n) {
    DoubleBracketPolynomial out;
    for (const PolyTerm& t : doc.terms) {
        if (!t.vars.empty())
            throw ParseError("document mixes vars with brackets; expected brackets only");
        SignedMonomial a = monomial_from_indices(Side::A, t.dual, n);
        SignedMonomial b = monomial_from_indices(Side::B, t.primal, n);
        if (a.sign == 0 || b.sign == 0) continue;
        out.add_term(a.monomial, b.monomial, t.coeff * Rational(a.sign * b.sign));
    }
    return out;
}

SparsePolynomial to_sparse_polynomial(const PolyDocument& doc) {
    SparsePolynomial out;
    for (const PolyTerm& t : doc.terms) {
        if (!t.dual.empty() || !t.primal.empty())
            throw ParseError("document contains brackets; expected vars only");
        out.add_term(t.vars, t.coeff);
    }
    return out;
}

std::vector<Correspondence> parse_pairs(const std::string& text) {
    const ordered_json j = parse_json(text);
    if (!j.is_object() || !j.contains("k") || !j.contains("pairs"))
        throw ParseError("correspondence document needs fields k and pairs");
    const int k = j.at("k").get<int>();
    std::vector<Correspondence> out;
    for (std::size_t i = 0; i < j.at("pairs").size(); ++i) {
        const auto& p = j.at("pairs")[i];
        const std::string where = "pairs[" + std::to_string(i) + "]";
        if (!p.is_object() || !p.contains("a") || !p.contains("b"))
            throw ParseError(where + ": each pair needs fields a and b");
        Correspondence c;
        for (const char* fld : {"a", "b"}) {
            const auto& arr = p.at(fld);
            if (!arr.is_array() || static_cast<int>(arr.size()) != k)
                throw ParseError(where + "." + fld + ": expected " + std::to_string(k) +
                                 " coordinates");
            auto& dst = fld[0] == 'a' ? c.a : c.b;
            for (std::size_t t = 0; t < arr.size(); ++t)
                dst.push_back(parse_rational_strict(
                    arr[t], where + "." + fld + "[" + std::to_string(t) + "]"));
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string print_pairs(const std::vector<Correspondence>& pairs) {
    ordered_json j;
    j["k"] = pairs.empty() ? 0 : static_cast<int>(pairs.front().a.size());
    ordered_json arr = ordered_json::array();
    for (const Correspondence& c : pairs) {
        ordered_json p;
        ordered_json a = ordered_json::array(), b = ordered_json::array();
        for (const Rational& v : c.a) a.push_back(v.str());
        for (const Rational& v : c.b) b.push_back(v.str());
        p["a"] = std::move(a);
        p["b"] = std::move(b);
        arr.push_back(std::move(p));
    }
    j["pairs"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string render_text(const SparsePolynomial& p) { return p.str(); }

namespace {

std::string join_terms(const std::vector<std::pair<std::string, Rational>>& parts) {
    if (parts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [body, coeff] : parts) {
        const bool negative = coeff.sign() < 0;
        const Rational mag = coeff.abs();
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (mag != Rational(1) || body.empty()) os << mag.str() << (body.empty() ? "" : "*");
        os << body;
    }
    return os.str();
}

}  // namespace

std::string render_text(const BracketPolynomial& p) {
    std::vector<std::pair<std::string, Rational>> parts;
    for (const auto& [m, c] : p.terms) parts.emplace_back(monomial_str(m), c);
    return join_terms(parts);
}

std::string render_text(const DoubleBracketPolynomial& p) {
    std::vector<std::pair<std::string, Rational>> parts;
    for (const auto& [key, c] : p.terms)
        parts.emplace_back(monomial_str(key.first) + monomial_str(key.second), c);
    return join_terms(parts);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("io", "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("io", "cannot write file: " + path);
    out << content;
}

}  // namespace io
}  // namespace segdet
