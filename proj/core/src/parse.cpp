#include <fockcalc/parse.hpp>

#include <cctype>
#include <string>
#include <vector>

namespace fockcalc {

namespace {

// One parsed additive term: coeff * z^z_pow * zb^zbar_pow.
struct RawTerm {
    GaussianRational coeff;
    int z_pow = 0;
    int zbar_pow = 0;
};

struct Cursor {
    const std::string& text;
    size_t i = 0;

    bool done() const { return i >= text.size(); }
    char peek() const { return done() ? '\0' : text[i]; }
    char peek_at(size_t off) const { return i + off < text.size() ? text[i + off] : '\0'; }
};

[[noreturn]] void fail(size_t at, const std::string& what) {
    int pos = static_cast<int>(at) + 1;
    throw ParseError("parse error at position " + std::to_string(pos) + ": " + what, pos);
}

void skip_ws(Cursor& c) {
    while (!c.done() && std::isspace(static_cast<unsigned char>(c.peek()))) ++c.i;
}

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

int parse_exponent_digits(Cursor& c) {
    if (c.peek() == '-') fail(c.i, "the exponent must be a nonnegative integer");
    if (!is_digit(c.peek())) fail(c.i, "expected an exponent");
    size_t start = c.i;
    while (is_digit(c.peek())) ++c.i;
    if (c.i - start > 6) fail(start, "exponent too large");
    return std::stoi(c.text.substr(start, c.i - start));
}

// '^' uint, or an implicit 1 when no caret follows.
int parse_optional_exponent(Cursor& c) {
    skip_ws(c);
    if (c.peek() != '^') return 1;
    ++c.i;
    skip_ws(c);
    return parse_exponent_digits(c);
}

Rational parse_rational_literal(Cursor& c) {
    size_t start = c.i;
    while (is_digit(c.peek())) ++c.i;
    BigInt num(c.text.substr(start, c.i - start));
    BigInt den = 1;
    if (c.peek() == '/') {
        ++c.i;
        skip_ws(c);
        size_t dstart = c.i;
        if (!is_digit(c.peek())) fail(c.i, "expected a denominator");
        while (is_digit(c.peek())) ++c.i;
        den = BigInt(c.text.substr(dstart, c.i - dstart));
        if (den == 0) fail(dstart, "zero denominator");
    }
    return Rational(num, den);
}

// z, zb, a combining-macron barred z, or the |z|^2s shorthand.
void parse_factor(Cursor& c, bool allow_conj, RawTerm& term) {
    size_t pos = c.i;
    if (c.peek() == 'z') {
        ++c.i;
        bool bar = false;
        if (c.peek() == '\xCC' && c.peek_at(1) == '\x84') {
            bar = true;
            c.i += 2;
        } else if (c.peek() == 'b') {
            bar = true;
            ++c.i;
        }
        if (bar && !allow_conj)
            fail(pos, "conjugate factors are not allowed in an analytic polynomial");
        int e = parse_optional_exponent(c);
        (bar ? term.zbar_pow : term.z_pow) += e;
        return;
    }
    // |z|^even
    ++c.i;
    skip_ws(c);
    if (c.peek() != 'z') fail(c.i, "expected z inside |z|");
    ++c.i;
    skip_ws(c);
    if (c.peek() != '|') fail(c.i, "expected a closing '|'");
    ++c.i;
    skip_ws(c);
    if (c.peek() != '^') fail(c.i, "expected '^' after |z|");
    ++c.i;
    skip_ws(c);
    size_t epos = c.i;
    if (c.peek() == '-') fail(c.i, "the exponent must be a nonnegative integer");
    int e = parse_exponent_digits(c);
    if (e % 2 != 0) fail(epos, "the |z| exponent must be even");
    if (!allow_conj) fail(pos, "conjugate factors are not allowed in an analytic polynomial");
    term.z_pow += e / 2;
    term.zbar_pow += e / 2;
}

RawTerm parse_term(Cursor& c, bool allow_conj) {
    skip_ws(c);
    size_t start = c.i;
    RawTerm term;
    term.coeff = GaussianRational(1);
    bool any = false;
    for (;;) {
        skip_ws(c);
        bool after_star = false;
        if (c.peek() == '*') {
            if (!any) fail(c.i, "unexpected '*'");
            ++c.i;
            after_star = true;
            skip_ws(c);
        }
        char ch = c.peek();
        if (is_digit(ch)) {
            term.coeff = term.coeff * GaussianRational(parse_rational_literal(c));
        } else if (ch == 'i') {
            ++c.i;
            term.coeff = term.coeff * GaussianRational(Rational(0), Rational(1));
        } else if (ch == '(') {
            size_t close = c.text.find(')', c.i);
            if (close == std::string::npos) fail(c.i, "unclosed parenthesis");
            std::string inner = c.text.substr(c.i, close - c.i + 1);
            try {
                term.coeff = term.coeff * parse_gaussian(inner);
            } catch (const std::invalid_argument& e) {
                fail(c.i, e.what());
            }
            c.i = close + 1;
        } else if (ch == 'z' || ch == '|') {
            parse_factor(c, allow_conj, term);
        } else {
            if (after_star) fail(c.i, "expected a factor after '*'");
            break;
        }
        any = true;
    }
    if (!any) fail(start, "expected a term");
    return term;
}

std::vector<RawTerm> parse_sum(const std::string& text, bool allow_conj) {
    Cursor c{text};
    std::vector<RawTerm> terms;
    skip_ws(c);
    bool negate = false;
    if (c.peek() == '+' || c.peek() == '-') {
        negate = c.peek() == '-';
        ++c.i;
    }
    for (;;) {
        RawTerm t = parse_term(c, allow_conj);
        if (negate) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        skip_ws(c);
        if (c.peek() == '+' || c.peek() == '-') {
            negate = c.peek() == '-';
            ++c.i;
            continue;
        }
        break;
    }
    skip_ws(c);
    if (!c.done()) {
        char ch = c.peek();
        std::string shown = std::isprint(static_cast<unsigned char>(ch))
                                ? "'" + std::string(1, ch) + "'"
                                : "byte " + std::to_string(static_cast<unsigned char>(ch));
        fail(c.i, "unexpected character " + shown);
    }
    return terms;
}

// Coefficient text and sign for one printed term; empty text means the
// coefficient is a dropped unit.
struct PrintedCoeff {
    std::string text;
    bool negative = false;
};

PrintedCoeff coeff_text(const GaussianRational& c, bool has_monomial) {
    PrintedCoeff out;
    if (c.is_real()) {
        out.negative = c.re < 0;
        Rational mag = out.negative ? Rational(-c.re) : c.re;
        if (!(mag == 1 && has_monomial)) out.text = to_string(mag);
    } else {
        out.text = "(" + to_string(c) + ")";
    }
    return out;
}

std::string join_terms(const std::vector<std::pair<GaussianRational, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [coeff, mono] : terms) {
        PrintedCoeff pc = coeff_text(coeff, !mono.empty());
        if (first)
            out += pc.negative ? "-" : "";
        else
            out += pc.negative ? " - " : " + ";
        out += pc.text;
        if (!pc.text.empty() && !mono.empty()) out += "*";
        out += mono;
        first = false;
    }
    return out;
}

std::string symbol_monomial(int z_pow, int zbar_pow) {
    std::string out;
    if (z_pow == 1)
        out = "z";
    else if (z_pow > 1)
        out = "z^" + std::to_string(z_pow);
    if (zbar_pow > 0) {
        if (!out.empty()) out += "*";
        out += zbar_pow == 1 ? "zb" : "zb^" + std::to_string(zbar_pow);
    }
    return out;
}

}  // namespace

MixedSymbol parse_symbol(const std::string& text) {
    MixedSymbol s;
    for (const RawTerm& t : parse_sum(text, true))
        s.add_term({t.coeff, t.z_pow, t.zbar_pow});
    return s;
}

AnalyticPoly parse_poly(const std::string& text) {
    AnalyticPoly f;
    for (const RawTerm& t : parse_sum(text, false)) f.add_term(t.z_pow, t.coeff);
    return f;
}

std::string print_symbol(const MixedSymbol& s) {
    std::vector<std::pair<GaussianRational, std::string>> parts;
    for (const MixedTerm& t : s.terms())
        parts.emplace_back(t.coeff, symbol_monomial(t.z_pow, t.zbar_pow));
    return join_terms(parts);
}

std::string print_poly(const AnalyticPoly& f) {
    std::vector<std::pair<GaussianRational, std::string>> parts;
    for (const auto& [d, c] : f.terms()) parts.emplace_back(c, symbol_monomial(d, 0));
    return join_terms(parts);
}

}  // namespace fockcalc
