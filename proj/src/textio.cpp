#include "ss/textio.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace ss {

namespace {

std::string strip(const std::string& s) {
    std::string r;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) r += c;
    return r;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

// Split on '+' outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

Nat parse_nat(const std::string& s) {
    if (!all_digits(s)) throw parse_error("expected a decimal number, got '" + s + "'");
    return Nat(s);
}

}  // namespace

std::string to_text(const FqElem& e) {
    return e.c0.get_str() + "+" + e.c1.get_str() + "*u";
}

FqElem parse_fq(const FqField* F, const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) throw parse_error("empty field element");
    if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    Nat c0 = 0, c1 = 0;
    for (const std::string& part : split_top(s, '+')) {
        if (part.size() >= 2 && part.compare(part.size() - 2, 2, "*u") == 0) {
            c1 = parse_nat(part.substr(0, part.size() - 2));
        } else if (part == "u") {
            c1 = 1;
        } else {
            c0 = parse_nat(part);
        }
    }
    return FqElem(F, std::move(c0), std::move(c1));
}

std::string to_text(const Curve& E) {
    return E.field()->p().get_str() + "; " + to_text(E.a()) + "; " + to_text(E.b());
}

ParsedCurve parse_curve(const std::string& s) {
    auto parts = split_top(strip(s), ';');
    if (parts.size() != 3) throw parse_error("curve format is \"p; a; b\"");
    Nat p = parse_nat(parts[0]);
    std::shared_ptr<const FqField> F;
    try {
        F = FqField::make(p);
    } catch (const precondition_error& e) {
        throw parse_error(std::string("bad curve modulus: ") + e.what());
    }
    FqElem a = parse_fq(F.get(), parts[1]);
    FqElem b = parse_fq(F.get(), parts[2]);
    try {
        return ParsedCurve{F, Curve(std::move(a), std::move(b))};
    } catch (const precondition_error& e) {
        throw parse_error(std::string("bad curve: ") + e.what());
    }
}

namespace {

std::string coeff_text(const FqElem& c) {
    if (c.c1 == 0) return c.c0.get_str();
    return "(" + to_text(c) + ")";
}

}  // namespace

std::string to_text(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        FqElem c = f.at(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += coeff_text(c);
        } else {
            std::string xs = (i == 1) ? "x" : "x^" + std::to_string(i);
            if (c.is_one())
                out += xs;
            else
                out += coeff_text(c) + "*" + xs;
        }
    }
    return out;
}

Poly parse_poly(const FqField* F, const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) throw parse_error("empty polynomial");
    if (s == "0") return Poly::zero(F);
    Poly acc = Poly::zero(F);
    for (const std::string& term : split_top(s, '+')) {
        if (term.empty()) throw parse_error("empty term in polynomial");
        std::string coef = term;
        std::size_t k = 0;
        auto xpos = term.rfind("x^");
        if (xpos != std::string::npos && (xpos == 0 || term[xpos - 1] == '*')) {
            k = std::stoul(term.substr(xpos + 2));
            coef = term.substr(0, xpos == 0 ? 0 : xpos - 1);
        } else if (!term.empty() && term.back() == 'x' &&
                   (term.size() == 1 || term[term.size() - 2] == '*' || term.size() == 1)) {
            k = 1;
            coef = term.substr(0, term.size() == 1 ? 0 : term.size() - 2);
        }
        FqElem c = coef.empty() ? FqElem::one(F) : parse_fq(F, coef);
        Poly mono = Poly::monomial(F, k);
        acc = acc + c * mono;
    }
    return acc;
}

}  // namespace ss
