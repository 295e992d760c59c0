#pragma once

#include <memory>
#include <string>

#include "ss/curve.hpp"
#include "ss/fq.hpp"
#include "ss/poly.hpp"

namespace ss {

// Element syntax: "c0+c1*u" with decimal coordinates. Parsing also accepts
// the short forms "c0" and "c1*u".
std::string to_text(const FqElem& e);
FqElem parse_fq(const FqField* F, const std::string& s);

// Curve syntax: "p; a; b".
std::string to_text(const Curve& E);

struct ParsedCurve {
    std::shared_ptr<const FqField> field;  // keeps the curve's context alive
    Curve curve;
};
ParsedCurve parse_curve(const std::string& s);

// Polynomial syntax: "c_k*x^k + ... + c_0", coefficients in element syntax,
// parenthesised whenever the u-part is nonzero. Zero polynomial prints "0".
std::string to_text(const Poly& f);
Poly parse_poly(const FqField* F, const std::string& s);

}  // namespace ss
