#pragma once

#include <string>
#include <vector>

#include "cpavg/rational.hpp"
#include "cpavg/weyl.hpp"

namespace cpavg {

// Characteristic-polynomial product query.  For the unitary family the
// parameters split into an inverse side (det(I + a^{-1} g^{-1})) and a
// direct side (det(I + a g)); for the other families the x parameters all
// enter as det(I + x g), or det(I - x g) when det_plus is false.
struct ProductQuery {
    GroupSpec group;
    std::vector<Rational> alpha_inv; // unitary inverse side (L entries)
    std::vector<Rational> alpha;     // unitary direct side (K entries)
    std::vector<Rational> x;         // non-unitary numerator parameters
    bool det_plus = true;            // det(I + x g) vs det(I - x g)
};

// Ratio query: the product numerator over det(I - y g) factors (unitary:
// det(I - gamma g) and det(I - delta g^{-1})).
struct RatioQuery {
    ProductQuery base;
    std::vector<Rational> gamma; // unitary, |gamma| < 1
    std::vector<Rational> delta; // unitary, |delta| < 1
    std::vector<Rational> y;     // other families, |y| < 1
};

// Exact value of an average together with its provenance and, for product
// queries, the rectangular-character form it was checked against.
struct AverageResult {
    Rational value;
    Rational character_form;
    std::string method;
    std::string params;
};

} // namespace cpavg
