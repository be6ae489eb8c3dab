#pragma once

#include <vector>

#include "linkinv/poly.hpp"

namespace linkinv {

// Remainder of f on full division by the list G (taken in order); no term of
// the result is divisible by any leading term of G. When G is a Groebner
// basis this is the unique normal form.
Poly normal_form(const Poly& f, const std::vector<Poly>& G);

// Buchberger's algorithm under the lex order of the shared VarTable, with
// the product and chain criteria. Returns the unique reduced basis: monic,
// auto-reduced, sorted by ascending leading term.
std::vector<Poly> groebner_basis(std::vector<Poly> gens);

// Inter-reduce a basis: drop redundant elements, reduce tails, make monic,
// sort ascending by leading term. Does not add S-polynomials.
std::vector<Poly> reduce_basis(std::vector<Poly> G);

// Every S-polynomial of G reduces to zero against G itself.
bool is_groebner_basis(const std::vector<Poly>& G);

bool in_ideal(const Poly& f, const std::vector<Poly>& gb);

} // namespace linkinv
