#ifndef GERM_QFACTOR_HPP
#define GERM_QFACTOR_HPP

#include <utility>
#include <vector>

#include "germ/rational.hpp"
#include "germ/unipoly.hpp"

namespace germ {

struct QFactorization {
    Rat unit;  // f = unit * prod factors[i].first ^ factors[i].second
    std::vector<std::pair<UniPoly<Rat>, int>> factors;  // monic irreducible
};

/// Full factorization over Q (Yun + Zassenhaus).
QFactorization factor_rational(const UniPoly<Rat>& f);

/// Irreducible monic factors of a squarefree monic rational polynomial.
std::vector<UniPoly<Rat>> factor_squarefree_rational(const UniPoly<Rat>& f);

bool is_irreducible_rational(const UniPoly<Rat>& f);

}  // namespace germ

#endif
