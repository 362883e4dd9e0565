#ifndef GERM_TOWERFACTOR_HPP
#define GERM_TOWERFACTOR_HPP

#include <string>
#include <utility>
#include <vector>

#include "germ/qfactor.hpp"
#include "germ/tower.hpp"
#include "germ/unipoly.hpp"

namespace germ {

/// field-tower op `extend`: checked simple extension. Throws reducible_minpoly
/// (naming a nontrivial factor) when the minimal polynomial splits.
struct reducible_minpoly : std::domain_error {
    explicit reducible_minpoly(const std::string& factor)
        : std::domain_error("reducible minimal polynomial; nontrivial factor " + factor) {}
};

TowerPtr extend(const TowerPtr& base, const std::string& gen_name,
                const UniPoly<AlgNum>& minpoly);

/// Monic irreducible factors of a squarefree monic u over the tower K
/// (Trager norm descent), sorted by degree then coefficient sequence.
std::vector<UniPoly<AlgNum>> factor_squarefree_tower(const TowerPtr& K,
                                                     const UniPoly<AlgNum>& u);

bool is_irreducible_tower(const TowerPtr& K, const UniPoly<AlgNum>& u);

/// Root of a monic irreducible v over K; extends the tower when deg v >= 2
/// (generator names r1, r2, ... by height).
std::pair<AlgNum, TowerPtr> adjoin_root(const TowerPtr& K, const UniPoly<AlgNum>& v);

}  // namespace germ

#endif
