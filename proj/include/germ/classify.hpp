#ifndef GERM_CLASSIFY_HPP
#define GERM_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "germ/newton.hpp"
#include "germ/poly.hpp"
#include "germ/whfactor.hpp"

namespace germ {

/// One logged event of the classification: an elementary right-equivalence,
/// a truncation above the determinacy, or a convenience padding term.
struct TransformStep {
    enum class Kind { elementary, truncate, add_term };
    Kind kind;
    KPoly image_x, image_y;  // elementary
    long bound = -1;         // truncate
    KPoly term;              // add_term
};

/// Composable log of the applied right-equivalences; replaying it on the
/// original input reproduces the classified germ exactly.
struct Transformation {
    std::vector<TransformStep> steps;
    TowerPtr tower;  // final coefficient field

    KPoly apply(const KPoly& f) const;
    bool is_identity() const { return steps.empty(); }
};

struct ClassifyOutcome {
    bool ok = false;
    std::string failure;  // set when !ok ("degenerate Newton boundary")
    KPoly germ;
    NewtonPolygon polygon;
    Transformation log;
    long mu = -1;
    long determinacy = -1;  // truncation level used
};

struct ClassifyOptions {
    bool assert_mu_invariant = false;      // recompute mu after every step
    bool assert_newton_monotone = false;   // Newton number never decreases
    long max_iterations = 500;
};

/// Algorithm: transform a corank-2 germ over Q with finite Milnor number to a
/// right-equivalent germ with non-degenerate, convenient, normalized Newton
/// boundary; failure (not right-equivalent to such a germ) is a value.
ClassifyOutcome classify_newton_boundary(const QPoly& f, const ClassifyOptions& opts = {});

/// Result of one normalization stage (standard jet or one facet).
struct StageResult {
    bool ok = false;
    bool changed = false;
    KPoly germ;
    std::vector<TransformStep> steps;
    std::string failure;
};

/// Standard-homogeneous stage: if the lowest jet has multiple linear factors
/// not associated to the axes, map them onto free axis variables; fails when
/// no linear map can make the saturated jet squarefree.
StageResult normalize_standard_jet(const KPoly& f);

/// Weighted stage for a facet weight w with w.wx != w.wy: transform the facet
/// jet to one with non-degenerate saturation satisfying the normalization
/// condition; fails when two multiple factors (or a multiple non-linear one)
/// obstruct it.
StageResult normalize_facet(const KPoly& f, const Weight& w);

/// Checked substitute-then-truncate (errors when k is below the determinacy
/// bound of f).
QPoly apply_and_truncate(const QPoly& f, const QPoly& image_x, const QPoly& image_y, long k);

/// Canonical x<->y orientation: the lexicographically smaller vertex list.
bool mirror_is_canonical(const NewtonPolygon& p);

}  // namespace germ

#endif
