#ifndef GERM_TOWER_HPP
#define GERM_TOWER_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "germ/rational.hpp"
#include "germ/unipoly.hpp"

namespace germ {

class Tower;
class AlgNum;
using TowerPtr = std::shared_ptr<const Tower>;

struct incompatible_towers : std::domain_error {
    incompatible_towers() : std::domain_error("incompatible extension towers") {}
};

/// One simple algebraic extension on top of a base tower. The empty (null)
/// TowerPtr denotes Q. Minimal polynomials are monic of degree >= 2 over the
/// base; irreducibility is the caller's precondition (see extend() in
/// towerfactor.hpp, which verifies it by factorization).
class Tower {
  public:
    static TowerPtr extend_unchecked(TowerPtr base, std::string gen_name,
                                     UniPoly<AlgNum> minpoly);

    const TowerPtr& base() const { return base_; }
    const std::string& gen_name() const { return gen_name_; }
    const UniPoly<AlgNum>& minpoly() const { return minpoly_; }
    int height() const { return height_; }
    long degree() const { return degree_; }  // [K:Q]

    /// a prefix of b (or equal), towers compared structurally
    static bool is_prefix(const TowerPtr& a, const TowerPtr& b);
    static bool equal(const TowerPtr& a, const TowerPtr& b);
    /// the taller of two compatible towers
    static TowerPtr common(const TowerPtr& a, const TowerPtr& b);

    std::string str() const;  // "r2^2-r1 over r1^2-2" style, outermost first

  private:
    Tower() = default;
    TowerPtr base_;
    std::string gen_name_;
    UniPoly<AlgNum> minpoly_;
    int height_ = 0;
    long degree_ = 1;
};

/// Element of a tower extension field (or of Q when the tower is null).
/// Stored dense in the top generator with coordinates over the base tower,
/// always reduced modulo the minimal polynomial, no trailing zero coordinates.
class AlgNum {
  public:
    AlgNum() : rat_() {}
    AlgNum(long n) : rat_(n) {}
    AlgNum(const Rat& r) : rat_(r) {}

    static AlgNum generator(const TowerPtr& t);
    static AlgNum from_rational(const Rat& r, const TowerPtr& t);
    /// value with given coordinates over t->base(); reduces nothing (caller
    /// guarantees size < deg minpoly)
    static AlgNum from_coords(const TowerPtr& t, std::vector<AlgNum> coords);

    const TowerPtr& tower() const { return tower_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()
    const std::vector<AlgNum>& coords() const { return coords_; }

    AlgNum lifted_to(const TowerPtr& t) const;

    AlgNum operator-() const;
    friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b);
    friend bool operator==(const AlgNum& a, const AlgNum& b);
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

    AlgNum inv() const;

    /// total order for deterministic tie-breaking (not a field order)
    static int cmp(const AlgNum& a, const AlgNum& b);

    std::string str() const;

  private:
    TowerPtr tower_;              // null = Q
    Rat rat_;                     // used iff tower_ == null
    std::vector<AlgNum> coords_;  // used iff tower_ != null
    void strip();
};

std::string algnum_str(const AlgNum& a);

}  // namespace germ

#endif
