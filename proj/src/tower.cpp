#include "germ/tower.hpp"

#include <cassert>

namespace germ {

TowerPtr Tower::extend_unchecked(TowerPtr base, std::string gen_name, UniPoly<AlgNum> minpoly) {
    if (minpoly.deg() < 2) throw std::domain_error("Tower: minimal polynomial degree must be >= 2");
    if (!minpoly.lc().is_one()) throw std::domain_error("Tower: minimal polynomial must be monic");
    auto t = std::shared_ptr<Tower>(new Tower());
    t->base_ = base;
    t->gen_name_ = std::move(gen_name);
    t->minpoly_ = std::move(minpoly);
    t->height_ = base ? base->height() + 1 : 1;
    t->degree_ = (base ? base->degree() : 1) * t->minpoly_.deg();
    return t;
}

bool Tower::equal(const TowerPtr& a, const TowerPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->height_ != b->height_ || a->gen_name_ != b->gen_name_) return false;
    if (a->minpoly_ != b->minpoly_) return false;
    return equal(a->base_, b->base_);
}

bool Tower::is_prefix(const TowerPtr& a, const TowerPtr& b) {
    int ha = a ? a->height() : 0;
    int hb = b ? b->height() : 0;
    if (ha > hb) return false;
    TowerPtr c = b;
    while ((c ? c->height() : 0) > ha) c = c->base();
    return equal(a, c);
}

TowerPtr Tower::common(const TowerPtr& a, const TowerPtr& b) {
    int ha = a ? a->height() : 0;
    int hb = b ? b->height() : 0;
    const TowerPtr& tall = ha >= hb ? a : b;
    const TowerPtr& low = ha >= hb ? b : a;
    if (!is_prefix(low, tall)) throw incompatible_towers();
    return tall;
}

std::string Tower::str() const {
    std::string s = gen_name_ + ": " + minpoly_.str("t", &algnum_str);
    if (base_) s = base_->str() + "; " + s;
    return s;
}

// ----------------------------------------------------------------- AlgNum

void AlgNum::strip() {
    while (!coords_.empty() && coords_.back().is_zero()) coords_.pop_back();
}

AlgNum AlgNum::generator(const TowerPtr& t) {
    if (!t) throw std::domain_error("AlgNum::generator: trivial tower");
    AlgNum a;
    a.tower_ = t;
    a.coords_ = {AlgNum(0L).lifted_to(t->base()), AlgNum(1L).lifted_to(t->base())};
    return a;
}

AlgNum AlgNum::from_rational(const Rat& r, const TowerPtr& t) { return AlgNum(r).lifted_to(t); }

AlgNum AlgNum::from_coords(const TowerPtr& t, std::vector<AlgNum> coords) {
    if (!t) throw std::domain_error("AlgNum::from_coords: trivial tower");
    AlgNum a;
    a.tower_ = t;
    a.coords_ = std::move(coords);
    for (auto& c : a.coords_) c = c.lifted_to(t->base());
    a.strip();
    return a;
}

bool AlgNum::is_zero() const { return tower_ ? coords_.empty() : rat_.is_zero(); }

bool AlgNum::is_one() const {
    if (!tower_) return rat_.is_one();
    return coords_.size() == 1 && coords_[0].is_one();
}

bool AlgNum::is_rational() const {
    if (!tower_) return true;
    if (coords_.empty()) return true;
    return coords_.size() == 1 && coords_[0].is_rational();
}

Rat AlgNum::rational_value() const {
    if (!tower_) return rat_;
    if (coords_.empty()) return Rat();
    if (coords_.size() == 1) return coords_[0].rational_value();
    throw std::domain_error("AlgNum: not a rational value");
}

AlgNum AlgNum::lifted_to(const TowerPtr& t) const {
    int h = tower_ ? tower_->height() : 0;
    int ht = t ? t->height() : 0;
    if (h == ht) return *this;
    assert(h < ht);
    AlgNum inner = lifted_to(t->base());
    AlgNum a;
    a.tower_ = t;
    if (!inner.is_zero()) a.coords_ = {std::move(inner)};
    return a;
}

AlgNum AlgNum::operator-() const {
    AlgNum r = *this;
    if (!r.tower_) {
        r.rat_ = -r.rat_;
    } else {
        for (auto& c : r.coords_) c = -c;
    }
    return r;
}

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
    TowerPtr t = Tower::common(a.tower_, b.tower_);
    AlgNum x = a.lifted_to(t), y = b.lifted_to(t);
    if (!t) return AlgNum(x.rat_ + y.rat_);
    AlgNum r;
    r.tower_ = t;
    r.coords_.resize(std::max(x.coords_.size(), y.coords_.size()));
    for (size_t i = 0; i < r.coords_.size(); ++i) {
        if (i < x.coords_.size()) r.coords_[i] = r.coords_[i] + x.coords_[i];
        if (i < y.coords_.size()) r.coords_[i] = r.coords_[i] + y.coords_[i];
    }
    r.strip();
    return r;
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) { return a + (-b); }

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
    TowerPtr t = Tower::common(a.tower_, b.tower_);
    AlgNum x = a.lifted_to(t), y = b.lifted_to(t);
    if (!t) return AlgNum(x.rat_ * y.rat_);
    UniPoly<AlgNum> prod = UniPoly<AlgNum>(x.coords_) * UniPoly<AlgNum>(y.coords_);
    UniPoly<AlgNum> red = poly_mod(prod, t->minpoly());
    AlgNum r;
    r.tower_ = t;
    r.coords_ = red.coeffs();
    r.strip();
    return r;
}

AlgNum AlgNum::inv() const {
    if (is_zero()) throw std::domain_error("AlgNum: inverse of zero");
    if (!tower_) return AlgNum(rat_.inv());
    auto [g, s, tt] = poly_xgcd(UniPoly<AlgNum>(coords_), tower_->minpoly());
    (void)tt;
    if (g.deg() != 0)
        throw std::domain_error("AlgNum: minimal polynomial not irreducible (non-unit gcd)");
    // g is monic constant 1, so s * this == 1 mod minpoly
    AlgNum r;
    r.tower_ = tower_;
    r.coords_ = s.coeffs();
    r.strip();
    return r;
}

AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inv(); }

bool operator==(const AlgNum& a, const AlgNum& b) {
    TowerPtr t;
    try {
        t = Tower::common(a.tower_, b.tower_);
    } catch (const incompatible_towers&) {
        return false;
    }
    AlgNum x = a.lifted_to(t), y = b.lifted_to(t);
    if (!t) return x.rat_ == y.rat_;
    return x.coords_ == y.coords_;
}

int AlgNum::cmp(const AlgNum& a, const AlgNum& b) {
    TowerPtr t = Tower::common(a.tower_, b.tower_);
    AlgNum x = a.lifted_to(t), y = b.lifted_to(t);
    if (!t) return x.rat_ < y.rat_ ? -1 : (x.rat_ == y.rat_ ? 0 : 1);
    size_t n = std::max(x.coords_.size(), y.coords_.size());
    static const AlgNum zero;
    for (size_t i = n; i-- > 0;) {
        const AlgNum& cx = i < x.coords_.size() ? x.coords_[i] : zero;
        const AlgNum& cy = i < y.coords_.size() ? y.coords_[i] : zero;
        int c = cmp(cx, cy);
        if (c) return c;
    }
    return 0;
}

std::string AlgNum::str() const {
    if (!tower_) return rat_.str();
    if (coords_.empty()) return "0";
    std::string out;
    for (size_t i = coords_.size(); i-- > 0;) {
        if (coords_[i].is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string c = coords_[i].str();
        bool unit = coords_[i].is_one();
        if (i == 0) {
            out += c;
            continue;
        }
        if (!unit) {
            if (c.find('+') != std::string::npos || c.find('-', 1) != std::string::npos)
                c = "(" + c + ")";
            out += c + "*";
        }
        out += tower_->gen_name();
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string algnum_str(const AlgNum& a) { return a.str(); }

}  // namespace germ
