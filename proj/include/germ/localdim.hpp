#ifndef GERM_LOCALDIM_HPP
#define GERM_LOCALDIM_HPP

#include <map>
#include <vector>

#include "germ/poly.hpp"

namespace germ {

/// Exact Macaulay-window view of a local ideal I = <gens> in Q[x,y]_(x,y):
/// row echelon of all monomial shifts of the generators inside the window
/// of monomials of degree < window. The window is grown until the quotient
/// dimension stabilizes between consecutive cutoffs, which by Nakayama
/// certifies m^window inside I; membership and dimension are then exact.
class LocalIdealWindow {
  public:
    bool finite() const { return finite_; }
    long dimension() const { return dim_; }  // = dim Q[x,y]_loc / I when finite
    long window() const { return window_; }

    /// exact ideal membership (requires finite())
    bool contains_monomial(const Mon& m) const;
    bool contains(const QPoly& f) const;

    /// monomials outside the lead structure (a basis of the quotient)
    std::vector<Mon> quotient_basis() const;

    friend LocalIdealWindow analyze_local_ideal(const std::vector<QPoly>& gens,
                                                long max_window);

  private:
    bool finite_ = false;
    long dim_ = -1;
    long window_ = 0;
    std::vector<Mon> cols_;               // local order, largest first
    std::map<std::pair<long, long>, int> col_index_;
    std::vector<std::vector<Rat>> pivot_rows_;  // echelon rows
    std::vector<int> pivot_of_col_;             // index into pivot_rows_ or -1
    void reduce(std::vector<Rat>& row) const;
};

/// Analyze <gens>; gives up (finite() == false) beyond max_window.
LocalIdealWindow analyze_local_ideal(const std::vector<QPoly>& gens, long max_window = 80);

}  // namespace germ

#endif
