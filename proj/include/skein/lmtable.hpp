#pragma once

#include "skein/laurent.hpp"

#include <map>

namespace skein {

/// Coefficient grid of a knot Homfly value in the variables l, m with
/// l^2 = -v^2 and m^2 = -z^2 (so l = iv, m = iz): the entry in row m^b,
/// column l^a is (-1)^((a+b)/2) times the (v^a z^b) coefficient.  Only
/// defined when every exponent pair has a + b even, which holds for knots.
class LMTable {
public:
    using Key = std::pair<std::int32_t, std::int32_t>;  // (b = m power, a = l power)

    LMTable() = default;

    const std::map<Key, Int>& entries() const { return entries_; }
    Int entry(std::int32_t b, std::int32_t a) const;
    void set(std::int32_t b, std::int32_t a, Int c);
    bool operator==(const LMTable& o) const { return entries_ == o.entries_; }

    /// Text rendering in the printed layout: one row per even m power
    /// (row label "1" for m^0), columns by l power.
    std::string render(const std::string& title) const;

private:
    std::map<Key, Int> entries_;  // no zero entries
};

/// Throws std::domain_error if some term of p has a + b odd.
LMTable to_lm_table(const LaurentVZ& p);

/// Inverse of to_lm_table.
LaurentVZ from_lm_table(const LMTable& t);

}  // namespace skein
