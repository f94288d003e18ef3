#pragma once

#include "skein/engines.hpp"
#include "skein/lmtable.hpp"
#include "skein/nseries.hpp"

#include <optional>

namespace skein {

/// z-constant term of a Homfly value as a Laurent polynomial in v.  By
/// Lickorish's theorem it is also the matching constant term of the
/// 2-variable Kauffman polynomial, so inequality certifies distinct
/// Kauffman polynomials.
LaurentS p0(const LaurentVZ& p);

enum class KauffmanVerdict { distinct, inconclusive, not_computed };

/// One-sided test via P0: `distinct` is a proof, `inconclusive` is not a
/// statement of equality.
KauffmanVerdict kauffman_distinct(const LaurentVZ& p, const LaurentVZ& q);

struct VassilievGap {
    int degree;
    NPoly coeff;
};

/// Lowest h-degree where the two h-expansions differ, or nullopt when the
/// difference vanishes through degree D.
std::optional<VassilievGap> vassiliev_gap(const LaurentVZ& p, const LaurentVZ& q, int D);

/// substitute_v_power(p,3) - substitute_v_power(q,3)
LaurentS sl3_difference(const LaurentVZ& p, const LaurentVZ& q);

/// Every computed v=s^3 difference in this corpus happens to carry the
/// factor s^6+s^5+s^4+s^3+s^2+s+1; surfaced as an observation, never
/// asserted.
bool sl3_seventh_cyclotomic_factor(const LaurentS& diff);

enum class EngineKind { automatic, brute, memo, hecke };

struct EngineConfig {
    EngineKind engine = EngineKind::automatic;
    EngineOptions options;
    MemoCache* cache = nullptr;  // required for the memo engine
    int truncation = 12;
    /// set when the diagram arose as a braid closure, enabling the Hecke path
    std::optional<BraidWord> braid_a, braid_b;
};

struct ComparisonReport {
    std::string name_a, name_b;
    bool computed_a = false, computed_b = false;
    LaurentVZ homfly_a, homfly_b;  // ambient normalization
    bool homfly_equal = false;
    LaurentS p0_a, p0_b;
    bool p0_equal = false;
    bool jones_equal = false;
    bool sl3_equal = false;
    LaurentS sl3_diff;  // nonzero when sl3_equal is false
    std::optional<VassilievGap> gap;  // nullopt = none up to truncation
    int truncation = 12;
    LMTable lm_a, lm_b;
    KauffmanVerdict kauffman = KauffmanVerdict::not_computed;
    bool sl3_factor_observed = false;
    std::string note;  // set when a budget cut the computation short

    void check_consistency() const;  // invariants from the type contract
};

/// Run the whole distinguisher battery on two knots.  Budget overruns yield
/// a partial report with an explanatory note instead of an exception.
ComparisonReport compare(const OrientedDiagram& a, const OrientedDiagram& b,
                         const EngineConfig& cfg, const std::string& name_a = "a",
                         const std::string& name_b = "b");

/// Ambient Homfly through the engine selected by the config.
LaurentVZ compute_homfly(const OrientedDiagram& d, const EngineConfig& cfg,
                         const std::optional<BraidWord>& braid = std::nullopt);

}  // namespace skein
