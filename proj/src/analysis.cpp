#include "skein/analysis.hpp"

#include "skein/hecke.hpp"

namespace skein {

LaurentS p0(const LaurentVZ& p) { return p.z_coefficient(0); }

KauffmanVerdict kauffman_distinct(const LaurentVZ& p, const LaurentVZ& q) {
    return p0(p) == p0(q) ? KauffmanVerdict::inconclusive : KauffmanVerdict::distinct;
}

std::optional<VassilievGap> vassiliev_gap(const LaurentVZ& p, const LaurentVZ& q, int D) {
    if (D < 0) throw std::invalid_argument("vassiliev_gap: negative truncation");
    auto lt = lowest_term(h_expansion(p - q, D));
    if (!lt) return std::nullopt;
    return VassilievGap{lt->degree, lt->coeff};
}

LaurentS sl3_difference(const LaurentVZ& p, const LaurentVZ& q) {
    return p.substitute_v_power(3) - q.substitute_v_power(3);
}

bool sl3_seventh_cyclotomic_factor(const LaurentS& diff) {
    if (diff.is_zero()) return false;
    LaurentS phi7 = LaurentS::from_terms(
        {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}});
    try {
        (void)diff.divided_by(phi7);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

LaurentVZ compute_homfly(const OrientedDiagram& d, const EngineConfig& cfg,
                         const std::optional<BraidWord>& braid) {
    EngineKind kind = cfg.engine;
    if (kind == EngineKind::automatic) kind = braid ? EngineKind::hecke : EngineKind::memo;
    switch (kind) {
        case EngineKind::brute:
            return homfly_ambient_brute(d);
        case EngineKind::hecke: {
            if (!braid) throw std::invalid_argument("hecke engine needs a braid presentation");
            return homfly_ambient_hecke(*braid);
        }
        case EngineKind::memo:
        default: {
            if (!cfg.cache) {
                MemoCache scratch;
                EngineConfig local = cfg;
                return homfly_ambient_memo(d, scratch, local.options);
            }
            return homfly_ambient_memo(d, *cfg.cache, cfg.options);
        }
    }
}

void ComparisonReport::check_consistency() const {
    if (homfly_equal && !jones_equal)
        throw std::logic_error("report: equal Homfly forces equal Jones");
    if (kauffman == KauffmanVerdict::distinct && homfly_equal)
        throw std::logic_error("report: Kauffman distinction contradicts equal Homfly");
}

ComparisonReport compare(const OrientedDiagram& a, const OrientedDiagram& b,
                         const EngineConfig& cfg, const std::string& name_a,
                         const std::string& name_b) {
    ComparisonReport r;
    r.name_a = name_a;
    r.name_b = name_b;
    r.truncation = cfg.truncation;
    try {
        r.homfly_a = compute_homfly(a, cfg, cfg.braid_a);
        r.computed_a = true;
        r.homfly_b = compute_homfly(b, cfg, cfg.braid_b);
        r.computed_b = true;
    } catch (const budget_exceeded& e) {
        r.note = std::string("not computed: ") + e.what();
        return r;
    }
    r.homfly_equal = r.homfly_a == r.homfly_b;
    r.p0_a = p0(r.homfly_a);
    r.p0_b = p0(r.homfly_b);
    r.p0_equal = r.p0_a == r.p0_b;
    r.jones_equal =
        r.homfly_a.substitute_v_power(2) == r.homfly_b.substitute_v_power(2);
    r.sl3_diff = sl3_difference(r.homfly_a, r.homfly_b);
    r.sl3_equal = r.sl3_diff.is_zero();
    r.sl3_factor_observed = sl3_seventh_cyclotomic_factor(r.sl3_diff);
    r.gap = vassiliev_gap(r.homfly_a, r.homfly_b, cfg.truncation);
    r.lm_a = to_lm_table(r.homfly_a);
    r.lm_b = to_lm_table(r.homfly_b);
    r.kauffman = kauffman_distinct(r.homfly_a, r.homfly_b);
    r.check_consistency();
    return r;
}

}  // namespace skein
