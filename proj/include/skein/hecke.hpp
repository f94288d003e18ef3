#pragma once

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>

namespace skein {

/// Permutation of up to 16 symbols packed four bits per entry; entry i is
/// the top position of the strand entering at bottom position i.
using PermCode = std::uint64_t;

PermCode perm_pack(const std::vector<int>& p);
std::vector<int> perm_unpack(PermCode code, int n);
PermCode perm_identity(int n);

/// Element of the Hecke algebra H_n written in the positive-permutation-
/// braid basis with LaurentVZ coefficients.
struct HeckeElement {
    int strands = 1;
    std::map<PermCode, LaurentVZ> terms;  // no zero coefficients

    bool operator==(const HeckeElement& o) const = default;
};

/// Image of a braid word in H_n: letters append by right multiplication,
/// sigma_i^-1 = sigma_i - z.
HeckeElement braid_to_hecke(const BraidWord& w);

/// Framed Homfly of the closure of a Hecke element, normalized so the
/// closed one-strand identity maps to 1.  Strand by strand, basis elements
/// fixing the last strand restrict with a factor delta, and the rest close
/// through a single positive crossing contributing v^-1.
LaurentVZ trace_closure(const HeckeElement& e);

/// Convenience: framed Homfly of the braid closure via the Hecke engine.
LaurentVZ homfly_hecke(const BraidWord& w);
LaurentVZ homfly_ambient_hecke(const BraidWord& w);

namespace hecke_detail {

/// Shared rank/transition tables for S_n, n <= 9 (dense engine path).
struct PermTables {
    int n;
    std::uint32_t size;                    // n!
    std::vector<std::uint32_t> trans[8];   // trans[i][r] = rank(s_i o w_r)
    std::vector<std::uint8_t> asc[8];      // l(s_i o w_r) > l(w_r)
    std::vector<std::uint8_t> last_image;  // w_r[n-1]
    std::vector<std::uint32_t> restrict_rank;  // rank of w' in S_{n-1}
    std::vector<PermCode> codes;           // rank -> packed permutation
};

std::shared_ptr<const PermTables> tables_for(int n);

constexpr int kDenseMax = 9;

/// Dense H_n element over an arbitrary coefficient ring.  Ring must provide:
///   using V; V zero(); bool is_zero(V); void add_in(V&, const V&);
///   V mul_z(const V&); V neg(const V&); V mul_vinv(const V&);
///   V mul_delta(const V&); V one();
template <class Ring>
struct Dense {
    int n = 1;
    std::vector<typename Ring::V> a;  // indexed by rank
};

template <class Ring>
Dense<Ring> dense_identity(const Ring& R, int n) {
    auto T = tables_for(n);
    Dense<Ring> e;
    e.n = n;
    e.a.assign(T->size, R.zero());
    e.a[0] = R.one();  // rank 0 is the identity (Lehmer code 0)
    return e;
}

template <class Ring>
void dense_apply_letter(const Ring& R, Dense<Ring>& e, int letter) {
    auto T = tables_for(e.n);
    int g = std::abs(letter) - 1;
    bool positive = letter > 0;
    std::vector<typename Ring::V> out(T->size, R.zero());
    for (std::uint32_t r = 0; r < T->size; ++r) {
        if (R.is_zero(e.a[r])) continue;
        std::uint32_t r2 = T->trans[g][r];
        R.add_in(out[r2], e.a[r]);
        if (T->asc[g][r]) {
            if (!positive) R.add_in(out[r], R.neg(R.mul_z(e.a[r])));
        } else {
            if (positive) R.add_in(out[r], R.mul_z(e.a[r]));
        }
    }
    e.a = std::move(out);
}

/// Close the last strand: H_n -> H_{n-1}.
template <class Ring>
Dense<Ring> dense_close_one(const Ring& R, const Dense<Ring>& e) {
    int n = e.n;
    auto T = tables_for(n);
    auto S = tables_for(n - 1);
    Dense<Ring> out;
    out.n = n - 1;
    out.a.assign(S->size, R.zero());
    // bucket by the image of the last strand
    std::vector<Dense<Ring>> bucket(n);
    for (int j = 0; j + 1 < n; ++j) {
        bucket[j].n = n - 1;
        bucket[j].a.assign(S->size, R.zero());
    }
    for (std::uint32_t r = 0; r < T->size; ++r) {
        if (R.is_zero(e.a[r])) continue;
        int j = T->last_image[r];
        std::uint32_t rr = T->restrict_rank[r];
        if (j == n - 1) {
            R.add_in(out.a[rr], R.mul_delta(e.a[r]));
        } else {
            R.add_in(bucket[j].a[rr], e.a[r]);
        }
    }
    for (int j = 0; j + 1 < n; ++j) {
        bool empty = true;
        for (const auto& v : bucket[j].a)
            if (!R.is_zero(v)) {
                empty = false;
                break;
            }
        if (empty) continue;
        // T_w = T_{w'} sigma_{n-1} (sigma_{n-2} ... sigma_{j+1}); closing
        // through the first crossing leaves the tail run to multiply out.
        for (int g = n - 2; g >= j + 1; --g) dense_apply_letter(R, bucket[j], g);
        for (std::uint32_t r = 0; r < S->size; ++r)
            if (!R.is_zero(bucket[j].a[r])) R.add_in(out.a[r], R.mul_vinv(bucket[j].a[r]));
    }
    return out;
}

template <class Ring>
typename Ring::V dense_trace(const Ring& R, Dense<Ring> e) {
    while (e.n > 1) e = dense_close_one(R, e);
    return e.a[0];
}

struct VZRing {
    using V = LaurentVZ;
    V zero() const { return {}; }
    V one() const { return LaurentVZ::one(); }
    bool is_zero(const V& x) const { return x.is_zero(); }
    void add_in(V& x, const V& y) const { x += y; }
    V neg(const V& x) const { return -x; }
    V mul_z(const V& x) const { return x.shifted(0, 1); }
    V mul_vinv(const V& x) const { return x.shifted(-1, 0); }
    V mul_delta(const V& x) const { return x * LaurentVZ::delta(); }
};

}  // namespace hecke_detail

}  // namespace skein
