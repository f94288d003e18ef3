#include "skein/hecke.hpp"

#include "skein/engines.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace skein {

PermCode perm_pack(const std::vector<int>& p) {
    if (p.size() > 16) throw std::invalid_argument("permutation too long to pack");
    PermCode c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) c |= PermCode(p[i] & 0xf) << (4 * i);
    return c;
}

std::vector<int> perm_unpack(PermCode code, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = static_cast<int>((code >> (4 * i)) & 0xf);
    return p;
}

PermCode perm_identity(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return perm_pack(p);
}

namespace hecke_detail {

namespace {

std::uint32_t factorial(int n) {
    std::uint32_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint32_t>(i);
    return f;
}

std::uint32_t rank_of(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    std::uint32_t r = 0;
    for (int x = 0; x < n; ++x) {
        int c = 0;
        for (int y = x + 1; y < n; ++y)
            if (w[y] < w[x]) ++c;
        r = r * static_cast<std::uint32_t>(n - x) + static_cast<std::uint32_t>(c);
    }
    return r;
}

std::vector<int> perm_of(std::uint32_t rank, int n) {
    std::vector<int> digits(n);
    for (int x = n - 1; x >= 0; --x) {
        digits[x] = static_cast<int>(rank % static_cast<std::uint32_t>(n - x));
        rank /= static_cast<std::uint32_t>(n - x);
    }
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> w(n);
    for (int x = 0; x < n; ++x) {
        w[x] = pool[digits[x]];
        pool.erase(pool.begin() + digits[x]);
    }
    return w;
}

}  // namespace

std::shared_ptr<const PermTables> tables_for(int n) {
    if (n < 1 || n > kDenseMax)
        throw std::invalid_argument("dense Hecke tables support 1..9 strands");
    static std::mutex mu;
    static std::shared_ptr<const PermTables> cache[kDenseMax + 1];
    std::lock_guard<std::mutex> lk(mu);
    if (cache[n]) return cache[n];
    auto T = std::make_shared<PermTables>();
    T->n = n;
    T->size = factorial(n);
    for (int g = 0; g + 1 < n; ++g) {
        T->trans[g].resize(T->size);
        T->asc[g].resize(T->size);
    }
    T->last_image.resize(T->size);
    T->restrict_rank.resize(T->size);
    T->codes.resize(T->size);
    std::vector<int> inv(n);
    for (std::uint32_t r = 0; r < T->size; ++r) {
        std::vector<int> w = perm_of(r, n);
        T->codes[r] = perm_pack(w);
        for (int x = 0; x < n; ++x) inv[w[x]] = x;
        for (int g = 0; g + 1 < n; ++g) {
            std::vector<int> sw = w;
            std::swap(sw[inv[g]], sw[inv[g + 1]]);  // s_g o w swaps values g, g+1
            T->trans[g][r] = rank_of(sw);
            T->asc[g][r] = inv[g] < inv[g + 1];
        }
        int j0 = w[n - 1];
        T->last_image[r] = static_cast<std::uint8_t>(j0);
        if (n > 1) {
            std::vector<int> wp(n - 1);
            for (int x = 0; x + 1 < n; ++x) wp[x] = w[x] - (w[x] > j0 ? 1 : 0);
            T->restrict_rank[r] = rank_of(wp);
        } else {
            T->restrict_rank[r] = 0;
        }
    }
    cache[n] = T;
    return cache[n];
}

}  // namespace hecke_detail

// ------------------------------------------------------------- sparse path

namespace {

using hecke_detail::VZRing;

void sparse_prune(HeckeElement& e) {
    for (auto it = e.terms.begin(); it != e.terms.end();)
        it = it->second.is_zero() ? e.terms.erase(it) : std::next(it);
}

// right-multiply by one letter in the generic (any strand count) map form
void sparse_apply_letter(HeckeElement& e, int letter) {
    int n = e.strands;
    int g = std::abs(letter) - 1;
    bool positive = letter > 0;
    std::map<PermCode, LaurentVZ> out;
    for (const auto& [code, c] : e.terms) {
        std::vector<int> w = perm_unpack(code, n);
        std::vector<int> inv(n);
        for (int x = 0; x < n; ++x) inv[w[x]] = x;
        bool asc = inv[g] < inv[g + 1];
        std::vector<int> sw = w;
        std::swap(sw[inv[g]], sw[inv[g + 1]]);
        PermCode swc = perm_pack(sw);
        out[swc] += c;
        if (asc) {
            if (!positive) out[code] -= c.shifted(0, 1);
        } else {
            if (positive) out[code] += c.shifted(0, 1);
        }
    }
    HeckeElement r{n, std::move(out)};
    sparse_prune(r);
    e = std::move(r);
}

HeckeElement sparse_close_one(const HeckeElement& e) {
    int n = e.strands;
    HeckeElement out{n - 1, {}};
    std::map<int, HeckeElement> buckets;
    for (const auto& [code, c] : e.terms) {
        std::vector<int> w = perm_unpack(code, n);
        int j0 = w[n - 1];
        std::vector<int> wp(n - 1);
        for (int x = 0; x + 1 < n; ++x) wp[x] = w[x] - (w[x] > j0 ? 1 : 0);
        PermCode wpc = perm_pack(wp);
        if (j0 == n - 1) {
            out.terms[wpc] += c * LaurentVZ::delta();
        } else {
            auto& b = buckets.try_emplace(j0, HeckeElement{n - 1, {}}).first->second;
            b.terms[wpc] += c;
        }
    }
    for (auto& [j0, b] : buckets) {
        for (int k = n - 2; k >= j0 + 1; --k) sparse_apply_letter(b, k);
        for (auto& [code, c] : b.terms) out.terms[code] += c.shifted(-1, 0);
    }
    sparse_prune(out);
    return out;
}

}  // namespace

HeckeElement braid_to_hecke(const BraidWord& w) {
    w.check();
    if (w.strands <= hecke_detail::kDenseMax) {
        hecke_detail::VZRing R;
        auto e = hecke_detail::dense_identity(R, w.strands);
        for (int l : w.letters) hecke_detail::dense_apply_letter(R, e, l);
        auto T = hecke_detail::tables_for(w.strands);
        HeckeElement out{w.strands, {}};
        for (std::uint32_t r = 0; r < T->size; ++r)
            if (!e.a[r].is_zero()) out.terms.emplace(T->codes[r], std::move(e.a[r]));
        return out;
    }
    HeckeElement e{w.strands, {{perm_identity(w.strands), LaurentVZ::one()}}};
    for (int l : w.letters) sparse_apply_letter(e, l);
    return e;
}

LaurentVZ trace_closure(const HeckeElement& e) {
    if (e.strands <= hecke_detail::kDenseMax) {
        hecke_detail::VZRing R;
        auto T = hecke_detail::tables_for(e.strands);
        hecke_detail::Dense<VZRing> d;
        d.n = e.strands;
        d.a.assign(T->size, R.zero());
        std::map<PermCode, std::uint32_t> rank_of_code;
        for (std::uint32_t r = 0; r < T->size; ++r) rank_of_code[T->codes[r]] = r;
        for (const auto& [code, c] : e.terms) {
            auto it = rank_of_code.find(code);
            if (it == rank_of_code.end())
                throw std::invalid_argument("invalid permutation in Hecke element");
            d.a[it->second] = c;
        }
        return hecke_detail::dense_trace(R, std::move(d));
    }
    HeckeElement cur = e;
    while (cur.strands > 1) cur = sparse_close_one(cur);
    auto it = cur.terms.find(perm_identity(1));
    return it == cur.terms.end() ? LaurentVZ() : it->second;
}

LaurentVZ homfly_hecke(const BraidWord& w) { return trace_closure(braid_to_hecke(w)); }

LaurentVZ homfly_ambient_hecke(const BraidWord& w) {
    return ambient_from_framed(homfly_hecke(w), w.writhe());
}

}  // namespace skein
