#include "skein/engines.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace skein {

namespace {
constexpr char kMagic[] = "SKMC1\n";

void put_u32(std::ostream& os, std::uint32_t v) {
    char b[4] = {char(v & 0xff), char((v >> 8) & 0xff), char((v >> 16) & 0xff),
                 char((v >> 24) & 0xff)};
    os.write(b, 4);
}

bool get_u32(std::istream& is, std::uint32_t& v) {
    unsigned char b[4];
    if (!is.read(reinterpret_cast<char*>(b), 4)) return false;
    v = std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8 | std::uint32_t(b[2]) << 16 |
        std::uint32_t(b[3]) << 24;
    return true;
}

void put_poly(std::ostream& os, const LaurentVZ& p) {
    put_u32(os, static_cast<std::uint32_t>(p.terms().size()));
    for (const auto& t : p.terms()) {
        put_u32(os, static_cast<std::uint32_t>(t.first.a));
        put_u32(os, static_cast<std::uint32_t>(t.first.b));
        std::string c = t.second.str();
        put_u32(os, static_cast<std::uint32_t>(c.size()));
        os.write(c.data(), static_cast<std::streamsize>(c.size()));
    }
}

bool get_poly(std::istream& is, LaurentVZ& p) {
    std::uint32_t n;
    if (!get_u32(is, n) || n > (1u << 26)) return false;
    std::vector<LaurentVZ::Term> terms;
    terms.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t a, b, len;
        if (!get_u32(is, a) || !get_u32(is, b) || !get_u32(is, len) || len > (1u << 20))
            return false;
        std::string c(len, '\0');
        if (!is.read(c.data(), len)) return false;
        try {
            terms.push_back({LaurentVZ::Exp{static_cast<std::int32_t>(a),
                                            static_cast<std::int32_t>(b)},
                             Int(c)});
        } catch (...) {
            return false;
        }
    }
    p = LaurentVZ::from_terms(std::move(terms));
    return true;
}
}  // namespace

MemoCache::MemoCache() : shards_(new Shard[kShards]) {}

MemoCache::Shard& MemoCache::shard_for(const std::string& key) const {
    return shards_[std::hash<std::string>{}(key) % kShards];
}

bool MemoCache::lookup(const std::string& key, LaurentVZ& out) const {
    Shard& s = shard_for(key);
    std::lock_guard<std::mutex> lk(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) {
        misses_.fetch_add(1, std::memory_order_relaxed);
        return false;
    }
    out = it->second;
    hits_.fetch_add(1, std::memory_order_relaxed);
    return true;
}

void MemoCache::insert(const std::string& key, const LaurentVZ& value) {
    Shard& s = shard_for(key);
    std::lock_guard<std::mutex> lk(s.mu);
    if (s.map.emplace(key, value).second)
        bytes_.fetch_add(key.size() + 32 + 32 * value.terms().size(),
                         std::memory_order_relaxed);
}

std::size_t MemoCache::size() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < kShards; ++i) {
        std::lock_guard<std::mutex> lk(shards_[i].mu);
        n += shards_[i].map.size();
    }
    return n;
}

void MemoCache::clear() {
    for (std::size_t i = 0; i < kShards; ++i) {
        std::lock_guard<std::mutex> lk(shards_[i].mu);
        shards_[i].map.clear();
    }
    hits_ = 0;
    misses_ = 0;
    bytes_ = 0;
}

bool MemoCache::load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return false;
    char magic[sizeof(kMagic) - 1];
    if (!is.read(magic, sizeof(magic)) || std::string(magic, sizeof(magic)) != kMagic)
        return false;  // wrong version or corrupt: discard
    std::uint32_t count;
    if (!get_u32(is, count)) return false;
    std::vector<std::pair<std::string, LaurentVZ>> loaded;
    loaded.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        std::uint32_t klen;
        if (!get_u32(is, klen) || klen > (1u << 20)) return false;
        std::string key(klen, '\0');
        if (!is.read(key.data(), klen)) return false;
        LaurentVZ val;
        if (!get_poly(is, val)) return false;
        loaded.emplace_back(std::move(key), std::move(val));
    }
    for (auto& [k, v] : loaded) insert(k, v);
    return true;
}

void MemoCache::save(const std::string& path) const {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        os.write(kMagic, sizeof(kMagic) - 1);
        put_u32(os, static_cast<std::uint32_t>(size()));
        for (std::size_t i = 0; i < kShards; ++i) {
            std::lock_guard<std::mutex> lk(shards_[i].mu);
            for (const auto& [k, v] : shards_[i].map) {
                put_u32(os, static_cast<std::uint32_t>(k.size()));
                os.write(k.data(), static_cast<std::streamsize>(k.size()));
                put_poly(os, v);
            }
        }
        if (!os) throw std::runtime_error("cache write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace skein
