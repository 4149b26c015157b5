#pragma once

// On-disk cache for class data and character tables.  One file per key under
// the cache directory; payloads carry a schema version and a checksum, and
// anything that fails validation is discarded and recomputed.  Keys include
// the engine version, so version bumps invalidate cleanly.

#include <filesystem>
#include <fstream>

#include "realchar/chartab.hpp"
#include "realchar/version.hpp"

namespace realchar {

namespace cache_detail {

inline u64 fnv1a(const std::string& s, u64 h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline u64 fnv1a_bytes(const std::vector<u64>& words) {
  u64 h = 1469598103934665603ULL;
  for (u64 w : words) {
    for (int i = 0; i < 8; ++i) {
      h ^= (w >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

struct Writer {
  std::vector<u64> words;
  void put(u64 v) { words.push_back(v); }
  void put_vec(const std::vector<u64>& v) {
    put(v.size());
    for (u64 x : v) put(x);
  }
  void put_vec32(const std::vector<u32>& v) {
    put(v.size());
    for (u32 x : v) put(x);
  }
  void put_points(const std::vector<point>& v) {
    put(v.size());
    for (point x : v) put(x);
  }
};

struct Reader {
  const std::vector<u64>& words;
  size_t pos = 0;
  explicit Reader(const std::vector<u64>& w) : words(w) {}
  u64 get() {
    if (pos >= words.size()) throw std::runtime_error("cache payload truncated");
    return words[pos++];
  }
  std::vector<u64> get_vec() {
    u64 n = get();
    if (n > 1u << 26) throw std::runtime_error("cache payload corrupt");
    std::vector<u64> v(static_cast<size_t>(n), 0);
    for (auto& x : v) x = get();
    return v;
  }
  std::vector<u32> get_vec32() {
    auto v = get_vec();
    std::vector<u32> r(v.begin(), v.end());
    return r;
  }
  std::vector<point> get_points() {
    auto v = get_vec();
    std::vector<point> r;
    r.reserve(v.size());
    for (u64 x : v) r.push_back(point(x));
    return r;
  }
};

}  // namespace cache_detail

class Cache {
 public:
  Cache() = default;
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)), enabled_(true) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) enabled_ = false;  // I/O problems disable caching, never abort work
  }

  static std::filesystem::path default_dir() {
    if (const char* env = std::getenv("REALCHAR_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
      return std::filesystem::path(xdg) / "realchar";
    if (const char* home = std::getenv("HOME"))
      return std::filesystem::path(home) / ".cache" / "realchar";
    return std::filesystem::temp_directory_path() / "realchar-cache";
  }

  bool enabled() const { return enabled_; }

  void store(const std::string& key, const std::vector<u64>& payload) const {
    if (!enabled_) return;
    std::vector<u64> framed;
    framed.push_back(0x5245414c43484152ULL);  // magic
    framed.push_back(kCacheSchemaVersion);
    framed.push_back(payload.size());
    framed.insert(framed.end(), payload.begin(), payload.end());
    framed.push_back(cache_detail::fnv1a_bytes(payload));
    std::ofstream out(path_for(key), std::ios::binary | std::ios::trunc);
    if (!out) return;
    out.write(reinterpret_cast<const char*>(framed.data()),
              std::streamsize(framed.size() * sizeof(u64)));
  }

  std::optional<std::vector<u64>> load(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::vector<u64> framed;
    u64 w;
    while (in.read(reinterpret_cast<char*>(&w), sizeof(w))) framed.push_back(w);
    if (framed.size() < 4) return std::nullopt;
    if (framed[0] != 0x5245414c43484152ULL || framed[1] != kCacheSchemaVersion)
      return std::nullopt;
    u64 n = framed[2];
    if (framed.size() != n + 4) return std::nullopt;
    std::vector<u64> payload(framed.begin() + 3, framed.begin() + 3 + std::ptrdiff_t(n));
    if (cache_detail::fnv1a_bytes(payload) != framed.back()) return std::nullopt;
    return payload;
  }

  std::string key_for(const std::string& descriptor, const std::string& kind) const {
    return kind + ":" + std::string(kVersion) + ":" + descriptor;
  }

 private:
  std::filesystem::path dir_;
  bool enabled_ = false;

  std::filesystem::path path_for(const std::string& key) const {
    std::ostringstream name;
    name << std::hex << std::setw(16) << std::setfill('0') << cache_detail::fnv1a(key) << ".bin";
    return dir_ / name.str();
  }
};

// ---------------------------------------------------------------------------
// (de)serialization; the element index is never cached, only the class data

inline std::vector<u64> serialize_class_set(const ClassSet& cs) {
  cache_detail::Writer w;
  w.put(cs.group_order);
  w.put(cs.degree);
  w.put(cs.exponent);
  w.put(cs.classes.size());
  for (const auto& c : cs.classes) {
    w.put_points(c.rep.images());
    w.put(c.size);
    w.put(c.order);
    w.put(c.real);
    w.put(c.rational);
    w.put(c.inverse_class);
  }
  w.put(cs.power_class.size());
  for (const auto& row : cs.power_class) w.put_vec32(row);
  w.put(cs.stored_power_maps.size());
  for (const auto& [m, pm] : cs.stored_power_maps) {
    w.put(m);
    w.put_vec32(pm);
  }
  return w.words;
}

inline ClassSet deserialize_class_set(const std::vector<u64>& payload) {
  cache_detail::Reader r(payload);
  ClassSet cs;
  cs.group_order = r.get();
  cs.degree = u32(r.get());
  cs.exponent = r.get();
  u64 k = r.get();
  for (u64 i = 0; i < k; ++i) {
    ClassInfo c;
    c.rep = Perm(r.get_points());
    c.size = r.get();
    c.order = r.get();
    c.real = r.get();
    c.rational = r.get();
    c.inverse_class = u32(r.get());
    cs.classes.push_back(std::move(c));
  }
  u64 pk = r.get();
  for (u64 i = 0; i < pk; ++i) cs.power_class.push_back(r.get_vec32());
  u64 mk = r.get();
  for (u64 i = 0; i < mk; ++i) {
    u64 m = r.get();
    cs.stored_power_maps.emplace_back(m, r.get_vec32());
  }
  return cs;
}

inline std::vector<u64> serialize_char_table(const CharTable& t) {
  cache_detail::Writer w;
  w.put(t.group_order);
  w.put(t.exponent);
  w.put(t.prime);
  w.put_vec(t.class_sizes);
  w.put_vec(t.class_orders);
  w.put_vec32(t.inverse_class);
  w.put(t.rows.size());
  for (const auto& row : t.rows) {
    w.put(row.degree);
    w.put(row.real);
    w.put(row.rational);
    w.put(row.values.size());
    for (const auto& v : row.values) {
      w.put(v.order);
      w.put_vec(v.mult);
    }
  }
  return w.words;
}

inline CharTable deserialize_char_table(const std::vector<u64>& payload) {
  cache_detail::Reader r(payload);
  CharTable t;
  t.group_order = r.get();
  t.exponent = r.get();
  t.prime = r.get();
  t.class_sizes = r.get_vec();
  t.class_orders = r.get_vec();
  t.inverse_class = r.get_vec32();
  u64 nrows = r.get();
  for (u64 i = 0; i < nrows; ++i) {
    CharRow row;
    row.degree = r.get();
    row.real = r.get();
    row.rational = r.get();
    u64 nv = r.get();
    for (u64 j = 0; j < nv; ++j) {
      u64 o = r.get();
      row.values.emplace_back(o, r.get_vec());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace realchar
