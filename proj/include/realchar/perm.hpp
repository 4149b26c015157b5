#pragma once

// Permutations on {0..n-1} as image arrays.  Composition is left-to-right:
// (a*b) applies a first, then b.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "realchar/errors.hpp"
#include "realchar/intmath.hpp"

namespace realchar {

using point = std::uint16_t;

class Perm {
 public:
  Perm() = default;

  explicit Perm(u32 degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), point(0));
  }

  explicit Perm(std::vector<point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (point p : img_) {
      if (p >= img_.size() || seen[p])
        throw std::invalid_argument("Perm: images are not a bijection");
      seen[p] = true;
    }
  }

  static Perm from_cycles(u32 degree, const std::vector<std::vector<u32>>& cycles) {
    std::vector<point> img(degree);
    std::iota(img.begin(), img.end(), point(0));
    for (const auto& cyc : cycles) {
      for (size_t i = 0; i < cyc.size(); ++i) {
        u32 from = cyc[i], to = cyc[(i + 1) % cyc.size()];
        if (from >= degree || to >= degree)
          throw std::invalid_argument("Perm: cycle point out of range");
        img[from] = point(to);
      }
    }
    return Perm(std::move(img));
  }

  u32 degree() const { return u32(img_.size()); }
  point operator[](u32 i) const { return img_[i]; }
  const std::vector<point>& images() const { return img_; }

  bool is_identity() const {
    for (u32 i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("Perm: degree mismatch");
    Perm r;
    r.img_.resize(a.img_.size());
    for (u32 i = 0; i < a.img_.size(); ++i) r.img_[i] = b.img_[a.img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (u32 i = 0; i < img_.size(); ++i) r.img_[img_[i]] = point(i);
    return r;
  }

  // this^by = by^-1 * this * by
  Perm conj(const Perm& by) const {
    Perm r;
    r.img_.resize(img_.size());
    for (u32 i = 0; i < img_.size(); ++i) r.img_[by.img_[i]] = by.img_[img_[i]];
    return r;
  }

  Perm pow(u64 e) const {
    Perm r(degree()), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  u64 order() const {
    std::vector<bool> seen(img_.size(), false);
    u64 ord = 1;
    for (u32 i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      u64 len = 0;
      for (u32 j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  u32 smallest_moved_point() const {
    for (u32 i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return i;
    return degree();
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  std::string cycle_string() const {
    std::string s;
    std::vector<bool> seen(img_.size(), false);
    for (u32 i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) {
        seen[i] = true;
        continue;
      }
      s += '(';
      bool first = true;
      for (u32 j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        if (!first) s += ' ';
        s += std::to_string(j);
        first = false;
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  u64 hash() const {
    u64 h = 1469598103934665603ULL;
    for (point p : img_) {
      h ^= p & 0xff;
      h *= 1099511628211ULL;
      h ^= p >> 8;
      h *= 1099511628211ULL;
    }
    return h;
  }

 private:
  std::vector<point> img_;
};

}  // namespace realchar
