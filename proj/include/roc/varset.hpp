#ifndef ROC_VARSET_HPP
#define ROC_VARSET_HPP

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace roc {

/// A set of variable ids. Kept sorted and duplicate-free; small sets
/// stay inline so recognizer loops do not allocate.
class VarSet {
public:
  using Storage = boost::container::small_vector<int, 8>;

  VarSet() = default;
  VarSet(std::initializer_list<int> ids) {
    for (int v : ids) insert(v);
  }

  static VarSet of_sorted(Storage ids) {
    VarSet s;
    s.ids_ = std::move(ids);
    return s;
  }

  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  bool contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }

  void insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
  }
  void erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
  }

  bool subset_of(const VarSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
  }
  bool proper_subset_of(const VarSet& other) const {
    return size() < other.size() && subset_of(other);
  }
  bool intersects(const VarSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
      if (*a < *b)
        ++a;
      else if (*b < *a)
        ++b;
      else
        return true;
    }
    return false;
  }
  std::size_t intersection_size(const VarSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    std::size_t n = 0;
    while (a != ids_.end() && b != other.ids_.end()) {
      if (*a < *b)
        ++a;
      else if (*b < *a)
        ++b;
      else {
        ++n;
        ++a;
        ++b;
      }
    }
    return n;
  }

  VarSet set_union(const VarSet& other) const {
    VarSet out;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(out.ids_));
    return out;
  }
  VarSet set_difference(const VarSet& other) const {
    VarSet out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out.ids_));
    return out;
  }
  VarSet set_intersection(const VarSet& other) const {
    VarSet out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(out.ids_));
    return out;
  }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  int min_id() const { return ids_.front(); }
  const Storage& ids() const { return ids_; }

  std::uint64_t to_mask() const {
    std::uint64_t m = 0;
    for (int v : ids_) m |= std::uint64_t{1} << v;
    return m;
  }
  static VarSet from_mask(std::uint64_t m) {
    VarSet s;
    for (int v = 0; m != 0; ++v, m >>= 1)
      if (m & 1) s.ids_.push_back(v);
    return s;
  }

  bool operator==(const VarSet& other) const { return ids_ == other.ids_; }
  bool operator!=(const VarSet& other) const { return ids_ != other.ids_; }
  bool operator<(const VarSet& other) const { return ids_ < other.ids_; }

private:
  Storage ids_;
};

/// A total assignment over variables 0..width-1, stored as packed bits.
/// Bits beyond the width are always zero.
class Assignment {
public:
  explicit Assignment(std::size_t width)
      : width_(width), words_((width + 63) / 64, 0) {}

  static Assignment from_mask(std::uint64_t bits, std::size_t width) {
    Assignment a(width);
    if (!a.words_.empty()) {
      a.words_[0] = width >= 64 ? bits : bits & ((std::uint64_t{1} << width) - 1);
    }
    return a;
  }

  /// The "S -> value" assignment: variables in s get `value`, all other
  /// variables get the opposite.
  static Assignment set_to(const VarSet& s, bool value, std::size_t width) {
    Assignment a(width);
    if (!value) a.fill_ones();
    for (int v : s) a.set(v, value);
    return a;
  }

  bool test(int v) const {
    if (static_cast<std::size_t>(v) >= width_) return false;
    return (words_[v >> 6] >> (v & 63)) & 1;
  }
  void set(int v, bool b) {
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (b)
      words_[v >> 6] |= bit;
    else
      words_[v >> 6] &= ~bit;
  }

  std::size_t width() const { return width_; }

  VarSet ones() const {
    VarSet s;
    for (std::size_t v = 0; v < width_; ++v)
      if (test(static_cast<int>(v))) s.insert(static_cast<int>(v));
    return s;
  }

private:
  void fill_ones() {
    for (std::size_t v = 0; v < width_; ++v) set(static_cast<int>(v), true);
  }

  std::size_t width_;
  boost::container::small_vector<std::uint64_t, 2> words_;
};

}  // namespace roc

#endif
