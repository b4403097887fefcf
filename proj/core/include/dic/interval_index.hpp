#pragma once

// Ordered multiset of closed intervals keyed by (lo, hi, id).
//
// The tree is an AVL tree whose nodes carry the maximum `hi` of their
// subtree, which lets intersection queries skip subtrees lying entirely to
// the left of the query.  Nodes live in a pooled vector recycled through a
// free list; a value never migrates between nodes, so a pointer obtained
// from find() or a visitor stays valid until that value is erased or the
// next insert.

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dic/types.hpp"

namespace dic {

template <typename V>
struct IntervalKeyTraits {
  static Coord lo(const V& v) { return v.lo; }
  static Coord hi(const V& v) { return v.hi; }
  static auto id(const V& v) { return v.id; }
};

template <typename V, typename Traits = IntervalKeyTraits<V>>
class IntervalIndex {
 public:
  using value_type = V;
  using id_type = std::remove_cvref_t<decltype(Traits::id(std::declval<const V&>()))>;

  IntervalIndex() = default;

  [[nodiscard]] std::size_t size() const { return where_.size(); }
  [[nodiscard]] bool empty() const { return where_.empty(); }
  [[nodiscard]] bool contains(id_type id) const { return where_.count(id) != 0; }

  void clear() {
    nodes_.clear();
    free_.clear();
    where_.clear();
    root_ = kNil;
  }

  void insert(V value) {
    if (Traits::lo(value) > Traits::hi(value)) {
      throw Error(Errc::InvalidInterval, "interval with lo > hi");
    }
    const id_type id = Traits::id(value);
    if (where_.count(id) != 0) {
      throw Error(Errc::DuplicateId, "id " + std::to_string(id) + " already present");
    }
    const std::int32_t n = allocate(std::move(value));
    where_.emplace(id, n);
    root_ = insert_at(root_, n);
  }

  V erase(id_type id) {
    auto it = where_.find(id);
    if (it == where_.end()) {
      throw Error(Errc::UnknownId, "id " + std::to_string(id) + " not present");
    }
    const std::int32_t n = it->second;
    root_ = erase_at(root_, key_of(n));
    where_.erase(it);
    V out = std::move(nodes_[n].value);
    free_.push_back(n);
    return out;
  }

  [[nodiscard]] const V* find(id_type id) const {
    auto it = where_.find(id);
    return it == where_.end() ? nullptr : &nodes_[it->second].value;
  }

  // The returned value's key fields (lo, hi, id) must not be modified.
  [[nodiscard]] V* find(id_type id) {
    auto it = where_.find(id);
    return it == where_.end() ? nullptr : &nodes_[it->second].value;
  }

  // Calls f on every value intersecting the closed interval [a, b], in key
  // order.  f may return bool; returning false stops the enumeration.
  template <typename F>
  void visit_intersecting(Coord a, Coord b, F&& f) {
    check_query(a, b);
    visit(*this, root_, a, b, f);
  }

  template <typename F>
  void visit_intersecting(Coord a, Coord b, F&& f) const {
    check_query(a, b);
    visit(*this, root_, a, b, f);
  }

  [[nodiscard]] std::vector<V> intersection(Coord a, Coord b) const {
    std::vector<V> out;
    visit_intersecting(a, b, [&](const V& v) { out.push_back(v); });
    return out;
  }

  [[nodiscard]] std::vector<V> stab(Coord t) const { return intersection(t, t); }

  [[nodiscard]] bool any_intersecting(Coord a, Coord b) const {
    bool found = false;
    visit_intersecting(a, b, [&](const V&) {
      found = true;
      return false;
    });
    return found;
  }

  template <typename F>
  void for_each(F&& f) const {
    in_order(root_, f);
  }

  [[nodiscard]] std::vector<V> values() const {
    std::vector<V> out;
    out.reserve(size());
    for_each([&](const V& v) { out.push_back(v); });
    return out;
  }

  [[nodiscard]] int height() const { return height_of(root_); }

  // Verifies ordering, AVL balance, cached heights and max-hi augmentation.
  [[nodiscard]] bool check_structure() const {
    std::size_t count = 0;
    bool ok = true;
    validate(root_, nullptr, nullptr, count, ok);
    return ok && count == size();
  }

 private:
  static constexpr std::int32_t kNil = -1;
  using Key = std::tuple<Coord, Coord, id_type>;

  struct Node {
    V value;
    Coord max_hi;
    std::int32_t left = kNil;
    std::int32_t right = kNil;
    std::int32_t height = 1;
  };

  static void check_query(Coord a, Coord b) {
    if (a > b) throw Error(Errc::InvalidQuery, "query with a > b");
  }

  std::int32_t allocate(V&& value) {
    const Coord hi = Traits::hi(value);
    if (!free_.empty()) {
      const std::int32_t n = free_.back();
      free_.pop_back();
      nodes_[n] = Node{std::move(value), hi};
      return n;
    }
    nodes_.push_back(Node{std::move(value), hi});
    return static_cast<std::int32_t>(nodes_.size() - 1);
  }

  [[nodiscard]] Key key_of(std::int32_t n) const {
    const V& v = nodes_[n].value;
    return Key{Traits::lo(v), Traits::hi(v), Traits::id(v)};
  }

  [[nodiscard]] std::int32_t height_of(std::int32_t n) const { return n == kNil ? 0 : nodes_[n].height; }

  void update(std::int32_t n) {
    Node& nd = nodes_[n];
    nd.height = 1 + std::max(height_of(nd.left), height_of(nd.right));
    Coord m = Traits::hi(nd.value);
    if (nd.left != kNil) m = std::max(m, nodes_[nd.left].max_hi);
    if (nd.right != kNil) m = std::max(m, nodes_[nd.right].max_hi);
    nd.max_hi = m;
  }

  std::int32_t rotate_right(std::int32_t n) {
    const std::int32_t l = nodes_[n].left;
    nodes_[n].left = nodes_[l].right;
    nodes_[l].right = n;
    update(n);
    update(l);
    return l;
  }

  std::int32_t rotate_left(std::int32_t n) {
    const std::int32_t r = nodes_[n].right;
    nodes_[n].right = nodes_[r].left;
    nodes_[r].left = n;
    update(n);
    update(r);
    return r;
  }

  std::int32_t rebalance(std::int32_t n) {
    update(n);
    const int balance = height_of(nodes_[n].left) - height_of(nodes_[n].right);
    if (balance > 1) {
      const std::int32_t l = nodes_[n].left;
      if (height_of(nodes_[l].left) < height_of(nodes_[l].right)) nodes_[n].left = rotate_left(l);
      return rotate_right(n);
    }
    if (balance < -1) {
      const std::int32_t r = nodes_[n].right;
      if (height_of(nodes_[r].right) < height_of(nodes_[r].left)) nodes_[n].right = rotate_right(r);
      return rotate_left(n);
    }
    return n;
  }

  std::int32_t insert_at(std::int32_t n, std::int32_t fresh) {
    if (n == kNil) return fresh;
    if (key_of(fresh) < key_of(n)) {
      nodes_[n].left = insert_at(nodes_[n].left, fresh);
    } else {
      nodes_[n].right = insert_at(nodes_[n].right, fresh);
    }
    return rebalance(n);
  }

  // Unlinks the minimum of subtree n into *min_out; returns the new subtree root.
  std::int32_t detach_min(std::int32_t n, std::int32_t* min_out) {
    if (nodes_[n].left == kNil) {
      *min_out = n;
      return nodes_[n].right;
    }
    nodes_[n].left = detach_min(nodes_[n].left, min_out);
    return rebalance(n);
  }

  std::int32_t erase_at(std::int32_t n, const Key& key) {
    const Key here = key_of(n);
    if (key < here) {
      nodes_[n].left = erase_at(nodes_[n].left, key);
      return rebalance(n);
    }
    if (here < key) {
      nodes_[n].right = erase_at(nodes_[n].right, key);
      return rebalance(n);
    }
    const std::int32_t l = nodes_[n].left;
    const std::int32_t r = nodes_[n].right;
    if (l == kNil) return r;
    if (r == kNil) return l;
    std::int32_t successor = kNil;
    const std::int32_t new_right = detach_min(r, &successor);
    nodes_[successor].left = l;
    nodes_[successor].right = new_right;
    return rebalance(successor);
  }

  template <typename Self, typename F>
  static bool visit(Self& self, std::int32_t n, Coord a, Coord b, F& f) {
    if (n == kNil) return true;
    auto& nd = self.nodes_[n];
    if (nd.max_hi < a) return true;
    if (!visit(self, nd.left, a, b, f)) return false;
    if (Traits::lo(nd.value) > b) return true;
    if (Traits::hi(nd.value) >= a) {
      using R = decltype(f(nd.value));
      if constexpr (std::is_same_v<R, bool>) {
        if (!f(nd.value)) return false;
      } else {
        f(nd.value);
      }
    }
    return visit(self, nd.right, a, b, f);
  }

  template <typename F>
  void in_order(std::int32_t n, F& f) const {
    if (n == kNil) return;
    in_order(nodes_[n].left, f);
    f(nodes_[n].value);
    in_order(nodes_[n].right, f);
  }

  void validate(std::int32_t n, const Key* lower, const Key* upper, std::size_t& count, bool& ok) const {
    if (n == kNil || !ok) return;
    ++count;
    const Node& nd = nodes_[n];
    const Key k = key_of(n);
    if ((lower != nullptr && k < *lower) || (upper != nullptr && *upper < k)) ok = false;
    const int lh = height_of(nd.left);
    const int rh = height_of(nd.right);
    if (nd.height != 1 + std::max(lh, rh) || lh - rh > 1 || rh - lh > 1) ok = false;
    Coord m = Traits::hi(nd.value);
    if (nd.left != kNil) m = std::max(m, nodes_[nd.left].max_hi);
    if (nd.right != kNil) m = std::max(m, nodes_[nd.right].max_hi);
    if (m != nd.max_hi) ok = false;
    validate(nd.left, lower, &k, count, ok);
    validate(nd.right, &k, upper, count, ok);
  }

  std::vector<Node> nodes_;
  std::vector<std::int32_t> free_;
  std::unordered_map<id_type, std::int32_t> where_;
  std::int32_t root_ = kNil;
};

}  // namespace dic
