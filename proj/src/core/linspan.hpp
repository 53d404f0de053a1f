#pragma once

#include "qscalar.hpp"

#include <map>

namespace qbx {

// Incremental row-echelon basis of a subspace of a free vector space with
// ordered basis Key. Rows are keyed by their smallest key and scaled so that
// the pivot coefficient is 1.
template <class Key, class Less = std::less<Key>>
class LinearSpan {
public:
  using Vector = std::map<Key, QScalar, Less>;

  // Reduce v against the stored rows; the remainder is zero iff v is in the span.
  Vector reduce(Vector v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Key pivot = it->first;
      const QScalar c = it->second;
      for (const auto& [k, x] : row->second) {
        auto [slot, inserted] = v.try_emplace(k, -(x * c));
        if (!inserted) {
          slot->second -= x * c;
          if (slot->second.isZero())
            v.erase(slot);
        }
      }
      it = v.lower_bound(pivot);
    }
    return v;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }

  // Adds v; returns false if v was already in the span.
  bool add(const Vector& v) {
    Vector r = reduce(v);
    if (r.empty())
      return false;
    const QScalar inv = r.begin()->second.inverse();
    for (auto& [k, x] : r)
      x *= inv;
    const Key pivot = r.begin()->first;
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

private:
  std::map<Key, Vector, Less> rows_;
};

} // namespace qbx
