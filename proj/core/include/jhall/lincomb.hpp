#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "jhall/scalar.hpp"

namespace jhall {

/// Finite formal linear combination of basis keys with Scalar coefficients.
/// Zero coefficients are never stored, so two combinations are equal iff
/// their term maps are identical.
template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Scalar>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  explicit LinComb(const Key& k, Scalar c = Scalar(1)) { add(k, c); }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  [[nodiscard]] Scalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  [[nodiscard]] const Map& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] const_iterator begin() const { return terms_.begin(); }
  [[nodiscard]] const_iterator end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  /// Adds s * o.
  LinComb& add_scaled(const LinComb& o, const Scalar& s) {
    if (s.is_zero()) return *this;
    for (const auto& [k, c] : o.terms_) add(k, c * s);
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Scalar& s) { return a *= s; }
  friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Map terms_;
};

}  // namespace jhall
