#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ultra {

// Symbolic cardinality: Finite(n) < CountablyInfinite < Uncountable.
struct Cardinality {
  enum class Kind { Finite, CountablyInfinite, Uncountable };

  Kind kind = Kind::Finite;
  std::uint64_t value = 0;  // meaningful only when Finite

  static Cardinality finite(std::uint64_t n) { return {Kind::Finite, n}; }
  static Cardinality omega() { return {Kind::CountablyInfinite, 0}; }
  static Cardinality uncountable() { return {Kind::Uncountable, 0}; }

  bool is_finite() const noexcept { return kind == Kind::Finite; }
  bool countable() const noexcept { return kind != Kind::Uncountable; }

  friend bool operator==(const Cardinality& a, const Cardinality& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
  friend bool operator<(const Cardinality& a, const Cardinality& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.kind == Kind::Finite && a.value < b.value;
  }
  friend bool operator<=(const Cardinality& a, const Cardinality& b) {
    return a < b || a == b;
  }

  static Cardinality join(const Cardinality& a, const Cardinality& b) {
    return a < b ? b : a;
  }

  static Cardinality product(const Cardinality& a, const Cardinality& b) {
    if ((a.is_finite() && a.value == 0) || (b.is_finite() && b.value == 0))
      return finite(0);
    if (a.kind == Kind::Uncountable || b.kind == Kind::Uncountable)
      return uncountable();
    if (a.kind == Kind::CountablyInfinite || b.kind == Kind::CountablyInfinite)
      return omega();
    if (a.value != 0 && a.value > UINT64_MAX / b.value)
      throw std::overflow_error("cardinality product overflow");
    return finite(a.value * b.value);
  }

  // Cardinality of a countable union of sets, each of cardinality `a`.
  static Cardinality countable_union(const Cardinality& a) {
    if (a.kind == Kind::Uncountable) return uncountable();
    if (a.is_finite() && a.value == 0) return finite(0);
    return omega();
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Finite:
        return "finite(" + std::to_string(value) + ")";
      case Kind::CountablyInfinite:
        return "omega";
      default:
        return "uncountable";
    }
  }

  // The word used in witness reports: "omega", "uncountable" or "finite(n)".
  std::string count_word() const { return to_string(); }
};

}  // namespace ultra
