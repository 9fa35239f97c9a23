#pragma once

namespace odw {

// Three-way comparison result of the term orders in this library.
enum class Ordering3 { Less, Equal, Greater };

constexpr Ordering3 reverse(Ordering3 o) {
  switch (o) {
    case Ordering3::Less:
      return Ordering3::Greater;
    case Ordering3::Greater:
      return Ordering3::Less;
    default:
      return Ordering3::Equal;
  }
}

constexpr char to_char(Ordering3 o) {
  switch (o) {
    case Ordering3::Less:
      return '<';
    case Ordering3::Greater:
      return '>';
    default:
      return '=';
  }
}

constexpr const char* to_word(Ordering3 o) {
  switch (o) {
    case Ordering3::Less:
      return "less";
    case Ordering3::Greater:
      return "greater";
    default:
      return "equal";
  }
}

}  // namespace odw
