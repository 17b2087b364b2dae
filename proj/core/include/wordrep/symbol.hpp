#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace wordrep {

/// A node / letter token.
///
/// A symbol is one or more nonempty segments over [A-Za-z0-9_] joined by
/// '@'. Plain tokens such as "3" or "010" are single segments; the
/// separator is reserved for product node names ("x@2" is copy 2 of x,
/// and nested products read "g@h@i").
class Symbol {
 public:
  static constexpr char kSeparator = '@';

  /// Throws Error(InvalidInput) when the token is malformed.
  explicit Symbol(std::string token);

  /// Product node name "base@tag".
  static Symbol product(const Symbol& base, const Symbol& tag);
  static Symbol product(const Symbol& base, std::size_t copy);

  /// Whether `token` is a valid symbol, without constructing one.
  static bool is_valid(std::string_view token) noexcept;

  const std::string& str() const noexcept { return token_; }

  /// Segments split at '@' ("a@b@c" -> {"a", "b", "c"}).
  std::vector<std::string_view> segments() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    return a.token_.compare(b.token_) <=> 0;
  }

 private:
  std::string token_;
};

inline std::ostream& operator<<(std::ostream& os, const Symbol& s) {
  return os << s.str();
}

/// Symbols named "1".."n".
std::vector<Symbol> numbered_symbols(std::size_t n);

}  // namespace wordrep

template <>
struct std::hash<wordrep::Symbol> {
  std::size_t operator()(const wordrep::Symbol& s) const noexcept {
    return std::hash<std::string>{}(s.str());
  }
};
