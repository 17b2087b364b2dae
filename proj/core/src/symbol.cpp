#include "wordrep/symbol.hpp"

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

bool is_token_char(char c) noexcept {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

bool Symbol::is_valid(std::string_view token) noexcept {
  if (token.empty()) return false;
  bool segment_open = false;
  for (char c : token) {
    if (c == kSeparator) {
      if (!segment_open) return false;
      segment_open = false;
    } else if (is_token_char(c)) {
      segment_open = true;
    } else {
      return false;
    }
  }
  return segment_open;
}

Symbol::Symbol(std::string token) : token_(std::move(token)) {
  if (!is_valid(token_)) {
    throw Error(ErrorKind::InvalidInput,
                "invalid symbol '" + token_ +
                    "': expected [A-Za-z0-9_]+ segments joined by '@'");
  }
}

Symbol Symbol::product(const Symbol& base, const Symbol& tag) {
  return Symbol(base.token_ + kSeparator + tag.token_);
}

Symbol Symbol::product(const Symbol& base, std::size_t copy) {
  return Symbol(base.token_ + kSeparator + std::to_string(copy));
}

std::vector<std::string_view> Symbol::segments() const {
  std::vector<std::string_view> out;
  std::string_view rest = token_;
  for (;;) {
    auto at = rest.find(kSeparator);
    out.push_back(rest.substr(0, at));
    if (at == std::string_view::npos) break;
    rest.remove_prefix(at + 1);
  }
  return out;
}

std::vector<Symbol> numbered_symbols(std::size_t n) {
  std::vector<Symbol> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.emplace_back(std::to_string(i));
  return out;
}

}  // namespace wordrep
