#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace gtensor {

enum class BuiltinProduct { Cartesian, Direct, Strong, Lexicographic, DProduct };

inline constexpr std::array<BuiltinProduct, 5> kBuiltinProducts{
    BuiltinProduct::Cartesian, BuiltinProduct::Direct, BuiltinProduct::Strong,
    BuiltinProduct::Lexicographic, BuiltinProduct::DProduct};

constexpr std::string_view to_string(BuiltinProduct kind) {
  switch (kind) {
    case BuiltinProduct::Cartesian: return "cartesian";
    case BuiltinProduct::Direct: return "direct";
    case BuiltinProduct::Strong: return "strong";
    case BuiltinProduct::Lexicographic: return "lex";
    case BuiltinProduct::DProduct: return "d";
  }
  return "?";
}

/// Accepts the short CLI names and the long ones ("lexicographic", "d_product").
std::optional<BuiltinProduct> parse_builtin(std::string_view name);

}  // namespace gtensor
