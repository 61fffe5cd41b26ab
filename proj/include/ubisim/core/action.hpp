#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace ubisim {

/// Labor choice available to an agent in a single period.
///
/// The enumerator order is also the tie-breaking priority: Essential wins
/// any tie it takes part in, NonEssential wins a tie against NonWork.
enum class Action : std::uint8_t {
  Essential = 0,
  NonEssential = 1,
  NonWork = 2,
};

inline constexpr std::size_t kActionCount = 3;

inline constexpr std::array<Action, kActionCount> kAllActions = {
    Action::Essential, Action::NonEssential, Action::NonWork};

constexpr std::size_t index_of(Action a) { return static_cast<std::size_t>(a); }

constexpr std::string_view to_string(Action a) {
  switch (a) {
    case Action::Essential:
      return "E";
    case Action::NonEssential:
      return "N";
    case Action::NonWork:
      return "0";
  }
  return "?";
}

}  // namespace ubisim
