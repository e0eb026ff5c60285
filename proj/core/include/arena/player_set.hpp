// Copyright 2026 The Arena Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARENA_PLAYER_SET_HPP_
#define ARENA_PLAYER_SET_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace arena {

inline constexpr int kMaxPlayers = 16;

// A subset of {0, ..., kMaxPlayers-1} stored as a bitmask. Player i is bit i.
class PlayerSet {
 public:
  using Mask = std::uint32_t;

  constexpr PlayerSet() = default;
  constexpr explicit PlayerSet(Mask bits) : bits_(bits) {}

  static constexpr PlayerSet full(int n) {
    return PlayerSet(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static constexpr PlayerSet single(int i) { return PlayerSet(Mask{1} << i); }
  static PlayerSet of(const std::vector<int>& members) {
    PlayerSet s;
    for (int i : members) s = s.with(i);
    return s;
  }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(PlayerSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr PlayerSet with(int i) const { return PlayerSet(bits_ | (Mask{1} << i)); }
  constexpr PlayerSet without(int i) const {
    return PlayerSet(bits_ & ~(Mask{1} << i));
  }
  constexpr PlayerSet operator|(PlayerSet o) const { return PlayerSet(bits_ | o.bits_); }
  constexpr PlayerSet operator&(PlayerSet o) const { return PlayerSet(bits_ & o.bits_); }
  // Set difference.
  constexpr PlayerSet operator-(PlayerSet o) const { return PlayerSet(bits_ & ~o.bits_); }

  constexpr bool operator==(const PlayerSet&) const = default;
  constexpr auto operator<=>(const PlayerSet&) const = default;

  // Members in ascending order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // "{1,3}" using 1-based player labels.
  std::string to_string() const;

 private:
  Mask bits_ = 0;
};

// Calls fn(T) for every T subseteq s in ascending bitmask order, including
// the empty set and s itself.
template <typename Fn>
void for_each_subset(PlayerSet s, Fn&& fn) {
  const PlayerSet::Mask mask = s.bits();
  PlayerSet::Mask sub = 0;
  while (true) {
    fn(PlayerSet(sub));
    if (sub == mask) break;
    sub = ((sub | ~mask) + 1) & mask;
  }
}

}  // namespace arena

#endif  // ARENA_PLAYER_SET_HPP_
