/*
 * Copyright 2026 The zeta-arena Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zeta {

using Priority = std::uint32_t;

/// The two players of a game tree. Even wins a play when the limsup of
/// the priorities seen along it is even.
enum class Player : std::uint8_t { Even, Odd };

inline Player opponent(Player p) { return p == Player::Even ? Player::Odd : Player::Even; }
inline const char* to_string(Player p) { return p == Player::Even ? "Even" : "Odd"; }

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: expression text, JSON documents, CLI arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A precondition of an operation does not hold (open expression where a
/// closed one is required, odd priority shift, unknown exit, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive procedures refuse inputs beyond their size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed. Indicates a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace zeta
