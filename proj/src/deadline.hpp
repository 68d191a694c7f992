// Copyright 2026 The ohsolve Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OHS_DEADLINE_HPP_
#define OHS_DEADLINE_HPP_

#include <chrono>

#include "errors.hpp"

namespace ohs {

// Wall-clock limit polled between LP solves. Non-positive seconds disable it.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(double seconds) {
    if (seconds > 0) {
      enabled_ = true;
      at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(seconds));
    }
  }

  bool Expired() const { return enabled_ && Clock::now() >= at_; }
  void Check() const {
    if (Expired()) throw TimeoutError();
  }

 private:
  bool enabled_ = false;
  Clock::time_point at_{};
};

}  // namespace ohs

#endif  // OHS_DEADLINE_HPP_
