// Copyright 2026 The lqcsim Authors
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

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

namespace lqc {

/// A width-tagged Boolean function on n-bit strings. Inputs are packed as
/// integers with x_1 (the first character) in the most significant bit.
class Predicate {
  public:
    using Evaluator = std::function<bool(std::uint64_t)>;

    Predicate(std::size_t width, Evaluator evaluator, std::string description);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] const std::string &description() const noexcept { return description_; }
    [[nodiscard]] bool operator()(std::uint64_t x) const { return evaluator_(x); }

  private:
    std::size_t width_;
    Evaluator evaluator_;
    std::string description_;
};

using PredicatePtr = std::shared_ptr<const Predicate>;

PredicatePtr make_predicate(std::size_t width, Predicate::Evaluator evaluator, std::string description);

} // namespace lqc
