/*
   Copyright 2026 The mvwlib Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MVW_RNG_HPP
#define MVW_RNG_HPP

#include <cstdint>

#include "common.hpp"

namespace mvw {

/// Deterministic splitmix64 generator. Same seed, same stream, on every
/// platform; no global state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    /// Uniform integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Small rational with |numerator| <= 9 and denominator <= 4.
    Rat small_rat() {
        long num = range(-9, 9);
        long den = range(1, 4);
        return rat_of(num, den);
    }

    /// Small nonzero rational.
    Rat small_rat_nonzero() {
        for (;;) {
            Rat q = small_rat();
            if (sgn(q) != 0) return q;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace mvw

#endif
