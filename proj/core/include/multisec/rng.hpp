/*
   Copyright 2026 The multisec authors

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

#pragma once

#include <cstdint>
#include <string>

namespace multisec {

// splitmix64: deterministic across platforms, which the reproducibility
// contract needs; std::mt19937 distributions are not pinned by the standard.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {  // inclusive bounds
        return lo + std::int64_t(below(std::uint64_t(hi - lo + 1)));
    }

    // Independent child stream, stable under unrelated draws from the parent.
    Rng fork(std::uint64_t label) const {
        std::uint64_t mixed = state_ ^ (label * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
        return Rng(mixed);
    }

    Rng fork(const std::string& label) const {
        std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
        for (unsigned char c : label) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        return fork(h);
    }

private:
    std::uint64_t state_;
};

}  // namespace multisec
