#!/usr/bin/env python3
# Copyright (c) 2026 The FIT Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Independent reference for the selection generator. Prints the values the
# C++ tests freeze: raw outputs for seed 0, index draws, and pool counts.
import sys

MASK = (1 << 64) - 1


def splitmix64(seed):
    state = seed & MASK
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        yield z ^ (z >> 31)


def below(gen, n):
    return (next(gen) * n) >> 64


def main():
    g = splitmix64(0)
    print("raw0", " ".join(hex(next(g)) for _ in range(3)))
    g = splitmix64(0)
    print("idx0_n4", [below(g, 4) for _ in range(10)])
    g = splitmix64(42)
    print("idx42_n5", [below(g, 5) for _ in range(8)])
    g = splitmix64(0)
    counts = [0] * 4
    for _ in range(10000):
        counts[below(g, 4)] += 1
    print("counts0_n4_10000", counts)
    bad = [c for c in counts if not 2200 <= c <= 2800]
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
