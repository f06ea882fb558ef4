#pragma once

#include <cstdint>

// Deterministic sample picker (splitmix64); keeps test inputs reproducible
// without pulling in <random> distribution differences.
class SampleRng {
  public:
    explicit SampleRng(uint64_t seed) : state_(seed * 0x9e3779b97f4a7c15ULL + 1) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]
    int pick(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

  private:
    uint64_t state_;
};
