#pragma once

#include <cstdint>
#include <vector>

namespace o1p {

// splitmix64: fully specified so that seeded runs are byte-identical across
// platforms (std distributions are not).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by 128-bit multiply-shift.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform k-subset of {0..universe-1}, sorted.
    std::vector<int> subset(int universe, int k) {
        std::vector<int> picked;
        picked.reserve(k);
        // Floyd's algorithm
        for (int j = universe - k; j < universe; ++j) {
            int t = static_cast<int>(bounded(static_cast<std::uint64_t>(j) + 1));
            bool dup = false;
            for (int x : picked)
                if (x == t) dup = true;
            picked.push_back(dup ? j : t);
        }
        std::sort(picked.begin(), picked.end());
        return picked;
    }

  private:
    std::uint64_t state_;
};

}  // namespace o1p
