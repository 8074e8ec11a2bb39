#ifndef BINDERKIT_RNG_HPP
#define BINDERKIT_RNG_HPP

#include <cstdint>

namespace binderkit {

/// SplitMix64 (Steele, Lea & Flood 2014): seedable, trivially splittable,
/// and small enough to document in one README paragraph. Stream-level
/// reproducibility is promised within this implementation only.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Value in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  bool coin(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// An independent generator derived from this one's seed and an index;
  /// sample i of a suite gets fork(i) so sharding cannot change streams.
  Rng fork(std::uint64_t index) const {
    Rng mixer(state_ ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    return Rng(mixer.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace binderkit

#endif
