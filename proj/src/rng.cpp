#include "ftspan/rng.hpp"

namespace ftspan {

namespace {

uint64_t mix(uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

uint64_t StreamRng::draw(uint64_t k1, uint64_t k2, uint64_t k3, uint64_t k4) const {
  uint64_t h = mix(seed_ + 0x9e3779b97f4a7c15ULL);
  h = mix(h ^ (k1 + 0xa0761d6478bd642fULL));
  h = mix(h ^ (k2 + 0xe7037ed1a0b428dbULL));
  h = mix(h ^ (k3 + 0x8ebc6af09c88c6e3ULL));
  h = mix(h ^ (k4 + 0x589965cc75374cc3ULL));
  return h;
}

bool StreamRng::bernoulli(const Rat& p, uint64_t k1, uint64_t k2, uint64_t k3, uint64_t k4) const {
  if (p <= Rat(0)) return false;
  if (p >= Rat(1)) return true;
  // threshold = floor(2^64 * num / den)
  unsigned __int128 scaled = (unsigned __int128)(p.num()) << 64;
  uint64_t threshold = static_cast<uint64_t>(scaled / static_cast<uint64_t>(p.den()));
  return draw(k1, k2, k3, k4) < threshold;
}

uint64_t StreamRng::uniform(uint64_t bound, uint64_t k1, uint64_t k2, uint64_t k3,
                            uint64_t k4) const {
  unsigned __int128 wide = (unsigned __int128)draw(k1, k2, k3, k4) * bound;
  return static_cast<uint64_t>(wide >> 64);
}

}  // namespace ftspan
