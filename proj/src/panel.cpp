#include "sieved/panel.hpp"

#include "sieved/errors.hpp"

namespace sieved {

std::vector<LaurentPoly> random_panel(std::uint64_t seed, int count, int lo, int hi) {
  if (count < 0 || lo > hi) throw ArgumentError("random_panel: bad shape");
  UnitRng rng(seed);
  std::vector<LaurentPoly> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::vector<cplx> c;
    for (int e = lo; e <= hi; ++e) c.push_back(rng.next_complex());
    out.push_back(LaurentPoly::from_dense(lo, c));
  }
  return out;
}

}  // namespace sieved
