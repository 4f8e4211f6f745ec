#include "kstab/certify.hpp"

#include <stdexcept>

#include "parallel.hpp"

namespace kstab {

ScanResult scan_grid(unsigned n, unsigned threads, const Criterion& criterion) {
  if (n < 2) throw std::invalid_argument("scan grid needs n >= 2");
  ScanResult result;
  const long denom = 2L * n;
  for (unsigned i = 1; i < n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) {
      result.points.push_back({Rational(i, denom), Rational(j, denom), Rational(0)});
    }
  }
  detail::parallel_for(result.points.size(), threads, [&](std::size_t k) {
    ScanPoint& p = result.points[k];
    p.value = criterion.C()(p.a, p.b);
  });
  for (std::size_t k = 1; k < result.points.size(); ++k) {
    if (result.points[k].value < result.points[result.argmin].value) result.argmin = k;
  }
  return result;
}

}  // namespace kstab
