#include <stdexcept>

#include "bwcap/kernels.hpp"

namespace bwcap::kernels {

void CellHistogram::merge(const CellHistogram& other) {
  if (other.black_dim != black_dim || other.white_dim != white_dim) {
    throw std::invalid_argument("histogram shapes differ");
  }
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
}

BivariatePolynomial CellHistogram::to_polynomial() const {
  BivariatePolynomial p;
  for (std::uint32_t b = 0; b < black_dim; ++b) {
    for (std::uint32_t w = 0; w < white_dim; ++w) {
      const auto c = counts[std::size_t{b} * white_dim + w];
      if (c != 0) p.add_term(from_u64(c), b, w);
    }
  }
  return p;
}

}  // namespace bwcap::kernels
