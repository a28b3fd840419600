#pragma once

#include <cstddef>

namespace bwcap::oeis::detail {

struct EmbeddedFile {
  const char* id;
  const char* text;
};

extern const EmbeddedFile kEmbedded[];
extern const std::size_t kEmbeddedCount;

}  // namespace bwcap::oeis::detail
