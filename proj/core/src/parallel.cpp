#include "apx/parallel.hpp"

namespace apx {

unsigned resolve_threads(unsigned requested) noexcept {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace apx
