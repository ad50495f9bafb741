#include "probdist/random.hpp"

#include <chrono>

namespace probdist {

RandomState RandomState::from_clock() {
    const auto now = std::chrono::steady_clock::now().time_since_epoch();
    const auto ticks = std::chrono::duration_cast<std::chrono::nanoseconds>(now).count();
    return RandomState(static_cast<std::uint64_t>(ticks));
}

}  // namespace probdist
