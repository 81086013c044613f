#ifndef VIRMOD_VERSION_HPP
#define VIRMOD_VERSION_HPP

namespace virmod {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace virmod

#endif
