#ifndef MAMMOAGE_VERSION_HPP
#define MAMMOAGE_VERSION_HPP

#include <cstdint>

namespace mammoage {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr std::uint16_t kFeatureFormatVersion = 1;
inline constexpr std::uint32_t kModelFormatVersion = 1;

} // namespace mammoage

#endif // MAMMOAGE_VERSION_HPP
